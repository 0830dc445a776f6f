#include "wearqc/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wearqc {

const char* unit_name(Unit u) {
    switch (u) {
        case Unit::G: return "g";
        case Unit::Microsiemens: return "uS";
        case Unit::Celsius: return "degC";
        case Unit::Bpm: return "bpm";
        case Unit::Dimensionless: return "";
    }
    return "";
}

const std::vector<double>& UniformSignal::channel(std::size_t c) const {
    if (c >= channels.size())
        throw std::invalid_argument("signal channel " + std::to_string(c) + " out of range");
    return channels[c];
}

void UniformSignal::validate() const {
    if (!(rate_hz > 0.0) || !std::isfinite(rate_hz))
        throw std::invalid_argument("signal rate must be positive");
    if (!std::isfinite(start))
        throw std::invalid_argument("signal start must be finite");
    if (channels.empty() || channels.size() > 3)
        throw std::invalid_argument("signal must have 1..3 channels");
    for (const auto& ch : channels) {
        if (ch.size() != channels.front().size())
            throw std::invalid_argument("signal channels must have equal lengths");
        for (double v : ch)
            if (!std::isfinite(v))
                throw std::invalid_argument("signal contains a non-finite sample");
    }
}

UniformSignal make_signal(Timestamp start, double rate_hz, Unit unit, std::vector<double> samples) {
    UniformSignal s{start, rate_hz, unit, {std::move(samples)}};
    s.validate();
    return s;
}

UniformSignal make_signal3(Timestamp start, double rate_hz, Unit unit,
                           std::vector<double> x, std::vector<double> y, std::vector<double> z) {
    UniformSignal s{start, rate_hz, unit, {std::move(x), std::move(y), std::move(z)}};
    s.validate();
    return s;
}

std::size_t BinarySeries::count_true() const {
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [](std::uint8_t v) { return v != 0; }));
}

BinarySeries make_series(Timestamp start, double rate_hz, std::vector<std::uint8_t> values) {
    if (!(rate_hz > 0.0))
        throw std::invalid_argument("series rate must be positive");
    return BinarySeries{start, rate_hz, std::move(values)};
}

void MaskedSignal::validate() const {
    signal.validate();
    if (!same_timebase(signal.timebase(), valid.timebase()))
        throw std::invalid_argument("mask timebase does not match signal");
}

MaskedSignal all_valid(UniformSignal signal) {
    BinarySeries mask{signal.start, signal.rate_hz,
                      std::vector<std::uint8_t>(signal.size(), std::uint8_t{1})};
    return MaskedSignal{std::move(signal), std::move(mask)};
}

bool same_timebase(const Timebase& a, const Timebase& b, double tol_s) {
    return a.rate_hz == b.rate_hz && a.n == b.n && std::abs(a.start - b.start) <= tol_s;
}

} // namespace wearqc
