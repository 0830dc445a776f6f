#pragma once

#include <cmath>
#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace wearqc {

/// Seconds since the Unix epoch, UTC.
using Timestamp = double;

enum class Unit {
    Dimensionless,
    G,            // acceleration, 1 g = 9.81 m/s^2
    Microsiemens, // skin conductance
    Celsius,      // skin temperature
    Bpm,          // heart rate
};

const char* unit_name(Unit u);

/// Discrete uniform timebase: sample i sits at start + i / rate_hz and
/// covers the half-open period [t_i, t_{i+1}).
struct Timebase {
    Timestamp start = 0.0;
    double rate_hz = 1.0;
    std::size_t n = 0;

    Timestamp time_at(std::size_t i) const { return start + static_cast<double>(i) / rate_hz; }
    Timestamp end() const { return time_at(n); }
    double duration_s() const { return static_cast<double>(n) / rate_hz; }
};

/// Fixed-rate sampled channel(s) with absolute start time. Values are never
/// NaN; invalid samples are expressed through MaskedSignal instead.
struct UniformSignal {
    Timestamp start = 0.0;
    double rate_hz = 1.0;
    Unit unit = Unit::Dimensionless;
    std::vector<std::vector<double>> channels; // 1..3 channels, equal lengths

    std::size_t size() const { return channels.empty() ? 0 : channels.front().size(); }
    std::size_t channel_count() const { return channels.size(); }
    const std::vector<double>& channel(std::size_t c) const;
    Timestamp time_at(std::size_t i) const { return start + static_cast<double>(i) / rate_hz; }
    Timestamp end() const { return time_at(size()); }
    double duration_s() const { return static_cast<double>(size()) / rate_hz; }
    Timebase timebase() const { return {start, rate_hz, size()}; }

    /// Throws std::invalid_argument on rate <= 0, channel-count/length
    /// mismatch, or non-finite samples.
    void validate() const;
};

UniformSignal make_signal(Timestamp start, double rate_hz, Unit unit, std::vector<double> samples);
UniformSignal make_signal3(Timestamp start, double rate_hz, Unit unit,
                           std::vector<double> x, std::vector<double> y, std::vector<double> z);

/// Uniform-rate boolean series; the representation of every SQI.
struct BinarySeries {
    Timestamp start = 0.0;
    double rate_hz = 1.0;
    std::vector<std::uint8_t> values; // 0 or 1

    std::size_t size() const { return values.size(); }
    bool at(std::size_t i) const { return values[i] != 0; }
    Timestamp time_at(std::size_t i) const { return start + static_cast<double>(i) / rate_hz; }
    Timestamp end() const { return time_at(size()); }
    double duration_s() const { return static_cast<double>(size()) / rate_hz; }
    Timebase timebase() const { return {start, rate_hz, size()}; }
    std::size_t count_true() const;
};

BinarySeries make_series(Timestamp start, double rate_hz, std::vector<std::uint8_t> values);

/// Signal plus per-sample validity. An all-true mask is semantically the
/// plain signal.
struct MaskedSignal {
    UniformSignal signal;
    BinarySeries valid; // identical start/rate/length

    std::size_t size() const { return signal.size(); }
    std::size_t valid_count() const { return valid.count_true(); }
    /// Throws std::invalid_argument when mask and signal timebases differ.
    void validate() const;
};

MaskedSignal all_valid(UniformSignal signal);

/// True when the two timebases agree: equal rates and lengths, starts within
/// `tol_s` seconds.
bool same_timebase(const Timebase& a, const Timebase& b, double tol_s = 1e-9);

} // namespace wearqc
