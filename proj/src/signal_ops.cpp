#include "wearqc/signal_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wearqc/errors.hpp"

namespace wearqc {

namespace {

std::size_t window_samples(double window_s, double rate_hz) {
    double w = window_s * rate_hz;
    if (!(w > 0.0)) return 0;
    return static_cast<std::size_t>(std::floor(w + 1e-9));
}

double window_sd(const double* x, std::size_t w) {
    // Shift by the first sample to keep the accumulation well conditioned
    // when the DC level dwarfs the deviation (ACC sits near 1 g).
    double c = x[0], sum = 0.0, sumsq = 0.0;
    for (std::size_t j = 0; j < w; ++j) {
        double d = x[j] - c;
        sum += d;
        sumsq += d * d;
    }
    double n = static_cast<double>(w);
    double var = (sumsq - sum * sum / n) / n;
    return std::sqrt(std::max(var, 0.0));
}

double window_mean(const double* x, std::size_t w) {
    double sum = 0.0;
    for (std::size_t j = 0; j < w; ++j) sum += x[j];
    return sum / static_cast<double>(w);
}

// Applies fn over trailing windows; the first w-1 outputs replicate the
// first full-window value, and a series shorter than w gets the truncated
// whole-series value everywhere.
template <typename Fn>
UniformSignal rolling_apply(const UniformSignal& signal, std::size_t w, std::size_t channel, Fn fn) {
    const std::vector<double>& x = signal.channel(channel);
    std::size_t n = x.size();
    UniformSignal out{signal.start, signal.rate_hz, signal.unit, {std::vector<double>(n)}};
    if (n == 0) return out;
    std::vector<double>& y = out.channels[0];
    if (n < w) {
        std::fill(y.begin(), y.end(), fn(x.data(), n));
        return out;
    }
    for (std::size_t i = w - 1; i < n; ++i) y[i] = fn(x.data() + (i - w + 1), w);
    std::fill(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(w - 1), y[w - 1]);
    return out;
}

} // namespace

UniformSignal rolling_std(const UniformSignal& signal, double window_s, std::size_t channel) {
    std::size_t w = window_samples(window_s, signal.rate_hz);
    if (w < 2)
        throw std::invalid_argument("rolling_std: window shorter than 2 samples");
    auto out = rolling_apply(signal, w, channel, window_sd);
    out.unit = signal.unit;
    return out;
}

UniformSignal rolling_mean(const UniformSignal& signal, double window_s, std::size_t channel) {
    std::size_t w = window_samples(window_s, signal.rate_hz);
    if (w < 1)
        throw std::invalid_argument("rolling_mean: window shorter than 1 sample");
    return rolling_apply(signal, w, channel, window_mean);
}

UniformSignal rolling_mean(const BinarySeries& series, double window_s) {
    std::size_t w = window_samples(window_s, series.rate_hz);
    if (w < 1)
        throw std::invalid_argument("rolling_mean: window shorter than 1 sample");
    std::size_t n = series.size();
    UniformSignal out{series.start, series.rate_hz, Unit::Dimensionless, {std::vector<double>(n)}};
    if (n == 0) return out;
    // Exact integer counts via a running window sum.
    std::vector<double>& y = out.channels[0];
    std::size_t eff = std::min(w, n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < eff; ++i) count += series.values[i];
    double first = static_cast<double>(count) / static_cast<double>(eff);
    for (std::size_t i = 0; i < eff; ++i) y[i] = first;
    for (std::size_t i = eff; i < n; ++i) {
        count += series.values[i];
        count -= series.values[i - w];
        y[i] = static_cast<double>(count) / static_cast<double>(w);
    }
    return out;
}

UniformSignal rolling_median(const UniformSignal& signal, double window_s, std::size_t channel) {
    std::size_t w = window_samples(window_s, signal.rate_hz);
    if (w < 1)
        throw std::invalid_argument("rolling_median: window shorter than 1 sample");
    std::vector<double> scratch;
    auto median_fn = [&scratch](const double* x, std::size_t m) {
        scratch.assign(x, x + m);
        std::size_t mid = m / 2;
        std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(mid), scratch.end());
        double hi = scratch[mid];
        if (m % 2 == 1) return hi;
        double lo = *std::max_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(mid));
        return 0.5 * (lo + hi);
    };
    auto out = rolling_apply(signal, w, channel, median_fn);
    out.unit = signal.unit;
    return out;
}

namespace {

template <typename Pred>
BinarySeries threshold_impl(const UniformSignal& signal, Pred pred) {
    if (signal.channel_count() != 1)
        throw std::invalid_argument("threshold requires a single-channel signal");
    const std::vector<double>& x = signal.channels[0];
    BinarySeries out{signal.start, signal.rate_hz, std::vector<std::uint8_t>(x.size())};
    for (std::size_t i = 0; i < x.size(); ++i) out.values[i] = pred(x[i]) ? 1 : 0;
    return out;
}

} // namespace

BinarySeries threshold_ge(const UniformSignal& signal, double value) {
    return threshold_impl(signal, [value](double v) { return v >= value; });
}

BinarySeries threshold_le(const UniformSignal& signal, double value) {
    return threshold_impl(signal, [value](double v) { return v <= value; });
}

BinarySeries threshold_within(const UniformSignal& signal, double lo, double hi) {
    if (lo > hi)
        throw std::invalid_argument("threshold_within: lo > hi");
    return threshold_impl(signal, [lo, hi](double v) { return v >= lo && v <= hi; });
}

BinarySeries reindex_hold(const BinarySeries& source, const Timebase& target) {
    if (source.size() == 0)
        throw Error("reindex_hold: empty source series");
    BinarySeries out{target.start, target.rate_hz, std::vector<std::uint8_t>(target.n)};
    const double dt0 = target.start - source.start;
    const double src_n = static_cast<double>(source.size());
    // Position of each target sample in source sample units; the snap
    // tolerance absorbs float error so coincident timestamps stay coincident.
    const double snap = 1e-4;
    for (std::size_t j = 0; j < target.n; ++j) {
        double pos = (dt0 + static_cast<double>(j) / target.rate_hz) * source.rate_hz;
        if (pos < 0.0) {
            out.values[j] = source.values[0];
            continue;
        }
        double idx = std::floor(pos + snap);
        if (idx >= src_n) idx = src_n - 1.0;
        double staleness = pos - idx;
        out.values[j] = (staleness > 2.0 + snap) ? 0 : source.values[static_cast<std::size_t>(idx)];
    }
    return out;
}

BinarySeries combine(const std::vector<BinarySeries>& series, CombineMode mode) {
    if (series.empty())
        throw std::invalid_argument("combine: no series given");
    const Timebase base = series.front().timebase();
    for (const BinarySeries& s : series)
        if (!same_timebase(base, s.timebase(), 1e-6))
            throw std::invalid_argument("combine: series timebases are not aligned (reindex first)");
    BinarySeries out = series.front();
    for (std::size_t k = 1; k < series.size(); ++k) {
        const auto& v = series[k].values;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (mode == CombineMode::Or)
                out.values[i] = out.values[i] | v[i];
            else
                out.values[i] = out.values[i] & v[i];
        }
    }
    return out;
}

namespace {

struct Run {
    std::size_t begin;
    std::size_t len;
    std::uint8_t value;
};

std::vector<Run> scan_runs(const std::vector<std::uint8_t>& v) {
    std::vector<Run> runs;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        runs.push_back({i, j - i, v[i]});
        i = j;
    }
    return runs;
}

// Folds every run shorter than min_len into its neighbours, shortest run
// first (leftmost on ties), until all remaining runs reach min_len or a
// single run is left.
void enforce_run_floor(std::vector<std::uint8_t>& v, std::size_t min_len) {
    if (min_len < 2 || v.empty()) return;
    std::vector<Run> runs = scan_runs(v);
    while (runs.size() > 1) {
        std::size_t best = runs.size();
        for (std::size_t r = 0; r < runs.size(); ++r)
            if (runs[r].len < min_len && (best == runs.size() || runs[r].len < runs[best].len))
                best = r;
        if (best == runs.size()) break;
        runs[best].value ^= 1;
        // Merge with equal-valued neighbours.
        std::size_t lo = best, hi = best;
        if (lo > 0 && runs[lo - 1].value == runs[best].value) --lo;
        if (hi + 1 < runs.size() && runs[hi + 1].value == runs[best].value) ++hi;
        Run merged{runs[lo].begin, 0, runs[best].value};
        for (std::size_t r = lo; r <= hi; ++r) merged.len += runs[r].len;
        runs.erase(runs.begin() + static_cast<std::ptrdiff_t>(lo),
                   runs.begin() + static_cast<std::ptrdiff_t>(hi + 1));
        runs.insert(runs.begin() + static_cast<std::ptrdiff_t>(lo), merged);
    }
    for (const Run& r : runs)
        std::fill(v.begin() + static_cast<std::ptrdiff_t>(r.begin),
                  v.begin() + static_cast<std::ptrdiff_t>(r.begin + r.len), r.value);
}

} // namespace

BinarySeries smooth_majority(const BinarySeries& series, double window_s) {
    std::size_t w = window_samples(window_s, series.rate_hz);
    if (w < 1)
        throw std::invalid_argument("smooth_majority: window shorter than 1 sample");
    std::size_t n = series.size();
    BinarySeries out = series;
    if (n == 0 || w == 1) return out;

    std::vector<std::size_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + series.values[i];

    const std::ptrdiff_t left = static_cast<std::ptrdiff_t>(w / 2);
    const std::ptrdiff_t right = static_cast<std::ptrdiff_t>((w - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = (static_cast<std::ptrdiff_t>(i) >= left) ? i - static_cast<std::size_t>(left) : 0;
        std::size_t hi = std::min(n, i + static_cast<std::size_t>(right) + 1);
        std::size_t total = hi - lo;
        std::size_t trues = prefix[hi] - prefix[lo];
        if (2 * trues > total)
            out.values[i] = 1;
        else if (2 * trues < total)
            out.values[i] = 0;
        // exact tie keeps the input value
    }
    enforce_run_floor(out.values, (w + 1) / 2);
    return out;
}

IntervalSet to_intervals(const BinarySeries& series, double min_duration_s) {
    std::vector<Interval> out;
    const std::size_t n = series.size();
    for (std::size_t i = 0; i < n;) {
        if (!series.at(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < n && series.at(j)) ++j;
        double dur = static_cast<double>(j - i) / series.rate_hz;
        if (dur >= min_duration_s - 1e-9)
            out.push_back({series.time_at(i), series.time_at(j)});
        i = j;
    }
    return IntervalSet{std::move(out)};
}

BinarySeries rasterize(const IntervalSet& intervals, const Timebase& timebase) {
    BinarySeries out{timebase.start, timebase.rate_hz, std::vector<std::uint8_t>(timebase.n)};
    for (std::size_t i = 0; i < timebase.n; ++i)
        out.values[i] = intervals.contains(timebase.time_at(i)) ? 1 : 0;
    return out;
}

} // namespace wearqc
