#pragma once

#include <vector>

#include "wearqc/intervals.hpp"
#include "wearqc/series.hpp"

namespace wearqc {

/// Trailing-window population standard deviation over one channel.
///
/// Output sample i is the SD of the floor(window_s * rate_hz) most recent
/// samples ending at i; the first window-1 outputs replicate the first
/// full-window value. When the series is shorter than one window the SD of
/// the whole series is replicated. Each window is evaluated directly, so cost
/// grows with the window length; windows in this domain are at most a few
/// hundred samples.
///
/// Throws std::invalid_argument when the window holds fewer than 2 samples
/// or the channel does not exist.
UniformSignal rolling_std(const UniformSignal& signal, double window_s, std::size_t channel = 0);

/// Trailing-window mean, same edge policy as rolling_std. Window must hold
/// at least 1 sample.
UniformSignal rolling_mean(const UniformSignal& signal, double window_s, std::size_t channel = 0);

/// Trailing-window mean of a boolean series (false=0, true=1).
UniformSignal rolling_mean(const BinarySeries& series, double window_s);

/// Trailing-window median (average of the two middle order statistics for
/// even windows).
UniformSignal rolling_median(const UniformSignal& signal, double window_s, std::size_t channel = 0);

// Element-wise predicates on a single-channel signal.
BinarySeries threshold_ge(const UniformSignal& signal, double value);
BinarySeries threshold_le(const UniformSignal& signal, double value);
/// Inclusive range check lo <= x <= hi; throws std::invalid_argument when lo > hi.
BinarySeries threshold_within(const UniformSignal& signal, double lo, double hi);

/// Previous-value (staircase) hold of `source` onto `target`.
///
/// Each target sample takes the most recent source value at or before its
/// timestamp; target samples before the first source sample take the first
/// source value. Evidence staler than 2 source periods reads as false, so
/// recording gaps in the source do not smear the last value forward.
/// Throws wearqc::Error on an empty source.
BinarySeries reindex_hold(const BinarySeries& source, const Timebase& target);

enum class CombineMode { Or, And };

/// Element-wise OR/AND across series sharing one timebase; mismatched
/// timebases throw std::invalid_argument (reindex first).
BinarySeries combine(const std::vector<BinarySeries>& series, CombineMode mode);

/// Majority smoothing over a centered window of floor(window_s * rate_hz)
/// samples, truncated at the series edges.
///
/// A sample becomes true when more than half of its window is true, false
/// when less, and keeps its input value on an exact tie. Afterwards every
/// run still shorter than half the window is folded into its neighbours
/// (shortest run first), which makes the operation idempotent and bounds the
/// shortest surviving run at window_s / 2.
BinarySeries smooth_majority(const BinarySeries& series, double window_s);

/// Maximal true-runs as half-open intervals; runs strictly shorter than
/// min_duration_s are dropped.
IntervalSet to_intervals(const BinarySeries& series, double min_duration_s = 0.0);

/// Sample i of the result is true iff its timestamp lies in the set.
/// Inverse of to_intervals on the same timebase.
BinarySeries rasterize(const IntervalSet& intervals, const Timebase& timebase);

} // namespace wearqc
