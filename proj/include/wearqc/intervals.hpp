#pragma once

#include <vector>

#include "wearqc/series.hpp"

namespace wearqc {

/// Half-open time interval [start, end).
struct Interval {
    Timestamp start = 0.0;
    Timestamp end = 0.0;

    double duration_s() const { return end - start; }
    bool contains(Timestamp t) const { return t >= start && t < end; }
    bool operator==(const Interval&) const = default;
};

/// Sorted, pairwise-disjoint set of half-open intervals. Adjacent intervals
/// (end == next start) are merged on construction, so the representation is
/// canonical: two sets covering the same points compare equal.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> intervals); // canonicalizes
    static IntervalSet single(Timestamp start, Timestamp end);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }
    double total_duration_s() const;
    bool contains(Timestamp t) const;
    /// Envelope [first start, last end); throws wearqc::Error when empty.
    Interval span() const;

    IntervalSet clip(Interval bounds) const;
    IntervalSet complement_within(Interval bounds) const;

    bool operator==(const IntervalSet&) const = default;

private:
    std::vector<Interval> intervals_;
};

IntervalSet union_of(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);

} // namespace wearqc
