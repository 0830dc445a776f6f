#include "wearqc/intervals.hpp"

#include <algorithm>

#include "wearqc/errors.hpp"

namespace wearqc {

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
    std::erase_if(intervals, [](const Interval& iv) { return !(iv.start < iv.end); });
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    for (const Interval& iv : intervals) {
        if (!intervals_.empty() && iv.start <= intervals_.back().end)
            intervals_.back().end = std::max(intervals_.back().end, iv.end);
        else
            intervals_.push_back(iv);
    }
}

IntervalSet IntervalSet::single(Timestamp start, Timestamp end) {
    return IntervalSet{{Interval{start, end}}};
}

double IntervalSet::total_duration_s() const {
    double total = 0.0;
    for (const Interval& iv : intervals_) total += iv.duration_s();
    return total;
}

bool IntervalSet::contains(Timestamp t) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                               [](Timestamp v, const Interval& iv) { return v < iv.start; });
    return it != intervals_.begin() && std::prev(it)->contains(t);
}

Interval IntervalSet::span() const {
    if (intervals_.empty()) throw Error("span() of an empty interval set");
    return Interval{intervals_.front().start, intervals_.back().end};
}

IntervalSet IntervalSet::clip(Interval bounds) const {
    std::vector<Interval> out;
    for (const Interval& iv : intervals_) {
        Timestamp s = std::max(iv.start, bounds.start);
        Timestamp e = std::min(iv.end, bounds.end);
        if (s < e) out.push_back({s, e});
    }
    return IntervalSet{std::move(out)};
}

IntervalSet IntervalSet::complement_within(Interval bounds) const {
    std::vector<Interval> out;
    Timestamp cursor = bounds.start;
    for (const Interval& iv : clip(bounds).intervals()) {
        if (cursor < iv.start) out.push_back({cursor, iv.start});
        cursor = iv.end;
    }
    if (cursor < bounds.end) out.push_back({cursor, bounds.end});
    return IntervalSet{std::move(out)};
}

IntervalSet union_of(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> merged = a.intervals();
    merged.insert(merged.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet{std::move(merged)};
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    const auto& xs = a.intervals();
    const auto& ys = b.intervals();
    std::size_t i = 0, j = 0;
    while (i < xs.size() && j < ys.size()) {
        Timestamp s = std::max(xs[i].start, ys[j].start);
        Timestamp e = std::min(xs[i].end, ys[j].end);
        if (s < e) out.push_back({s, e});
        if (xs[i].end < ys[j].end)
            ++i;
        else
            ++j;
    }
    return IntervalSet{std::move(out)};
}

} // namespace wearqc
