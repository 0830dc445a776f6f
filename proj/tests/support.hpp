#pragma once

// Shared test-only oracles and generators. Everything here is written
// independently of the library implementations it checks: brute-force loops
// in long double, no shared helpers with src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wearqc/series.hpp"

namespace testsupport {

inline double brute_std(const std::vector<double>& x, std::size_t begin, std::size_t end) {
    long double mean = 0.0L;
    for (std::size_t i = begin; i < end; ++i) mean += x[i];
    mean /= static_cast<long double>(end - begin);
    long double ss = 0.0L;
    for (std::size_t i = begin; i < end; ++i) {
        long double d = x[i] - mean;
        ss += d * d;
    }
    return static_cast<double>(std::sqrt(ss / static_cast<long double>(end - begin)));
}

inline double brute_mean(const std::vector<double>& x, std::size_t begin, std::size_t end) {
    long double s = 0.0L;
    for (std::size_t i = begin; i < end; ++i) s += x[i];
    return static_cast<double>(s / static_cast<long double>(end - begin));
}

inline double brute_median(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    std::size_t m = x.size();
    if (m % 2 == 1) return x[m / 2];
    return 0.5 * (x[m / 2 - 1] + x[m / 2]);
}

// Sample variance (divide by n-1), the AI oracle building block.
inline double brute_sample_var(const std::vector<double>& x, std::size_t begin, std::size_t end) {
    long double mean = 0.0L;
    for (std::size_t i = begin; i < end; ++i) mean += x[i];
    mean /= static_cast<long double>(end - begin);
    long double ss = 0.0L;
    for (std::size_t i = begin; i < end; ++i) {
        long double d = x[i] - mean;
        ss += d * d;
    }
    return static_cast<double>(ss / static_cast<long double>(end - begin - 1));
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    std::size_t n = std::min(a.size(), b.size());
    long double ma = 0, mb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    long double sab = 0, saa = 0, sbb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    return static_cast<double>(sab / std::sqrt(saa * sbb));
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, double p_true = 0.5) {
    std::bernoulli_distribution dist(p_true);
    std::vector<std::uint8_t> v(n);
    for (auto& x : v) x = dist(rng) ? 1 : 0;
    return v;
}

// Boolean series built from runs: {len0 of value0, len1 of !value0, ...}.
inline std::vector<std::uint8_t> from_runs(bool first, const std::vector<std::size_t>& lens) {
    std::vector<std::uint8_t> v;
    bool cur = first;
    for (std::size_t len : lens) {
        v.insert(v.end(), len, cur ? 1 : 0);
        cur = !cur;
    }
    return v;
}

} // namespace testsupport
