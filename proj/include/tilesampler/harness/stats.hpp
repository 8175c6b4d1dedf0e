// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "tilesampler/errors.hpp"

namespace tilesampler::harness {

/// Default significance of the uniformity / goodness-of-fit gates.
inline constexpr double kDefaultSignificance = 0.001;

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double p_value = 1.0;
    bool passes(double alpha = kDefaultSignificance) const noexcept { return p_value >= alpha; }
};

/// Pearson goodness-of-fit of `counts` against `probabilities` (which must sum to 1).
inline ChiSquareResult chi_square_test(const std::vector<double>& counts, const std::vector<double>& probabilities)
{
    if (counts.size() != probabilities.size() || counts.size() < 2) {
        throw InvalidInput("chi-square test needs matching count and probability vectors of length >= 2");
    }
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    ChiSquareResult r;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const double expected = total * probabilities[k];
        if (expected <= 0.0) throw InvalidInput("chi-square test: expected count must be positive");
        r.statistic += (counts[k] - expected) * (counts[k] - expected) / expected;
    }
    r.dof = static_cast<int>(counts.size()) - 1;
    r.p_value = boost::math::cdf(boost::math::complement(boost::math::chi_squared(r.dof), r.statistic));
    return r;
}

inline double total_variation(const std::vector<double>& p, const std::vector<double>& q)
{
    if (p.size() != q.size()) throw InvalidInput("total variation: size mismatch");
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += std::abs(p[k] - q[k]);
    return 0.5 * s;
}

inline std::vector<double> normalized(const std::vector<double>& counts)
{
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    std::vector<double> out(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) out[k] = total > 0 ? counts[k] / total : 0.0;
    return out;
}

/// Binomial standard deviation of an empirical frequency with probability p over n samples.
inline double frequency_sigma(double p, double n) { return std::sqrt(p * (1.0 - p) / n); }

/// Sup distance between the empirical CDF of `xs` and the uniform CDF on [0, 1).
inline double ks_statistic_uniform(std::vector<double> xs)
{
    if (xs.empty()) throw InvalidInput("KS statistic of an empty sample");
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double x = xs[k];
        d = std::max({d, (static_cast<double>(k) + 1.0) / n - x, x - static_cast<double>(k) / n});
    }
    return d;
}

/// Survival function of the Kolmogorov distribution, P(K > t).
inline double kolmogorov_survival(double t)
{
    if (t <= 0.0) return 1.0;
    double s = 0.0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * t * t);
        s += (k % 2 ? 2.0 : -2.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(s, 0.0, 1.0);
}

/// Critical value of the one-sample KS statistic at level alpha (Stephens' finite-n correction).
inline double ks_critical_value(std::size_t n, double alpha)
{
    double lo = 0.1;
    double hi = 5.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (kolmogorov_survival(mid) > alpha ? lo : hi) = mid;
    }
    const double rn = std::sqrt(static_cast<double>(n));
    return 0.5 * (lo + hi) / (rn + 0.12 + 0.11 / rn);
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size() || a.size() < 2) throw InvalidInput("pearson: need equal-length samples");
    const double n = static_cast<double>(a.size());
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sab += (a[k] - ma) * (b[k] - mb);
        saa += (a[k] - ma) * (a[k] - ma);
        sbb += (b[k] - mb) * (b[k] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace tilesampler::harness
