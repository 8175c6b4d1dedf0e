// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <vector>

#include "tilesampler/domino/weights.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/lozenge/dynamics.hpp"
#include "tilesampler/sixvertex/dynamics.hpp"

namespace tilesampler::harness {

/// Normalized Gibbs probabilities over an enumerated state list, with the partition function.
struct ExactDistribution {
    std::vector<double> probabilities;
    double partition_function = 0.0;
};

inline ExactDistribution exact_distribution(const std::vector<double>& weights)
{
    ExactDistribution out{weights, 0.0};
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw InvalidInput("Gibbs weights must be finite and non-negative");
        out.partition_function += w;
    }
    if (out.partition_function <= 0.0) throw InvalidInput("partition function is zero");
    for (double& p : out.probabilities) p /= out.partition_function;
    return out;
}

inline double gibbs_weight(const domino::Tiling& t, const domino::WeightSpec& w) { return std::exp(domino::log_weight(t, w)); }

inline double gibbs_weight(const sixvertex::SixVertexConfig& c, const sixvertex::SVWeights& w)
{
    double p = 1.0;
    for (int y = 0; y < c.n(); ++y)
        for (int x = 0; x < c.n(); ++x) p *= w.weight(sixvertex::vertex_type(c, x, y));
    return p;
}

/// q(v) per cube: heights are in thirds of a cube.
inline double gibbs_weight(const lozenge::LozengeTiling& t, const lozenge::LozengeWeights& w)
{
    if (!w.q) return 1.0;
    const auto h = lozenge::lozenge_heights(t);
    double log_w = 0.0;
    for (int y = 0; y < h.h.height(); ++y)
        for (int x = 0; x < h.h.width(); ++x)
            if (h.present(x, y)) log_w += h(x, y) / 3.0 * std::log((*w.q)(x, y));
    return std::exp(log_w);
}

}  // namespace tilesampler::harness
