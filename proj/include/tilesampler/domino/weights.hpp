// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <variant>

#include "tilesampler/domino/domain.hpp"
#include "tilesampler/domino/height.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::domino {

struct Uniform {};

/// w_e per dual edge: horizontal(x, y) weighs the domino (x,y)-(x+1,y), vertical(x, y) the domino (x,y)-(x,y+1).
struct EdgeWeights {
    Grid2<double> horizontal;
    Grid2<double> vertical;

    static EdgeWeights constant(int n, double w) { return {Grid2<double>(n, n, w), Grid2<double>(n, n, w)}; }
};

/// q_v per vertex on the (n+1) x (n+1) vertex grid; W(T) = prod q_v^h(v).
struct VolumeWeights {
    Grid2<double> q;

    static VolumeWeights constant(int n, double value) { return {Grid2<double>(n + 1, n + 1, value)}; }
};

using WeightSpec = std::variant<Uniform, EdgeWeights, VolumeWeights>;

namespace detail {
inline void require_positive(const Grid2<double>& g, const char* what)
{
    for (double w : g.data()) {
        if (!(w > 0.0) || !std::isfinite(w)) throw InvalidInput(std::string(what) + " must be positive and finite");
    }
}
}  // namespace detail

inline void validate_weights(const WeightSpec& w, const Domain& d)
{
    if (const auto* e = std::get_if<EdgeWeights>(&w)) {
        if (e->horizontal.width() != d.n() || e->vertical.width() != d.n() || e->horizontal.height() != d.n() ||
            e->vertical.height() != d.n()) {
            throw InvalidInput("edge weights must cover the n x n face grid");
        }
        detail::require_positive(e->horizontal, "edge weights");
        detail::require_positive(e->vertical, "edge weights");
    } else if (const auto* v = std::get_if<VolumeWeights>(&w)) {
        if (v->q.width() != d.vertex_side() || v->q.height() != d.vertex_side()) {
            throw InvalidInput("volume weights must cover the vertex grid");
        }
        detail::require_positive(v->q, "volume weights");
    }
}

/// Natural log of W(T); 0 for Uniform.
inline double log_weight(const Tiling& t, const WeightSpec& w)
{
    if (const auto* e = std::get_if<EdgeWeights>(&w)) {
        double sum = 0.0;
        for (const Domino& d : dominoes_from_tiling(t)) {
            sum += std::log(d.horizontal() ? e->horizontal(d.a.x, d.a.y) : e->vertical(d.a.x, d.a.y));
        }
        return sum;
    }
    if (const auto* v = std::get_if<VolumeWeights>(&w)) {
        const HeightFunction h = height_function(t);
        double sum = 0.0;
        for (int j = 0; j < h.side(); ++j)
            for (int i = 0; i < h.side(); ++i)
                if (h.present(i, j)) sum += h(i, j) * std::log(v->q(i, j));
        return sum;
    }
    return 0.0;
}

/**
 * Heat-bath probability of choosing the vertical pair (state 12) at a
 * rotateable vertex: W_up / (W_up + W_down) for the two local configurations.
 */
inline double heat_bath_p_up(int i, int j, const WeightSpec& w)
{
    if (const auto* e = std::get_if<EdgeWeights>(&w)) {
        // weights off the face grid never matter: such vertices are not rotateable
        const double vert = e->vertical.get_or(i - 1, j - 1, 1.0) * e->vertical.get_or(i, j - 1, 1.0);
        const double horz = e->horizontal.get_or(i - 1, j - 1, 1.0) * e->horizontal.get_or(i - 1, j, 1.0);
        return vert / (vert + horz);
    }
    if (const auto* v = std::get_if<VolumeWeights>(&w)) {
        // up-rotation changes h(i, j) by 4 * up_direction(i, j)
        const double ratio = std::pow(v->q.get_or(i, j, 1.0), 4.0 * up_direction(i, j));
        return ratio / (1.0 + ratio);
    }
    return 0.5;
}

}  // namespace tilesampler::domino
