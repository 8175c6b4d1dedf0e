// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "tilesampler/domino/checkerboard.hpp"
#include "tilesampler/domino/domain.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/domino/weights.hpp"
#include "tilesampler/grid.hpp"
#include "tilesampler/rng/stream_family.hpp"
#include "tilesampler/sweep/backend.hpp"
#include "tilesampler/sweep/kernels.hpp"

namespace tilesampler::sweep {

/// Color of the rotating class for sweep `step`, drawn from the family's global sub-stream.
inline Color sweep_color(const rng::StreamFamily& f, std::uint64_t step) noexcept
{
    return f.global_uniform(step) < 0.5 ? Color::Black : Color::White;
}

/**
 * Heat-bath cluster dynamics on one domain: each color class is an admissible
 * cluster, and every site carries its own up-rotation probability.
 */
class SweepPlan {
  public:
    SweepPlan(const domino::Domain& domain, domino::WeightSpec weights)
        : domain_(domain), weights_(std::move(weights)), layout_(domain.vertex_side())
    {
        domino::validate_weights(weights_, domain_);
        for (Color c : {Color::Black, Color::White}) {
            auto& p = p_up_[static_cast<int>(c)];
            p = Grid2<double>(layout_.side(), layout_.half(), 0.5);
            for (int i = 0; i < layout_.side(); ++i)
                for (int j = 0; j < layout_.half(); ++j)
                    p(i, j) = domino::heat_bath_p_up(i, Checkerboard::column_of(c, i, j), weights_);
        }
    }

    const domino::Domain& domain() const noexcept { return domain_; }
    const domino::WeightSpec& weights() const noexcept { return weights_; }
    double p_up(Color c, int i, int j) const noexcept { return p_up_[static_cast<int>(c)](i, j); }

    rng::StreamFamily family(std::uint64_t seed) const
    {
        return rng::seed_family(seed, domain_.vertex_side(), domain_.vertex_side());
    }

    /// Rotate every `color` site, then update every opposite-color site.
    void sweep(Checkerboard& cb, const rng::StreamFamily& f, std::uint64_t step, Color color, const Backend& b) const
    {
        const int half = cb.half();
        const auto width = static_cast<std::uint64_t>(f.width());
        b.for_rows(cb.side(), [&](int begin, int end) {
            for (int i = begin; i < end; ++i)
                for (int j = 0; j < half; ++j) {
                    std::uint8_t& s = cb.at(color, i, j);
                    if (!domino::rotateable(s)) continue;
                    const auto col = static_cast<std::uint64_t>(Checkerboard::column_of(color, i, j));
                    const double u = f.site_uniform(col * width + static_cast<std::uint64_t>(i), step);
                    s = rotate_kernel(s, u, p_up(color, i, j));
                }
        });
        const Color o = domino::other(color);
        b.for_rows(cb.side(), [&](int begin, int end) {
            for (int i = begin; i < end; ++i)
                for (int j = 0; j < half; ++j) cb.at(o, i, j) = update_kernel(cb, i, j, o);
        });
    }

    /// nSteps sweeps driven by a family seeded with `seed`; color per step from the global sub-stream.
    void walk(Checkerboard& cb, std::uint64_t seed, std::uint64_t steps, const Backend& b) const
    {
        const rng::StreamFamily f = family(seed);
        for (std::uint64_t k = 0; k < steps; ++k) sweep(cb, f, k, sweep_color(f, k), b);
    }

  private:
    domino::Domain domain_;
    domino::WeightSpec weights_;
    Checkerboard layout_;
    Grid2<double> p_up_[2];
};

inline domino::Tiling sweep(const domino::Tiling& t, const rng::StreamFamily& f, std::uint64_t step, Color color,
                            const SweepPlan& plan, const Backend& b)
{
    Checkerboard cb = domino::split_checkerboard(t);
    plan.sweep(cb, f, step, color, b);
    return domino::merge_checkerboard(cb, t.domain());
}

inline domino::Tiling random_walk(const domino::Tiling& t, std::uint64_t seed, std::uint64_t steps,
                                  const SweepPlan& plan, const Backend& b)
{
    Checkerboard cb = domino::split_checkerboard(t);
    plan.walk(cb, seed, steps, b);
    return domino::merge_checkerboard(cb, t.domain());
}

}  // namespace tilesampler::sweep
