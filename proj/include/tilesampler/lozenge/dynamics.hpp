// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "tilesampler/cftp/monotone.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/lozenge/height.hpp"
#include "tilesampler/rng/stream_family.hpp"
#include "tilesampler/sweep/backend.hpp"

namespace tilesampler::lozenge {

/// Uniform when `q` is empty; otherwise weight q(v) per cube added at vertex v.
struct LozengeWeights {
    std::optional<Grid2<double>> q;

    static LozengeWeights uniform() { return {}; }
    static LozengeWeights volume(const TriDomain& d, double value)
    {
        return {Grid2<double>(d.vertex_width(), d.vertex_height(), value)};
    }
};

inline void validate_weights(const LozengeWeights& w, const TriDomain& d)
{
    if (!w.q) return;
    if (w.q->width() != d.vertex_width() || w.q->height() != d.vertex_height())
        throw InvalidInput("lozenge volume weights must cover the vertex grid");
    for (double v : w.q->data())
        if (!(v > 0.0) || !std::isfinite(v)) throw InvalidInput("lozenge weights must be positive and finite");
}

inline double loz_heat_bath_p_up(int x, int y, const LozengeWeights& w)
{
    if (!w.q) return 0.5;
    const double q = (*w.q)(x, y);
    return q / (1.0 + q);
}

/// Three-colouring of the vertices; neighbours along even directions are one class up.
inline int vertex_class(int x, int y) noexcept { return ((x - y) % 3 + 3) % 3; }

inline int loz_sweep_class(const rng::StreamFamily& f, std::uint64_t step) noexcept
{
    const int k = static_cast<int>(f.global_uniform(step) * 3.0);
    return k > 2 ? 2 : k;
}

class LozengePlan {
  public:
    LozengePlan(TriDomain d, LozengeWeights w) : domain_(std::move(d)), weights_(std::move(w))
    {
        validate_weights(weights_, domain_);
        p_up_ = Grid2<double>(domain_.vertex_width(), domain_.vertex_height(), 0.5);
        for (int y = 0; y < p_up_.height(); ++y)
            for (int x = 0; x < p_up_.width(); ++x) p_up_(x, y) = loz_heat_bath_p_up(x, y, weights_);
    }

    const TriDomain& domain() const noexcept { return domain_; }
    const LozengeWeights& weights() const noexcept { return weights_; }

    rng::StreamFamily family(std::uint64_t seed) const
    {
        return rng::seed_family(seed, domain_.vertex_width(), domain_.vertex_height());
    }

    /// Heat-bath rotation of every class-`cls` vertex, then refresh the shared spokes of the other classes.
    void sweep(LozengeTiling& t, const rng::StreamFamily& f, std::uint64_t step, int cls, const sweep::Backend& b) const
    {
        const auto& m = rotation_masks();
        const int w = domain_.vertex_width(), h = domain_.vertex_height();
        b.for_rows(h, [&](int begin, int end) {
            for (int y = begin; y < end; ++y)
                for (int x = (cls + y) % 3; x < w; x += 3) {
                    std::uint8_t& s = t.at(x, y);
                    if (s != m.upper && s != m.lower) continue;
                    const double u = f.site_uniform(static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(w) +
                                                        static_cast<std::uint64_t>(x),
                                                    step);
                    s = u < p_up_(x, y) ? m.upper : m.lower;
                }
        });
        b.for_rows(h, [&](int begin, int end) {
            for (int y = begin; y < end; ++y)
                for (int x = 0; x < w; ++x) {
                    const int c = vertex_class(x, y);
                    if (c == cls) continue;
                    const int first = (c + 1) % 3 == cls ? 0 : 1;  // even or odd spokes point into the class
                    std::uint8_t s = t.at(x, y);
                    for (int k = first; k < 6; k += 2) {
                        const auto dk = kDirections[static_cast<std::size_t>(k)];
                        const std::uint8_t bit = t.state(x + dk[0], y + dk[1]) >> ((k + 3) % 6) & 1;
                        s = static_cast<std::uint8_t>((s & ~(1u << k)) | (bit << k));
                    }
                    t.at(x, y) = s;
                }
        });
    }

    void walk(LozengeTiling& t, std::uint64_t seed, std::uint64_t steps, const sweep::Backend& b) const
    {
        const rng::StreamFamily f = family(seed);
        for (std::uint64_t k = 0; k < steps; ++k) sweep(t, f, k, loz_sweep_class(f, k), b);
    }

  private:
    TriDomain domain_;
    LozengeWeights weights_;
    Grid2<double> p_up_;
};

inline LozengeTiling loz_random_walk(const LozengeTiling& t, std::uint64_t seed, std::uint64_t steps,
                                     const LozengePlan& plan, const sweep::Backend& b = sweep::Backend::sequential())
{
    LozengeTiling out = t;
    plan.walk(out, seed, steps, b);
    return out;
}

inline LozengeTiling loz_cftp(const LozengePlan& plan, std::uint64_t master_seed,
                              const sweep::Backend& b = sweep::Backend::sequential(), const cftp::CftpOptions& options = {},
                              const cftp::CftpHooks<LozengeTiling>* hooks = nullptr)
{
    const auto ext = loz_extremal(plan.domain());
    if (!ext) throw Untileable("domain admits no lozenge tiling");
    auto walk = [&](LozengeTiling& t, std::uint64_t seed, std::uint64_t steps) { plan.walk(t, seed, steps, b); };
    return cftp::monotone_cftp(ext->max, ext->min, walk, master_seed, options, hooks);
}

}  // namespace tilesampler::lozenge
