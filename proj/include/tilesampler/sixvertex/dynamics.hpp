// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "tilesampler/cftp/monotone.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/rng/stream_family.hpp"
#include "tilesampler/sixvertex/heights.hpp"
#include "tilesampler/sweep/backend.hpp"

namespace tilesampler::sixvertex {

/// Symmetric vertex weights: a for a1/a2, b for b1/b2, c for c1/c2.
struct SVWeights {
    double a = 1.0, b = 1.0, c = 1.0;

    /// Heat-bath coupling is monotone exactly when a <= c and b <= c.
    bool monotone() const noexcept { return a <= c && b <= c; }

    double weight(VertexType t) const noexcept
    {
        switch (t) {
            case VertexType::A1:
            case VertexType::A2: return a;
            case VertexType::B1:
            case VertexType::B2: return b;
            default: return c;
        }
    }
    friend bool operator==(const SVWeights&, const SVWeights&) = default;
};

inline void validate_weights(const SVWeights& w)
{
    for (double x : {w.a, w.b, w.c})
        if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("six-vertex weights must be positive and finite");
}

/// Product of the weights of the four corner vertices of face (fx, fy) if it had height `hf`.
inline double corner_weight(const FaceHeights& f, int fx, int fy, int hf, const SVWeights& w)
{
    const int s = f(fx, fy - 1), n = f(fx, fy + 1), e = f(fx + 1, fy), west = f(fx - 1, fy);
    // vertices at the SW, SE, NW, NE corners of the face
    return w.weight(vertex_type_from_heights(f(fx - 1, fy - 1), s, west, hf)) *
           w.weight(vertex_type_from_heights(s, f(fx + 1, fy - 1), hf, e)) *
           w.weight(vertex_type_from_heights(west, hf, f(fx - 1, fy + 1), n)) *
           w.weight(vertex_type_from_heights(hf, e, n, f(fx + 1, fy + 1)));
}

/// Probability of the upper state at a face that can flip (neighbours all at m, face at m +- 1).
inline double sv_heat_bath_p_up(const FaceHeights& f, int fx, int fy, const SVWeights& w)
{
    if (flippable(f, fx, fy) == Flip::None) throw InvalidInput("face is not flippable");
    if (w.a == w.b && w.b == w.c) return 0.5;
    const int m = f(fx - 1, fy);
    const double up = corner_weight(f, fx, fy, m + 1, w);
    const double down = corner_weight(f, fx, fy, m - 1, w);
    return up / (up + down);
}

/// Face parity class 0..3: x parity + 2 * y parity. No two faces of one class share an edge or a corner vertex's weight.
inline int face_class(int fx, int fy) noexcept { return (fx & 1) | ((fy & 1) << 1); }

inline int sv_sweep_class(const rng::StreamFamily& f, std::uint64_t step) noexcept
{
    const int k = static_cast<int>(f.global_uniform(step) * 4.0);
    return k > 3 ? 3 : k;
}

inline rng::StreamFamily sv_family(std::uint64_t seed, int n) { return rng::seed_family(seed, n + 1, n + 1); }

/// Heat-bath flip of every interior face of class `cls`, in place.
inline void sv_sweep(FaceHeights& h, const rng::StreamFamily& f, std::uint64_t step, int cls, const SVWeights& w,
                     const sweep::Backend& b)
{
    const int n = h.n();
    const int x0 = (cls & 1) ? 1 : 2;
    const int y0 = (cls & 2) ? 1 : 2;
    const int rows = (n - y0 + 1) / 2;  // faces y0, y0 + 2, ... < n
    if (rows <= 0) return;
    const bool uniform = w.a == w.b && w.b == w.c;
    b.for_rows(rows, [&](int begin, int end) {
        for (int r = begin; r < end; ++r) {
            const int fy = y0 + 2 * r;
            for (int fx = x0; fx < n; fx += 2) {
                const int m = h(fx - 1, fy);
                if (h(fx + 1, fy) != m || h(fx, fy - 1) != m || h(fx, fy + 1) != m) continue;
                const double u = f.site_uniform(static_cast<std::uint64_t>(fy) * static_cast<std::uint64_t>(n + 1) +
                                                    static_cast<std::uint64_t>(fx),
                                                step);
                double p = 0.5;
                if (!uniform) {
                    const double up = corner_weight(h, fx, fy, m + 1, w);
                    p = up / (up + corner_weight(h, fx, fy, m - 1, w));
                }
                h(fx, fy) = u < p ? m + 1 : m - 1;
            }
        }
    });
}

inline void sv_walk(FaceHeights& h, std::uint64_t seed, std::uint64_t steps, const SVWeights& w,
                    const sweep::Backend& b)
{
    const rng::StreamFamily f = sv_family(seed, h.n());
    for (std::uint64_t k = 0; k < steps; ++k) sv_sweep(h, f, k, sv_sweep_class(f, k), w, b);
}

inline SixVertexConfig sv_random_walk(const SixVertexConfig& c, std::uint64_t seed, std::uint64_t steps,
                                      const SVWeights& w, const sweep::Backend& b = sweep::Backend::sequential())
{
    validate_weights(w);
    FaceHeights h = heights_from_config(c);
    sv_walk(h, seed, steps, w, b);
    return config_from_heights(h);
}

/// Exact Gibbs sample; refuses weights for which the heat-bath coupling is not monotone.
inline SixVertexConfig sv_cftp(const Boundary& boundary, const SVWeights& w, std::uint64_t master_seed,
                               const sweep::Backend& b = sweep::Backend::sequential(),
                               const cftp::CftpOptions& options = {},
                               const cftp::CftpHooks<FaceHeights>* hooks = nullptr)
{
    validate_weights(w);
    if (!w.monotone()) throw NonMonotoneWeights("monotone coupling needs a <= c and b <= c");
    const ExtremalHeights ext = sv_extremal(boundary);
    auto walk = [&](FaceHeights& h, std::uint64_t seed, std::uint64_t steps) { sv_walk(h, seed, steps, w, b); };
    return config_from_heights(cftp::monotone_cftp(ext.max, ext.min, walk, master_seed, options, hooks));
}

}  // namespace tilesampler::sixvertex
