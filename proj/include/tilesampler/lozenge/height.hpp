// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <queue>
#include <string>
#include <utility>

#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"
#include "tilesampler/height/extremal_solver.hpp"
#include "tilesampler/lozenge/tiling.hpp"

namespace tilesampler::lozenge {

/**
 * Height change along edge k out of (x, y). Even directions have the up
 * triangle on their left: +1 if uncrossed, -2 if crossed. Odd directions are
 * reversed even edges. One cube is 3 units.
 */
inline int edge_step(int k, bool crossed) noexcept
{
    const int even = crossed ? -2 : 1;
    return (k & 1) ? -even : even;
}

struct LozengeHeights {
    TriDomain domain;
    Grid2<int> h;  // vertex_width x vertex_height; absent vertices hold 0
    Grid2<std::uint8_t> present;
    std::pair<int, int> reference;
    int operator()(int x, int y) const noexcept { return h(x, y); }
    friend bool operator==(const LozengeHeights&, const LozengeHeights&) = default;
};

/// The lowest-then-leftmost vertex of the domain; its height is 0.
inline std::pair<int, int> reference_vertex(const TriDomain& d)
{
    for (int y = 0; y < d.vertex_height(); ++y)
        for (int x = 0; x < d.vertex_width(); ++x)
            if (d.has_vertex(x, y)) return {x, y};
    throw InvalidDomain("domain has no vertices");
}

inline LozengeHeights lozenge_heights(const LozengeTiling& t)
{
    const TriDomain& d = t.domain();
    LozengeHeights out{d, Grid2<int>(d.vertex_width(), d.vertex_height(), 0),
                       Grid2<std::uint8_t>(d.vertex_width(), d.vertex_height(), 0), reference_vertex(d)};
    Grid2<std::uint8_t> seen(d.vertex_width(), d.vertex_height(), 0);
    for (int y = 0; y < d.vertex_height(); ++y)
        for (int x = 0; x < d.vertex_width(); ++x) out.present(x, y) = d.has_vertex(x, y);
    std::queue<std::pair<int, int>> q;
    q.push(out.reference);
    seen(out.reference.first, out.reference.second) = 1;
    while (!q.empty()) {
        const auto [x, y] = q.front();
        q.pop();
        for (int k = 0; k < 6; ++k) {
            if (!d.has_edge(x, y, k)) continue;
            const auto dk = kDirections[static_cast<std::size_t>(k)];
            const int nx = x + dk[0], ny = y + dk[1];
            const int hn = out.h(x, y) + edge_step(k, t.state(x, y) >> k & 1);
            if (seen(nx, ny)) {
                if (out.h(nx, ny) != hn)
                    throw InconsistencyError("lozenge heights not single-valued at (" + std::to_string(nx) + "," +
                                             std::to_string(ny) + ")");
                continue;
            }
            seen(nx, ny) = 1;
            out.h(nx, ny) = hn;
            q.push({nx, ny});
        }
    }
    return out;
}

inline LozengeTiling tiling_from_heights(const LozengeHeights& hf)
{
    const TriDomain& d = hf.domain;
    LozengeTiling t(d);
    for (int y = 0; y < d.vertex_height(); ++y)
        for (int x = 0; x < d.vertex_width(); ++x)
            for (int k = 0; k < 6; ++k) {
                if (!d.has_edge(x, y, k)) continue;
                const auto dk = kDirections[static_cast<std::size_t>(k)];
                const int diff = hf.h(x + dk[0], y + dk[1]) - hf.h(x, y);
                if (diff == edge_step(k, true)) {
                    if (!d.interior_edge(x, y, k)) throw InconsistencyError("boundary edge would be crossed");
                    t.at(x, y) |= static_cast<std::uint8_t>(1u << k);
                } else if (diff != edge_step(k, false)) {
                    throw InconsistencyError("height step is neither +1 nor -2 along an edge");
                }
            }
    if (const auto err = validate_tiling(t); !err.empty()) throw InconsistencyError(err);
    return t;
}

/// true iff a <= b at every vertex.
inline bool heights_le(const LozengeHeights& a, const LozengeHeights& b)
{
    if (!(a.domain == b.domain)) throw DomainMismatchError("heights live on different domains");
    for (std::size_t k = 0; k < a.h.data().size(); ++k)
        if (a.h.data()[k] > b.h.data()[k]) return false;
    return true;
}

struct ExtremalLozenge {
    LozengeTiling max, min;
};

/// Maximal and minimal tilings, or nullopt when the domain has no lozenge tiling.
inline std::optional<ExtremalLozenge> loz_extremal(const TriDomain& d)
{
    const int w = d.vertex_width(), hgt = d.vertex_height();
    auto id = [w](int x, int y) { return y * w + x; };
    Grid2<std::optional<int>> fixed(w, hgt);
    const auto ref = reference_vertex(d);
    fixed(ref.first, ref.second) = 0;
    std::queue<std::pair<int, int>> q;
    q.push(ref);
    // boundary edges are never crossed, which pins the boundary heights
    while (!q.empty()) {
        const auto [x, y] = q.front();
        q.pop();
        for (int k = 0; k < 6; ++k) {
            if (!d.has_edge(x, y, k) || d.interior_edge(x, y, k)) continue;
            const auto dk = kDirections[static_cast<std::size_t>(k)];
            const int nx = x + dk[0], ny = y + dk[1];
            const int hn = *fixed(x, y) + edge_step(k, false);
            if (fixed(nx, ny)) {
                if (*fixed(nx, ny) != hn) return std::nullopt;
                continue;
            }
            fixed(nx, ny) = hn;
            q.push({nx, ny});
        }
    }
    height::ConstraintGraph g(w * hgt);
    for (int y = 0; y < hgt; ++y)
        for (int x = 0; x < w; ++x) {
            if (!d.has_vertex(x, y)) {
                g.fixed[static_cast<std::size_t>(id(x, y))] = 0;
                continue;
            }
            g.fixed[static_cast<std::size_t>(id(x, y))] = fixed(x, y);
            for (int k = 0; k < 6; k += 2) {
                if (!d.interior_edge(x, y, k)) continue;
                const auto dk = kDirections[static_cast<std::size_t>(k)];
                g.add_arc(id(x, y), id(x + dk[0], y + dk[1]), 1);
                g.add_arc(id(x + dk[0], y + dk[1]), id(x, y), 2);
            }
        }
    const auto hi = height::maximal_heights(g);
    const auto lo = height::minimal_heights(g);
    if (!hi || !lo) return std::nullopt;
    auto build = [&](const std::vector<int>& v) {
        LozengeHeights hf{d, Grid2<int>(w, hgt, 0), Grid2<std::uint8_t>(w, hgt, 0), ref};
        for (int y = 0; y < hgt; ++y)
            for (int x = 0; x < w; ++x) {
                hf.present(x, y) = d.has_vertex(x, y);
                hf.h(x, y) = hf.present(x, y) ? v[static_cast<std::size_t>(id(x, y))] : 0;
            }
        return tiling_from_heights(hf);
    };
    try {
        return ExtremalLozenge{build(*hi), build(*lo)};
    } catch (const InconsistencyError&) {
        return std::nullopt;
    }
}

}  // namespace tilesampler::lozenge
