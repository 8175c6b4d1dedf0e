// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <optional>
#include <string>

#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"
#include "tilesampler/height/extremal_solver.hpp"
#include "tilesampler/sixvertex/config.hpp"

namespace tilesampler::sixvertex {

/**
 * Heights on the (n+1) x (n+1) faces; face (fx, fy) has vertex (fx, fy) at its
 * north-east corner. Crossing an occupied edge northwards or eastwards adds 1,
 * an empty one subtracts 1. Face (0, 0) has height 0.
 */
struct FaceHeights {
    Grid2<int> h;
    int n() const noexcept { return h.width() - 1; }
    int operator()(int fx, int fy) const noexcept { return h(fx, fy); }
    int& operator()(int fx, int fy) noexcept { return h(fx, fy); }
    friend bool operator==(const FaceHeights&, const FaceHeights&) = default;
};

inline int edge_step(std::uint8_t occupied) noexcept { return occupied ? 1 : -1; }

inline FaceHeights heights_from_config(const SixVertexConfig& c)
{
    const int n = c.n();
    FaceHeights out{Grid2<int>(n + 1, n + 1, 0)};
    for (int fy = 0; fy <= n; ++fy) {
        if (fy > 0) out(0, fy) = out(0, fy - 1) + edge_step(c.horizontal(0, fy - 1));
        for (int fx = 1; fx <= n; ++fx) out(fx, fy) = out(fx - 1, fy) + edge_step(c.vertical(fx - 1, fy));
    }
    for (int fy = 0; fy < n; ++fy)
        for (int fx = 1; fx <= n; ++fx)
            if (out(fx, fy + 1) - out(fx, fy) != edge_step(c.horizontal(fx, fy)))
                throw InconsistencyError("face heights not single-valued around vertex (" + std::to_string(fx - 1) +
                                         "," + std::to_string(fy) + ")");
    return out;
}

inline SixVertexConfig config_from_heights(const FaceHeights& f)
{
    const int n = f.n();
    if (n < 1 || f.h.height() != n + 1) throw InvalidInput("face height grid must be square with side >= 2");
    SixVertexConfig c(n);
    auto edge = [](int d) -> std::uint8_t {
        if (d == 1) return 1;
        if (d == -1) return 0;
        throw InconsistencyError("adjacent face heights must differ by exactly 1");
    };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x <= n; ++x) c.horizontal(x, y) = edge(f(x, y + 1) - f(x, y));
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x < n; ++x) c.vertical(x, y) = edge(f(x + 1, y) - f(x, y));
    return c;
}

/// Vertex (x, y) classified from its four surrounding face heights.
inline VertexType vertex_type_from_heights(int sw, int se, int nw, int ne)
{
    return classify(nw - sw == 1, ne - se == 1, se - sw == 1, ne - nw == 1);
}

enum class Flip { Up, Down, None };

inline bool interior_face(int n, int fx, int fy) noexcept { return fx >= 1 && fy >= 1 && fx < n && fy < n; }

inline Flip flippable(const FaceHeights& f, int fx, int fy)
{
    if (!interior_face(f.n(), fx, fy)) throw BoundaryFaceError("boundary faces are fixed");
    const int m = f(fx - 1, fy);
    if (f(fx + 1, fy) != m || f(fx, fy - 1) != m || f(fx, fy + 1) != m) return Flip::None;
    return f(fx, fy) < m ? Flip::Up : Flip::Down;
}

/// Boundary-ring heights implied by `b`; nullopt when the ring does not close.
inline std::optional<Grid2<std::optional<int>>> boundary_heights(const Boundary& b)
{
    const int n = b.n;
    Grid2<std::optional<int>> ring(n + 1, n + 1);
    int h = 0;
    ring(0, 0) = 0;
    for (int fx = 0; fx < n; ++fx) ring(fx + 1, 0) = h += edge_step(b.bottom[static_cast<std::size_t>(fx)]);
    for (int fy = 0; fy < n; ++fy) ring(n, fy + 1) = h += edge_step(b.right[static_cast<std::size_t>(fy)]);
    for (int fx = n - 1; fx >= 0; --fx) ring(fx, n) = h -= edge_step(b.top[static_cast<std::size_t>(fx)]);
    for (int fy = n - 1; fy >= 0; --fy) {
        h -= edge_step(b.left[static_cast<std::size_t>(fy)]);
        if (fy > 0) ring(0, fy) = h;
    }
    if (h != 0) return std::nullopt;
    return ring;
}

struct ExtremalHeights {
    FaceHeights max, min;
};

/// Pointwise maximal and minimal face heights compatible with `b`.
inline ExtremalHeights sv_extremal(const Boundary& b)
{
    const int n = b.n;
    const auto ring = boundary_heights(b);
    if (!ring) throw InfeasibleBoundary("boundary occupations do not balance");
    height::ConstraintGraph g((n + 1) * (n + 1));
    auto id = [n](int fx, int fy) { return fy * (n + 1) + fx; };
    for (int fy = 0; fy <= n; ++fy)
        for (int fx = 0; fx <= n; ++fx) {
            g.fixed[static_cast<std::size_t>(id(fx, fy))] = (*ring)(fx, fy);
            if (fx < n) {
                g.add_arc(id(fx, fy), id(fx + 1, fy), 1);
                g.add_arc(id(fx + 1, fy), id(fx, fy), 1);
            }
            if (fy < n) {
                g.add_arc(id(fx, fy), id(fx, fy + 1), 1);
                g.add_arc(id(fx, fy + 1), id(fx, fy), 1);
            }
        }
    const auto hi = height::maximal_heights(g);
    const auto lo = height::minimal_heights(g);
    if (!hi || !lo) throw InfeasibleBoundary("no height function matches the boundary");
    ExtremalHeights out{{Grid2<int>(n + 1, n + 1)}, {Grid2<int>(n + 1, n + 1)}};
    for (int fy = 0; fy <= n; ++fy)
        for (int fx = 0; fx <= n; ++fx) {
            out.max(fx, fy) = (*hi)[static_cast<std::size_t>(id(fx, fy))];
            out.min(fx, fy) = (*lo)[static_cast<std::size_t>(id(fx, fy))];
        }
    return out;
}

/// true iff a <= b pointwise.
inline bool heights_le(const FaceHeights& a, const FaceHeights& b)
{
    if (a.h.width() != b.h.width()) throw DomainMismatchError("face grids differ in size");
    for (std::size_t k = 0; k < a.h.data().size(); ++k)
        if (a.h.data()[k] > b.h.data()[k]) return false;
    return true;
}

}  // namespace tilesampler::sixvertex
