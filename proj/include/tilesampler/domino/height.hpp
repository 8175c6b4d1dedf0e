// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tilesampler/domino/domain.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"
#include "tilesampler/height/extremal_solver.hpp"

namespace tilesampler::domino {

// Faces are colored black when x + y is even. Walking along an edge with the
// black face on the left changes the height by +1, or by -3 if a domino
// crosses the edge. With this coloring an up-rotation (3 -> 12) raises the
// height by 4 at even vertices (i + j even) and lowers it by 4 at odd ones.

inline constexpr bool black_face(int x, int y) noexcept { return ((x + y) & 1) == 0; }

/// Height change walking east from vertex (i, j) to (i+1, j).
inline constexpr int step_east(int i, int j, bool crossed) noexcept
{
    const int s = crossed ? -3 : 1;
    return black_face(i, j) ? s : -s;
}

/// Height change walking north from vertex (i, j) to (i, j+1).
inline constexpr int step_north(int i, int j, bool crossed) noexcept
{
    const int s = crossed ? -3 : 1;
    return black_face(i - 1, j) ? s : -s;
}

/// +1 when up-rotating at (i, j) raises the height there, -1 when it lowers it.
inline constexpr int up_direction(int i, int j) noexcept { return ((i + j) & 1) == 0 ? 1 : -1; }

/// Edge from (i, j) to (i+1, j) touches at least one domain face.
inline bool east_edge_in_domain(const Domain& d, int i, int j) { return d.contains(i, j) || d.contains(i, j - 1); }
inline bool north_edge_in_domain(const Domain& d, int i, int j) { return d.contains(i - 1, j) || d.contains(i, j); }
inline bool east_edge_interior(const Domain& d, int i, int j) { return d.contains(i, j) && d.contains(i, j - 1); }
inline bool north_edge_interior(const Domain& d, int i, int j) { return d.contains(i - 1, j) && d.contains(i, j); }

struct Vertex {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/**
 * Integer heights on the vertices of a domain, pinned to 0 at the lower-left
 * corner of the bottom-most, left-most face.
 */
class HeightFunction {
  public:
    HeightFunction() = default;
    HeightFunction(const Domain& d, Grid2<int> heights)
        : heights_(std::move(heights)), reference_{d.reference_face().x, d.reference_face().y}, present_(d.vertex_side(), d.vertex_side(), 0)
    {
        for (int j = 0; j < d.vertex_side(); ++j)
            for (int i = 0; i < d.vertex_side(); ++i) present_(i, j) = d.has_vertex(i, j) ? 1 : 0;
    }

    int side() const noexcept { return heights_.width(); }
    Vertex reference() const noexcept { return reference_; }
    bool present(int i, int j) const noexcept { return present_.get_or(i, j, 0) != 0; }
    int operator()(int i, int j) const noexcept { return heights_(i, j); }
    int& at(int i, int j) noexcept { return heights_(i, j); }
    const Grid2<int>& grid() const noexcept { return heights_; }
    const Grid2<std::uint8_t>& mask() const noexcept { return present_; }

    friend bool operator==(const HeightFunction& a, const HeightFunction& b)
    {
        return a.heights_ == b.heights_ && a.present_ == b.present_ && a.reference_ == b.reference_;
    }

  private:
    Grid2<int> heights_;
    Vertex reference_;
    Grid2<std::uint8_t> present_;
};

inline HeightFunction height_function(const Tiling& t)
{
    const Domain& d = t.domain();
    const int v = d.vertex_side();
    Grid2<int> h(v, v, 0);
    Grid2<std::uint8_t> seen(v, v, 0);
    const Face ref = d.reference_face();
    std::queue<Vertex> work;
    work.push({ref.x, ref.y});
    seen(ref.x, ref.y) = 1;
    auto visit = [&](int i, int j, int value) {
        if (seen(i, j)) {
            if (h(i, j) != value) {
                throw InconsistencyError("height cycle does not close at vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
            return;
        }
        seen(i, j) = 1;
        h(i, j) = value;
        work.push({i, j});
    };
    while (!work.empty()) {
        const auto [i, j] = work.front();
        work.pop();
        const int hv = h(i, j);
        const std::uint8_t s = t.state(i, j);
        if (east_edge_in_domain(d, i, j)) visit(i + 1, j, hv + step_east(i, j, s & kEast));
        if (east_edge_in_domain(d, i - 1, j)) visit(i - 1, j, hv - step_east(i - 1, j, s & kWest));
        if (north_edge_in_domain(d, i, j)) visit(i, j + 1, hv + step_north(i, j, s & kNorth));
        if (north_edge_in_domain(d, i, j - 1)) visit(i, j - 1, hv - step_north(i, j - 1, s & kSouth));
    }
    return HeightFunction(d, std::move(h));
}

/// Decodes heights back to tilestates; throws InconsistencyError on an invalid step.
inline Tiling tiling_from_heights(const Domain& d, const HeightFunction& h)
{
    const int v = d.vertex_side();
    Grid2<std::uint8_t> states(v, v, 0);
    auto crossed = [](int diff, int plain, int across, int i, int j) {
        if (diff == plain) return false;
        if (diff == across) return true;
        throw InconsistencyError("invalid height step at vertex (" + std::to_string(i) + "," + std::to_string(j) + ")");
    };
    for (int j = 0; j < v; ++j)
        for (int i = 0; i < v; ++i) {
            if (i + 1 < v && east_edge_in_domain(d, i, j)) {
                const bool c = crossed(h(i + 1, j) - h(i, j), step_east(i, j, false), step_east(i, j, true), i, j);
                if (c && !east_edge_interior(d, i, j)) throw InconsistencyError("boundary edge crossed");
                if (c) {
                    states(i, j) |= kEast;
                    states(i + 1, j) |= kWest;
                }
            }
            if (j + 1 < v && north_edge_in_domain(d, i, j)) {
                const bool c = crossed(h(i, j + 1) - h(i, j), step_north(i, j, false), step_north(i, j, true), i, j);
                if (c && !north_edge_interior(d, i, j)) throw InconsistencyError("boundary edge crossed");
                if (c) {
                    states(i, j) |= kNorth;
                    states(i, j + 1) |= kSouth;
                }
            }
        }
    return Tiling(d, std::move(states));
}

enum class Order { Equal, LessEqual, GreaterEqual, Incomparable };

inline Order order_compare(const HeightFunction& a, const HeightFunction& b)
{
    if (a.side() != b.side() || !(a.mask() == b.mask()) || a.reference() != b.reference()) {
        throw DomainMismatchError("height functions live on different domains");
    }
    bool le = true;
    bool ge = true;
    for (int j = 0; j < a.side(); ++j)
        for (int i = 0; i < a.side(); ++i) {
            if (!a.present(i, j)) continue;
            le = le && a(i, j) <= b(i, j);
            ge = ge && a(i, j) >= b(i, j);
        }
    if (le && ge) return Order::Equal;
    if (le) return Order::LessEqual;
    if (ge) return Order::GreaterEqual;
    return Order::Incomparable;
}

struct MeetJoin {
    Tiling meet;
    Tiling join;
};

inline MeetJoin lattice_meet_join(const Tiling& t1, const Tiling& t2)
{
    if (!(t1.domain() == t2.domain())) throw DomainMismatchError("tilings live on different domains");
    const HeightFunction h1 = height_function(t1);
    const HeightFunction h2 = height_function(t2);
    HeightFunction lo = h1;
    HeightFunction hi = h1;
    for (int j = 0; j < h1.side(); ++j)
        for (int i = 0; i < h1.side(); ++i) {
            lo.at(i, j) = std::min(h1(i, j), h2(i, j));
            hi.at(i, j) = std::max(h1(i, j), h2(i, j));
        }
    return {tiling_from_heights(t1.domain(), lo), tiling_from_heights(t1.domain(), hi)};
}

struct ExtremalTilings {
    Tiling max;
    Tiling min;
};

/**
 * Maximal and minimal tilings by boundary-height extension.
 *
 * Boundary heights are fixed by walking the boundary (no domino crosses it);
 * interior heights are then the tightest values the step rules allow from the
 * boundary. Returns nullopt when the boundary walk does not close or the
 * extension contradicts the boundary, which is exactly untileability.
 */
inline std::optional<ExtremalTilings> extremal_tilings(const Domain& d)
{
    const int v = d.vertex_side();
    auto id = [v](int i, int j) { return j * v + i; };
    height::ConstraintGraph g(v * v);

    // Boundary walk.
    Grid2<std::uint8_t> seen(v, v, 0);
    Grid2<int> bh(v, v, 0);
    const Face ref = d.reference_face();
    std::queue<Vertex> work;
    work.push({ref.x, ref.y});
    seen(ref.x, ref.y) = 1;
    bool consistent = true;
    auto visit = [&](int i, int j, int value) {
        if (seen(i, j)) {
            consistent = consistent && bh(i, j) == value;
            return;
        }
        seen(i, j) = 1;
        bh(i, j) = value;
        work.push({i, j});
    };
    auto boundary_east = [&](int i, int j) { return east_edge_in_domain(d, i, j) && !east_edge_interior(d, i, j); };
    auto boundary_north = [&](int i, int j) { return north_edge_in_domain(d, i, j) && !north_edge_interior(d, i, j); };
    while (!work.empty()) {
        const auto [i, j] = work.front();
        work.pop();
        const int hv = bh(i, j);
        if (boundary_east(i, j)) visit(i + 1, j, hv + step_east(i, j, false));
        if (boundary_east(i - 1, j)) visit(i - 1, j, hv - step_east(i - 1, j, false));
        if (boundary_north(i, j)) visit(i, j + 1, hv + step_north(i, j, false));
        if (boundary_north(i, j - 1)) visit(i, j - 1, hv - step_north(i, j - 1, false));
    }
    if (!consistent) return std::nullopt;

    for (int j = 0; j < v; ++j)
        for (int i = 0; i < v; ++i) {
            if (!d.has_vertex(i, j)) {
                g.fixed[static_cast<std::size_t>(id(i, j))] = 0;  // isolated, unused
                continue;
            }
            if (seen(i, j)) g.fixed[static_cast<std::size_t>(id(i, j))] = bh(i, j);
            // max increment along an edge is +1 with the black face on the left, +3 against it
            if (i + 1 < v && east_edge_interior(d, i, j)) {
                const int fwd = std::max(step_east(i, j, false), step_east(i, j, true));
                const int bwd = std::max(-step_east(i, j, false), -step_east(i, j, true));
                g.add_arc(id(i, j), id(i + 1, j), fwd);
                g.add_arc(id(i + 1, j), id(i, j), bwd);
            }
            if (j + 1 < v && north_edge_interior(d, i, j)) {
                const int fwd = std::max(step_north(i, j, false), step_north(i, j, true));
                const int bwd = std::max(-step_north(i, j, false), -step_north(i, j, true));
                g.add_arc(id(i, j), id(i, j + 1), fwd);
                g.add_arc(id(i, j + 1), id(i, j), bwd);
            }
        }
    auto hmax = height::maximal_heights(g);
    auto hmin = height::minimal_heights(g);
    if (!hmax || !hmin) return std::nullopt;
    Grid2<int> gmax(v, v, 0);
    Grid2<int> gmin(v, v, 0);
    for (int j = 0; j < v; ++j)
        for (int i = 0; i < v; ++i) {
            if (!d.has_vertex(i, j)) continue;
            gmax(i, j) = (*hmax)[static_cast<std::size_t>(id(i, j))];
            gmin(i, j) = (*hmin)[static_cast<std::size_t>(id(i, j))];
        }
    return ExtremalTilings{tiling_from_heights(d, HeightFunction(d, std::move(gmax))),
                           tiling_from_heights(d, HeightFunction(d, std::move(gmin)))};
}

}  // namespace tilesampler::domino
