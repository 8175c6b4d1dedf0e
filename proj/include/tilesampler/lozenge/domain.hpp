// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::lozenge {

/**
 * Triangular lattice in axial coordinates. Vertex (x, y) has neighbours
 * (x, y) + kDirections[k] for k = 0..5 in counter-clockwise order.
 */
inline constexpr std::array<std::array<int, 2>, 6> kDirections{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

/// Up triangle U(x, y) = {(x,y), (x+1,y), (x,y+1)}; down triangle D(x, y) = {(x+1,y), (x,y+1), (x+1,y+1)}.
struct Triangle {
    int x = 0, y = 0;
    bool up = true;
    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Triangles sharing an edge with `t`.
inline std::array<Triangle, 3> edge_neighbours(const Triangle& t)
{
    if (t.up) return {{{t.x, t.y, false}, {t.x - 1, t.y, false}, {t.x, t.y - 1, false}}};
    return {{{t.x, t.y, true}, {t.x + 1, t.y, true}, {t.x, t.y + 1, true}}};
}

/**
 * Simply-connected union of triangles inside a width x height box of up/down
 * cell pairs; vertices span (width+1) x (height+1). Construction rejects empty,
 * disconnected, holed or up/down-unbalanced domains.
 */
class TriDomain {
  public:
    TriDomain() = default;
    TriDomain(Grid2<std::uint8_t> up, Grid2<std::uint8_t> down) : up_(std::move(up)), down_(std::move(down))
    {
        if (up_.width() != down_.width() || up_.height() != down_.height())
            throw InvalidDomain("up and down triangle grids differ in size");
        if (up_.width() <= 0 || up_.height() <= 0) throw InvalidDomain("triangle box must be non-empty");
        int ups = 0, downs = 0;
        for (auto v : up_.data()) ups += v ? 1 : 0;
        for (auto v : down_.data()) downs += v ? 1 : 0;
        if (ups + downs == 0) throw InvalidDomain("domain has no triangles");
        if (ups != downs) throw Untileable("domain has " + std::to_string(ups) + " up and " + std::to_string(downs) + " down triangles");
        count_ = ups + downs;
        Triangle start{};
        for (int y = 0; y < height(); ++y)
            for (int x = 0; x < width(); ++x)
                if (up_(x, y) || down_(x, y)) {
                    start = {x, y, up_(x, y) != 0};
                    y = height();
                    break;
                }
        if (flood(start, true, 0) != count_) throw InvalidDomain("triangles are not edge-connected");
        const int outside = 2 * (width() + 2) * (height() + 2) - count_;
        if (flood({-1, -1, true}, false, 1) != outside) throw InvalidDomain("domain is not simply connected");
    }

    int width() const noexcept { return up_.width(); }
    int height() const noexcept { return up_.height(); }
    int vertex_width() const noexcept { return width() + 1; }
    int vertex_height() const noexcept { return height() + 1; }
    int triangle_count() const noexcept { return count_; }

    bool contains(const Triangle& t) const noexcept
    {
        return (t.up ? up_ : down_).get_or(t.x, t.y, 0) != 0;
    }
    const Grid2<std::uint8_t>& up_cells() const noexcept { return up_; }
    const Grid2<std::uint8_t>& down_cells() const noexcept { return down_; }

    /// Vertices of `t`.
    static std::array<std::array<int, 2>, 3> corners(const Triangle& t)
    {
        if (t.up) return {{{t.x, t.y}, {t.x + 1, t.y}, {t.x, t.y + 1}}};
        return {{{t.x + 1, t.y}, {t.x, t.y + 1}, {t.x + 1, t.y + 1}}};
    }

    /// The two triangles on either side of edge (x, y) -> (x, y) + kDirections[k]; the up one first.
    static std::array<Triangle, 2> edge_sides(int x, int y, int k)
    {
        if (k >= 3) {  // reverse to an even-or-odd canonical direction 0..2
            const auto d = kDirections[static_cast<std::size_t>(k)];
            return edge_sides(x + d[0], y + d[1], k - 3);
        }
        switch (k) {
            case 0: return {{{x, y, true}, {x, y - 1, false}}};
            case 1: return {{{x, y, true}, {x - 1, y, false}}};
            default: return {{{x - 1, y, true}, {x - 1, y, false}}};
        }
    }

    /// Edge k of vertex (x, y) borders at least one domain triangle.
    bool has_edge(int x, int y, int k) const noexcept
    {
        const auto s = edge_sides(x, y, k);
        return contains(s[0]) || contains(s[1]);
    }
    /// Both triangles along edge k of (x, y) lie in the domain, so a lozenge may cross it.
    bool interior_edge(int x, int y, int k) const noexcept
    {
        const auto s = edge_sides(x, y, k);
        return contains(s[0]) && contains(s[1]);
    }
    bool has_vertex(int x, int y) const noexcept
    {
        for (int k = 0; k < 6; ++k)
            if (has_edge(x, y, k)) return true;
        return false;
    }

    friend bool operator==(const TriDomain&, const TriDomain&) = default;

  private:
    int flood(Triangle start, bool inside, int margin) const
    {
        auto in_box = [&](const Triangle& t) {
            return t.x >= -margin && t.y >= -margin && t.x < width() + margin && t.y < height() + margin;
        };
        Grid2<std::uint8_t> seen_up(width() + 2 * margin, height() + 2 * margin, 0);
        Grid2<std::uint8_t> seen_down = seen_up;
        auto seen = [&](const Triangle& t) -> std::uint8_t& {
            return (t.up ? seen_up : seen_down)(t.x + margin, t.y + margin);
        };
        std::vector<Triangle> stack{start};
        seen(start) = 1;
        int count = 0;
        while (!stack.empty()) {
            const Triangle t = stack.back();
            stack.pop_back();
            ++count;
            for (const Triangle& u : edge_neighbours(t)) {
                if (!in_box(u) || contains(u) != inside || seen(u)) continue;
                seen(u) = 1;
                stack.push_back(u);
            }
        }
        return count;
    }

    Grid2<std::uint8_t> up_, down_;
    int count_ = 0;
};

/**
 * Hexagon with sides a, b, c, a, b, c. In axial coordinates shifted by c in x it
 * is 0 <= y <= b + c, 0 <= x <= a + c, c <= x + y <= a + b + c.
 */
inline TriDomain hexagon(int a, int b, int c)
{
    if (a < 1 || b < 1 || c < 1) throw InvalidDomain("hexagon sides must be positive");
    const int w = a + c, h = b + c;
    Grid2<std::uint8_t> up(w, h, 0), down(w, h, 0);
    // centroids sit at +1/3 (up) and +2/3 (down); compare in units of thirds
    auto inside = [&](int x3, int y3) { return x3 + y3 >= 3 * c && x3 + y3 <= 3 * (a + b + c); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            up(x, y) = inside(3 * x + 1, 3 * y + 1);
            down(x, y) = inside(3 * x + 2, 3 * y + 2);
        }
    return TriDomain(std::move(up), std::move(down));
}

/// Text format: "lozenge W H", then H rows of up flags and H rows of down flags, top row first.
inline void write_tri_domain(std::ostream& os, const TriDomain& d)
{
    os << "lozenge " << d.width() << ' ' << d.height() << '\n';
    for (const auto* g : {&d.up_cells(), &d.down_cells()})
        for (int y = d.height() - 1; y >= 0; --y) {
            for (int x = 0; x < d.width(); ++x) os << ((*g)(x, y) ? '1' : '0');
            os << '\n';
        }
}

inline TriDomain read_tri_domain(std::istream& is)
{
    std::string tag;
    int w = 0, h = 0;
    if (!(is >> tag >> w >> h) || tag != "lozenge" || w <= 0 || h <= 0) throw InvalidDomain("bad lozenge domain header");
    Grid2<std::uint8_t> up(w, h, 0), down(w, h, 0);
    for (auto* g : {&up, &down})
        for (int y = h - 1; y >= 0; --y) {
            std::string row;
            if (!(is >> row) || static_cast<int>(row.size()) != w || row.find_first_not_of("01") != std::string::npos)
                throw InvalidDomain("bad lozenge domain row");
            for (int x = 0; x < w; ++x) (*g)(x, y) = row[static_cast<std::size_t>(x)] == '1';
        }
    return TriDomain(std::move(up), std::move(down));
}

}  // namespace tilesampler::lozenge
