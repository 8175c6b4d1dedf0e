// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::sixvertex {

/**
 * Fixed occupancies of the edges leaving an n x n vertex grid.
 * left/right are indexed by row y, bottom/top by column x.
 */
struct Boundary {
    int n = 0;
    std::vector<std::uint8_t> left, right, bottom, top;
    friend bool operator==(const Boundary&, const Boundary&) = default;
};

/// Domain-wall boundary: paths enter through every bottom and left edge.
inline Boundary dwbc(int n)
{
    if (n < 1) throw InvalidInput("dwbc needs n >= 1");
    const auto sz = static_cast<std::size_t>(n);
    return {n, std::vector<std::uint8_t>(sz, 1), std::vector<std::uint8_t>(sz, 0), std::vector<std::uint8_t>(sz, 1),
            std::vector<std::uint8_t>(sz, 0)};
}

/**
 * Edge occupancies on vertices (x, y), 0 <= x, y < n.
 *
 * horizontal(x, y), 0 <= x <= n: edge entering vertex (x, y) from the west;
 * x = 0 and x = n are boundary edges. vertical(x, y), 0 <= y <= n: edge
 * entering vertex (x, y) from the south; y = 0 and y = n are boundary edges.
 */
class SixVertexConfig {
  public:
    SixVertexConfig() = default;
    explicit SixVertexConfig(int n) : n_(n), h_(n + 1, n, 0), v_(n, n + 1, 0)
    {
        if (n < 1) throw InvalidInput("six-vertex grid needs n >= 1");
    }
    SixVertexConfig(const Boundary& b) : SixVertexConfig(b.n) { set_boundary(b); }

    int n() const noexcept { return n_; }
    std::uint8_t& horizontal(int x, int y) noexcept { return h_(x, y); }
    std::uint8_t horizontal(int x, int y) const noexcept { return h_(x, y); }
    std::uint8_t& vertical(int x, int y) noexcept { return v_(x, y); }
    std::uint8_t vertical(int x, int y) const noexcept { return v_(x, y); }
    const Grid2<std::uint8_t>& horizontal_edges() const noexcept { return h_; }
    const Grid2<std::uint8_t>& vertical_edges() const noexcept { return v_; }

    Boundary boundary() const
    {
        Boundary b{n_, {}, {}, {}, {}};
        for (int k = 0; k < n_; ++k) {
            b.left.push_back(h_(0, k));
            b.right.push_back(h_(n_, k));
            b.bottom.push_back(v_(k, 0));
            b.top.push_back(v_(k, n_));
        }
        return b;
    }

    void set_boundary(const Boundary& b)
    {
        const auto sz = static_cast<std::size_t>(n_);
        if (b.n != n_ || b.left.size() != sz || b.right.size() != sz || b.bottom.size() != sz || b.top.size() != sz)
            throw InvalidInput("boundary does not match grid size");
        for (int k = 0; k < n_; ++k) {
            const auto s = static_cast<std::size_t>(k);
            h_(0, k) = b.left[s] ? 1 : 0;
            h_(n_, k) = b.right[s] ? 1 : 0;
            v_(k, 0) = b.bottom[s] ? 1 : 0;
            v_(k, n_) = b.top[s] ? 1 : 0;
        }
    }

    friend bool operator==(const SixVertexConfig&, const SixVertexConfig&) = default;

  private:
    int n_ = 0;
    Grid2<std::uint8_t> h_, v_;
};

enum class VertexType { A1, A2, B1, B2, C1, C2 };

inline const char* to_string(VertexType t)
{
    constexpr const char* names[] = {"a1", "a2", "b1", "b2", "c1", "c2"};
    return names[static_cast<int>(t)];
}

inline bool is_c(VertexType t) noexcept { return t == VertexType::C1 || t == VertexType::C2; }

/// Classify from the four incident occupancies.
inline VertexType classify(bool west, bool east, bool south, bool north)
{
    const int code = (west ? 1 : 0) | (east ? 2 : 0) | (south ? 4 : 0) | (north ? 8 : 0);
    switch (code) {
        case 0: return VertexType::A1;
        case 15: return VertexType::A2;
        case 1 | 2: return VertexType::B1;
        case 4 | 8: return VertexType::B2;
        case 1 | 4: return VertexType::C1;
        case 2 | 8: return VertexType::C2;
        default: throw IceRuleViolation("incident pattern " + std::to_string(code) + " violates the ice rule");
    }
}

inline VertexType vertex_type(const SixVertexConfig& c, int x, int y)
{
    if (x < 0 || y < 0 || x >= c.n() || y >= c.n()) throw OutOfGridError("vertex outside the grid");
    return classify(c.horizontal(x, y), c.horizontal(x + 1, y), c.vertical(x, y), c.vertical(x, y + 1));
}

inline int count_c_vertices(const SixVertexConfig& c)
{
    int k = 0;
    for (int y = 0; y < c.n(); ++y)
        for (int x = 0; x < c.n(); ++x) k += is_c(vertex_type(c, x, y)) ? 1 : 0;
    return k;
}

/// Empty string iff every vertex obeys the ice rule.
inline std::string validate_config(const SixVertexConfig& c)
{
    for (int y = 0; y < c.n(); ++y)
        for (int x = 0; x < c.n(); ++x) {
            try {
                vertex_type(c, x, y);
            } catch (const IceRuleViolation&) {
                return "ice rule violated at (" + std::to_string(x) + "," + std::to_string(y) + ")";
            }
        }
    return "";
}

/// Text format: "sixvertex n", then n rows of horizontal edges and n + 1 rows of vertical edges, top row first.
inline void write_config(std::ostream& os, const SixVertexConfig& c)
{
    os << "sixvertex " << c.n() << '\n';
    for (int y = c.n() - 1; y >= 0; --y) {
        for (int x = 0; x <= c.n(); ++x) os << static_cast<int>(c.horizontal(x, y));
        os << '\n';
    }
    for (int y = c.n(); y >= 0; --y) {
        for (int x = 0; x < c.n(); ++x) os << static_cast<int>(c.vertical(x, y));
        os << '\n';
    }
}

inline SixVertexConfig read_config(std::istream& is)
{
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "sixvertex" || n < 1) throw InvalidInput("bad six-vertex header");
    SixVertexConfig c(n);
    auto row = [&](int len) {
        std::string s;
        if (!(is >> s) || static_cast<int>(s.size()) != len || s.find_first_not_of("01") != std::string::npos)
            throw InvalidInput("bad six-vertex edge row");
        return s;
    };
    for (int y = n - 1; y >= 0; --y) {
        const auto s = row(n + 1);
        for (int x = 0; x <= n; ++x) c.horizontal(x, y) = s[static_cast<std::size_t>(x)] == '1';
    }
    for (int y = n; y >= 0; --y) {
        const auto s = row(n);
        for (int x = 0; x < n; ++x) c.vertical(x, y) = s[static_cast<std::size_t>(x)] == '1';
    }
    return c;
}

}  // namespace tilesampler::sixvertex
