// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tilesampler/domino/domain.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::domino {

// Tilestate bits: one per incident lattice edge, set when a domino crosses it.
inline constexpr std::uint8_t kNorth = 1;
inline constexpr std::uint8_t kSouth = 2;
inline constexpr std::uint8_t kEast = 4;
inline constexpr std::uint8_t kWest = 8;

// Two horizontal dominoes meeting at the vertex / two vertical ones.
inline constexpr std::uint8_t kHorizontalPair = kNorth | kSouth;  // 3
inline constexpr std::uint8_t kVerticalPair = kEast | kWest;      // 12

inline constexpr bool rotateable(std::uint8_t s) noexcept { return s == kHorizontalPair || s == kVerticalPair; }

/// Two adjacent faces; normalized so that `a` is the lower-left one.
struct Domino {
    Face a;
    Face b;

    bool horizontal() const noexcept { return a.y == b.y; }
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

inline Domino normalized(Domino d)
{
    if (d.b < d.a) std::swap(d.a, d.b);
    return d;
}

inline void canonicalize(std::vector<Domino>& dominoes)
{
    for (auto& d : dominoes) d = normalized(d);
    std::sort(dominoes.begin(), dominoes.end(), [](const Domino& l, const Domino& r) {
        return std::pair(std::pair(l.a.y, l.a.x), std::pair(l.b.y, l.b.x)) <
               std::pair(std::pair(r.a.y, r.a.x), std::pair(r.b.y, r.b.x));
    });
}

/**
 * Per-vertex tilestates of a domino tiling.
 *
 * states(i, j) for 0 <= i, j <= n; reads outside the grid see 0. Bit k of a
 * state is set iff a domino crosses the corresponding incident edge:
 * North (+y) = 1, South (-y) = 2, East (+x) = 4, West (-x) = 8.
 */
class Tiling {
  public:
    Tiling() = default;
    Tiling(Domain domain, Grid2<std::uint8_t> states) : domain_(std::move(domain)), states_(std::move(states)) {}

    const Domain& domain() const noexcept { return domain_; }
    const Grid2<std::uint8_t>& states() const noexcept { return states_; }
    Grid2<std::uint8_t>& mutable_states() noexcept { return states_; }

    std::uint8_t state(int i, int j) const noexcept { return states_.get_or(i, j, 0); }

    friend bool operator==(const Tiling& a, const Tiling& b) { return a.states_ == b.states_ && a.domain_ == b.domain_; }

  private:
    Domain domain_;
    Grid2<std::uint8_t> states_;
};

namespace detail {
inline std::string face_str(Face f) { return "(" + std::to_string(f.x) + "," + std::to_string(f.y) + ")"; }
}  // namespace detail

inline Tiling tiling_from_dominoes(const Domain& domain, const std::vector<Domino>& dominoes)
{
    const int n = domain.n();
    Grid2<std::uint8_t> covered(n, n, 0);
    Grid2<std::uint8_t> states(n + 1, n + 1, 0);
    for (Domino d : dominoes) {
        d = normalized(d);
        for (Face f : {d.a, d.b}) {
            if (!domain.contains(f)) throw OutOfDomainError("face " + detail::face_str(f) + " is outside the domain");
            if (covered(f.x, f.y)) throw OverlapError("face " + detail::face_str(f) + " is covered twice");
            covered(f.x, f.y) = 1;
        }
        if (d.a.y == d.b.y && d.b.x == d.a.x + 1) {
            // crosses the vertical edge from (a.x+1, a.y) to (a.x+1, a.y+1)
            states(d.a.x + 1, d.a.y) |= kNorth;
            states(d.a.x + 1, d.a.y + 1) |= kSouth;
        } else if (d.a.x == d.b.x && d.b.y == d.a.y + 1) {
            // crosses the horizontal edge from (a.x, a.y+1) to (a.x+1, a.y+1)
            states(d.a.x, d.a.y + 1) |= kEast;
            states(d.a.x + 1, d.a.y + 1) |= kWest;
        } else {
            throw InvalidInput("faces " + detail::face_str(d.a) + " and " + detail::face_str(d.b) + " are not adjacent");
        }
    }
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if (domain.contains(x, y) && !covered(x, y)) {
                throw CoverageError("face " + detail::face_str({x, y}) + " is not covered");
            }
    return Tiling(domain, std::move(states));
}

/// Inverse of tiling_from_dominoes; output is canonicalized.
inline std::vector<Domino> dominoes_from_tiling(const Tiling& t)
{
    std::vector<Domino> out;
    const int v = t.domain().vertex_side();
    for (int j = 0; j < v; ++j)
        for (int i = 0; i < v; ++i) {
            const std::uint8_t s = t.state(i, j);
            if (s & kNorth) out.push_back({{i - 1, j}, {i, j}});
            if (s & kEast) out.push_back({{i, j - 1}, {i, j}});
        }
    canonicalize(out);
    return out;
}

/// Structural check of every Tiling invariant; returns an empty string when valid.
inline std::string validate_tiling(const Tiling& t)
{
    const Domain& d = t.domain();
    const int v = d.vertex_side();
    if (t.states().width() != v || t.states().height() != v) return "state grid has wrong shape";
    for (int j = 0; j < v; ++j)
        for (int i = 0; i < v; ++i) {
            const std::uint8_t s = t.state(i, j);
            const std::string at = " at vertex (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (s > 15) return "state out of range" + at;
            if (((s & kNorth) != 0) != ((t.state(i, j + 1) & kSouth) != 0)) return "north/south bits disagree" + at;
            if (((s & kEast) != 0) != ((t.state(i + 1, j) & kWest) != 0)) return "east/west bits disagree" + at;
            if ((s & kSouth) && (t.state(i, j - 1) & kNorth) == 0) return "south/north bits disagree" + at;
            if ((s & kWest) && (t.state(i - 1, j) & kEast) == 0) return "west/east bits disagree" + at;
            if (!d.has_vertex(i, j) && s != 0) return "nonzero state outside the domain" + at;
            if ((s & kNorth) && !(d.contains(i - 1, j) && d.contains(i, j))) return "domino leaves the domain" + at;
            if ((s & kEast) && !(d.contains(i, j - 1) && d.contains(i, j))) return "domino leaves the domain" + at;
        }
    // Each face has exactly one crossed edge.
    for (int y = 0; y < d.n(); ++y)
        for (int x = 0; x < d.n(); ++x) {
            if (!d.contains(x, y)) continue;
            const int crossed = ((t.state(x, y) & kNorth) ? 1 : 0) + ((t.state(x + 1, y) & kNorth) ? 1 : 0) +
                                ((t.state(x, y) & kEast) ? 1 : 0) + ((t.state(x, y + 1) & kEast) ? 1 : 0);
            if (crossed != 1) {
                return "face (" + std::to_string(x) + "," + std::to_string(y) + ") covered " + std::to_string(crossed) + " times";
            }
        }
    return {};
}

/// Tilestate matrix, rows from the top (j = n) down, columns i = 0..n.
inline void write_tiling(std::ostream& out, const Tiling& t)
{
    const int v = t.domain().vertex_side();
    for (int j = v - 1; j >= 0; --j) {
        for (int i = 0; i < v; ++i) out << (i ? " " : "") << static_cast<int>(t.state(i, j));
        out << '\n';
    }
}

/// Reads a matrix written by write_tiling and validates it against `domain`.
inline Tiling read_tiling(std::istream& in, const Domain& domain)
{
    const int v = domain.vertex_side();
    Grid2<std::uint8_t> states(v, v, 0);
    for (int j = v - 1; j >= 0; --j)
        for (int i = 0; i < v; ++i) {
            int s = -1;
            if (!(in >> s) || s < 0 || s > 15) throw InvalidInput("tiling file: expected tilestates in 0..15");
            states(i, j) = static_cast<std::uint8_t>(s);
        }
    Tiling t(domain, std::move(states));
    if (auto err = validate_tiling(t); !err.empty()) throw InvalidInput("tiling file: " + err);
    return t;
}

}  // namespace tilesampler::domino
