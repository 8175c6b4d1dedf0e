// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"
#include "tilesampler/lozenge/domain.hpp"

namespace tilesampler::lozenge {

/**
 * An up triangle and its partner: orientation 0 pairs it with D(x, y-1),
 * 1 with D(x-1, y), 2 with D(x, y).
 */
struct Lozenge {
    int x = 0, y = 0;
    int orientation = 0;
    Triangle down() const noexcept
    {
        switch (orientation) {
            case 0: return {x, y - 1, false};
            case 1: return {x - 1, y, false};
            default: return {x, y, false};
        }
    }
    /// The crossed lattice edge as (vertex, direction).
    std::array<int, 3> crossed_edge() const noexcept
    {
        return orientation == 2 ? std::array<int, 3>{x + 1, y, 2} : std::array<int, 3>{x, y, orientation};
    }
    friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

/// Per-vertex 6-bit states (bit k: edge k crossed), stored with one cell of zero padding.
class LozengeTiling {
  public:
    LozengeTiling() = default;
    explicit LozengeTiling(TriDomain d)
        : domain_(std::move(d)), states_(domain_.vertex_width() + 2, domain_.vertex_height() + 2, 0)
    {
    }

    const TriDomain& domain() const noexcept { return domain_; }
    std::uint8_t state(int x, int y) const noexcept { return states_.get_or(x + 1, y + 1, 0); }
    std::uint8_t& at(int x, int y) noexcept { return states_(x + 1, y + 1); }
    const Grid2<std::uint8_t>& padded_states() const noexcept { return states_; }

    friend bool operator==(const LozengeTiling&, const LozengeTiling&) = default;

  private:
    TriDomain domain_;
    Grid2<std::uint8_t> states_;
};

inline LozengeTiling tiling_from_lozenges(const TriDomain& d, const std::vector<Lozenge>& lozenges)
{
    LozengeTiling t(d);
    std::set<Triangle> covered;
    for (const Lozenge& l : lozenges) {
        const Triangle up{l.x, l.y, true};
        const Triangle down = l.down();
        if (l.orientation < 0 || l.orientation > 2) throw InvalidInput("lozenge orientation must be 0, 1 or 2");
        if (!d.contains(up) || !d.contains(down)) throw OutOfDomainError("lozenge leaves the domain");
        if (!covered.insert(up).second || !covered.insert(down).second) throw OverlapError("triangle covered twice");
        const auto [vx, vy, k] = l.crossed_edge();
        const auto dk = kDirections[static_cast<std::size_t>(k)];
        t.at(vx, vy) |= static_cast<std::uint8_t>(1u << k);
        t.at(vx + dk[0], vy + dk[1]) |= static_cast<std::uint8_t>(1u << (k + 3));
    }
    if (static_cast<int>(covered.size()) != d.triangle_count()) throw CoverageError("triangle left uncovered");
    return t;
}

/// Sorted lozenge list read back from the up triangles' crossed edges.
inline std::vector<Lozenge> lozenges_from_tiling(const LozengeTiling& t)
{
    const TriDomain& d = t.domain();
    std::vector<Lozenge> out;
    for (int y = 0; y < d.height(); ++y)
        for (int x = 0; x < d.width(); ++x) {
            if (!d.contains({x, y, true})) continue;
            for (int o = 0; o < 3; ++o) {
                const Lozenge l{x, y, o};
                const auto [vx, vy, k] = l.crossed_edge();
                if (t.state(vx, vy) >> k & 1) out.push_back(l);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Empty string iff states agree across shared edges and decode to a perfect matching.
inline std::string validate_tiling(const LozengeTiling& t)
{
    const TriDomain& d = t.domain();
    for (int y = -1; y <= d.vertex_height(); ++y)
        for (int x = -1; x <= d.vertex_width(); ++x)
            for (int k = 0; k < 6; ++k) {
                const bool bit = t.state(x, y) >> k & 1;
                const auto dk = kDirections[static_cast<std::size_t>(k)];
                if (bit != static_cast<bool>(t.state(x + dk[0], y + dk[1]) >> ((k + 3) % 6) & 1))
                    return "shared edge disagrees at (" + std::to_string(x) + "," + std::to_string(y) + ")";
                if (bit && !d.interior_edge(x, y, k)) return "crossed edge outside the domain";
            }
    try {
        const auto ls = lozenges_from_tiling(t);
        if (!(tiling_from_lozenges(d, ls) == t)) return "states do not round-trip";
    } catch (const InvalidInput& e) {
        return e.what();
    }
    return "";
}

/// The two states of a vertex surrounded by three lozenges.
struct RotationMasks {
    std::uint8_t upper = 0;  // vertex is a local height maximum
    std::uint8_t lower = 0;  // local minimum
};

namespace detail {
// Every cover of the six triangles around the origin by three lozenges, as origin states.
inline std::vector<std::uint8_t> star_states()
{
    const std::vector<Triangle> star{{0, 0, true}, {-1, 0, false}, {-1, 0, true}, {-1, -1, false}, {0, -1, true}, {0, -1, false}};
    std::vector<Lozenge> options;
    for (const Triangle& u : star) {
        if (!u.up) continue;
        for (int o = 0; o < 3; ++o) {
            const Lozenge l{u.x, u.y, o};
            if (std::find(star.begin(), star.end(), l.down()) != star.end()) options.push_back(l);
        }
    }
    std::vector<std::uint8_t> out;
    const auto n = options.size();
    for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
        std::set<Triangle> used;
        std::uint8_t s = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(pick >> i & 1)) continue;
            const Lozenge& l = options[i];
            ok = used.insert({l.x, l.y, true}).second && used.insert(l.down()).second;
            const auto [vx, vy, k] = l.crossed_edge();
            if (vx == 0 && vy == 0) s |= static_cast<std::uint8_t>(1u << k);
            const auto dk = kDirections[static_cast<std::size_t>(k)];
            if (vx + dk[0] == 0 && vy + dk[1] == 0) s |= static_cast<std::uint8_t>(1u << ((k + 3) % 6));
        }
        if (ok && used.size() == star.size()) out.push_back(s);
    }
    return out;
}
}  // namespace detail

/**
 * The two masks, found by enumerating the covers of a vertex star. Along edge 0
 * the height rises by 1 when uncrossed and falls by 2 when crossed, so the mask
 * crossing edge 0 sits 3 higher relative to its unchanged neighbours.
 */
inline const RotationMasks& rotation_masks()
{
    static const RotationMasks masks = [] {
        const auto s = detail::star_states();
        if (s.size() != 2) throw InconsistencyError("vertex star must have exactly two covers");
        return (s[0] & 1) ? RotationMasks{s[0], s[1]} : RotationMasks{s[1], s[0]};
    }();
    return masks;
}

enum class Rotation { Up, Down, None };

/// Up: the state is the lower mask and may rotate upwards; Down: the reverse.
inline Rotation loz_rotateable(std::uint8_t s) noexcept
{
    const auto& m = rotation_masks();
    if (s == m.lower) return Rotation::Up;
    if (s == m.upper) return Rotation::Down;
    return Rotation::None;
}

}  // namespace tilesampler::lozenge
