// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "tilesampler/domino/domain.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::domino {

enum class Color : std::uint8_t { Black = 0, White = 1 };

inline constexpr Color other(Color c) noexcept { return c == Color::Black ? Color::White : Color::Black; }

/// Row parity offset p with T_c[i][j] holding vertex (i, 2j + p).
inline constexpr int parity_offset(Color c, int i) noexcept { return (i + static_cast<int>(c)) & 1; }

/**
 * Tilestates split into black (i + j even) and white sub-arrays.
 *
 * Vertex (i, 2j + (i mod 2)) is black entry [i][j]; vertex (i, 2j + (i+1 mod 2))
 * is white entry [i][j]. The vertex grid is padded to an even side E, and each
 * sub-array carries one extra zero cell on every side so kernels never branch
 * on the boundary.
 */
class Checkerboard {
  public:
    Checkerboard() = default;
    explicit Checkerboard(int vertex_side)
        : vertex_side_(vertex_side), side_(vertex_side + (vertex_side & 1)),
          cells_{Grid2<std::uint8_t>(side_ + 2, side_ / 2 + 2, 0), Grid2<std::uint8_t>(side_ + 2, side_ / 2 + 2, 0)}
    {
    }

    int vertex_side() const noexcept { return vertex_side_; }
    /// Even padded side E; rows i in [0, E), compressed columns j in [0, E/2).
    int side() const noexcept { return side_; }
    int half() const noexcept { return side_ / 2; }

    // Valid for -1 <= i <= E and -1 <= j <= E/2.
    std::uint8_t& at(Color c, int i, int j) noexcept { return cells_[static_cast<int>(c)](i + 1, j + 1); }
    std::uint8_t at(Color c, int i, int j) const noexcept { return cells_[static_cast<int>(c)](i + 1, j + 1); }

    /// Second vertex coordinate of entry [i][j] of color c.
    static constexpr int column_of(Color c, int i, int j) noexcept { return 2 * j + parity_offset(c, i); }

    const Grid2<std::uint8_t>& cells(Color c) const noexcept { return cells_[static_cast<int>(c)]; }

    friend bool operator==(const Checkerboard&, const Checkerboard&) = default;

  private:
    int vertex_side_ = 0;
    int side_ = 0;
    Grid2<std::uint8_t> cells_[2];
};

inline Checkerboard split_checkerboard(const Tiling& t)
{
    Checkerboard cb(t.domain().vertex_side());
    for (Color c : {Color::Black, Color::White})
        for (int i = 0; i < cb.side(); ++i)
            for (int j = 0; j < cb.half(); ++j) cb.at(c, i, j) = t.state(i, Checkerboard::column_of(c, i, j));
    return cb;
}

inline Tiling merge_checkerboard(const Checkerboard& cb, const Domain& domain)
{
    const int v = domain.vertex_side();
    Grid2<std::uint8_t> states(v, v, 0);
    for (Color c : {Color::Black, Color::White})
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < cb.half(); ++j) {
                const int jj = Checkerboard::column_of(c, i, j);
                if (jj < v) states(i, jj) = cb.at(c, i, j);
            }
    return Tiling(domain, std::move(states));
}

}  // namespace tilesampler::domino
