// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "tilesampler/domino/checkerboard.hpp"
#include "tilesampler/domino/tiling.hpp"

namespace tilesampler::sweep {

using domino::Checkerboard;
using domino::Color;

/// Attempted up-rotation (3 -> 12) when u < p_up, attempted down-rotation (12 -> 3) otherwise.
inline constexpr std::uint8_t rotate_kernel(std::uint8_t s, double u, double p_up) noexcept
{
    if (u < p_up) return s == domino::kHorizontalPair ? domino::kVerticalPair : s;
    return s == domino::kVerticalPair ? domino::kHorizontalPair : s;
}

/**
 * Recomputes entry [i][j] of color `self` from the opposite-color sub-array:
 * each neighbour's view of the shared edge is copied in. Rows i +- 1 are the
 * west/east neighbours; columns j + p - 1 and j + p the south/north ones.
 */
inline std::uint8_t update_kernel(const Checkerboard& cb, int i, int j, Color self) noexcept
{
    const Color o = domino::other(self);
    const int p = domino::parity_offset(self, i);
    const std::uint8_t west = cb.at(o, i - 1, j);
    const std::uint8_t east = cb.at(o, i + 1, j);
    const std::uint8_t south = cb.at(o, i, j + p - 1);
    const std::uint8_t north = cb.at(o, i, j + p);
    return static_cast<std::uint8_t>(((west & domino::kEast) << 1) | ((east & domino::kWest) >> 1) |
                                     ((south & domino::kNorth) << 1) | ((north & domino::kSouth) >> 1));
}

}  // namespace tilesampler::sweep
