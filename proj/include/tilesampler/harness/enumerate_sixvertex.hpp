// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/harness/enumerate_domino.hpp"
#include "tilesampler/sixvertex/config.hpp"

namespace tilesampler::harness {

/**
 * Every ice-rule configuration with the given boundary.
 *
 * Vertices are visited row by row, left to right; each picks its north edge and
 * the ice rule W + N = E + S fixes its east edge, so dead ends show up one vertex later.
 */
inline std::vector<sixvertex::SixVertexConfig> enumerate_sixvertex(const sixvertex::Boundary& b,
                                                                   std::size_t limit = kDefaultEnumerationLimit)
{
    const int n = b.n;
    std::vector<sixvertex::SixVertexConfig> out;
    sixvertex::SixVertexConfig c(b);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n * n) {
            if (out.size() >= limit) throw StateSpaceTooLarge("more than " + std::to_string(limit) + " configurations");
            out.push_back(c);
            return;
        }
        const int x = k % n, y = k / n;
        const int west = c.horizontal(x, y), south = c.vertical(x, y);
        for (int north = 0; north <= 1; ++north) {
            if (y == n - 1 && north != c.vertical(x, n)) continue;
            const int east = west + north - south;
            if (east < 0 || east > 1) continue;
            if (x == n - 1 && east != c.horizontal(n, y)) continue;
            if (y < n - 1) c.vertical(x, y + 1) = static_cast<std::uint8_t>(north);
            if (x < n - 1) c.horizontal(x + 1, y) = static_cast<std::uint8_t>(east);
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace tilesampler::harness
