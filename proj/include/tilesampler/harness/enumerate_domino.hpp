// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "tilesampler/domino/domain.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"

namespace tilesampler::harness {

inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

/// Every domino tiling of `d` as a canonical domino list, by face-by-face backtracking.
inline std::vector<std::vector<domino::Domino>> enumerate_domino(const domino::Domain& d,
                                                                 std::size_t limit = kDefaultEnumerationLimit)
{
    const int n = d.n();
    Grid2<std::uint8_t> used(n, n, 0);
    std::vector<domino::Domino> current;
    std::vector<std::vector<domino::Domino>> out;
    auto free_face = [&](int x, int y) { return d.contains(x, y) && !used(x, y); };

    auto recurse = [&](auto&& self, int from) -> void {
        int idx = from;
        while (idx < n * n && !free_face(idx % n, idx / n)) ++idx;
        if (idx == n * n) {
            if (out.size() >= limit) throw StateSpaceTooLarge("more than " + std::to_string(limit) + " tilings");
            auto copy = current;
            domino::canonicalize(copy);
            out.push_back(std::move(copy));
            return;
        }
        // The first free face in row-major order can only pair rightwards or upwards.
        const int x = idx % n;
        const int y = idx / n;
        used(x, y) = 1;
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
            if (!free_face(x + dx, y + dy)) continue;
            used(x + dx, y + dy) = 1;
            current.push_back({{x, y}, {x + dx, y + dy}});
            self(self, idx + 1);
            current.pop_back();
            used(x + dx, y + dy) = 0;
        }
        used(x, y) = 0;
    };
    recurse(recurse, 0);
    return out;
}

}  // namespace tilesampler::harness
