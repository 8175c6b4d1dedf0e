// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/harness/enumerate_domino.hpp"
#include "tilesampler/lozenge/tiling.hpp"

namespace tilesampler::harness {

/// Every lozenge tiling as a sorted lozenge list: each up triangle in scan order picks a free down partner.
inline std::vector<std::vector<lozenge::Lozenge>> enumerate_lozenge(const lozenge::TriDomain& d,
                                                                    std::size_t limit = kDefaultEnumerationLimit)
{
    std::vector<lozenge::Triangle> ups;
    for (int y = 0; y < d.height(); ++y)
        for (int x = 0; x < d.width(); ++x)
            if (d.contains({x, y, true})) ups.push_back({x, y, true});
    Grid2<std::uint8_t> used(d.width(), d.height(), 0);
    std::vector<lozenge::Lozenge> current;
    std::vector<std::vector<lozenge::Lozenge>> out;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == ups.size()) {
            if (out.size() >= limit) throw StateSpaceTooLarge("more than " + std::to_string(limit) + " lozenge tilings");
            auto sorted = current;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
            return;
        }
        for (int o = 0; o < 3; ++o) {
            const lozenge::Lozenge l{ups[i].x, ups[i].y, o};
            const lozenge::Triangle dn = l.down();
            if (!d.contains(dn) || used(dn.x, dn.y)) continue;
            used(dn.x, dn.y) = 1;
            current.push_back(l);
            self(self, i + 1);
            current.pop_back();
            used(dn.x, dn.y) = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace tilesampler::harness
