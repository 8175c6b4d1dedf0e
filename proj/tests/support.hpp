// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the test suites: domain generators and domino-level oracles
// that work on explicit domino lists rather than tilestates.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tilesampler/domino/domain.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/errors.hpp"

namespace tilesampler::testsupport {

/// Random simply-connected domain grown face by face inside an n x n box.
inline std::optional<domino::Domain> random_domain(std::mt19937_64& gen, int n, int faces)
{
    Grid2<std::uint8_t> g(n, n, 0);
    std::uniform_int_distribution<int> coord(0, n - 1);
    std::vector<domino::Face> cells{{coord(gen), coord(gen)}};
    g(cells[0].x, cells[0].y) = 1;
    while (static_cast<int>(cells.size()) < faces) {
        const auto base = cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(gen)];
        static constexpr int dx[4] = {1, -1, 0, 0};
        static constexpr int dy[4] = {0, 0, 1, -1};
        const int k = std::uniform_int_distribution<int>(0, 3)(gen);
        const int x = base.x + dx[k];
        const int y = base.y + dy[k];
        if (!g.contains(x, y) || g(x, y)) continue;
        g(x, y) = 1;
        cells.push_back({x, y});
    }
    try {
        return domino::Domain(std::move(g));
    } catch (const Error&) {
        return std::nullopt;
    }
}

inline domino::Domain random_valid_domain(std::mt19937_64& gen, int n, int faces)
{
    for (;;) {
        if (auto d = random_domain(gen, n, faces)) return *d;
    }
}

/// Rotates the two parallel dominoes around vertex (i, j); nullopt when they are not there.
inline std::optional<std::vector<domino::Domino>> rotate_at(std::vector<domino::Domino> m, int i, int j)
{
    using domino::Domino;
    const Domino hb{{i - 1, j - 1}, {i, j - 1}}, ht{{i - 1, j}, {i, j}};
    const Domino vl{{i - 1, j - 1}, {i - 1, j}}, vr{{i, j - 1}, {i, j}};
    auto has = [&](const Domino& d) { return std::find(m.begin(), m.end(), d) != m.end(); };
    auto replace = [&](const Domino& a, const Domino& b, const Domino& c, const Domino& d) {
        std::erase(m, a);
        std::erase(m, b);
        m.push_back(c);
        m.push_back(d);
        domino::canonicalize(m);
        return m;
    };
    if (has(hb) && has(ht)) return replace(hb, ht, vl, vr);
    if (has(vl) && has(vr)) return replace(vl, vr, hb, ht);
    return std::nullopt;
}

}  // namespace tilesampler::testsupport
