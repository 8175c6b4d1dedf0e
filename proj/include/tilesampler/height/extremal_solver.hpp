// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

namespace tilesampler::height {

/**
 * Difference constraints h(to) - h(from) <= max_step on an abstract node set,
 * with some nodes pinned to fixed heights (the boundary).
 *
 * Every model's height function is the set of integer solutions of such a
 * system whose values also respect the model's residue classes; the pointwise
 * maximal (minimal) solution is the maximal (minimal) configuration.
 */
struct ConstraintGraph {
    struct Arc {
        int to;
        int max_step;  // >= 1
    };

    explicit ConstraintGraph(int nodes) : arcs(static_cast<std::size_t>(nodes)), fixed(static_cast<std::size_t>(nodes)) {}

    int size() const noexcept { return static_cast<int>(arcs.size()); }

    void add_arc(int from, int to, int max_step) { arcs[static_cast<std::size_t>(from)].push_back({to, max_step}); }

    std::vector<std::vector<Arc>> arcs;
    std::vector<std::optional<int>> fixed;
};

namespace detail {
// Multi-source shortest paths with small positive integer weights using a
// bucket queue (Dial), so the cost is linear in nodes + arcs + height range.
inline std::optional<std::vector<int>> max_solution(const ConstraintGraph& g)
{
    constexpr int kUnset = std::numeric_limits<int>::max();
    const int n = g.size();
    int lo = kUnset;
    int hi = std::numeric_limits<int>::min();
    int max_w = 1;
    for (int v = 0; v < n; ++v) {
        if (const auto& f = g.fixed[static_cast<std::size_t>(v)]) {
            lo = std::min(lo, *f);
            hi = std::max(hi, *f);
        }
        for (const auto& a : g.arcs[static_cast<std::size_t>(v)]) max_w = std::max(max_w, a.max_step);
    }
    if (lo == kUnset) return std::nullopt;  // nothing pins the heights
    const long long range = static_cast<long long>(hi - lo) + static_cast<long long>(max_w) * n + 1;
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(range));
    std::vector<int> dist(static_cast<std::size_t>(n), kUnset);
    for (int v = 0; v < n; ++v) {
        if (const auto& f = g.fixed[static_cast<std::size_t>(v)]) {
            dist[static_cast<std::size_t>(v)] = *f;
            buckets[static_cast<std::size_t>(*f - lo)].push_back(v);
        }
    }
    for (std::size_t b = 0; b < buckets.size(); ++b) {
        for (std::size_t k = 0; k < buckets[b].size(); ++k) {
            const int v = buckets[b][k];
            const int dv = dist[static_cast<std::size_t>(v)];
            if (dv - lo != static_cast<int>(b)) continue;  // stale entry
            for (const auto& a : g.arcs[static_cast<std::size_t>(v)]) {
                const int cand = dv + a.max_step;
                int& dt = dist[static_cast<std::size_t>(a.to)];
                if (cand < dt) {
                    dt = cand;
                    if (cand - lo < range) buckets[static_cast<std::size_t>(cand - lo)].push_back(a.to);
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        const int dv = dist[static_cast<std::size_t>(v)];
        if (dv == kUnset) return std::nullopt;
        if (const auto& f = g.fixed[static_cast<std::size_t>(v)]; f && dv < *f) return std::nullopt;
    }
    return dist;
}
}  // namespace detail

/// Pointwise-maximal heights satisfying every constraint, or nullopt when infeasible.
inline std::optional<std::vector<int>> maximal_heights(const ConstraintGraph& g) { return detail::max_solution(g); }

/// Pointwise-minimal heights, obtained as the negated maximal solution of the reversed system.
inline std::optional<std::vector<int>> minimal_heights(const ConstraintGraph& g)
{
    ConstraintGraph rev(g.size());
    for (int v = 0; v < g.size(); ++v) {
        for (const auto& a : g.arcs[static_cast<std::size_t>(v)]) rev.add_arc(a.to, v, a.max_step);
        if (const auto& f = g.fixed[static_cast<std::size_t>(v)]) rev.fixed[static_cast<std::size_t>(v)] = -*f;
    }
    auto sol = detail::max_solution(rev);
    if (!sol) return std::nullopt;
    for (auto& h : *sol) h = -h;
    return sol;
}

}  // namespace tilesampler::height
