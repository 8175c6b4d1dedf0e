// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tilesampler/errors.hpp"
#include "tilesampler/rng/stream_family.hpp"

namespace tilesampler::cftp {

/// One block of backward time: `steps` sweeps driven by `seed`.
struct Segment {
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/**
 * Seeds ordered from the most distant past (front) to time zero (back).
 *
 * The k-th seed ever drawn owns 2^(k+1) sweeps for its whole life; new seeds
 * are only ever prepended, so later rounds reuse the randomness of earlier
 * rounds over the same backward interval.
 */
class CftpSchedule {
  public:
    explicit CftpSchedule(std::uint64_t master_seed) : master_(master_seed) {}

    void extend()
    {
        const auto k = static_cast<std::uint64_t>(segments_.size());
        segments_.insert(segments_.begin(), Segment{rng::derive_seed(master_, k), std::uint64_t{2} << k});
    }

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }

    std::uint64_t total_steps() const noexcept
    {
        std::uint64_t t = 0;
        for (const auto& s : segments_) t += s.steps;
        return t;
    }

  private:
    std::uint64_t master_;
    std::vector<Segment> segments_;
};

struct CftpOptions {
    int max_doublings = 40;
    /// Compare the chains after every segment and continue with one chain once
    /// they agree. The returned sample is identical either way.
    bool early_collapse = true;
};

/// Per-round progress record.
struct RoundRecord {
    int round = 0;
    std::uint64_t steps = 0;
    bool collapsed = false;
};

inline std::string to_string(const RoundRecord& r)
{
    return "round=" + std::to_string(r.round) + " steps=" + std::to_string(r.steps) +
           " collapsed=" + (r.collapsed ? "yes" : "no");
}

template <class State>
struct CftpHooks {
    std::function<void(const RoundRecord&)> on_round;
    /// After each segment of each round: (round, segment index, top, bottom).
    std::function<void(int, std::size_t, const State&, const State&)> on_checkpoint;
    /// Segments as applied, one entry per round.
    std::vector<std::vector<Segment>>* trace = nullptr;
};

/**
 * Monotone coupling from the past.
 *
 * `walk(state, seed, steps)` advances a state in place; it must be a grand
 * coupling (coins depend on site and step only) and monotone in the partial
 * order whose extremes are `top` and `bottom`.
 */
template <class State, class Walk>
State monotone_cftp(const State& top, const State& bottom, Walk&& walk, std::uint64_t master_seed,
                    const CftpOptions& options = {}, const CftpHooks<State>* hooks = nullptr)
{
    CftpSchedule schedule(master_seed);
    for (int round = 0; round < options.max_doublings; ++round) {
        schedule.extend();
        if (hooks && hooks->trace) hooks->trace->push_back(schedule.segments());
        State hi = top;
        State lo = bottom;
        bool merged = false;
        const auto& segs = schedule.segments();
        for (std::size_t k = 0; k < segs.size(); ++k) {
            walk(lo, segs[k].seed, segs[k].steps);
            if (!merged) {
                walk(hi, segs[k].seed, segs[k].steps);
                merged = options.early_collapse && hi == lo;
            }
            if (hooks && hooks->on_checkpoint) hooks->on_checkpoint(round, k, merged ? lo : hi, lo);
        }
        const bool collapsed = merged || hi == lo;
        if (hooks && hooks->on_round) hooks->on_round({round, schedule.total_steps(), collapsed});
        if (collapsed) return lo;
    }
    throw ConvergenceCapExceeded("no coalescence after " + std::to_string(options.max_doublings) + " doublings");
}

}  // namespace tilesampler::cftp
