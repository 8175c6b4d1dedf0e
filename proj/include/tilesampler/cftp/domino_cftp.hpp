// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "tilesampler/cftp/monotone.hpp"
#include "tilesampler/domino/checkerboard.hpp"
#include "tilesampler/domino/height.hpp"
#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/sweep/engine.hpp"

namespace tilesampler::cftp {

inline bool collapse_check(const domino::Tiling& a, const domino::Tiling& b)
{
    if (!(a.domain() == b.domain())) throw DomainMismatchError("tilings live on different domains");
    return a.states() == b.states();
}

/// Exact sample from the Gibbs measure of `plan` via coupled chains started at T_max and T_min.
inline domino::Tiling cftp_sample(const sweep::SweepPlan& plan, std::uint64_t master_seed,
                                  const sweep::Backend& backend = sweep::Backend::sequential(),
                                  const CftpOptions& options = {},
                                  const CftpHooks<domino::Checkerboard>* hooks = nullptr)
{
    const auto ext = domino::extremal_tilings(plan.domain());
    if (!ext) throw Untileable("domain admits no domino tiling");
    auto walk = [&](domino::Checkerboard& cb, std::uint64_t seed, std::uint64_t steps) {
        plan.walk(cb, seed, steps, backend);
    };
    const domino::Checkerboard result =
        monotone_cftp(domino::split_checkerboard(ext->max), domino::split_checkerboard(ext->min), walk, master_seed, options, hooks);
    return domino::merge_checkerboard(result, plan.domain());
}

}  // namespace tilesampler::cftp
