// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "tilesampler/errors.hpp"
#include "tilesampler/rng/philox.hpp"

namespace tilesampler::rng {

/// Sub-streams keep the per-sweep coins separate from per-site coins.
enum class Substream : std::uint16_t {
    Site = 0,    // per-site rotation coins
    Global = 1,  // per-sweep color-class choice
    Master = 2,  // CFTP fresh-seed stream
    Chain = 3,   // seed derivation for independent sampling jobs
};

/// Largest number of distinct sites a family can address.
inline constexpr std::uint64_t kMaxSites = std::uint64_t{1} << 48;

/**
 * Family of replayable uniform streams, one per lattice site.
 *
 * A site's parameter is its row-major index packed with the sub-stream tag;
 * uniform(site, step) is Philox(counter = (parameter, step), key = seed).
 * There is no cursor: every value is addressed directly.
 */
class StreamFamily {
  public:
    StreamFamily(std::uint64_t seed, int width, int height) : seed_(seed), width_(width), height_(height)
    {
        if (width < 0 || height < 0) throw InvalidInput("grid shape must be non-negative");
        const auto sites = static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
        if (sites >= kMaxSites) {
            throw CapacityError("grid of " + std::to_string(sites) + " sites exceeds 2^48 stream parameters");
        }
    }

    std::uint64_t seed() const noexcept { return seed_; }
    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    std::uint64_t site_index(int x, int y) const
    {
        if (x < 0 || y < 0 || x >= width_ || y >= height_) {
            throw OutOfGridError("site (" + std::to_string(x) + "," + std::to_string(y) + ") outside stream grid");
        }
        return unchecked_site_index(x, y);
    }

    std::uint64_t unchecked_site_index(int x, int y) const noexcept
    {
        return static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(width_) + static_cast<std::uint64_t>(x);
    }

    /// Generator parameter of (site, tag); injective over the family.
    static constexpr std::uint64_t parameter(std::uint64_t site, Substream tag) noexcept
    {
        return site | (static_cast<std::uint64_t>(tag) << 48);
    }

    std::uint64_t bits(std::uint64_t site, std::uint64_t step, Substream tag = Substream::Site) const noexcept
    {
        const std::uint64_t param = parameter(site, tag);
        const PhiloxCounter ctr{static_cast<std::uint32_t>(param), static_cast<std::uint32_t>(param >> 32),
                                static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32)};
        const PhiloxKey key{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
        const PhiloxCounter out = philox4x32_10(ctr, key);
        return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    }

    double uniform(int x, int y, std::uint64_t step) const
    {
        return to_unit_interval(bits(site_index(x, y), step, Substream::Site));
    }

    // Hot path for the kernels; (x, y) must be inside the grid.
    double site_uniform(std::uint64_t site, std::uint64_t step) const noexcept
    {
        return to_unit_interval(bits(site, step, Substream::Site));
    }

    /// One draw per sweep shared by all sites (color-class choice).
    double global_uniform(std::uint64_t step) const noexcept
    {
        return to_unit_interval(bits(0, step, Substream::Global));
    }

  private:
    std::uint64_t seed_;
    int width_;
    int height_;
};

inline StreamFamily seed_family(std::uint64_t seed, int width, int height)
{
    return StreamFamily(seed, width, height);
}

/// Deterministic 64-bit seed number `index` derived from `master` on a tagged sub-stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, Substream tag = Substream::Master) noexcept
{
    const StreamFamily family(master, 0, 0);
    return family.bits(0, index, tag);
}

/// Parses decimal or 0x-prefixed hexadecimal seeds.
inline std::uint64_t parse_seed(const std::string& text)
{
    std::size_t pos = 0;
    std::uint64_t value = 0;
    try {
        if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
            value = std::stoull(text.substr(2), &pos, 16);
            pos += 2;
        } else {
            value = std::stoull(text, &pos, 10);
        }
    } catch (const std::exception&) {
        throw InvalidInput("invalid seed '" + text + "'");
    }
    if (pos != text.size() || text.empty() || text[0] == '-') throw InvalidInput("invalid seed '" + text + "'");
    return value;
}

}  // namespace tilesampler::rng
