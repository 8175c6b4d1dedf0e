// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "tilesampler/domino/tiling.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/grid.hpp"
#include "tilesampler/sixvertex/config.hpp"

namespace tilesampler::harness {

/// Per-site empirical means of an indicator observable.
struct DensityMap {
    Grid2<double> mean;
    std::size_t samples = 0;
};

/// Sums indicator grids; merging accumulators is associative, so per-worker partial sums reduce in any order.
class DensityAccumulator {
  public:
    void add(const Grid2<std::uint8_t>& indicator)
    {
        if (samples_ == 0) {
            sum_ = Grid2<double>(indicator.width(), indicator.height(), 0.0);
        } else if (indicator.width() != sum_.width() || indicator.height() != sum_.height()) {
            throw DomainMismatchError("indicator grids differ in shape");
        }
        for (std::size_t k = 0; k < indicator.data().size(); ++k) sum_.data()[k] += indicator.data()[k] ? 1.0 : 0.0;
        ++samples_;
    }

    void merge(const DensityAccumulator& other)
    {
        if (other.samples_ == 0) return;
        if (samples_ == 0) {
            *this = other;
            return;
        }
        if (other.sum_.width() != sum_.width() || other.sum_.height() != sum_.height())
            throw DomainMismatchError("indicator grids differ in shape");
        for (std::size_t k = 0; k < sum_.data().size(); ++k) sum_.data()[k] += other.sum_.data()[k];
        samples_ += other.samples_;
    }

    DensityMap result() const
    {
        if (samples_ == 0) throw EmptyArchive("density map of an empty sample set");
        DensityMap m{sum_, samples_};
        for (double& v : m.mean.data()) v /= static_cast<double>(samples_);
        return m;
    }

  private:
    Grid2<double> sum_;
    std::size_t samples_ = 0;
};

template <class State, class Indicator>
DensityMap density_map(const std::vector<State>& states, Indicator&& indicator)
{
    DensityAccumulator acc;
    for (const auto& s : states) acc.add(indicator(s));
    return acc.result();
}

enum class Observable { HorizontalEdge, VerticalEdge, CVertex, DominoOrientation };

inline Observable parse_observable(const std::string& s)
{
    if (s == "h-edge") return Observable::HorizontalEdge;
    if (s == "v-edge") return Observable::VerticalEdge;
    if (s == "c-vertex") return Observable::CVertex;
    if (s == "domino-orientation") return Observable::DominoOrientation;
    throw InvalidInput("unknown observable '" + s + "'");
}

/// Occupied horizontal edges, (n+1) x n.
inline Grid2<std::uint8_t> horizontal_edge_indicator(const sixvertex::SixVertexConfig& c) { return c.horizontal_edges(); }

/// Occupied vertical edges, n x (n+1).
inline Grid2<std::uint8_t> vertical_edge_indicator(const sixvertex::SixVertexConfig& c) { return c.vertical_edges(); }

inline Grid2<std::uint8_t> c_vertex_indicator(const sixvertex::SixVertexConfig& c)
{
    Grid2<std::uint8_t> out(c.n(), c.n(), 0);
    for (int y = 0; y < c.n(); ++y)
        for (int x = 0; x < c.n(); ++x) out(x, y) = sixvertex::is_c(sixvertex::vertex_type(c, x, y));
    return out;
}

/// 1 on faces covered by a horizontal domino, n x n.
inline Grid2<std::uint8_t> horizontal_domino_indicator(const domino::Tiling& t)
{
    const int n = t.domain().n();
    Grid2<std::uint8_t> out(n, n, 0);
    for (const auto& d : domino::dominoes_from_tiling(t))
        if (d.horizontal()) out(d.a.x, d.a.y) = out(d.b.x, d.b.y) = 1;
    return out;
}

/// Binned, normalized histogram; the bin layout is part of the result.
struct Histogram {
    double lo = 0.0;
    double bin_width = 1.0;
    std::vector<double> density;  // fractions per bin, summing to 1
    std::size_t samples = 0;
};

/// `bins` equal bins spanning [min, max]; a constant observable gives one bin.
inline Histogram histogram(const std::vector<double>& values, int bins)
{
    if (values.empty()) throw EmptyArchive("histogram of an empty sample set");
    if (bins < 1) throw InvalidInput("histogram needs at least one bin");
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    Histogram h{*mn, 1.0, {}, values.size()};
    if (*mn == *mx) {
        h.density = {1.0};
        return h;
    }
    h.bin_width = (*mx - *mn) / bins;
    h.density.assign(static_cast<std::size_t>(bins), 0.0);
    for (double v : values) {
        auto k = static_cast<std::size_t>((v - *mn) / h.bin_width);
        h.density[std::min(k, h.density.size() - 1)] += 1.0;
    }
    for (double& d : h.density) d /= static_cast<double>(values.size());
    return h;
}

/// Integer-valued histogram with one bin per value from min to max.
inline Histogram integer_histogram(const std::vector<double>& values)
{
    if (values.empty()) throw EmptyArchive("histogram of an empty sample set");
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    const long lo = std::lround(*mn);
    Histogram h{static_cast<double>(lo), 1.0, std::vector<double>(static_cast<std::size_t>(std::lround(*mx) - lo + 1), 0.0),
                values.size()};
    for (double v : values) {
        if (std::abs(v - std::round(v)) > 1e-9) throw InvalidInput("integer histogram of a non-integer value");
        h.density[static_cast<std::size_t>(std::lround(v) - lo)] += 1.0;
    }
    for (double& d : h.density) d /= static_cast<double>(values.size());
    return h;
}

/**
 * Where the boundary of the northern frozen region meets the vertical axis of
 * an Aztec diamond, measured in faces above the centre. The column just right
 * of the axis is scanned downwards while its faces belong to horizontal
 * dominoes in the top row's brick pattern.
 */
inline double aztec_top_path_intercept(const domino::Tiling& t)
{
    const int n = t.domain().n();
    const int order = n / 2;
    // horizontal offset from each face to its domino partner; 0 for vertical dominoes
    Grid2<int> partner(n, n, 0);
    for (const auto& d : domino::dominoes_from_tiling(t))
        if (d.horizontal()) {
            partner(d.a.x, d.a.y) = d.b.x - d.a.x;
            partner(d.b.x, d.b.y) = d.a.x - d.b.x;
        }
    const int brick = (order - 1 + n - 1) & 1;  // parity of x + y on the left face of a north brick
    int y = n - 1;
    while (y >= 0 && partner(order, y) == (((order + y) & 1) == brick ? 1 : -1)) --y;
    return static_cast<double>(y + 1 - order);
}

inline double c_vertex_count(const sixvertex::SixVertexConfig& c) { return sixvertex::count_c_vertices(c); }

/// Mean expected-orientation density in each frozen corner of an Aztec diamond, outside `factor` times the inscribed circle.
struct ArcticCheck {
    double north = 0, south = 0, east = 0, west = 0;
    int faces_checked = 0;
    double worst() const noexcept { return std::min({north, south, east, west}); }
};

inline ArcticCheck arctic_corner_density(const DensityMap& horizontal_fraction, int order, double factor)
{
    const int n = 2 * order;
    const double radius = factor * order / std::sqrt(2.0);
    double sum[4] = {0, 0, 0, 0};
    int count[4] = {0, 0, 0, 0};
    ArcticCheck out;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            const double dx = x + 0.5 - order, dy = y + 0.5 - order;
            if (std::abs(dx) + std::abs(dy) > order || std::hypot(dx, dy) <= radius) continue;
            const double horiz = horizontal_fraction.mean(x, y);
            const int region = std::abs(dy) >= std::abs(dx) ? (dy > 0 ? 0 : 1) : (dx > 0 ? 2 : 3);
            sum[region] += region < 2 ? horiz : 1.0 - horiz;
            ++count[region];
            ++out.faces_checked;
        }
    auto avg = [&](int r) { return count[r] ? sum[r] / count[r] : 0.0; };
    out.north = avg(0);
    out.south = avg(1);
    out.east = avg(2);
    out.west = avg(3);
    return out;
}

}  // namespace tilesampler::harness
