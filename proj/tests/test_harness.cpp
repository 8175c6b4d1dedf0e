// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "tilesampler/harness/enumerate_domino.hpp"
#include "tilesampler/harness/enumerate_lozenge.hpp"
#include "tilesampler/harness/enumerate_sixvertex.hpp"
#include "tilesampler/harness/exact.hpp"
#include "tilesampler/harness/observables.hpp"
#include "tilesampler/harness/problem.hpp"
#include "tilesampler/harness/render.hpp"
#include "tilesampler/harness/stats.hpp"

using namespace tilesampler;
using namespace tilesampler::harness;

namespace {

// Column-by-column transfer matrix over the set of faces poking into the next column.
std::uint64_t rectangle_tilings(int w, int h)
{
    std::vector<std::uint64_t> ways(1u << h, 0);
    ways[0] = 1;
    for (int col = 0; col < w; ++col) {
        std::vector<std::uint64_t> next(1u << h, 0);
        for (std::uint32_t in = 0; in < (1u << h); ++in) {
            if (!ways[in]) continue;
            auto fill = [&](auto&& self, int row, std::uint32_t out) -> void {
                if (row == h) {
                    next[out] += ways[in];
                    return;
                }
                if (in >> row & 1) return self(self, row + 1, out);
                self(self, row + 1, out | (1u << row));  // horizontal into the next column
                if (row + 1 < h && !(in >> (row + 1) & 1)) self(self, row + 2, out);  // vertical
            };
            fill(fill, 0, 0);
        }
        ways = next;
    }
    return ways[0];
}

}  // namespace

TEST(Enumerate, DominoCountsMatchTransferMatrix)
{
    EXPECT_EQ(enumerate_domino(domino::square(2)).size(), 2u);
    EXPECT_EQ(enumerate_domino(domino::rectangle(2, 3)).size(), 3u);
    for (auto [w, h] : {std::pair{2, 3}, {4, 4}, {3, 4}, {6, 5}, {6, 6}, {2, 9}})
        EXPECT_EQ(enumerate_domino(domino::rectangle(w, h)).size(), rectangle_tilings(w, h)) << w << "x" << h;
    EXPECT_EQ(enumerate_domino(domino::aztec_diamond(4)).size(), 1024u);
    EXPECT_THROW(enumerate_domino(domino::square(8), 1000), StateSpaceTooLarge);
}

TEST(ExactDistribution, KnownTables)
{
    const auto u = exact_distribution(std::vector<double>(5, 3.0));
    for (double p : u.probabilities) EXPECT_DOUBLE_EQ(p, 0.2);
    EXPECT_DOUBLE_EQ(u.partition_function, 15.0);
    EXPECT_THROW(exact_distribution({0.0}), InvalidInput);

    const domino::Domain d = domino::square(2);
    domino::VolumeWeights q = domino::VolumeWeights::constant(2, 1.0);
    q.q(1, 1) = 2.0;
    std::vector<double> w;
    std::vector<bool> vertical;
    for (const auto& m : enumerate_domino(d)) {
        const auto t = domino::tiling_from_dominoes(d, m);
        w.push_back(gibbs_weight(t, q));
        vertical.push_back(t.state(1, 1) == domino::kVerticalPair);
    }
    const auto e = exact_distribution(w);
    for (std::size_t k = 0; k < 2; ++k) EXPECT_NEAR(e.probabilities[k], vertical[k] ? 16.0 / 17 : 1.0 / 17, 1e-12);

    const auto all = enumerate_sixvertex(sixvertex::dwbc(3));
    std::vector<double> sw;
    for (const auto& c : all) sw.push_back(gibbs_weight(c, {1, 1, 2}));
    const auto se = exact_distribution(sw);
    double total = 0;
    for (std::size_t k = 0; k < all.size(); ++k) {
        total += se.probabilities[k];
        EXPECT_NEAR(se.probabilities[k] * se.partition_function, std::pow(2.0, sixvertex::count_c_vertices(all[k])), 1e-9);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Stats, ChiSquareHarnessDetectsSkew)
{
    const std::size_t k = 20;
    const double n = 20000;
    std::vector<double> uniform(k, 1.0 / k);
    std::vector<double> exact_counts(k, n / k);
    EXPECT_TRUE(chi_square_test(exact_counts, uniform).passes(kDefaultSignificance));
    std::vector<double> skew(k, 1.0);
    skew[0] = 2.0;
    skew = normalized(skew);
    std::vector<double> skew_counts;
    for (double p : skew) skew_counts.push_back(p * n);
    EXPECT_FALSE(chi_square_test(skew_counts, uniform).passes(kDefaultSignificance));
}

TEST(Density, IdenticalStatesGiveIndicators)
{
    const auto c = enumerate_sixvertex(sixvertex::dwbc(3))[2];
    const std::vector<sixvertex::SixVertexConfig> same(5, c);
    const auto m = density_map(same, c_vertex_indicator);
    EXPECT_EQ(m.samples, 5u);
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x < 3; ++x) EXPECT_EQ(m.mean(x, y), sixvertex::is_c(sixvertex::vertex_type(c, x, y)) ? 1.0 : 0.0);
    EXPECT_THROW(density_map(std::vector<sixvertex::SixVertexConfig>{}, c_vertex_indicator), EmptyArchive);
}

TEST(Density, MergeIsOrderIndependent)
{
    const auto all = enumerate_sixvertex(sixvertex::dwbc(4));
    DensityAccumulator a, b, whole;
    for (std::size_t k = 0; k < all.size(); ++k) {
        (k % 3 ? a : b).add(horizontal_edge_indicator(all[k]));
        whole.add(horizontal_edge_indicator(all[k]));
    }
    DensityAccumulator ab = a, ba = b;
    ab.merge(b);
    ba.merge(a);
    EXPECT_EQ(ab.result().mean, whole.result().mean);
    EXPECT_EQ(ba.result().samples, whole.result().samples);
    for (std::size_t k = 0; k < ab.result().mean.data().size(); ++k)
        EXPECT_NEAR(ab.result().mean.data()[k], ba.result().mean.data()[k], 1e-15);
}

TEST(Density, DwbcEdgeMeansMatchOracleMarginals)
{
    const auto all = enumerate_sixvertex(sixvertex::dwbc(3));
    const Problem p = make_sixvertex_problem(sixvertex::dwbc(3));
    SamplingJob job;
    job.master_seed = 31;
    job.count = 20000;
    std::vector<sixvertex::SixVertexConfig> samples;
    for (auto& s : sample_many(p, job)) samples.push_back(std::get<sixvertex::SixVertexConfig>(s));
    for (auto indicator : {horizontal_edge_indicator, vertical_edge_indicator, c_vertex_indicator}) {
        const auto emp = density_map(samples, indicator);
        const auto exact = density_map(all, indicator);  // uniform: the enumeration average is the marginal
        for (std::size_t k = 0; k < emp.mean.data().size(); ++k) {
            const double p_exact = exact.mean.data()[k];
            EXPECT_NEAR(emp.mean.data()[k], p_exact, 4 * frequency_sigma(p_exact, 20000) + 1e-12);
        }
    }
    std::vector<double> counts;
    for (const auto& c : samples) counts.push_back(c_vertex_count(c));
    const auto h = integer_histogram(counts);
    ASSERT_EQ(h.density.size(), 3u);
    EXPECT_EQ(h.lo, 3.0);
    EXPECT_NEAR(h.density[0], 6.0 / 7, 4 * frequency_sigma(6.0 / 7, 20000));
    EXPECT_EQ(h.density[1], 0.0);
    EXPECT_NEAR(h.density[2], 1.0 / 7, 4 * frequency_sigma(1.0 / 7, 20000));
}

TEST(Histogram, ConstantAndBinning)
{
    const auto c = histogram({2.5, 2.5, 2.5}, 10);
    EXPECT_EQ(c.density, std::vector<double>{1.0});
    const auto h = histogram({0, 1, 2, 3}, 2);
    EXPECT_EQ(h.density, (std::vector<double>{0.5, 0.5}));
    EXPECT_THROW(histogram({}, 3), EmptyArchive);
    EXPECT_THROW(histogram({1.0}, 0), InvalidInput);
    const auto ints = integer_histogram({17, 19, 19, 26});
    EXPECT_EQ(ints.lo, 17.0);
    EXPECT_EQ(ints.bin_width, 1.0);
    ASSERT_EQ(ints.density.size(), 10u);
    EXPECT_EQ(ints.density[0], 0.25);
    EXPECT_EQ(ints.density[2], 0.5);
    EXPECT_EQ(ints.density[9], 0.25);
    EXPECT_EQ(integer_histogram({4, 4}).density, std::vector<double>{1.0});
    EXPECT_THROW(integer_histogram({0.5}), InvalidInput);
}

TEST(Observables, AztecInterceptOnBrickTilingAndSamples)
{
    const int order = 6;
    const domino::Domain d = domino::aztec_diamond(order);
    std::vector<domino::Domino> rows;
    for (int y = 0; y < d.n(); ++y) {
        std::vector<int> xs;
        for (int x = 0; x < d.n(); ++x)
            if (d.contains(x, y)) xs.push_back(x);
        for (std::size_t k = 0; k < xs.size(); k += 2) rows.push_back({{xs[k], y}, {xs[k + 1], y}});
    }
    EXPECT_EQ(aztec_top_path_intercept(domino::tiling_from_dominoes(d, rows)), 0.0);
    const sweep::SweepPlan plan(d, domino::Uniform{});
    for (std::uint64_t s = 0; s < 20; ++s) {
        const double v = aztec_top_path_intercept(cftp::cftp_sample(plan, s));
        EXPECT_GE(v, -order);
        EXPECT_LE(v, order);
    }
}

TEST(Observables, ArcticCheckOnUniformDensity)
{
    DensityMap m{Grid2<double>(8, 8, 1.0), 1};
    const auto a = arctic_corner_density(m, 4, 1.1);
    EXPECT_EQ(a.north, 1.0);
    EXPECT_EQ(a.south, 1.0);
    EXPECT_EQ(a.east, 0.0);
    EXPECT_GT(a.faces_checked, 0);
}

TEST(Render, DominoRectangles)
{
    const domino::Domain d = domino::square(2);
    const auto t = domino::tiling_from_dominoes(d, {{{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}});
    const std::string svg = render_svg(t);
    const std::regex rect("<rect class=\"([hv])[01]\"");
    std::vector<std::string> classes;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it)
        classes.push_back((*it)[1]);
    EXPECT_EQ(classes, (std::vector<std::string>{"v", "v"}));
    EXPECT_EQ(render_svg(t), svg);
}

TEST(Render, ReferenceTilingHasEightDominoesAtDecodedPositions)
{
    const int m[5][5] = {{0, 0, 2, 0, 0}, {8, 4, 1, 8, 4}, {0, 8, 12, 4, 0}, {8, 4, 2, 8, 4}, {0, 0, 1, 0, 0}};
    Grid2<std::uint8_t> states(5, 5, 0);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) states(4 - c, 4 - r) = static_cast<std::uint8_t>(m[r][c]);
    const domino::Tiling t(domino::square(4), states);
    ASSERT_EQ(domino::validate_tiling(t), "");
    const std::string svg = render_svg(t, 10.0);
    const std::regex rect("<rect class=\"[hv][01]\" x=\"([0-9.]+)\" y=\"([0-9.]+)\" width=\"([0-9.]+)\" height=\"([0-9.]+)\"");
    std::set<std::array<int, 4>> drawn, expected;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it)
        drawn.insert({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
    for (const auto& d : domino::dominoes_from_tiling(t)) {
        const int x = std::min(d.a.x, d.b.x), y = std::max(d.a.y, d.b.y);
        expected.insert({10 * x, 10 * (3 - y), d.horizontal() ? 20 : 10, d.horizontal() ? 10 : 20});
    }
    EXPECT_EQ(drawn.size(), 8u);
    EXPECT_EQ(drawn, expected);
}

TEST(Render, SixVertexBoldEdgesAreExactlyOccupiedEdges)
{
    const auto c = std::get<sixvertex::SixVertexConfig>(sample_cftp(make_sixvertex_problem(sixvertex::dwbc(3)), 4));
    const std::string svg = render_svg(c);
    const std::regex edge("data-edge=\"([hv]) ([0-9]+) ([0-9]+)\"");
    std::set<std::tuple<char, int, int>> drawn, occupied;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), edge); it != std::sregex_iterator(); ++it)
        drawn.insert({std::string((*it)[1])[0], std::stoi((*it)[2]), std::stoi((*it)[3])});
    for (int y = 0; y < 3; ++y)
        for (int x = 0; x <= 3; ++x)
            if (c.horizontal(x, y)) occupied.insert({'h', x, y});
    for (int y = 0; y <= 3; ++y)
        for (int x = 0; x < 3; ++x)
            if (c.vertical(x, y)) occupied.insert({'v', x, y});
    EXPECT_EQ(drawn, occupied);
    EXPECT_EQ(render_svg(c), svg);
}

TEST(Render, LozengesShadedByOrientation)
{
    const lozenge::TriDomain d = lozenge::hexagon(2, 2, 2);
    const auto t = lozenge::tiling_from_lozenges(d, enumerate_lozenge(d)[7]);
    const std::string svg = render_svg(t);
    const std::regex poly("<polygon class=\"o([012])\" points=\"([^\"]+)\"");
    int count = 0;
    std::map<std::string, int> per_class;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), poly); it != std::sregex_iterator(); ++it) {
        ++count;
        ++per_class[(*it)[1]];
        const std::string points = (*it)[2];
        EXPECT_EQ(std::count(points.begin(), points.end(), ','), 4);
    }
    EXPECT_EQ(count, 12);
    for (const auto& [cls, k] : per_class) EXPECT_EQ(k, 4) << cls;  // every tiling of a regular hexagon has 4 of each
    EXPECT_EQ(render_svg(t), svg);
}

TEST(Problem, WeightParsing)
{
    EXPECT_NO_THROW(make_domino_problem(domino::square(2), "q=2"));
    EXPECT_NO_THROW(make_domino_problem(domino::square(2), "horizontal=3"));
    EXPECT_THROW(make_domino_problem(domino::square(2), "q=2,horizontal=1"), InvalidInput);
    EXPECT_THROW(make_domino_problem(domino::square(2), "z=2"), InvalidInput);
    EXPECT_THROW(make_domino_problem(domino::square(2), "q=abc"), InvalidInput);
    EXPECT_THROW(make_domino_problem(domino::square(2), "q=-1"), InvalidInput);
    EXPECT_THROW(make_sixvertex_problem(sixvertex::dwbc(2), "a"), InvalidInput);
    const auto p = make_sixvertex_problem(sixvertex::dwbc(2), "a=1,b=1,c=2");
    EXPECT_EQ(std::get<SixVertexProblem>(p.spec).weights, (sixvertex::SVWeights{1, 1, 2}));
    EXPECT_THROW(problem_from_text("tetris", "", ""), InvalidInput);
}

TEST(Problem, StateEncodingRoundTrips)
{
    const std::vector<Problem> problems{make_domino_problem(domino::aztec_diamond(3), "q=1.5"),
                                        make_lozenge_problem(lozenge::hexagon(2, 3, 2)),
                                        make_sixvertex_problem(sixvertex::dwbc(5), "c=2")};
    for (const auto& p : problems) {
        const State s = sample_cftp(p, 12);
        const std::string e = encode_state(s);
        EXPECT_EQ(e.find('\n'), std::string::npos);
        EXPECT_EQ(encode_state(decode_state(p, e)), e);
        std::string broken = e;
        broken[broken.find_first_of("123456789abc")] = broken[broken.find_first_of("123456789abc")] == '1' ? '0' : '1';
        EXPECT_THROW(decode_state(p, broken), InvalidInput) << model_name(p);
        EXPECT_EQ(problem_from_text(model_name(p), domain_text(p), p.weights_text).spec.index(), p.spec.index());
    }
}

TEST(Archive, ReplayAndFanOutIndependence)
{
    const Problem p = make_domino_problem(domino::aztec_diamond(4), "q=1.2");
    SamplingJob job;
    job.master_seed = 0xfeed;
    job.count = 12;
    const auto one = sample_many(p, job);
    job.job_workers = 4;
    const auto four = sample_many(p, job);
    for (std::size_t k = 0; k < one.size(); ++k) EXPECT_EQ(encode_state(one[k]), encode_state(four[k]));

    const SampleArchive a = make_archive(p, job, four);
    std::stringstream ss;
    write_archive(ss, a);
    const SampleArchive back = read_archive(ss);
    EXPECT_EQ(back.records, a.records);
    EXPECT_EQ(back.header, a.header);
    EXPECT_TRUE(replay_archive(back));
    EXPECT_TRUE(replay_archive(back, 3));
    EXPECT_EQ(archive_states(back).size(), 12u);

    SampleArchive tampered = back;
    std::swap(tampered.records[0], tampered.records[1]);
    EXPECT_FALSE(replay_archive(tampered));
    SampleArchive wrong_hash = back;
    wrong_hash.header["domain_hash"] = "0000000000000000";
    EXPECT_THROW(replay_archive(wrong_hash), InvalidInput);

    SamplingJob mcmc;
    mcmc.method = Method::Mcmc;
    mcmc.steps = 50;
    mcmc.count = 3;
    mcmc.master_seed = 5;
    const Problem sv = make_sixvertex_problem(sixvertex::dwbc(6), "a=2");  // non-monotone weights still sample by MCMC
    const auto arch = make_archive(sv, mcmc, sample_many(sv, mcmc));
    EXPECT_TRUE(replay_archive(arch));
    std::stringstream missing("# format=tilesampler-archive-1\n# count=0\n");
    EXPECT_THROW(read_archive(missing), InvalidInput);
    std::stringstream text;
    SampleArchive none = arch;
    none.records.clear();
    none.header["count"] = "0";
    write_archive(text, none);
    EXPECT_THROW(read_archive(text), EmptyArchive);
}

TEST(Archive, FanOutPropagatesErrors)
{
    const Problem sv = make_sixvertex_problem(sixvertex::dwbc(3), "a=2");
    SamplingJob job;
    job.count = 4;
    job.job_workers = 2;
    EXPECT_THROW(sample_many(sv, job), NonMonotoneWeights);
}
