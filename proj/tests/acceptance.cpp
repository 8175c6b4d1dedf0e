// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion. Optional arguments select criteria by number.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "support.hpp"
#include "tilesampler/cftp/domino_cftp.hpp"
#include "tilesampler/domino/height.hpp"
#include "tilesampler/harness/enumerate_domino.hpp"
#include "tilesampler/harness/enumerate_lozenge.hpp"
#include "tilesampler/harness/enumerate_sixvertex.hpp"
#include "tilesampler/harness/exact.hpp"
#include "tilesampler/harness/observables.hpp"
#include "tilesampler/harness/problem.hpp"
#include "tilesampler/harness/stats.hpp"
#include "tilesampler/lozenge/dynamics.hpp"
#include "tilesampler/sixvertex/dynamics.hpp"
#include "tilesampler/sweep/engine.hpp"

using namespace tilesampler;
using namespace tilesampler::harness;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

/// Empirical counts of `samples` over the enumerated `states`, keyed by encoding.
std::vector<double> tally(const std::vector<State>& states, const std::vector<State>& samples)
{
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < states.size(); ++k) index[encode_state(states[k])] = k;
    std::vector<double> counts(states.size(), 0.0);
    for (const auto& s : samples) counts.at(index.at(encode_state(s))) += 1;
    return counts;
}

std::vector<State> domino_states(const domino::Domain& d)
{
    std::vector<State> out;
    for (const auto& m : enumerate_domino(d)) out.emplace_back(domino::tiling_from_dominoes(d, m));
    return out;
}

std::vector<State> draw(const Problem& p, std::uint64_t seed, std::size_t count)
{
    SamplingJob job;
    job.master_seed = seed;
    job.count = count;
    job.job_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return sample_many(p, job);
}

std::vector<double> uniform_table(std::size_t k) { return std::vector<double>(k, 1.0 / static_cast<double>(k)); }

Outcome domino_uniformity()
{
    Outcome o{true, ""};
    for (const auto& [name, d] : {std::pair{"2x3", domino::rectangle(2, 3)}, {"aztec-2", domino::aztec_diamond(2)}}) {
        const auto states = domino_states(d);
        const auto counts = tally(states, draw(make_domino_problem(d), 101, 20000));
        const auto chi = chi_square_test(counts, uniform_table(states.size()));
        o.pass = o.pass && chi.passes(kDefaultSignificance);
        o.detail += std::string(name) + ": " + std::to_string(states.size()) + " tilings, p=" + fmt("%.3g", chi.p_value) + "; ";
    }
    return o;
}

Outcome domino_weighted()
{
    const domino::Domain d = domino::square(2);
    const Problem p = make_domino_problem(d, "q=2");  // only the centre vertex can move
    const auto samples = draw(p, 202, 20000);
    double vertical = 0;
    for (const auto& s : samples) vertical += std::get<domino::Tiling>(s).state(1, 1) == domino::kVerticalPair;
    const double f = vertical / 20000, sigma = frequency_sigma(16.0 / 17, 20000);
    const double z = (f - 16.0 / 17) / sigma;
    return {std::abs(z) <= 3.0, "vertical-pair frequency " + fmt("%.4f", f) + " vs 16/17=0.9412, z=" + fmt("%.2f", z)};
}

Outcome sixvertex_exactness()
{
    const auto configs = enumerate_sixvertex(sixvertex::dwbc(3));
    std::vector<State> states(configs.begin(), configs.end());
    Outcome o{configs.size() == 7, "enumerated " + std::to_string(configs.size()) + "; "};
    const auto uni = chi_square_test(tally(states, draw(make_sixvertex_problem(sixvertex::dwbc(3)), 303, 20000)), uniform_table(7));
    o.pass = o.pass && uni.passes(kDefaultSignificance);
    o.detail += "uniform chi-square p=" + fmt("%.3g", uni.p_value) + "; ";
    std::vector<double> w;
    for (const auto& c : configs) w.push_back(gibbs_weight(c, {1, 1, 2}));
    const auto exact = exact_distribution(w);
    const auto counts = tally(states, draw(make_sixvertex_problem(sixvertex::dwbc(3), "a=1,b=1,c=2"), 304, 20000));
    const double tv = total_variation(normalized(counts), exact.probabilities);
    o.pass = o.pass && tv < 0.02;
    o.detail += "(1,1,2) TV=" + fmt("%.4f", tv);
    return o;
}

Outcome coupling_sandwich()
{
    std::mt19937_64 gen(404);
    long violations = 0, checkpoints = 0;
    for (int run = 0; run < 200; ++run) {
        const domino::Domain d = [&] {
            if (run % 2 == 0) return domino::square(6);
            for (;;) {
                const domino::Domain r = testsupport::random_valid_domain(gen, 6, 20 + 2 * static_cast<int>(gen() % 8));
                if (domino::extremal_tilings(r)) return r;
            }
        }();
        const sweep::SweepPlan plan(d, run % 3 == 0 ? domino::WeightSpec{domino::VolumeWeights::constant(d.n(), 1.7)}
                                                    : domino::WeightSpec{domino::Uniform{}});
        cftp::CftpHooks<domino::Checkerboard> hooks;
        hooks.on_checkpoint = [&](int, std::size_t, const domino::Checkerboard& top, const domino::Checkerboard& bottom) {
            const auto ord = domino::order_compare(domino::height_function(domino::merge_checkerboard(bottom, d)),
                                                   domino::height_function(domino::merge_checkerboard(top, d)));
            violations += !(ord == domino::Order::LessEqual || ord == domino::Order::Equal);
            ++checkpoints;
        };
        cftp::CftpOptions opts;
        opts.early_collapse = false;
        cftp::cftp_sample(plan, gen(), sweep::Backend::sequential(), opts, &hooks);
    }
    const sixvertex::SVWeights ws[] = {{1, 1, 1}, {1, 1, 2}, {0.5, 0.8, 1.0}};
    for (int run = 0; run < 200; ++run) {
        cftp::CftpHooks<sixvertex::FaceHeights> hooks;
        hooks.on_checkpoint = [&](int, std::size_t, const sixvertex::FaceHeights& top, const sixvertex::FaceHeights& bottom) {
            violations += !sixvertex::heights_le(bottom, top);
            ++checkpoints;
        };
        cftp::CftpOptions opts;
        opts.early_collapse = false;
        sixvertex::sv_cftp(sixvertex::dwbc(6), ws[run % 3], gen(), sweep::Backend::sequential(), opts, &hooks);
    }
    return {violations == 0, std::to_string(checkpoints) + " checkpoints over 400 runs, " + std::to_string(violations) + " order violations"};
}

Outcome backend_determinism()
{
    std::mt19937_64 gen(505);
    const std::vector<sweep::Backend> threaded{sweep::Backend::threads(2), sweep::Backend::threads(4), sweep::Backend::threads(8)};
    const sweep::Backend seq = sweep::Backend::sequential();
    int mismatches = 0;
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t seed = gen(), steps = 1 + gen() % 200;
        if (t % 3 == 0) {
            domino::Domain d = domino::square(2);
            for (;;) {
                const int n = 4 + static_cast<int>(gen() % 12);
                d = testsupport::random_valid_domain(gen, n, std::max(2, (n * n / 2) & ~1));
                if (domino::extremal_tilings(d)) break;
            }
            const sweep::SweepPlan plan(d, domino::VolumeWeights::constant(d.n(), 0.5 + (gen() % 4) * 0.5));
            const auto start = domino::extremal_tilings(d)->max;
            const auto ref = sweep::random_walk(start, seed, steps, plan, seq);
            for (const auto& b : threaded) mismatches += !(sweep::random_walk(start, seed, steps, plan, b) == ref);
        } else if (t % 3 == 1) {
            const lozenge::TriDomain d = lozenge::hexagon(1 + static_cast<int>(gen() % 6), 1 + static_cast<int>(gen() % 6),
                                                          1 + static_cast<int>(gen() % 6));
            const lozenge::LozengePlan plan(d, lozenge::LozengeWeights::volume(d, 0.5 + (gen() % 4) * 0.5));
            const auto start = lozenge::loz_extremal(d)->min;
            const auto ref = lozenge::loz_random_walk(start, seed, steps, plan, seq);
            for (const auto& b : threaded) mismatches += !(lozenge::loz_random_walk(start, seed, steps, plan, b) == ref);
        } else {
            const int n = 1 + static_cast<int>(gen() % 14);
            const sixvertex::SVWeights w{0.5 + (gen() % 3) * 0.5, 1.0, 1.5};
            const auto start = sixvertex::sv_extremal(sixvertex::dwbc(n)).max;
            auto ref = start;
            sixvertex::sv_walk(ref, seed, steps, w, seq);
            for (const auto& b : threaded) {
                auto h = start;
                sixvertex::sv_walk(h, seed, steps, w, b);
                mismatches += !(h.h == ref.h);
            }
        }
    }
    return {mismatches == 0, "100 triples x 3 thread counts, " + std::to_string(mismatches) + " mismatches"};
}

Outcome kernel_fuzz()
{
    std::mt19937_64 gen(606);
    long violations = 0, recompute_mismatch = 0, sweeps = 0;
    while (sweeps < 10000) {  // domino
        const int n = 4 + static_cast<int>(gen() % 9);
        const domino::Domain d = testsupport::random_valid_domain(gen, n, std::max(2, (n * n / 2) & ~1));
        const auto ext = domino::extremal_tilings(d);
        if (!ext) continue;
        const sweep::SweepPlan plan(d, domino::VolumeWeights::constant(d.n(), 0.5 + (gen() % 3) * 0.5));
        domino::Checkerboard cb = domino::split_checkerboard(gen() % 2 ? ext->max : ext->min);
        const auto f = plan.family(gen());
        for (std::uint64_t k = 0; k < 100; ++k, ++sweeps) {
            const domino::Color c = sweep::sweep_color(f, k);
            plan.sweep(cb, f, k, c, sweep::Backend::sequential());
            const domino::Tiling t = domino::merge_checkerboard(cb, d);
            violations += !domino::validate_tiling(t).empty();
            recompute_mismatch += !(domino::split_checkerboard(t) == cb);
            recompute_mismatch += !(domino::tiling_from_dominoes(d, domino::dominoes_from_tiling(t)) == t);
            const domino::Color passive = domino::other(c);
            for (int i = 0; i < cb.side(); ++i)
                for (int j = 0; j < cb.half(); ++j)
                    recompute_mismatch += sweep::update_kernel(cb, i, j, passive) != cb.at(passive, i, j);
        }
    }
    for (long done = 0; done < 10000;) {  // lozenge
        const lozenge::TriDomain d = lozenge::hexagon(1 + static_cast<int>(gen() % 4), 1 + static_cast<int>(gen() % 4),
                                                      1 + static_cast<int>(gen() % 4));
        const lozenge::LozengePlan plan(d, lozenge::LozengeWeights::volume(d, 0.5 + static_cast<double>(gen() % 3)));
        lozenge::LozengeTiling t = gen() % 2 ? lozenge::loz_extremal(d)->min : lozenge::loz_extremal(d)->max;
        const auto f = plan.family(gen());
        for (std::uint64_t k = 0; k < 100; ++k, ++done, ++sweeps) {
            plan.sweep(t, f, k, lozenge::loz_sweep_class(f, k), sweep::Backend::sequential());
            violations += !lozenge::validate_tiling(t).empty();
            recompute_mismatch += !(lozenge::tiling_from_lozenges(d, lozenge::lozenges_from_tiling(t)) == t);
        }
    }
    for (long done = 0; done < 10000;) {  // six-vertex
        const int n = 1 + static_cast<int>(gen() % 8);
        sixvertex::FaceHeights h = sixvertex::sv_extremal(sixvertex::dwbc(n)).max;
        const sixvertex::SVWeights w{0.5 + (gen() % 4) * 0.5, 1.0, 1.5};
        const auto f = sixvertex::sv_family(gen(), n);
        for (std::uint64_t k = 0; k < 100; ++k, ++done, ++sweeps) {
            sixvertex::sv_sweep(h, f, k, sixvertex::sv_sweep_class(f, k), w, sweep::Backend::sequential());
            const auto c = sixvertex::config_from_heights(h);
            violations += !sixvertex::validate_config(c).empty() || !(c.boundary() == sixvertex::dwbc(n));
            recompute_mismatch += !(sixvertex::heights_from_config(c).h == h.h);
        }
    }
    return {violations == 0 && recompute_mismatch == 0,
            std::to_string(sweeps) + " sweeps, " + std::to_string(violations) + " invariant violations, " +
                std::to_string(recompute_mismatch) + " recomputation mismatches"};
}

Outcome lozenge_exactness()
{
    const lozenge::TriDomain d = lozenge::hexagon(2, 2, 2);
    std::vector<State> states;
    for (const auto& m : enumerate_lozenge(d)) states.emplace_back(lozenge::tiling_from_lozenges(d, m));
    const auto chi = chi_square_test(tally(states, draw(make_lozenge_problem(d), 707, 20000)), uniform_table(states.size()));
    return {states.size() == 20 && chi.passes(kDefaultSignificance),
            std::to_string(states.size()) + " tilings, chi-square p=" + fmt("%.3g", chi.p_value)};
}

Outcome arctic_circle()
{
    const int order = 48;
    const auto start = std::chrono::steady_clock::now();
    const auto samples = draw(make_domino_problem(domino::aztec_diamond(order)), 808, 32);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    DensityAccumulator acc;
    for (const auto& s : samples) acc.add(horizontal_domino_indicator(std::get<domino::Tiling>(s)));
    const auto a = arctic_corner_density(acc.result(), order, 1.1);
    return {a.worst() >= 0.95 && secs < 600,
            "corner densities N=" + fmt("%.4f", a.north) + " S=" + fmt("%.4f", a.south) + " E=" + fmt("%.4f", a.east) +
                " W=" + fmt("%.4f", a.west) + " over " + std::to_string(a.faces_checked) + " faces, sampling " + fmt("%.0f s", secs)};
}

template <class State, class Run>
int trace_failures(Run&& run, int seeds)
{
    int failures = 0;
    for (int s = 0; s < seeds; ++s) {
        std::vector<std::vector<cftp::Segment>> t_seq, t_thr;
        cftp::CftpHooks<State> h_seq, h_thr;
        h_seq.trace = &t_seq;
        h_thr.trace = &t_thr;
        const auto a = run(static_cast<std::uint64_t>(s), sweep::Backend::sequential(), &h_seq);
        const auto b = run(static_cast<std::uint64_t>(s), sweep::Backend::threads(4), &h_thr);
        const auto c = run(static_cast<std::uint64_t>(s), sweep::Backend::sequential(), nullptr);
        failures += !(a == b) || !(a == c) || t_seq != t_thr;
        for (std::size_t r = 1; r < t_seq.size(); ++r)  // round r reuses round r-1 as its most recent suffix
            failures += t_seq[r].size() != t_seq[r - 1].size() + 1 ||
                        !std::equal(t_seq[r - 1].begin(), t_seq[r - 1].end(), t_seq[r].begin() + 1);
    }
    return failures;
}

Outcome seed_replay()
{
    const domino::Domain ad = domino::aztec_diamond(8);
    const sweep::SweepPlan dplan(ad, domino::Uniform{});
    int failures = trace_failures<domino::Checkerboard>(
        [&](std::uint64_t s, const sweep::Backend& b, const cftp::CftpHooks<domino::Checkerboard>* h) {
            return cftp::cftp_sample(dplan, s, b, {}, h);
        },
        10);
    const lozenge::TriDomain hex = lozenge::hexagon(3, 3, 3);
    const lozenge::LozengePlan lplan(hex, lozenge::LozengeWeights::volume(hex, 1.5));
    failures += trace_failures<lozenge::LozengeTiling>(
        [&](std::uint64_t s, const sweep::Backend& b, const cftp::CftpHooks<lozenge::LozengeTiling>* h) {
            return lozenge::loz_cftp(lplan, s, b, {}, h);
        },
        10);
    failures += trace_failures<sixvertex::FaceHeights>(
        [&](std::uint64_t s, const sweep::Backend& b, const cftp::CftpHooks<sixvertex::FaceHeights>* h) {
            return sixvertex::sv_cftp(sixvertex::dwbc(8), {1, 1, 2}, s, b, {}, h);
        },
        10);
    int replays = 0;
    for (const Problem& p : {make_domino_problem(domino::aztec_diamond(6), "q=1.3"), make_lozenge_problem(hex),
                             make_sixvertex_problem(sixvertex::dwbc(7), "c=1.5")}) {
        SamplingJob job;
        job.master_seed = 909;
        job.count = 6;
        const SampleArchive a = make_archive(p, job, sample_many(p, job));
        failures += !replay_archive(a) + !replay_archive(a, 3);
        replays += 2;
    }
    return {failures == 0, "30 traced runs across models and backends, " + std::to_string(replays) + " archive replays, " +
                               std::to_string(failures) + " failures"};
}

Outcome prng_gates()
{
    const auto f = rng::seed_family(1010, 64, 64);
    std::mt19937_64 pick(10);
    std::uniform_int_distribution<int> coord(0, 63);
    double worst_ratio = 0;
    for (int s = 0; s < 20; ++s) {
        const int x = coord(pick), y = coord(pick);
        std::vector<double> xs;
        for (int k = 0; k < 10000; ++k) xs.push_back(f.uniform(x, y, k));
        worst_ratio = std::max(worst_ratio, ks_statistic_uniform(xs) / ks_critical_value(xs.size(), 0.01));
    }
    double worst_r = 0;
    for (int pair = 0; pair < 100; ++pair) {
        int x1 = coord(pick), y1 = coord(pick), x2 = coord(pick), y2 = coord(pick);
        if (x1 == x2 && y1 == y2) x2 = (x2 + 1) % 64;
        std::vector<double> a, b;
        for (int k = 0; k < 10000; ++k) {
            a.push_back(f.uniform(x1, y1, k));
            b.push_back(f.uniform(x2, y2, k));
        }
        worst_r = std::max(worst_r, std::abs(pearson(a, b)));
    }
    return {worst_ratio < 1.0 && worst_r < 0.04,
            "20 streams: max KS/critical(1%)=" + fmt("%.3f", worst_ratio) + "; 100 pairs: max |r|=" + fmt("%.4f", worst_r)};
}

}  // namespace

int main(int argc, char** argv)
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double time_limit;  // seconds; 0 = none
    };
    const std::vector<Criterion> criteria{
        {1, "domino CFTP uniform on 2x3 and Aztec order 2", domino_uniformity, 60},
        {2, "domino CFTP volume weight q=2 on 2x2", domino_weighted, 0},
        {3, "six-vertex DWBC n=3 exactness", sixvertex_exactness, 0},
        {4, "monotone sandwich at every CFTP checkpoint", coupling_sandwich, 0},
        {5, "sequential and threaded backends bit-identical", backend_determinism, 0},
        {6, "kernel consistency under random sweeps", kernel_fuzz, 0},
        {7, "lozenge hexagon 2,2,2 exactness", lozenge_exactness, 0},
        {8, "Aztec order 48 frozen corners", arctic_circle, 600},
        {9, "CFTP randomness reuse and replay", seed_replay, 0},
        {10, "random stream statistical gates", prng_gates, 0},
    };
    std::set<int> selected;
    for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
    int failed = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() && !selected.count(c.id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && secs >= c.time_limit) {
            o.pass = false;
            o.detail += " [over the " + fmt("%.0f s", c.time_limit) + " limit]";
        }
        failed += !o.pass;
        std::printf("criterion %2d %s  %s: %s (%.1f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
