// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "tilesampler/cftp/domino_cftp.hpp"
#include "tilesampler/domino/domain.hpp"
#include "tilesampler/errors.hpp"
#include "tilesampler/lozenge/dynamics.hpp"
#include "tilesampler/rng/stream_family.hpp"
#include "tilesampler/sixvertex/dynamics.hpp"
#include "tilesampler/sweep/engine.hpp"

namespace tilesampler::harness {

struct DominoProblem {
    domino::Domain domain;
    domino::WeightSpec weights;
};
struct LozengeProblem {
    lozenge::TriDomain domain;
    lozenge::LozengeWeights weights;
};
struct SixVertexProblem {
    sixvertex::Boundary boundary;
    sixvertex::SVWeights weights;
};

/// A model, its domain or boundary, and its weights.
struct Problem {
    std::variant<DominoProblem, LozengeProblem, SixVertexProblem> spec;
    std::string weights_text;  // as given, e.g. "q=2" or "a=1,b=1,c=2"; empty for uniform
};

using State = std::variant<domino::Tiling, lozenge::LozengeTiling, sixvertex::SixVertexConfig>;

inline std::string model_name(const Problem& p)
{
    constexpr const char* names[] = {"domino", "lozenge", "sixvertex"};
    return names[p.spec.index()];
}

namespace detail {
inline std::map<std::string, double> parse_key_values(const std::string& text)
{
    std::map<std::string, double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("weights entry '" + item + "' is not KEY=VAL");
        const std::string key = item.substr(0, eq);
        try {
            std::size_t used = 0;
            const double v = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument(item);
            out[key] = v;
        } catch (const std::logic_error&) {
            throw InvalidInput("weights value for '" + key + "' is not a number");
        }
    }
    return out;
}

inline void reject_unknown(const std::map<std::string, double>& kv, std::initializer_list<const char*> allowed)
{
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const char* a : allowed) ok |= k == a;
        if (!ok) throw InvalidInput("unknown weight key '" + k + "'");
    }
}

inline std::string join_lines(const std::string& s)
{
    std::string out = s;
    while (!out.empty() && out.back() == '\n') out.pop_back();
    for (char& c : out)
        if (c == '\n') c = '/';
    return out;
}

inline std::string split_lines(const std::string& s)
{
    std::string out = s;
    for (char& c : out)
        if (c == '/') c = '\n';
    return out + '\n';
}

inline constexpr char kSixBit[] = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ-_";

inline int six_bit_value(char c)
{
    for (int k = 0; k < 64; ++k)
        if (kSixBit[k] == c) return k;
    throw InvalidInput(std::string("bad state character '") + c + "'");
}
}  // namespace detail

/// Domino: q (constant volume weight), horizontal / vertical (constant edge weights). Lozenge: q. Six-vertex: a, b, c.
inline Problem make_domino_problem(domino::Domain d, const std::string& weights_text = "")
{
    const auto kv = detail::parse_key_values(weights_text);
    detail::reject_unknown(kv, {"q", "horizontal", "vertical"});
    domino::WeightSpec w = domino::Uniform{};
    if (kv.count("q") && (kv.count("horizontal") || kv.count("vertical")))
        throw InvalidInput("domino weights: use either q or edge weights");
    if (kv.count("q")) {
        w = domino::VolumeWeights::constant(d.n(), kv.at("q"));
    } else if (kv.count("horizontal") || kv.count("vertical")) {
        domino::EdgeWeights e = domino::EdgeWeights::constant(d.n(), 1.0);
        for (double& v : e.horizontal.data()) v = kv.count("horizontal") ? kv.at("horizontal") : 1.0;
        for (double& v : e.vertical.data()) v = kv.count("vertical") ? kv.at("vertical") : 1.0;
        w = e;
    }
    domino::validate_weights(w, d);
    return {DominoProblem{std::move(d), std::move(w)}, weights_text};
}

inline Problem make_lozenge_problem(lozenge::TriDomain d, const std::string& weights_text = "")
{
    const auto kv = detail::parse_key_values(weights_text);
    detail::reject_unknown(kv, {"q"});
    lozenge::LozengeWeights w = kv.count("q") ? lozenge::LozengeWeights::volume(d, kv.at("q")) : lozenge::LozengeWeights::uniform();
    lozenge::validate_weights(w, d);
    return {LozengeProblem{std::move(d), std::move(w)}, weights_text};
}

inline Problem make_sixvertex_problem(sixvertex::Boundary b, const std::string& weights_text = "")
{
    const auto kv = detail::parse_key_values(weights_text);
    detail::reject_unknown(kv, {"a", "b", "c"});
    sixvertex::SVWeights w;
    if (kv.count("a")) w.a = kv.at("a");
    if (kv.count("b")) w.b = kv.at("b");
    if (kv.count("c")) w.c = kv.at("c");
    sixvertex::validate_weights(w);
    return {SixVertexProblem{std::move(b), w}, weights_text};
}

/// One-line text form of the domain or boundary ('/' separates rows).
inline std::string domain_text(const Problem& p)
{
    std::ostringstream os;
    if (const auto* d = std::get_if<DominoProblem>(&p.spec)) {
        domino::write_domain(os, d->domain);
    } else if (const auto* l = std::get_if<LozengeProblem>(&p.spec)) {
        lozenge::write_tri_domain(os, l->domain);
    } else {
        const auto& b = std::get<SixVertexProblem>(p.spec).boundary;
        os << "boundary " << b.n << '\n';
        for (const auto* side : {&b.left, &b.right, &b.bottom, &b.top}) {
            for (auto v : *side) os << static_cast<int>(v);
            os << '\n';
        }
    }
    return detail::join_lines(os.str());
}

inline sixvertex::Boundary parse_boundary(const std::string& text)
{
    std::istringstream is(detail::split_lines(text));
    std::string tag;
    int n = 0;
    if (!(is >> tag >> n) || tag != "boundary" || n < 1) throw InvalidInput("bad boundary header");
    sixvertex::Boundary b{n, {}, {}, {}, {}};
    for (auto* side : {&b.left, &b.right, &b.bottom, &b.top}) {
        std::string row;
        if (!(is >> row) || static_cast<int>(row.size()) != n || row.find_first_not_of("01") != std::string::npos)
            throw InvalidInput("bad boundary row");
        for (char c : row) side->push_back(c == '1');
    }
    return b;
}

inline Problem problem_from_text(const std::string& model, const std::string& domain, const std::string& weights)
{
    std::istringstream is(detail::split_lines(domain));
    if (model == "domino") return make_domino_problem(domino::read_domain(is), weights);
    if (model == "lozenge") return make_lozenge_problem(lozenge::read_tri_domain(is), weights);
    if (model == "sixvertex") return make_sixvertex_problem(parse_boundary(domain), weights);
    throw InvalidInput("unknown model '" + model + "'");
}

/// FNV-1a of the domain text, in hex.
inline std::string domain_hash(const Problem& p)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : domain_text(p)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// One-line state encoding: vertex states row by row from the bottom (domino: hex, lozenge: 6-bit alphabet), or six-vertex edge bits.
inline std::string encode_state(const State& s)
{
    std::string out;
    if (const auto* t = std::get_if<domino::Tiling>(&s)) {
        const auto& g = t->states();
        for (int j = 0; j < g.height(); ++j) {
            if (j) out += '/';
            for (int i = 0; i < g.width(); ++i) out += "0123456789abcdef"[g(i, j) & 15];
        }
    } else if (const auto* l = std::get_if<lozenge::LozengeTiling>(&s)) {
        const auto& d = l->domain();
        for (int y = 0; y < d.vertex_height(); ++y) {
            if (y) out += '/';
            for (int x = 0; x < d.vertex_width(); ++x) out += detail::kSixBit[l->state(x, y) & 63];
        }
    } else {
        const auto& c = std::get<sixvertex::SixVertexConfig>(s);
        for (const auto* g : {&c.horizontal_edges(), &c.vertical_edges()}) {
            if (!out.empty()) out += ';';
            for (int y = 0; y < g->height(); ++y) {
                if (y) out += '/';
                for (int x = 0; x < g->width(); ++x) out += (*g)(x, y) ? '1' : '0';
            }
        }
    }
    return out;
}

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out(1);
    for (char c : s) {
        if (c == sep) {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

template <class Fn>
void decode_rows(const std::string& text, int width, int height, Fn&& put)
{
    const auto rows = split(text, '/');
    if (static_cast<int>(rows.size()) != height) throw InvalidInput("state has the wrong number of rows");
    for (int y = 0; y < height; ++y) {
        const auto& r = rows[static_cast<std::size_t>(y)];
        if (static_cast<int>(r.size()) != width) throw InvalidInput("state row has the wrong length");
        for (int x = 0; x < width; ++x) put(x, y, r[static_cast<std::size_t>(x)]);
    }
}
}  // namespace detail

/// Inverse of encode_state; validates the decoded state.
inline State decode_state(const Problem& p, const std::string& text)
{
    if (const auto* d = std::get_if<DominoProblem>(&p.spec)) {
        const int v = d->domain.vertex_side();
        Grid2<std::uint8_t> g(v, v, 0);
        detail::decode_rows(text, v, v, [&](int x, int y, char c) {
            const auto pos = std::string("0123456789abcdef").find(c);
            if (pos == std::string::npos) throw InvalidInput("bad domino state character");
            g(x, y) = static_cast<std::uint8_t>(pos);
        });
        domino::Tiling t(d->domain, std::move(g));
        if (const auto err = domino::validate_tiling(t); !err.empty()) throw InvalidInput(err);
        return t;
    }
    if (const auto* l = std::get_if<LozengeProblem>(&p.spec)) {
        lozenge::LozengeTiling t(l->domain);
        detail::decode_rows(text, l->domain.vertex_width(), l->domain.vertex_height(),
                            [&](int x, int y, char c) { t.at(x, y) = static_cast<std::uint8_t>(detail::six_bit_value(c)); });
        if (const auto err = lozenge::validate_tiling(t); !err.empty()) throw InvalidInput(err);
        return t;
    }
    const auto& sv = std::get<SixVertexProblem>(p.spec);
    const int n = sv.boundary.n;
    const auto parts = detail::split(text, ';');
    if (parts.size() != 2) throw InvalidInput("six-vertex state needs horizontal;vertical parts");
    sixvertex::SixVertexConfig c(n);
    auto bit = [](char ch) -> std::uint8_t {
        if (ch != '0' && ch != '1') throw InvalidInput("bad edge character");
        return ch == '1';
    };
    detail::decode_rows(parts[0], n + 1, n, [&](int x, int y, char ch) { c.horizontal(x, y) = bit(ch); });
    detail::decode_rows(parts[1], n, n + 1, [&](int x, int y, char ch) { c.vertical(x, y) = bit(ch); });
    if (const auto err = sixvertex::validate_config(c); !err.empty()) throw InvalidInput(err);
    if (!(c.boundary() == sv.boundary)) throw InvalidInput("configuration does not match the boundary");
    return c;
}

/// Exact sample by monotone coupling from the past.
inline State sample_cftp(const Problem& p, std::uint64_t seed, const sweep::Backend& b = sweep::Backend::sequential(),
                         const cftp::CftpOptions& options = {})
{
    if (const auto* d = std::get_if<DominoProblem>(&p.spec))
        return cftp::cftp_sample(sweep::SweepPlan(d->domain, d->weights), seed, b, options);
    if (const auto* l = std::get_if<LozengeProblem>(&p.spec))
        return lozenge::loz_cftp(lozenge::LozengePlan(l->domain, l->weights), seed, b, options);
    const auto& sv = std::get<SixVertexProblem>(p.spec);
    return sixvertex::sv_cftp(sv.boundary, sv.weights, seed, b, options);
}

/// `steps` sweeps of the chain started from the maximal state.
inline State sample_mcmc(const Problem& p, std::uint64_t seed, std::uint64_t steps,
                         const sweep::Backend& b = sweep::Backend::sequential())
{
    if (const auto* d = std::get_if<DominoProblem>(&p.spec)) {
        const auto ext = domino::extremal_tilings(d->domain);
        if (!ext) throw Untileable("domain admits no domino tiling");
        return sweep::random_walk(ext->max, seed, steps, sweep::SweepPlan(d->domain, d->weights), b);
    }
    if (const auto* l = std::get_if<LozengeProblem>(&p.spec)) {
        const auto ext = lozenge::loz_extremal(l->domain);
        if (!ext) throw Untileable("domain admits no lozenge tiling");
        return lozenge::loz_random_walk(ext->max, seed, steps, lozenge::LozengePlan(l->domain, l->weights), b);
    }
    const auto& sv = std::get<SixVertexProblem>(p.spec);
    sixvertex::validate_weights(sv.weights);
    sixvertex::FaceHeights h = sixvertex::sv_extremal(sv.boundary).max;
    sixvertex::sv_walk(h, seed, steps, sv.weights, b);
    return sixvertex::config_from_heights(h);
}

enum class Method { Cftp, Mcmc };

/// Everything needed to regenerate a batch of samples.
struct SamplingJob {
    Method method = Method::Cftp;
    std::uint64_t master_seed = 0;
    std::uint64_t steps = 0;  // Mcmc only
    std::size_t count = 1;
    int sweep_threads = 1;  // threads inside one chain; 1 = sequential backend
    int job_workers = 1;    // chains sampled concurrently
};

/// Seed of sample k in a batch.
inline std::uint64_t sample_seed(std::uint64_t master, std::size_t k)
{
    return rng::derive_seed(master, static_cast<std::uint64_t>(k), rng::Substream::Chain);
}

/**
 * Samples k = 0..count-1 with seeds derived from the master seed. Chains fan
 * out over `job_workers` threads; results are stored by index, so the output
 * does not depend on the number of workers.
 */
inline std::vector<State> sample_many(const Problem& p, const SamplingJob& job)
{
    std::vector<State> out(job.count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        // one pool per chain, so concurrent chains never share sweep workers
        const sweep::Backend backend = job.sweep_threads > 1 ? sweep::Backend::threads(job.sweep_threads) : sweep::Backend::sequential();
        for (std::size_t k = next++; k < job.count; k = next++) {
            try {
                const std::uint64_t seed = sample_seed(job.master_seed, k);
                out[k] = job.method == Method::Cftp ? sample_cftp(p, seed, backend) : sample_mcmc(p, seed, job.steps, backend);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = job.count;
            }
        }
    };
    const int workers = std::max(1, std::min<int>(job.job_workers, static_cast<int>(job.count)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

/// Line-delimited sample archive: "# key=value" header lines, then one encoded state per line.
struct SampleArchive {
    std::map<std::string, std::string> header;
    std::vector<std::string> records;
};

inline SampleArchive make_archive(const Problem& p, const SamplingJob& job, const std::vector<State>& states)
{
    SampleArchive a;
    a.header["format"] = "tilesampler-archive-1";
    a.header["model"] = model_name(p);
    a.header["domain"] = domain_text(p);
    a.header["domain_hash"] = domain_hash(p);
    a.header["weights"] = p.weights_text;
    a.header["method"] = job.method == Method::Cftp ? "cftp" : "mcmc";
    a.header["seed"] = std::to_string(job.master_seed);
    a.header["steps"] = std::to_string(job.steps);
    a.header["backend"] = job.sweep_threads > 1 ? "threads:" + std::to_string(job.sweep_threads) : "seq";
    a.header["count"] = std::to_string(states.size());
    for (const auto& s : states) a.records.push_back(encode_state(s));
    return a;
}

inline void write_archive(std::ostream& os, const SampleArchive& a)
{
    for (const auto& [k, v] : a.header) os << "# " << k << '=' << v << '\n';
    for (const auto& r : a.records) os << r << '\n';
}

inline SampleArchive read_archive(std::istream& is)
{
    SampleArchive a;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw InvalidInput("bad archive header line");
            a.header[line.substr(2, eq - 2)] = line.substr(eq + 1);
        } else {
            a.records.push_back(line);
        }
    }
    if (a.header.count("format") == 0 || a.header.at("format") != "tilesampler-archive-1")
        throw InvalidInput("not a tilesampler archive");
    for (const char* key : {"model", "domain", "domain_hash", "weights", "method", "seed", "steps", "backend", "count"})
        if (a.header.count(key) == 0) throw InvalidInput(std::string("archive header lacks '") + key + "'");
    try {
        if (a.records.size() != std::stoull(a.header.at("count"))) throw InvalidInput("archive record count mismatch");
        (void)std::stoull(a.header.at("seed"));
        (void)std::stoull(a.header.at("steps"));
    } catch (const std::logic_error&) {
        throw InvalidInput("archive header has a malformed number");
    }
    if (a.records.empty()) throw EmptyArchive("archive has no records");
    return a;
}

inline Problem archive_problem(const SampleArchive& a)
{
    Problem p = problem_from_text(a.header.at("model"), a.header.at("domain"), a.header.at("weights"));
    if (domain_hash(p) != a.header.at("domain_hash")) throw InvalidInput("archive domain hash mismatch");
    return p;
}

inline SamplingJob archive_job(const SampleArchive& a)
{
    SamplingJob job;
    job.method = a.header.at("method") == "mcmc" ? Method::Mcmc : Method::Cftp;
    job.master_seed = std::stoull(a.header.at("seed"));
    job.steps = std::stoull(a.header.at("steps"));
    job.count = a.records.size();
    const std::string& b = a.header.at("backend");
    job.sweep_threads = b.rfind("threads:", 0) == 0 ? std::stoi(b.substr(8)) : 1;
    return job;
}

inline std::vector<State> archive_states(const SampleArchive& a)
{
    const Problem p = archive_problem(a);
    std::vector<State> out;
    for (const auto& r : a.records) out.push_back(decode_state(p, r));
    return out;
}

/// Regenerates every record from the header; true iff all match bit-exactly.
inline bool replay_archive(const SampleArchive& a, int job_workers = 1)
{
    const Problem p = archive_problem(a);
    SamplingJob job = archive_job(a);
    job.job_workers = job_workers;
    const auto states = sample_many(p, job);
    for (std::size_t k = 0; k < states.size(); ++k)
        if (encode_state(states[k]) != a.records[k]) return false;
    return true;
}

}  // namespace tilesampler::harness
