// Copyright 2026 tilesampler developers.
// SPDX-License-Identifier: Apache-2.0
// Command-line front end: sampling, enumeration, exact tables, statistics, rendering.
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
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

struct Options {
    std::string model;
    std::string domain_file;
    std::optional<int> aztec, square, dwbc;
    std::string hexagon;
    std::string weights;
    std::string seed = "0";
    std::size_t samples = 1;
    std::optional<std::uint64_t> steps;
    std::string backend = "seq";
    int threads = 1;
    int jobs = 1;
    int max_doublings = 40;
    std::string out;
    std::string format = "txt";
    std::string archive;
    std::string observable;
    int bins = 0;
    std::size_t index = 0;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Problem build_problem(const Options& o)
{
    const int shapes = !o.domain_file.empty() + o.aztec.has_value() + o.square.has_value() + !o.hexagon.empty() + o.dwbc.has_value();
    if (shapes != 1) throw InvalidInput("give exactly one of --domain, --aztec, --square, --hexagon, --dwbc");
    std::string model = o.model;
    auto need = [&](const char* m) {
        if (model.empty()) model = m;
        if (model != m) throw InvalidInput("shape flag requires --model " + std::string(m));
    };
    if (o.aztec) {
        need("domino");
        return make_domino_problem(domino::aztec_diamond(*o.aztec), o.weights);
    }
    if (o.square) {
        need("domino");
        return make_domino_problem(domino::square(*o.square), o.weights);
    }
    if (!o.hexagon.empty()) {
        need("lozenge");
        int a = 0, b = 0, c = 0;
        char s1 = 0, s2 = 0;
        std::istringstream is(o.hexagon);
        if (!(is >> a >> s1 >> b >> s2 >> c) || s1 != ',' || s2 != ',' || !is.eof())
            throw InvalidInput("--hexagon expects A,B,C");
        return make_lozenge_problem(lozenge::hexagon(a, b, c), o.weights);
    }
    if (o.dwbc) {
        need("sixvertex");
        return make_sixvertex_problem(sixvertex::dwbc(*o.dwbc), o.weights);
    }
    if (model.empty()) throw InvalidInput("--domain requires --model");
    return problem_from_text(model, read_file(o.domain_file), o.weights);
}

sweep::Backend backend_of(const Options& o)
{
    return o.backend == "threads" ? sweep::Backend::threads(o.threads) : sweep::Backend::sequential();
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InvalidInput("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string render_state(const State& s)
{
    return std::visit([](const auto& v) { return render_svg(v); }, s);
}

std::vector<State> all_states(const Problem& p)
{
    std::vector<State> out;
    if (const auto* d = std::get_if<DominoProblem>(&p.spec)) {
        for (const auto& m : enumerate_domino(d->domain)) out.emplace_back(domino::tiling_from_dominoes(d->domain, m));
    } else if (const auto* l = std::get_if<LozengeProblem>(&p.spec)) {
        for (const auto& m : enumerate_lozenge(l->domain)) out.emplace_back(lozenge::tiling_from_lozenges(l->domain, m));
    } else {
        for (auto& c : enumerate_sixvertex(std::get<SixVertexProblem>(p.spec).boundary)) out.emplace_back(std::move(c));
    }
    return out;
}

double weight_of(const Problem& p, const State& s)
{
    if (const auto* d = std::get_if<DominoProblem>(&p.spec)) return gibbs_weight(std::get<domino::Tiling>(s), d->weights);
    if (const auto* l = std::get_if<LozengeProblem>(&p.spec)) return gibbs_weight(std::get<lozenge::LozengeTiling>(s), l->weights);
    return gibbs_weight(std::get<sixvertex::SixVertexConfig>(s), std::get<SixVertexProblem>(p.spec).weights);
}

void write_grid(std::ostream& os, const Grid2<double>& g, const std::string& format, std::size_t samples)
{
    if (format == "svg") {
        const double cell = 12.0;
        os << detail::svg_open(g.width() * cell, g.height() * cell);
        for (int y = 0; y < g.height(); ++y)
            for (int x = 0; x < g.width(); ++x) {
                const int shade = static_cast<int>(std::lround(255 * (1.0 - g(x, y))));
                os << "<rect x=\"" << detail::num(x * cell) << "\" y=\"" << detail::num((g.height() - 1 - y) * cell)
                   << "\" width=\"" << detail::num(cell) << "\" height=\"" << detail::num(cell) << "\" fill=\"rgb(" << shade
                   << ',' << shade << ',' << shade << ")\"/>\n";
            }
        os << "</svg>\n";
        return;
    }
    const char sep = format == "csv" ? ',' : ' ';
    if (format == "txt") os << "# samples=" << samples << " rows top to bottom\n";
    os << std::setprecision(6);
    for (int y = g.height() - 1; y >= 0; --y) {
        for (int x = 0; x < g.width(); ++x) os << (x ? std::string(1, sep) : "") << g(x, y);
        os << '\n';
    }
}

SampleArchive load_archive(const Options& o)
{
    if (o.archive.empty()) throw InvalidInput("an archive file is required");
    std::istringstream is(read_file(o.archive));
    return read_archive(is);
}

int run_sampling(const Options& o, Method method)
{
    const Problem p = build_problem(o);
    if (method == Method::Mcmc && !o.steps) throw InvalidInput("sample requires --steps");
    SamplingJob job;
    job.method = method;
    job.master_seed = rng::parse_seed(o.seed);
    job.steps = o.steps.value_or(0);
    job.count = o.samples;
    job.sweep_threads = o.backend == "threads" ? o.threads : 1;
    job.job_workers = o.jobs;
    if (job.count == 0) throw InvalidInput("--samples must be positive");
    std::vector<State> states;
    if (method == Method::Cftp && o.max_doublings != 40) {
        cftp::CftpOptions opt;
        opt.max_doublings = o.max_doublings;
        for (std::size_t k = 0; k < job.count; ++k) states.push_back(sample_cftp(p, sample_seed(job.master_seed, k), backend_of(o), opt));
    } else {
        states = sample_many(p, job);
    }
    Output out(o.out);
    if (o.format == "svg") {
        out.stream() << render_state(states.front());
    } else if (o.format == "csv") {
        out.stream() << "index,seed,state\n";
        for (std::size_t k = 0; k < states.size(); ++k)
            out.stream() << k << ',' << sample_seed(job.master_seed, k) << ',' << encode_state(states[k]) << '\n';
    } else {
        write_archive(out.stream(), make_archive(p, job, states));
    }
    return 0;
}

int run_enumerate(const Options& o)
{
    const Problem p = build_problem(o);
    const auto states = all_states(p);
    Output out(o.out);
    if (o.format == "csv") out.stream() << "index,state\n";
    else out.stream() << "# count=" << states.size() << '\n';
    for (std::size_t k = 0; k < states.size(); ++k)
        out.stream() << (o.format == "csv" ? std::to_string(k) + "," : "") << encode_state(states[k]) << '\n';
    std::cerr << states.size() << " states\n";
    return 0;
}

int run_dist(const Options& o)
{
    const Problem p = build_problem(o);
    const auto states = all_states(p);
    std::vector<double> w;
    for (const auto& s : states) w.push_back(weight_of(p, s));
    const auto e = exact_distribution(w);
    Output out(o.out);
    const char sep = o.format == "csv" ? ',' : ' ';
    if (o.format == "csv") out.stream() << "state,weight,probability\n";
    else out.stream() << "# count=" << states.size() << " Z=" << std::setprecision(12) << e.partition_function << '\n';
    out.stream() << std::setprecision(12);
    for (std::size_t k = 0; k < states.size(); ++k)
        out.stream() << encode_state(states[k]) << sep << w[k] << sep << e.probabilities[k] << '\n';
    return 0;
}

int run_density(const Options& o)
{
    const SampleArchive a = load_archive(o);
    const auto states = archive_states(a);
    const std::string name = o.observable.empty() ? (a.header.at("model") == "domino" ? "domino-orientation" : "h-edge") : o.observable;
    const Observable obs = parse_observable(name);
    DensityAccumulator acc;
    for (const auto& s : states) {
        if (obs == Observable::DominoOrientation) {
            const auto* t = std::get_if<domino::Tiling>(&s);
            if (!t) throw InvalidInput("domino-orientation needs a domino archive");
            acc.add(horizontal_domino_indicator(*t));
            continue;
        }
        const auto* c = std::get_if<sixvertex::SixVertexConfig>(&s);
        if (!c) throw InvalidInput(name + " needs a six-vertex archive");
        acc.add(obs == Observable::HorizontalEdge ? horizontal_edge_indicator(*c)
                : obs == Observable::VerticalEdge ? vertical_edge_indicator(*c)
                                                  : c_vertex_indicator(*c));
    }
    const DensityMap m = acc.result();
    Output out(o.out);
    write_grid(out.stream(), m.mean, o.format, m.samples);
    return 0;
}

int run_hist(const Options& o)
{
    const SampleArchive a = load_archive(o);
    const auto states = archive_states(a);
    const std::string name = o.observable.empty() ? (a.header.at("model") == "domino" ? "y-intercept" : "c-count") : o.observable;
    std::vector<double> values;
    for (const auto& s : states) {
        if (name == "y-intercept") {
            const auto* t = std::get_if<domino::Tiling>(&s);
            if (!t) throw InvalidInput("y-intercept needs an Aztec-diamond archive");
            values.push_back(aztec_top_path_intercept(*t));
        } else if (name == "c-count") {
            const auto* c = std::get_if<sixvertex::SixVertexConfig>(&s);
            if (!c) throw InvalidInput("c-count needs a six-vertex archive");
            values.push_back(c_vertex_count(*c));
        } else {
            throw InvalidInput("unknown scalar observable '" + name + "'");
        }
    }
    const Histogram h = o.bins > 0 ? histogram(values, o.bins) : integer_histogram(values);
    Output out(o.out);
    const char sep = o.format == "csv" ? ',' : ' ';
    if (o.format == "csv") out.stream() << "lo,hi,density\n";
    else out.stream() << "# observable=" << name << " samples=" << h.samples << " bins=" << h.density.size()
                      << " bin_width=" << h.bin_width << '\n';
    for (std::size_t k = 0; k < h.density.size(); ++k)
        out.stream() << h.lo + k * h.bin_width << sep << h.lo + (k + 1) * h.bin_width << sep << h.density[k] << '\n';
    return 0;
}

int run_render(const Options& o)
{
    const SampleArchive a = load_archive(o);
    if (o.index >= a.records.size()) throw InvalidInput("--index out of range");
    const Problem p = archive_problem(a);
    Output out(o.out);
    out.stream() << render_state(decode_state(p, a.records[o.index]));
    return 0;
}

// Quick oracle checks; full suites live in the test binaries.
int run_selftest()
{
    int failures = 0;
    auto check = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << what << '\n';
        failures += !ok;
    };
    check("domino 2x3 has 3 tilings", enumerate_domino(domino::rectangle(2, 3)).size() == 3);
    check("six-vertex DWBC n=3 has 7 states", enumerate_sixvertex(sixvertex::dwbc(3)).size() == 7);
    check("hexagon 2,2,2 has 20 tilings", enumerate_lozenge(lozenge::hexagon(2, 2, 2)).size() == 20);

    const Problem aztec = make_domino_problem(domino::aztec_diamond(2));
    const auto states = all_states(aztec);
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < states.size(); ++k) index[encode_state(states[k])] = k;
    SamplingJob job;
    job.master_seed = 2026;
    job.count = 4000;
    std::vector<double> counts(states.size(), 0.0);
    for (const auto& s : sample_many(aztec, job)) counts[index.at(encode_state(s))] += 1;
    check("Aztec order 2 CFTP is uniform (chi-square, 0.1%)",
          chi_square_test(counts, std::vector<double>(states.size(), 1.0 / states.size())).passes(kDefaultSignificance));

    job.count = 3;
    const SampleArchive arch = make_archive(aztec, job, sample_many(aztec, job));
    check("archive replays bit-exactly", replay_archive(arch));
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"tilesampler: exact and MCMC sampling of domino, lozenge and six-vertex configurations"};
    app.require_subcommand(1);
    Options o;
    if (const char* env = std::getenv("TILESAMPLER_THREADS")) {
        try {
            o.threads = std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "error: TILESAMPLER_THREADS must be an integer\n";
            return 2;
        }
    }

    auto add_problem = [&](CLI::App* c) {
        c->add_option("--model", o.model, "domino, lozenge or sixvertex")->check(CLI::IsMember({"domino", "lozenge", "sixvertex"}));
        c->add_option("--domain", o.domain_file, "domain file (domino/lozenge grid or six-vertex boundary)");
        c->add_option("--aztec", o.aztec, "Aztec diamond of order N");
        c->add_option("--square", o.square, "N x N square");
        c->add_option("--hexagon", o.hexagon, "hexagon with sides A,B,C");
        c->add_option("--dwbc", o.dwbc, "N x N six-vertex domain-wall boundary");
        c->add_option("--weights", o.weights, "KEY=VAL,... (q, horizontal, vertical | q | a, b, c)");
    };
    auto add_output = [&](CLI::App* c) {
        c->add_option("--out", o.out, "output file (default stdout)");
        c->add_option("--format", o.format, "txt, csv or svg")->check(CLI::IsMember({"txt", "csv", "svg"}));
    };
    auto add_sampling = [&](CLI::App* c) {
        add_problem(c);
        add_output(c);
        c->add_option("--seed", o.seed, "master seed, decimal or 0x-hex");
        c->add_option("--samples", o.samples, "number of samples");
        c->add_option("--backend", o.backend, "seq or threads")->check(CLI::IsMember({"seq", "threads"}));
        c->add_option("--threads", o.threads, "sweep threads for --backend threads (default $TILESAMPLER_THREADS)")
            ->check(CLI::PositiveNumber);
        c->add_option("--jobs", o.jobs, "chains sampled concurrently")->check(CLI::PositiveNumber);
    };
    auto add_archive = [&](CLI::App* c) {
        c->add_option("archive", o.archive, "sample archive")->required();
        add_output(c);
    };

    auto* sample = app.add_subcommand("sample", "MCMC samples: --steps sweeps from the maximal state");
    add_sampling(sample);
    sample->add_option("--steps", o.steps, "sweeps per chain (required)");
    auto* cftp_cmd = app.add_subcommand("cftp", "exact samples by coupling from the past");
    add_sampling(cftp_cmd);
    cftp_cmd->add_option("--max-doublings", o.max_doublings, "give up after this many doublings")->check(CLI::PositiveNumber);
    auto* enumerate = app.add_subcommand("enumerate", "list every state of a small instance");
    add_problem(enumerate);
    add_output(enumerate);
    auto* dist = app.add_subcommand("dist", "exact Gibbs probabilities of every state");
    add_problem(dist);
    add_output(dist);
    auto* density = app.add_subcommand("density", "per-site mean of an indicator over an archive");
    add_archive(density);
    density->add_option("--observable", o.observable, "h-edge, v-edge, c-vertex or domino-orientation");
    auto* hist = app.add_subcommand("hist", "histogram of a scalar observable over an archive");
    add_archive(hist);
    hist->add_option("--observable", o.observable, "y-intercept or c-count");
    hist->add_option("--bins", o.bins, "number of bins (default: one per integer)");
    auto* render = app.add_subcommand("render", "SVG of one archived state");
    add_archive(render);
    render->add_option("--index", o.index, "record index");
    auto* selftest = app.add_subcommand("selftest", "quick oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed()) return run_sampling(o, Method::Mcmc);
        if (cftp_cmd->parsed()) return run_sampling(o, Method::Cftp);
        if (enumerate->parsed()) return run_enumerate(o);
        if (dist->parsed()) return run_dist(o);
        if (density->parsed()) return run_density(o);
        if (hist->parsed()) return run_hist(o);
        if (render->parsed()) return run_render(o);
        if (selftest->parsed()) return run_selftest();
    } catch (const Untileable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NonMonotoneWeights& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const ConvergenceCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
