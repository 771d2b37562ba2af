// elhs — Latin hypercube sampling and expansion toolkit.
//
// Subcommands: sample, expand, degree, discrepancy, optimal, curve.
// Exit codes: 0 success, 1 runtime error, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elhs/elhs.hpp"

namespace {

using nlohmann::json;

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

// Resolves the seed for a command: use the flag when given, otherwise draw
// one from system entropy and announce it on stderr so the run can be
// replayed.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    const std::uint64_t seed = entropy_seed();
    std::cerr << "seed = " << seed << " (drawn from system entropy; pass --seed to replay)\n";
    return seed;
}

void print_scalar(double value) {
    std::printf("%.12f\n", value);
}

elhs::OptimizeMode parse_mode(const std::string& name) {
    if (name == "none") return elhs::OptimizeMode::kNone;
    if (name == "centered") return elhs::OptimizeMode::kCenteredDiscrepancy;
    if (name == "geometric") return elhs::OptimizeMode::kGeometricDiscrepancy;
    throw CLI::ValidationError("--optimize", "must be one of none, centered, geometric");
}

struct SampleArgs {
    std::size_t p = 0;
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_sample(const SampleArgs& args) {
    const std::uint64_t seed = resolve_seed(args.seed);
    elhs::RngStream rng(seed);
    const elhs::SampleSet set = elhs::sample_lhs(args.p, args.n, rng);
    elhs::write_design_file(args.out, set);
    return 0;
}

struct ExpandArgs {
    std::string in;
    std::size_t m = 0;
    std::string optimize = "none";
    std::size_t candidates = 100;
    std::optional<double> tolerance;
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string report;
};

int run_expand(const ExpandArgs& args) {
    const elhs::SampleSet input = elhs::read_design_file(args.in);
    elhs::ExpansionConfig config;
    config.m = args.m;
    config.optimize = parse_mode(args.optimize);
    config.candidates = args.candidates;
    config.tolerance = args.tolerance;
    config.seed = resolve_seed(args.seed);

    const elhs::ExpansionResult result = elhs::expand(input, config);

    if (!args.out.empty()) {
        elhs::write_design_file(args.out, result.expanded);
    } else {
        elhs::write_design_csv(std::cout, result.expanded);
    }

    json report;
    report["n"] = input.n();
    report["p"] = input.p();
    report["m"] = args.m;
    report["degree"] = result.measured_degree;
    report["metric"] = args.optimize;
    if (result.metric_value) {
        report["metric_value"] = *result.metric_value;
    } else {
        report["metric_value"] = nullptr;
    }
    report["candidates_evaluated"] = result.candidates_evaluated;
    report["seed"] = config.seed;

    if (!args.report.empty()) {
        std::ofstream out(args.report);
        if (!out) throw std::runtime_error("cannot open report file: " + args.report);
        out << report.dump(2) << '\n';
    } else if (!args.out.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        // design went to stdout; keep it parseable and report on stderr
        std::cerr << report.dump(2) << '\n';
    }
    return 0;
}

struct OptimalArgs {
    std::string in;
    std::size_t m_min = 0;
    std::size_t m_max = 0;
    bool verbose = false;
    bool verify = false;
    std::optional<std::uint64_t> seed;
};

int run_optimal(const OptimalArgs& args) {
    const elhs::SampleSet input = elhs::read_design_file(args.in);
    const auto ranked = elhs::optimal_expansion(input, args.m_min, args.m_max, args.verbose);
    for (const auto& [m, deg] : ranked) {
        std::printf("%zu %.12f\n", m, deg);
    }
    if (!args.verify) return 0;

    // oracle mode: perform each expansion and check the measured degree
    // against the prediction the ranking was built from
    const std::uint64_t seed = resolve_seed(args.seed);
    const elhs::RngStream parent(seed);
    std::size_t checked = 0;
    for (std::size_t m = args.m_min; m <= args.m_max; ++m) {
        if (m == 0) continue;
        elhs::ExpansionConfig config;
        config.m = m;
        config.seed = parent.child(m).seed();
        const auto result = elhs::expand(input, config);
        const double predicted = elhs::predicted_degree(input, m);
        if (result.measured_degree != predicted) {
            std::cerr << "verify: FAILED at m = " << m << ": measured "
                      << std::setprecision(17) << result.measured_degree
                      << " != predicted " << predicted << '\n';
            return 1;
        }
        ++checked;
    }
    std::cerr << "verify: ok (" << checked << " expansions performed)\n";
    return 0;
}

struct CurveArgs {
    std::vector<std::size_t> n_list;
    std::vector<std::size_t> p_list;
    std::size_t m_max = 0;
    std::size_t realizations = 100;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_curve(const CurveArgs& args) {
    const std::uint64_t seed = resolve_seed(args.seed);
    const elhs::RngStream parent(seed);
    const std::size_t cells = args.n_list.size() * args.p_list.size();
    const std::size_t m_count = args.m_max + 1;

    // one row of predicted degrees per (cell, realization); reduced in
    // fixed order afterwards so thread count cannot change the output
    std::vector<std::vector<double>> rows(cells * args.realizations);
    elhs::parallel_for(rows.size(), elhs::worker_count(), [&](std::size_t item) {
        const std::size_t cell = item / args.realizations;
        const std::size_t n = args.n_list[cell / args.p_list.size()];
        const std::size_t p = args.p_list[cell % args.p_list.size()];
        elhs::RngStream rng = parent.child(item);
        const elhs::SampleSet set = elhs::sample_lhs(p, n, rng);
        auto& row = rows[item];
        row.resize(m_count);
        for (std::size_t m = 0; m < m_count; ++m) {
            row[m] = elhs::predicted_degree(set, m);
        }
    });

    std::ostringstream csv;
    csv << "# p,n,m,mean_degree,fitted_degree\n";
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const std::size_t n = args.n_list[cell / args.p_list.size()];
        const std::size_t p = args.p_list[cell % args.p_list.size()];
        for (std::size_t m = 0; m < m_count; ++m) {
            double sum = 0.0;
            for (std::size_t r = 0; r < args.realizations; ++r) {
                sum += rows[cell * args.realizations + r][m];
            }
            const double mean = sum / static_cast<double>(args.realizations);
            const double fit = elhs::fitted_degree(static_cast<double>(m) / static_cast<double>(n));
            char line[160];
            std::snprintf(line, sizeof(line), "%zu,%zu,%zu,%.12g,%.12g\n", p, n, m, mean, fit);
            csv << line;
        }
    }

    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot open output file: " + args.out);
        out << csv.str();
        if (!out.good()) throw std::runtime_error("write failed: " + args.out);
    } else {
        std::cout << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latin hypercube sampling and expansion toolkit"};
    app.require_subcommand(1);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Draw a fresh Latin hypercube design");
    sample->add_option("--p", sample_args.p, "number of dimensions")
        ->required()->check(CLI::PositiveNumber);
    sample->add_option("--n", sample_args.n, "number of samples")
        ->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", sample_args.seed, "RNG seed (drawn from entropy when omitted)");
    sample->add_option("--out", sample_args.out, "output design file (.json for JSON, CSV otherwise)")
        ->required();

    ExpandArgs expand_args;
    auto* expand = app.add_subcommand("expand", "Add new samples to an existing design");
    expand->add_option("--in", expand_args.in, "input design file")->required();
    expand->add_option("--m", expand_args.m, "number of new samples (0 is a no-op)")->required();
    expand->add_option("--optimize", expand_args.optimize,
                       "candidate ranking metric: none, centered, geometric")
        ->default_val("none")
        ->check(CLI::IsMember({"none", "centered", "geometric"}));
    expand->add_option("--candidates", expand_args.candidates, "candidate budget when optimizing")
        ->default_val(100)->check(CLI::PositiveNumber);
    expand->add_option("--tolerance", expand_args.tolerance,
                       "early-stop metric threshold (<= for centered, >= for geometric)");
    expand->add_option("--seed", expand_args.seed, "RNG seed (drawn from entropy when omitted)");
    expand->add_option("--out", expand_args.out, "output design file (stdout when omitted)");
    expand->add_option("--report", expand_args.report, "JSON report path (stdout/stderr when omitted)");

    std::string scalar_in;
    auto* degree_cmd = app.add_subcommand("degree", "Print the LHS degree of a design");
    degree_cmd->add_option("--in", scalar_in, "input design file")->required();

    std::string disc_in, disc_metric = "centered";
    auto* disc = app.add_subcommand("discrepancy", "Print a uniformity metric of a design");
    disc->add_option("--in", disc_in, "input design file")->required();
    disc->add_option("--metric", disc_metric, "centered or geometric")
        ->default_val("centered")->check(CLI::IsMember({"centered", "geometric"}));

    OptimalArgs optimal_args;
    auto* optimal = app.add_subcommand("optimal", "Rank expansion sizes by predicted degree");
    optimal->add_option("--in", optimal_args.in, "input design file")->required();
    optimal->add_option("--m-min", optimal_args.m_min, "smallest expansion size")->required();
    optimal->add_option("--m-max", optimal_args.m_max, "largest expansion size")->required();
    optimal->add_flag("--verbose", optimal_args.verbose, "print the full ranking, not just the best");
    optimal->add_flag("--verify", optimal_args.verify,
                      "perform each expansion and check it against the prediction");
    optimal->add_option("--seed", optimal_args.seed, "RNG seed for --verify expansions");

    CurveArgs curve_args;
    auto* curve = app.add_subcommand("curve", "Sweep mean degree vs expansion size");
    curve->add_option("--n", curve_args.n_list, "initial sizes (comma separated)")
        ->required()->delimiter(',')->check(CLI::PositiveNumber);
    curve->add_option("--p", curve_args.p_list, "dimension counts (comma separated)")
        ->required()->delimiter(',')->check(CLI::PositiveNumber);
    curve->add_option("--m-max", curve_args.m_max, "largest expansion size in the sweep")->required();
    curve->add_option("--realizations", curve_args.realizations, "designs averaged per cell")
        ->default_val(100)->check(CLI::PositiveNumber);
    curve->add_option("--seed", curve_args.seed, "RNG seed (drawn from entropy when omitted)");
    curve->add_option("--out", curve_args.out, "output CSV path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed()) return run_sample(sample_args);
        if (expand->parsed()) return run_expand(expand_args);
        if (degree_cmd->parsed()) {
            print_scalar(elhs::degree(elhs::read_design_file(scalar_in)));
            return 0;
        }
        if (disc->parsed()) {
            const elhs::SampleSet set = elhs::read_design_file(disc_in);
            print_scalar(disc_metric == "centered" ? elhs::centered_l2(set)
                                                   : elhs::geometric(set));
            return 0;
        }
        if (optimal->parsed()) return run_optimal(optimal_args);
        if (curve->parsed()) return run_curve(curve_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
