#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dyncycle/cli/runner.hpp"
#include "dyncycle/cli/workload_io.hpp"
#include "dyncycle/errors.hpp"

using namespace dyncycle;
using namespace dyncycle::cli;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Files {
    std::string in = "-";
    std::string out = "-";
    std::string pairs;
    std::string expected;
};

Workload load_workload(const std::string& path) {
    if (path == "-") {
        return read_workload(std::cin);
    }
    std::ifstream f(path);
    if (!f) {
        throw InputError(0, "cannot open " + path);
    }
    return read_workload(f);
}

template <class F>
void with_output(const std::string& path, F&& f) {
    if (path == "-") {
        f(std::cout);
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw InputError(0, "cannot write " + path);
    }
    f(file);
}

void load_pairs(RunConfig& config, const Files& files, std::size_t n) {
    if (files.pairs.empty()) {
        return;
    }
    std::ifstream f(files.pairs);
    if (!f) {
        throw InputError(0, "cannot open " + files.pairs);
    }
    config.pairs = read_pairs(f, n);
}

std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("DYNCYCLE_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw InputError(0, "DYNCYCLE_SEED is not an unsigned integer");
        }
    }
    return fallback;
}

void add_structure_options(CLI::App* cmd, RunConfig& config, Files& files, std::optional<std::uint64_t>& seed) {
    cmd->add_option("--structure", config.structure, "Structure to run")
        ->check(CLI::IsMember(structure_names()))
        ->required();
    cmd->add_option("--mu", config.mu, "Threshold (threshold, edge-threshold)");
    cmd->add_option("--eps", config.eps, "Approximation parameter (approx)")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--c", config.c, "Lower bound on positive cycle weights (approx)");
    cmd->add_option("--C", config.C, "Upper bound on cycle weights (approx)");
    cmd->add_option("--delta", config.delta, "Phase length, 0 = default (mpsp, exact-mincycle)");
    cmd->add_option("--pairs", files.pairs, "Pairs file with one \"s t\" per line (mpsp)");
    cmd->add_option("--seed", seed, "Random seed (falls back to DYNCYCLE_SEED)");
    cmd->add_option("--in", files.in, "Workload file, - for stdin");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynamic minimum weight cycle structures: workload generation, runs, checks and benchmarks"};
    app.require_subcommand(1);

    WorkloadParams gen;
    std::string regime = "nonneg";
    std::optional<std::uint64_t> gen_seed;
    std::string gen_out = "-";
    auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded workload");
    gen_cmd->add_option("--n", gen.n, "Number of vertices")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--W", gen.W, "Maximum absolute weight")->check(CLI::Range(1LL, 1LL << 30));
    gen_cmd->add_option("--weights", regime, "Weight regime")->check(CLI::IsMember({"nonneg", "signed"}));
    gen_cmd->add_option("--degree", gen.avg_degree, "Average out-degree target");
    gen_cmd->add_option("--updates", gen.updates, "Number of updates after warm-up");
    gen_cmd->add_option("--query-rate", gen.query_rate, "Probability of a query after each update")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_flag("--edge-ops", gen.edge_ops, "Single-edge updates instead of vertex updates");
    gen_cmd->add_flag("--no-warmup{false}", gen.warmup, "Start from the empty graph");
    gen_cmd->add_option("--seed", gen_seed, "Random seed (falls back to DYNCYCLE_SEED)");
    gen_cmd->add_option("--out", gen_out, "Output file, - for stdout");

    RunConfig config;
    Files files;
    std::optional<std::uint64_t> seed;
    auto* run_cmd = app.add_subcommand("run", "Run a structure and write its query answers");
    add_structure_options(run_cmd, config, files, seed);
    run_cmd->add_option("--out", files.out, "Results CSV, - for stdout");
    auto* check_cmd = app.add_subcommand("check", "Compare a structure against the oracles or an expected file");
    add_structure_options(check_cmd, config, files, seed);
    check_cmd->add_option("--expected", files.expected, "Expected results CSV");
    auto* bench_cmd = app.add_subcommand("bench", "Per-op timing and counter CSV");
    add_structure_options(bench_cmd, config, files, seed);
    bench_cmd->add_option("--out", files.out, "Bench CSV, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            gen.regime = regime == "signed" ? WeightRegime::Signed : WeightRegime::Nonneg;
            gen.seed = gen_seed ? *gen_seed : env_seed(1);
            const Workload wl = generate(gen);
            with_output(gen_out, [&](std::ostream& os) { write_workload(os, wl); });
            return kOk;
        }
        config.seed = seed ? *seed : env_seed(1);
        const Workload wl = load_workload(files.in);
        load_pairs(config, files, wl.n);
        if (run_cmd->parsed()) {
            const auto answers = run_workload(config, wl);
            with_output(files.out, [&](std::ostream& os) { write_results(os, answers); });
            return kOk;
        }
        if (bench_cmd->parsed()) {
            with_output(files.out, [&](std::ostream& os) { bench_workload(config, wl, os); });
            return kOk;
        }
        std::optional<std::vector<std::string>> expected;
        if (!files.expected.empty()) {
            std::ifstream f(files.expected);
            if (!f) {
                throw InputError(0, "cannot open " + files.expected);
            }
            expected = read_results(f);
        }
        const CheckReport report = check_workload(config, wl, expected);
        for (const std::string& m : report.messages) {
            std::cout << m << '\n';
        }
        std::cout << report.queries << " queries, " << report.mismatches << " mismatches\n";
        return report.mismatches ? kMismatch : kOk;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const dyncycle::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
