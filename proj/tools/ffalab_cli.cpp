#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ffalab/experiment.hpp"
#include "ffalab/maxsat.hpp"
#include "ffalab/specs.hpp"

namespace fs = std::filesystem;
using namespace ffalab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

TieRule tie_from(const std::string& tie) {
    if (tie == "le")
        return TieRule::accept_equal;
    if (tie == "lt")
        return TieRule::accept_strictly_less;
    throw SpecError("tie must be 'le' or 'lt'");
}

int cmd_run(const std::string& algo, const std::string& problem, const std::string& transform,
            std::uint64_t seed, std::uint64_t budget, const std::string& tie,
            std::uint64_t target, const std::string& out_path) {
    const RunLog log = execute_run(algo, problem, transform, seed, budget, tie_from(tie), target);
    const std::string text = emit_log(log);
    if (out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw IoError("cannot write '" + out_path + "'");
        out << text;
    }
    return kExitOk;
}

int cmd_suite(const std::string& config_path, unsigned jobs_override,
              const std::string& out_dir_override) {
    SuiteConfig config = load_suite_config(config_path);
    if (jobs_override > 0)
        config.jobs = jobs_override;
    if (!out_dir_override.empty())
        config.output_dir = out_dir_override;
    const std::size_t runs = run_suite(config);
    std::cout << "wrote " << runs << " run logs to " << config.output_dir << "\n";
    return kExitOk;
}

int cmd_verify_invariance(const std::vector<std::string>& problems,
                          const std::vector<std::string>& transforms, std::uint64_t base_seed,
                          std::size_t seeds, std::uint64_t budget, const std::string& tie) {
    const InvarianceReport report =
        verify_invariance(problems, transforms, base_seed, seeds, budget, tie_from(tie));
    if (report.pass) {
        std::cout << "PASS: " << report.comparisons << " paired runs, all traces identical\n";
        return kExitOk;
    }
    std::cout << "FAIL: " << report.detail << "\n";
    return kExitFailure;
}

int cmd_stats(const std::string& logs_dir, const std::string& out_path,
              const std::string& ecdf_path) {
    const StatsOutput stats = aggregate_logs(logs_dir, !ecdf_path.empty());
    if (out_path == "-") {
        std::cout << stats.csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw IoError("cannot write '" + out_path + "'");
        out << stats.csv;
    }
    if (!ecdf_path.empty()) {
        std::ofstream out(ecdf_path, std::ios::binary);
        if (!out)
            throw IoError("cannot write '" + ecdf_path + "'");
        out << stats.ecdf;
    }
    if (stats.logs_skipped > 0)
        std::cerr << stats.logs_skipped << " corrupt logs skipped\n";
    return kExitOk;
}

int cmd_gen_3sat(std::size_t vars, std::size_t clauses, std::size_t count, std::uint64_t seed,
                 const std::string& out_dir, const std::string& prefix) {
    fs::create_directories(out_dir);
    Rng rng(seed);
    std::size_t written = 0, tried = 0;
    while (written < count) {
        ++tried;
        CnfFormula f = generate_uniform_3sat(rng, vars, clauses);
        if (!dpll_satisfiable(f))
            continue; // keep satisfiable instances only
        ++written;
        const fs::path path = fs::path(out_dir) / (prefix + std::to_string(written) + ".cnf");
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot write '" + path.string() + "'");
        out << to_dimacs(f, "uniform random 3-SAT, satisfiable, seed " + std::to_string(seed));
    }
    std::cout << "wrote " << written << " satisfiable instances (" << tried
              << " candidates) to " << out_dir << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seed-reproducible runtime experiments with frequency fitness assignment"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "execute one run and write its log");
    std::string algo = "fea", problem, transform = "identity", tie = "le", out_path = "-";
    std::uint64_t seed = 1, budget = 10'000'000'000ULL, target = 0;
    run->add_option("--algo", algo, "ea | fea | ma | ffa-ma");
    run->add_option("--problem", problem, "problem spec, e.g. onemax:s=32")->required();
    run->add_option("--transform", transform, "objective transform (fea only)");
    run->add_option("--seed", seed, "run seed");
    run->add_option("--budget", budget, "max function evaluations");
    run->add_option("--tie", tie, "frequency tie rule: le (default) or lt");
    run->add_option("--target", target, "stop once the raw objective is <= target");
    run->add_option("--out", out_path, "log file ('-' = stdout)");

    // suite
    auto* suite = app.add_subcommand("suite", "run a JSON-configured suite of cells");
    std::string config_path, suite_out;
    unsigned jobs = 0;
    suite->add_option("--config", config_path, "suite JSON file")->required();
    suite->add_option("--jobs", jobs, "worker threads (overrides config)");
    suite->add_option("--out-dir", suite_out, "output directory (overrides config)");

    // verify-invariance
    auto* verify = app.add_subcommand("verify-invariance",
                                      "check trace equality of FEA runs across transforms");
    std::vector<std::string> v_problems, v_transforms;
    std::uint64_t v_base_seed = 1, v_budget = 10'000'000'000ULL;
    std::size_t v_seeds = 100;
    std::string v_tie = "le";
    verify->add_option("--problem", v_problems, "problem spec (repeatable)")->required();
    verify->add_option("--transform", v_transforms, "transform spec (repeatable)")->required();
    verify->add_option("--base-seed", v_base_seed, "first seed");
    verify->add_option("--seeds", v_seeds, "number of paired seeds");
    verify->add_option("--budget", v_budget, "FE budget per run");
    verify->add_option("--tie", v_tie, "frequency tie rule");

    // stats
    auto* stats = app.add_subcommand("stats", "aggregate run logs into CSV summaries");
    std::string logs_dir, stats_out = "-", ecdf_path;
    stats->add_option("--logs", logs_dir, "directory of .log files")->required();
    stats->add_option("--out", stats_out, "CSV output ('-' = stdout)");
    stats->add_option("--ecdf", ecdf_path, "also write ECDF-over-ERT points here");

    // gen-3sat
    auto* gen = app.add_subcommand("gen-3sat",
                                   "generate satisfiable uniform random 3-SAT instances");
    std::size_t g_vars = 20, g_clauses = 91, g_count = 1000;
    std::uint64_t g_seed = 1;
    std::string g_out = "corpus", g_prefix = "uf20-0";
    gen->add_option("--vars", g_vars, "variables per instance");
    gen->add_option("--clauses", g_clauses, "clauses per instance");
    gen->add_option("--count", g_count, "satisfiable instances to keep");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out-dir", g_out, "output directory");
    gen->add_option("--prefix", g_prefix, "file name prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return cmd_run(algo, problem, transform, seed, budget, tie, target, out_path);
        if (suite->parsed())
            return cmd_suite(config_path, jobs, suite_out);
        if (verify->parsed())
            return cmd_verify_invariance(v_problems, v_transforms, v_base_seed, v_seeds,
                                         v_budget, v_tie);
        if (stats->parsed())
            return cmd_stats(logs_dir, stats_out, ecdf_path);
        if (gen->parsed())
            return cmd_gen_3sat(g_vars, g_clauses, g_count, g_seed, g_out, g_prefix);
    } catch (const SpecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
