#ifndef FFALAB_EXPERIMENT_HPP
#define FFALAB_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ffalab/logformat.hpp"
#include "ffalab/solvers.hpp"

namespace ffalab {

/// Run fn(0..count-1) on `workers` threads; fn must be thread-safe.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& fn);

/// Execute one run of any of the four algorithms and package it as a log.
/// algo: "ea" | "fea" | "ma" | "ffa-ma".
RunLog execute_run(const std::string& algo, const std::string& problem_spec,
                   const std::string& transform_spec, std::uint64_t seed,
                   std::uint64_t budget, TieRule tie, std::uint64_t target);

/// One experiment cell: `runs` paired runs with seeds base_seed + r.
struct SuiteCell {
    std::string algo;
    std::string problem;
    std::string transform = "identity";
    std::uint64_t budget = 10'000'000'000ULL;
    std::size_t runs = 1;
    std::uint64_t base_seed = 1;
    std::string tie = "le";
    std::uint64_t target = 0;
};

struct SuiteConfig {
    std::string output_dir = "logs";
    unsigned jobs = 1;
    std::vector<SuiteCell> cells;
};

SuiteConfig load_suite_config(const std::string& path);

/// Expand corpus cells (maxsat:dir=..,glob=..) into per-file cells.
std::vector<SuiteCell> expand_cells(const std::vector<SuiteCell>& cells);

/// Deterministic log file name for one run of a cell.
std::string log_file_name(const SuiteCell& cell, std::uint64_t seed);

/// Run every cell, one log file per run; returns the number of runs.
std::size_t run_suite(const SuiteConfig& config);

struct StatsOutput {
    std::string csv;
    std::string ecdf;       // "algo,dimension,t,fraction" step points
    std::size_t logs_read = 0;
    std::size_t logs_skipped = 0;
};

/// Aggregate a directory of run logs into per-cell summaries.
StatsOutput aggregate_logs(const std::string& dir, bool want_ecdf);

struct InvarianceReport {
    bool pass = true;
    std::size_t comparisons = 0;
    std::string detail; // first divergence, when any
};

/// Pair FEA runs across transforms (raw traces must be identical, Theorem-1
/// exact) and, when several problems are given, across problems: their
/// candidate sequences must agree on the shared prefix, and their hitting
/// times must agree whenever they stop at the same optimum solution.
InvarianceReport verify_invariance(const std::vector<std::string>& problem_specs,
                                   const std::vector<std::string>& transform_specs,
                                   std::uint64_t base_seed, std::size_t seeds,
                                   std::uint64_t budget, TieRule tie);

/// Chained FNV-1a over all candidate solutions of a run, with one rolling
/// value retained per FE so prefixes of two runs can be compared.
class SequenceHashObserver : public CandidateObserver {
public:
    void on_candidate(std::uint64_t fe, const BitString& x, std::uint64_t raw) override;
    std::uint64_t hash() const { return hash_; }
    std::uint64_t hash_at(std::uint64_t fe) const { return chain_.at(fe - 1); }
    std::uint64_t candidates() const { return chain_.size(); }

private:
    std::uint64_t hash_ = 1469598103934665603ULL;
    std::vector<std::uint64_t> chain_;
};

} // namespace ffalab

#endif
