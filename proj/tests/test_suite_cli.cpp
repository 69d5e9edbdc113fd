#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ffalab/experiment.hpp"
#include "ffalab/maxsat.hpp"
#include "ffalab/specs.hpp"

using namespace ffalab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("ffalab_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("execute_run is byte-reproducible") {
    const RunLog a = execute_run("fea", "onemax:s=32", "identity", 7, 1000000,
                                 TieRule::accept_equal, 0);
    const RunLog b = execute_run("fea", "onemax:s=32", "identity", 7, 1000000,
                                 TieRule::accept_equal, 0);
    CHECK(emit_log(a) == emit_log(b));
    CHECK(a.trace.status == RunStatus::optimum_found);

    CHECK_THROWS_AS(execute_run("bogus", "onemax:s=8", "identity", 1, 10,
                                TieRule::accept_equal, 0),
                    SpecError);
    CHECK_THROWS_AS(execute_run("fea", "jump:s=8,k=9", "identity", 1, 10,
                                TieRule::accept_equal, 0),
                    SpecError);
}

TEST_CASE("suite writes one log per run and stats aggregates them") {
    const fs::path dir = fresh_dir("suite");

    SuiteConfig config;
    config.output_dir = (dir / "logs").string();
    config.jobs = 2;
    SuiteCell cell;
    cell.algo = "fea";
    cell.problem = "onemax:s=16";
    cell.transform = "identity";
    cell.budget = 1000000;
    cell.runs = 6;
    cell.base_seed = 100;
    config.cells.push_back(cell);
    cell.algo = "ea";
    config.cells.push_back(cell);

    CHECK(run_suite(config) == 12);

    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(config.output_dir))
        files += entry.path().extension() == ".log";
    CHECK(files == 12);

    // seed pairing: run r uses base_seed + r
    CHECK(fs::exists(fs::path(config.output_dir) / log_file_name(cell, 100)));
    CHECK(fs::exists(fs::path(config.output_dir) / log_file_name(cell, 105)));

    const StatsOutput stats = aggregate_logs(config.output_dir, true);
    CHECK(stats.logs_read == 12);
    CHECK(stats.logs_skipped == 0);
    CHECK(stats.csv.find("ea,onemax:s=16,identity,1000000,le,6,6,1,") != std::string::npos);
    CHECK(stats.ecdf.find("algo,dimension,t,fraction") == 0);
    CHECK(stats.ecdf.find("fea,16,") != std::string::npos);

    // suite determinism end to end: rerun into a second directory
    SuiteConfig again = config;
    again.output_dir = (dir / "logs2").string();
    run_suite(again);
    const StatsOutput stats2 = aggregate_logs(again.output_dir, true);
    CHECK(stats.csv == stats2.csv);

    // corrupt log handling
    std::ofstream bad(fs::path(config.output_dir) / "broken.log");
    bad << "not a log\n";
    bad.close();
    const StatsOutput with_bad = aggregate_logs(config.output_dir, false);
    CHECK(with_bad.logs_skipped == 1);
    CHECK(with_bad.logs_read == 12);

    CHECK_THROWS_AS(aggregate_logs((dir / "empty").string(), false), IoError);
}

TEST_CASE("ert in aggregated stats follows the总 formula") {
    const fs::path dir = fresh_dir("ert");
    // two synthetic logs: success at 100, failure at budget 1000
    RunLog ok;
    ok.header = {"ea", "toy:s=4", "identity", 1, 1000, Rng::name(), "le"};
    ok.trace.events = {{1, 3}, {100, 0}};
    ok.trace.status = RunStatus::optimum_found;
    ok.trace.total_fes = 100;
    RunLog fail = ok;
    fail.header.seed = 2;
    fail.trace.events = {{1, 3}};
    fail.trace.status = RunStatus::budget_exhausted;
    fail.trace.total_fes = 1000;

    std::ofstream(dir / "a.log") << emit_log(ok);
    std::ofstream(dir / "b.log") << emit_log(fail);
    const StatsOutput stats = aggregate_logs(dir.string(), false);
    CHECK(stats.csv.find(",2,1,0.5,1100,") != std::string::npos); // (100+1000)/1
}

TEST_CASE("corpus cells expand to one cell per matching file") {
    const fs::path dir = fresh_dir("corpus");
    Rng rng(3);
    for (int i = 1; i <= 3; ++i) {
        const CnfFormula f = generate_uniform_3sat(rng, 10, 30);
        std::ofstream(dir / ("uf10-0" + std::to_string(i) + ".cnf")) << to_dimacs(f);
    }
    std::ofstream(dir / "notes.txt") << "ignored";

    SuiteCell cell;
    cell.algo = "fea";
    cell.problem = "maxsat:dir=" + dir.string() + ",glob=uf10-*.cnf";
    const std::vector<SuiteCell> expanded = expand_cells({cell});
    REQUIRE(expanded.size() == 3);
    CHECK(expanded[0].problem.find("uf10-01.cnf") != std::string::npos);

    SuiteCell none = cell;
    none.problem = "maxsat:dir=" + dir.string() + ",glob=uf99-*.cnf";
    CHECK_THROWS_AS(expand_cells({none}), IoError);
}
