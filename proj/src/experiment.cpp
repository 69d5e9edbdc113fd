#include "ffalab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ffalab/memetic.hpp"
#include "ffalab/specs.hpp"
#include "ffalab/stats.hpp"

namespace fs = std::filesystem;

namespace ffalab {

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    const unsigned n = std::min<std::size_t>(workers, count);
    for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

RunLog execute_run(const std::string& algo, const std::string& problem_spec,
                   const std::string& transform_spec, std::uint64_t seed,
                   std::uint64_t budget, TieRule tie, std::uint64_t target) {
    if (budget < 1)
        throw SpecError("budget must be at least 1 FE");

    RunLog log;
    log.header.algo = algo;
    log.header.problem = problem_spec;
    log.header.transform = transform_spec;
    log.header.seed = seed;
    log.header.budget = budget;
    log.header.rng = Rng::name();
    log.header.tie = tie == TieRule::accept_equal ? "le" : "lt";

    RunConfig config;
    config.seed = seed;
    config.budget = budget;
    config.tie = tie;
    config.target = target;

    if (algo == "ea") {
        auto problem = make_problem(problem_spec);
        log.trace = run_opo_ea_gt0(*problem, config).trace;
    } else if (algo == "fea") {
        auto problem = make_problem(problem_spec);
        const Transform transform = make_transform(transform_spec);
        log.trace = run_opo_fea_gt0(*problem, transform, config).trace;
    } else if (algo == "ma" || algo == "ffa-ma") {
        const JsspInstance inst = make_jssp_instance(problem_spec);
        MemeticConfig mc;
        mc.seed = seed;
        mc.budget = budget;
        mc.target = target;
        mc.ffa = algo == "ffa-ma";
        log.trace = run_jssp_ma(inst, mc).trace;
    } else {
        throw SpecError("unknown algorithm '" + algo + "' (ea, fea, ma, ffa-ma)");
    }
    return log;
}

SuiteConfig load_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open suite config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SpecError("suite config '" + path + "': " + e.what());
    }

    SuiteConfig config;
    config.output_dir = j.value("output_dir", std::string("logs"));
    config.jobs = j.value("jobs", 1u);
    if (!j.contains("cells") || !j["cells"].is_array() || j["cells"].empty())
        throw SpecError("suite config '" + path + "' has no cells");
    for (const auto& c : j["cells"]) {
        SuiteCell cell;
        cell.algo = c.at("algo").get<std::string>();
        cell.problem = c.at("problem").get<std::string>();
        cell.transform = c.value("transform", std::string("identity"));
        cell.budget = c.value("budget", cell.budget);
        cell.runs = c.value("runs", cell.runs);
        cell.base_seed = c.value("base_seed", cell.base_seed);
        cell.tie = c.value("tie", cell.tie);
        cell.target = c.value("target", cell.target);
        if (cell.tie != "le" && cell.tie != "lt")
            throw SpecError("cell tie must be 'le' or 'lt'");
        config.cells.push_back(std::move(cell));
    }
    return config;
}

namespace {

bool glob_match(const std::string& pattern, const std::string& text) {
    // '*' wildcard only, which covers corpus patterns like uf20-*.cnf
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*')
        ++p;
    return p == pattern.size();
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

} // namespace

std::vector<SuiteCell> expand_cells(const std::vector<SuiteCell>& cells) {
    std::vector<SuiteCell> out;
    for (const SuiteCell& cell : cells) {
        const SpecString s = SpecString::parse(cell.problem);
        if (s.name == "maxsat" && s.args.count("dir")) {
            s.expect_keys({"dir", "glob"});
            const std::string dir = s.str("dir");
            const std::string pattern = s.args.count("glob") ? s.str("glob") : "*.cnf";
            if (!fs::is_directory(dir))
                throw IoError("maxsat corpus directory '" + dir + "' does not exist");
            std::vector<std::string> files;
            for (const auto& entry : fs::directory_iterator(dir))
                if (entry.is_regular_file() &&
                    glob_match(pattern, entry.path().filename().string()))
                    files.push_back(entry.path().string());
            if (files.empty())
                throw IoError("no files in '" + dir + "' match '" + pattern + "'");
            std::sort(files.begin(), files.end());
            for (const std::string& f : files) {
                SuiteCell c = cell;
                c.problem = "maxsat:path=" + f;
                out.push_back(std::move(c));
            }
        } else {
            out.push_back(cell);
        }
    }
    return out;
}

std::string log_file_name(const SuiteCell& cell, std::uint64_t seed) {
    return sanitize(cell.algo) + "__" + sanitize(cell.problem) + "__" +
           sanitize(cell.transform) + "__s" + std::to_string(seed) + ".log";
}

std::size_t run_suite(const SuiteConfig& config) {
    const std::vector<SuiteCell> cells = expand_cells(config.cells);
    fs::create_directories(config.output_dir);

    struct Task {
        const SuiteCell* cell;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const SuiteCell& cell : cells)
        for (std::size_t r = 0; r < cell.runs; ++r)
            tasks.push_back({&cell, cell.base_seed + r});

    parallel_for(tasks.size(), config.jobs, [&](std::size_t i) {
        const Task& task = tasks[i];
        const SuiteCell& cell = *task.cell;
        const RunLog log =
            execute_run(cell.algo, cell.problem, cell.transform, task.seed, cell.budget,
                        cell.tie == "le" ? TieRule::accept_equal : TieRule::accept_strictly_less,
                        cell.target);
        const fs::path path = fs::path(config.output_dir) / log_file_name(cell, task.seed);
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw IoError("cannot write log file '" + path.string() + "'");
        out << emit_log(log);
    });
    return tasks.size();
}

namespace {

std::string format_double(double v) {
    if (std::isinf(v))
        return "inf";
    if (std::isnan(v))
        return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

StatsOutput aggregate_logs(const std::string& dir, bool want_ecdf) {
    if (!fs::is_directory(dir))
        throw IoError("log directory '" + dir + "' does not exist");

    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".log")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw IoError("log directory '" + dir + "' contains no .log files");

    struct Cell {
        std::vector<RunOutcome> outcomes;
        std::vector<std::uint64_t> hits;
    };
    std::map<std::string, Cell> cells; // key: algo|problem|transform|budget|tie
    StatsOutput out;

    for (const std::string& file : files) {
        std::ifstream in(file, std::ios::binary);
        std::stringstream buffer;
        buffer << in.rdbuf();
        try {
            const RunLog log = parse_log(buffer.str());
            const std::string key = log.header.algo + "|" + log.header.problem + "|" +
                                    log.header.transform + "|" +
                                    std::to_string(log.header.budget) + "|" + log.header.tie;
            Cell& cell = cells[key];
            const bool success = log.trace.status == RunStatus::optimum_found;
            cell.outcomes.push_back({success, log.trace.total_fes});
            if (success)
                cell.hits.push_back(log.trace.hitting_time());
            ++out.logs_read;
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping corrupt log " << file << ": " << e.what() << "\n";
            ++out.logs_skipped;
        }
    }
    if (out.logs_read == 0)
        throw IoError("all log files in '" + dir + "' are corrupt");

    std::ostringstream csv;
    csv << "algo,problem,transform,budget,tie,runs,successes,success_fraction,"
           "ert,mean,median,stddev,q15_9,q84_1\n";
    struct ErtPoint {
        std::string algo;
        std::string problem;
        double ert;
    };
    std::vector<ErtPoint> ert_points;
    for (const auto& [key, cell] : cells) {
        const CellSummary s = summarize_cell(cell.outcomes, cell.hits);
        std::istringstream ks(key);
        std::string algo, problem, transform, budget, tie;
        std::getline(ks, algo, '|');
        std::getline(ks, problem, '|');
        std::getline(ks, transform, '|');
        std::getline(ks, budget, '|');
        std::getline(ks, tie, '|');
        csv << algo << "," << problem << "," << transform << "," << budget << "," << tie
            << "," << s.runs << "," << s.successes << ","
            << format_double(s.success_fraction) << "," << format_double(s.ert) << ",";
        if (s.successes > 0)
            csv << format_double(s.mean) << "," << format_double(s.median) << ","
                << format_double(s.stddev) << "," << format_double(s.q_low) << ","
                << format_double(s.q_high) << "\n";
        else
            csv << "nan,nan,nan,nan,nan\n";
        ert_points.push_back({algo, problem, s.ert});
    }
    out.csv = csv.str();

    if (want_ecdf) {
        // one series per (algo, dimension): the fraction of that group's
        // instances solved within a given expected runtime
        std::map<std::string, std::vector<double>> groups;
        for (const ErtPoint& p : ert_points) {
            const auto dim = dimension_of_spec(p.problem);
            const std::string label =
                p.algo + "," + (dim ? std::to_string(*dim) : std::string("unknown"));
            groups[label].push_back(p.ert);
        }
        std::ostringstream ecdf;
        ecdf << "algo,dimension,t,fraction\n";
        for (const auto& [label, erts] : groups) {
            const EcdfOverErt curve{erts};
            for (const auto& [t, fraction] : curve.points())
                ecdf << label << "," << format_double(t) << "," << format_double(fraction)
                     << "\n";
        }
        out.ecdf = ecdf.str();
    }
    return out;
}

void SequenceHashObserver::on_candidate(std::uint64_t, const BitString& x, std::uint64_t) {
    constexpr std::uint64_t kPrime = 1099511628211ULL;
    for (std::size_t i = 0; i < x.size(); ++i) {
        hash_ ^= x[i];
        hash_ *= kPrime;
    }
    hash_ ^= 0xff;
    hash_ *= kPrime;
    chain_.push_back(hash_);
}

InvarianceReport verify_invariance(const std::vector<std::string>& problem_specs,
                                   const std::vector<std::string>& transform_specs,
                                   std::uint64_t base_seed, std::size_t seeds,
                                   std::uint64_t budget, TieRule tie) {
    if (problem_specs.empty() || transform_specs.empty())
        throw SpecError("verify-invariance needs at least one problem and one transform");

    InvarianceReport report;
    for (std::size_t r = 0; r < seeds && report.pass; ++r) {
        const std::uint64_t seed = base_seed + r;
        RunConfig config;
        config.seed = seed;
        config.budget = budget;
        config.tie = tie;

        // reference: first problem under the first transform
        auto ref_problem = make_problem(problem_specs[0]);
        Transform ref_transform = make_transform(transform_specs[0]);
        SequenceHashObserver ref_obs;
        const BitRunResult ref = run_opo_fea_gt0(*ref_problem, ref_transform, config, &ref_obs);

        for (std::size_t ti = 1; ti < transform_specs.size(); ++ti) {
            SequenceHashObserver obs;
            const Transform transform = make_transform(transform_specs[ti]);
            const BitRunResult other =
                run_opo_fea_gt0(*ref_problem, transform, config, &obs);
            ++report.comparisons;
            if (other.trace != ref.trace || obs.hash() != ref_obs.hash()) {
                report.pass = false;
                std::size_t i = 0;
                while (i < ref.trace.events.size() && i < other.trace.events.size() &&
                       ref.trace.events[i] == other.trace.events[i])
                    ++i;
                std::ostringstream detail;
                detail << "seed " << seed << ": transform '" << transform_specs[ti]
                       << "' diverges from '" << transform_specs[0] << "'";
                if (i < ref.trace.events.size() || i < other.trace.events.size()) {
                    const std::uint64_t fe = i < ref.trace.events.size()
                                                 ? ref.trace.events[i].fe
                                                 : other.trace.events[i].fe;
                    detail << " at trace event " << i << " (FE " << fe << ")";
                } else {
                    detail << " (same events, different end state or solutions)";
                }
                report.detail = detail.str();
                break;
            }
        }

        // bijection-class pairs: the candidate sequences must agree for as
        // long as both runs are live; when the two problems stop at the same
        // optimum solution, the hitting times must agree as well
        for (std::size_t pi = 1; pi < problem_specs.size() && report.pass; ++pi) {
            auto problem = make_problem(problem_specs[pi]);
            SequenceHashObserver obs;
            Transform transform = make_transform(transform_specs[0]);
            const BitRunResult other = run_opo_fea_gt0(*problem, transform, config, &obs);
            ++report.comparisons;
            const std::uint64_t shared =
                std::min(other.trace.total_fes, ref.trace.total_fes);
            const bool prefix_ok = obs.hash_at(shared) == ref_obs.hash_at(shared);
            const bool same_optimum = other.trace.status == RunStatus::optimum_found &&
                                      ref.trace.status == RunStatus::optimum_found &&
                                      other.best == ref.best;
            const bool hit_ok =
                !same_optimum || other.trace.hitting_time() == ref.trace.hitting_time();
            if (!prefix_ok || !hit_ok) {
                report.pass = false;
                std::ostringstream detail;
                detail << "seed " << seed << ": problem '" << problem_specs[pi]
                       << "' and '" << problem_specs[0] << "' diverge within the first "
                       << shared << " FEs";
                report.detail = detail.str();
            }
        }
    }
    return report;
}

} // namespace ffalab
