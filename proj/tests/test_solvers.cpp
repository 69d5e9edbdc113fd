#include <doctest.h>

#include <vector>

#include "ffalab/experiment.hpp"
#include "ffalab/problem.hpp"
#include "ffalab/solvers.hpp"
#include "ffalab/stats.hpp"

using namespace ffalab;

namespace {

class CountingProblem final : public Problem {
public:
    explicit CountingProblem(const Problem& base) : base_(base) {}
    std::uint64_t evaluate(const BitString& x) const override {
        ++calls;
        return base_.evaluate(x);
    }
    std::size_t dimension() const override { return base_.dimension(); }
    std::uint64_t upper_bound() const override { return base_.upper_bound(); }
    std::string name() const override { return base_.name(); }
    mutable std::uint64_t calls = 0;

private:
    const Problem& base_;
};

class RecordingObserver : public CandidateObserver {
public:
    void on_candidate(std::uint64_t fe, const BitString& x, std::uint64_t raw) override {
        if (candidates.size() < 8)
            candidates.push_back(x);
        fes.push_back(fe);
        raws.push_back(raw);
    }
    std::vector<BitString> candidates;
    std::vector<std::uint64_t> fes, raws;
};

void check_trace_invariants(const RunTrace& trace, std::uint64_t target = 0) {
    REQUIRE(!trace.events.empty());
    CHECK(trace.events.front().fe == 1);
    for (std::size_t i = 1; i < trace.events.size(); ++i) {
        CHECK(trace.events[i].objective < trace.events[i - 1].objective);
        CHECK(trace.events[i].fe > trace.events[i - 1].fe);
    }
    if (trace.status == RunStatus::optimum_found)
        CHECK(trace.events.back().objective <= target);
    CHECK(trace.total_fes >= trace.events.back().fe);
}

} // namespace

TEST_CASE("ea solves onemax s=1 within two evaluations") {
    OneMax p(1);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const BitRunResult r = run_opo_ea_gt0(p, {.seed = seed});
        CHECK(r.trace.status == RunStatus::optimum_found);
        CHECK(r.trace.total_fes <= 2);
        check_trace_invariants(r.trace);
    }
}

TEST_CASE("budget semantics: a hard problem consumes exactly the budget") {
    Trap p(30);
    RunConfig config{.seed = 3, .budget = 10};
    const BitRunResult ea = run_opo_ea_gt0(p, config);
    CHECK(ea.trace.status == RunStatus::budget_exhausted);
    CHECK(ea.trace.total_fes == 10);
    check_trace_invariants(ea.trace);
}

TEST_CASE("reported fes equal the number of evaluate calls") {
    OneMax base(16);
    CountingProblem counted(base);
    const BitRunResult ea = run_opo_ea_gt0(counted, {.seed = 5, .budget = 100000});
    CHECK(counted.calls == ea.trace.total_fes);

    counted.calls = 0;
    const BitRunResult fea =
        run_opo_fea_gt0(counted, Transform::identity(), {.seed = 5, .budget = 100000});
    CHECK(counted.calls == fea.trace.total_fes);
}

TEST_CASE("paired seeds share the initial solution and the first offspring") {
    OneMax p(24);
    for (std::uint64_t seed : {1ULL, 7ULL, 99ULL}) {
        RecordingObserver ea_obs, fea_obs;
        run_opo_ea_gt0(p, {.seed = seed, .budget = 100000}, &ea_obs);
        run_opo_fea_gt0(p, Transform::identity(), {.seed = seed, .budget = 100000}, &fea_obs);
        REQUIRE(ea_obs.candidates.size() >= 2);
        REQUIRE(fea_obs.candidates.size() >= 2);
        CHECK(ea_obs.candidates[0] == fea_obs.candidates[0]);
        CHECK(ea_obs.candidates[1] == fea_obs.candidates[1]);
    }
}

TEST_CASE("fea traces are identical under identity and md5 transforms") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        TwoMax p(16);
        SequenceHashObserver a, b;
        const BitRunResult id =
            run_opo_fea_gt0(p, Transform::identity(), {.seed = seed, .budget = 1000000}, &a);
        const BitRunResult md =
            run_opo_fea_gt0(p, Transform::md5(), {.seed = seed, .budget = 1000000}, &b);
        CHECK(id.trace == md.trace);
        CHECK(a.hash() == b.hash());
        CHECK(id.best == md.best);
        check_trace_invariants(id.trace);
    }
}

namespace {

// the documented objective-value bijections of onemax
Transform trap_value_bijection(std::size_t s) {
    std::vector<std::uint64_t> map(s + 1);
    for (std::uint64_t v = 0; v <= s; ++v)
        map[v] = v == s ? 0 : v + 1;
    return Transform::from_table(std::move(map), s);
}

std::vector<std::uint64_t> jump_value_map(std::size_t s, std::size_t k) {
    std::vector<std::uint64_t> map(s + 1);
    for (std::uint64_t v = 0; v <= s; ++v)
        map[v] = (v == 0 || v >= k) ? v : k + s - v;
    return map;
}

} // namespace

TEST_CASE("fea on onemax is trace-identical under the trap and jump value bijections") {
    const std::size_t s = 32;
    OneMax onemax(s);
    for (std::uint64_t seed : {2ULL, 11ULL, 31ULL}) {
        SequenceHashObserver a, b, c;
        const BitRunResult plain =
            run_opo_fea_gt0(onemax, Transform::identity(), {.seed = seed}, &a);
        const BitRunResult trapped =
            run_opo_fea_gt0(onemax, trap_value_bijection(s), {.seed = seed}, &b);
        CHECK(plain.trace == trapped.trace);
        CHECK(a.hash() == b.hash());

        const BitRunResult jump_mapped = run_opo_fea_gt0(
            onemax, Transform::from_table(jump_value_map(s, 5), s), {.seed = seed}, &c);
        CHECK(plain.trace == jump_mapped.trace);
        CHECK(a.hash() == c.hash());

        // the jump problem itself shares onemax's optimum string, so even
        // the direct problem pairing is path-identical
        SequenceHashObserver d;
        Jump jump(s, 5);
        const BitRunResult jumped =
            run_opo_fea_gt0(jump, Transform::identity(), {.seed = seed}, &d);
        CHECK(a.hash() == d.hash());
        CHECK(plain.trace.total_fes == jumped.trace.total_fes);
        CHECK(plain.trace.hitting_time() == jumped.trace.hitting_time());
    }
}

TEST_CASE("fea on trap shares the candidate prefix with onemax but stops at its own optimum") {
    const std::size_t s = 32;
    OneMax onemax(s);
    Trap trap(s);
    for (std::uint64_t seed : {2ULL, 11ULL, 31ULL}) {
        SequenceHashObserver a, b;
        const BitRunResult r1 =
            run_opo_fea_gt0(onemax, Transform::identity(), {.seed = seed}, &a);
        const BitRunResult r2 = run_opo_fea_gt0(trap, Transform::identity(), {.seed = seed}, &b);
        const std::uint64_t shared = std::min(r1.trace.total_fes, r2.trace.total_fes);
        CHECK(a.hash_at(shared) == b.hash_at(shared));
        // different optimum solutions: all ones vs all zeros
        CHECK(r1.best.count_ones() == s);
        CHECK(r2.best.count_ones() == 0);
    }
}

TEST_CASE("plateau is not trace-equivalent to onemax (codomain shrinks)") {
    const std::size_t s = 12;
    OneMax onemax(s);
    Plateau plateau(s, 3);
    bool diverged = false;
    for (std::uint64_t seed = 1; seed <= 20 && !diverged; ++seed) {
        SequenceHashObserver a, b;
        run_opo_fea_gt0(onemax, Transform::identity(), {.seed = seed, .budget = 100000}, &a);
        run_opo_fea_gt0(plateau, Transform::identity(), {.seed = seed, .budget = 100000}, &b);
        diverged = a.hash() != b.hash();
    }
    CHECK(diverged);
}

TEST_CASE("verify_invariance wraps the pairing") {
    const InvarianceReport good = verify_invariance(
        {"onemax:s=16", "trap:s=16", "jump:s=16,k=4"},
        {"identity", "md5", "neg", "perm:seed=3", "affine:a=3,b=17"}, 1, 20, 1000000,
        TieRule::accept_equal);
    CHECK(good.pass);
    CHECK(good.comparisons == 20 * 6);

    const InvarianceReport bad = verify_invariance({"onemax:s=12", "plateau:s=12,k=3"},
                                                   {"identity"}, 1, 20, 100000,
                                                   TieRule::accept_equal);
    CHECK_FALSE(bad.pass);
    CHECK(!bad.detail.empty());
}

TEST_CASE("strict tie rule changes behavior") {
    OneMax p(16);
    bool differs = false;
    for (std::uint64_t seed = 1; seed <= 10 && !differs; ++seed) {
        const BitRunResult le = run_opo_fea_gt0(p, Transform::identity(),
                                                {.seed = seed, .tie = TieRule::accept_equal});
        const BitRunResult lt = run_opo_fea_gt0(
            p, Transform::identity(), {.seed = seed, .tie = TieRule::accept_strictly_less});
        differs = le.trace != lt.trace;
        check_trace_invariants(lt.trace);
    }
    CHECK(differs);
}

TEST_CASE("ea mean runtime on onemax tracks the theory value (smoke)") {
    OneMax p(32);
    const std::size_t runs = 1000;
    double total = 0;
    for (std::size_t r = 0; r < runs; ++r) {
        const BitRunResult res = run_opo_ea_gt0(p, {.seed = 1000 + r});
        REQUIRE(res.trace.status == RunStatus::optimum_found);
        total += static_cast<double>(res.trace.hitting_time());
    }
    const double mean = total / static_cast<double>(runs);
    CHECK(mean == doctest::Approx(theory_ea_onemax(32)).epsilon(0.10));
}

TEST_CASE("fea mean runtime on onemax lands in the expected band (smoke)") {
    OneMax p(32);
    const std::size_t runs = 200;
    double total = 0;
    for (std::size_t r = 0; r < runs; ++r) {
        const BitRunResult res = run_opo_fea_gt0(p, Transform::identity(), {.seed = 5000 + r});
        REQUIRE(res.trace.status == RunStatus::optimum_found);
        total += static_cast<double>(res.trace.hitting_time());
    }
    const double mean = total / static_cast<double>(runs);
    CHECK(mean > 1000.0);
    CHECK(mean < 2400.0);
}
