#include "ffalab/solvers.hpp"

#include <unordered_map>
#include <utility>

namespace ffalab {

namespace {

struct BestTracker {
    RunTrace trace;
    BitString best;
    std::uint64_t best_value;

    BestTracker(const BitString& x, std::uint64_t fx) : best(x), best_value(fx) {
        trace.events.push_back({1, fx});
        trace.total_fes = 1;
    }

    void observe(std::uint64_t fe, const BitString& x, std::uint64_t fx) {
        trace.total_fes = fe;
        if (fx < best_value) {
            best_value = fx;
            best = x;
            trace.events.push_back({fe, fx});
        }
    }
};

template <class Table, class KeyOf>
BitRunResult fea_loop(const Problem& problem, const RunConfig& config, Table table,
                      KeyOf key_of, CandidateObserver* observer) {
    Rng rng(config.seed);
    BitString x = random_bitstring(rng, problem.dimension());
    std::uint64_t raw_x = problem.evaluate(x);
    if (observer)
        observer->on_candidate(1, x, raw_x);

    BestTracker bt(x, raw_x);
    auto key_x = key_of(raw_x);

    BitString y(problem.dimension());
    std::uint64_t fe = 1;
    while (bt.best_value > config.target && fe < config.budget) {
        mutate_gt0(rng, x, y);
        const std::uint64_t raw_y = problem.evaluate(y);
        ++fe;
        if (observer)
            observer->on_candidate(fe, y, raw_y);
        bt.observe(fe, y, raw_y);

        auto key_y = key_of(raw_y);
        if (tick_and_compare(table, key_x, key_y, config.tie)) {
            std::swap(x, y);
            key_x = key_y;
        }
    }
    bt.trace.status = bt.best_value <= config.target ? RunStatus::optimum_found
                                                     : RunStatus::budget_exhausted;
    return {std::move(bt.trace), std::move(bt.best)};
}

} // namespace

BitRunResult run_opo_ea_gt0(const Problem& problem, const RunConfig& config,
                            CandidateObserver* observer) {
    Rng rng(config.seed);
    BitString x = random_bitstring(rng, problem.dimension());
    std::uint64_t fx = problem.evaluate(x);
    if (observer)
        observer->on_candidate(1, x, fx);

    BestTracker bt(x, fx);

    BitString y(problem.dimension());
    std::uint64_t fe = 1;
    while (bt.best_value > config.target && fe < config.budget) {
        mutate_gt0(rng, x, y);
        const std::uint64_t fy = problem.evaluate(y);
        ++fe;
        if (observer)
            observer->on_candidate(fe, y, fy);
        bt.observe(fe, y, fy);

        if (fy <= fx) {
            std::swap(x, y);
            fx = fy;
        }
    }
    bt.trace.status = bt.best_value <= config.target ? RunStatus::optimum_found
                                                     : RunStatus::budget_exhausted;
    return {std::move(bt.trace), std::move(bt.best)};
}

BitRunResult run_opo_fea_gt0(const Problem& problem, const Transform& transform,
                             const RunConfig& config, CandidateObserver* observer) {
    if (transform.is_digest()) {
        // Collision watch: two distinct raw values hashing to one digest
        // would silently merge frequency entries, so the run aborts instead.
        std::unordered_map<Md5Digest, std::uint64_t, Md5DigestHash> seen;
        auto key_of = [&transform, &seen](std::uint64_t raw) {
            Md5Digest d = transform.apply_digest(raw);
            auto [it, inserted] = seen.emplace(d, raw);
            if (!inserted && it->second != raw)
                throw std::runtime_error("message digest collision between objective values");
            return d;
        };
        return fea_loop(problem, config, HashedFrequencyTable{}, key_of, observer);
    }

    Transform bound = transform;
    bound.bind(problem.upper_bound());
    FrequencyTable table(bound.transformed_upper_bound(problem.upper_bound()));
    auto key_of = [&bound](std::uint64_t raw) { return bound.apply(raw); };
    return fea_loop(problem, config, std::move(table), key_of, observer);
}

} // namespace ffalab
