#ifndef FFALAB_TRACE_HPP
#define FFALAB_TRACE_HPP

#include <cstdint>
#include <vector>

namespace ffalab {

/// One strict improvement of the best-so-far raw objective value.
struct ImprovementEvent {
    std::uint64_t fe;        // 1-based function-evaluation index
    std::uint64_t objective; // raw (untransformed) objective value

    bool operator==(const ImprovementEvent&) const = default;
};

enum class RunStatus { optimum_found, budget_exhausted };

/// The reproducible record of a single run: every improvement event plus the
/// terminal state. The first event is always at fe = 1 (initial evaluation),
/// and objectives decrease strictly across events.
struct RunTrace {
    std::vector<ImprovementEvent> events;
    RunStatus status = RunStatus::budget_exhausted;
    std::uint64_t total_fes = 0;

    bool operator==(const RunTrace&) const = default;

    std::uint64_t best_objective() const { return events.back().objective; }

    /// FE index of the last improvement; the first hitting time when the
    /// run found an optimum.
    std::uint64_t hitting_time() const { return events.back().fe; }
};

} // namespace ffalab

#endif
