#ifndef FFALAB_MEMETIC_HPP
#define FFALAB_MEMETIC_HPP

#include <cstdint>

#include "ffalab/frequency_table.hpp"
#include "ffalab/jssp.hpp"

namespace ffalab {

struct MemeticConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    std::uint64_t target = 0;  // stop once the best makespan is <= target
    std::size_t mu = 16;
    std::size_t lambda = 16;
    int local_search_steps = 10;
    bool ffa = false; // frequency-based survival selection instead of makespan
};

/// Test hook called once per completed generation.
class MemeticObserver {
public:
    virtual ~MemeticObserver() = default;
    virtual void on_generation(std::size_t generation,
                               const std::vector<std::uint64_t>& population_makespans,
                               std::uint64_t ffa_total_ticks) = 0;
};

struct JsspRunResult {
    RunTrace trace;
    OpSeq best;
};

/// (mu+lambda) memetic algorithm: random refined initial population,
/// offspring by recombination of two distinct parents, each refined by the
/// swap local search. Plain selection keeps the mu best by makespan; under
/// FFA every pool member first bumps the encounter count of its makespan and
/// the mu least frequent survive (ties: lower makespan, then older).
JsspRunResult run_jssp_ma(const JsspInstance& inst, const MemeticConfig& config,
                          MemeticObserver* observer = nullptr);

} // namespace ffalab

#endif
