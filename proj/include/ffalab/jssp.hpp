#ifndef FFALAB_JSSP_HPP
#define FFALAB_JSSP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffalab/rng.hpp"
#include "ffalab/trace.hpp"

namespace ffalab {

struct JsspOperation {
    std::size_t machine;
    std::uint64_t time;
};

/// A job shop instance: each job visits every machine exactly once in a
/// job-specific order. UB is the sum of all processing times.
class JsspInstance {
public:
    JsspInstance(std::size_t jobs, std::size_t machines,
                 std::vector<std::vector<JsspOperation>> operations);

    static JsspInstance parse_orlib(std::istream& in);
    static JsspInstance parse_orlib_file(const std::string& path);

    std::size_t jobs() const { return jobs_; }
    std::size_t machines() const { return machines_; }
    const JsspOperation& operation(std::size_t job, std::size_t step) const {
        return ops_[job][step];
    }
    std::uint64_t upper_bound() const { return upper_bound_; }

    /// max(total load of any machine, total duration of any job); every
    /// feasible makespan is at least this.
    std::uint64_t lower_bound() const { return lower_bound_; }

private:
    std::size_t jobs_, machines_;
    std::vector<std::vector<JsspOperation>> ops_;
    std::uint64_t upper_bound_ = 0;
    std::uint64_t lower_bound_ = 0;
};

/// Permutation with repetition: job id j in [0, jobs) occurs exactly
/// machines() times; the c-th occurrence dispatches job j's c-th operation.
using OpSeq = std::vector<std::uint32_t>;

bool opseq_valid(const JsspInstance& inst, const OpSeq& seq);

/// Uniformly shuffled multiset of job ids.
OpSeq random_opseq(Rng& rng, const JsspInstance& inst);

/// Greedy left-to-right schedule builder; returns the makespan.
/// Rejects sequences violating the multiset property.
std::uint64_t decode_makespan(const JsspInstance& inst, const OpSeq& seq);

/// Counts decode calls (one FE each), tracks the best-so-far makespan and
/// its improvement events, and raises the stop flag on budget exhaustion or
/// when the target makespan is reached.
class EvalContext {
public:
    EvalContext(const JsspInstance& inst, std::uint64_t budget, std::uint64_t target);

    std::uint64_t evaluate(const OpSeq& seq);

    bool stopped() const { return stopped_; }
    std::uint64_t fes() const { return fes_; }
    std::uint64_t best() const { return best_; }
    const OpSeq& best_seq() const { return best_seq_; }

    RunTrace take_trace();

private:
    const JsspInstance& inst_;
    std::uint64_t budget_, target_;
    std::uint64_t fes_ = 0;
    std::uint64_t best_;
    OpSeq best_seq_;
    std::vector<ImprovementEvent> events_;
    bool stopped_ = false;
};

/// Generalized order crossover: read still-unprocessed sub-jobs from two
/// parents, switching between them uniformly at random, and mark each
/// emitted occurrence as processed in both parents.
OpSeq gox_recombine(Rng& rng, const JsspInstance& inst, const OpSeq& a, const OpSeq& b);

/// Same, with an injectable parent chooser (true = take from a).
OpSeq gox_recombine_with(const std::function<bool()>& take_from_a, const JsspInstance& inst,
                         const OpSeq& a, const OpSeq& b);

/// Up to `steps` improving moves: each step scans the single-swap
/// neighborhood (positions with differing genes) in a fresh random order and
/// applies the first strictly improving swap; stops early at a local
/// optimum. Returns the makespan of seq on exit.
std::uint64_t swap_local_search(Rng& rng, const JsspInstance& inst, OpSeq& seq, int steps,
                                std::uint64_t current_makespan, EvalContext& ctx);

} // namespace ffalab

#endif
