#ifndef FFALAB_SOLVERS_HPP
#define FFALAB_SOLVERS_HPP

#include <cstdint>

#include "ffalab/bitstring.hpp"
#include "ffalab/frequency_table.hpp"
#include "ffalab/problem.hpp"
#include "ffalab/trace.hpp"
#include "ffalab/transform.hpp"

namespace ffalab {

struct RunConfig {
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000'000'000ULL; // FEs, the hard cap used throughout
    TieRule tie = TieRule::accept_equal;
    std::uint64_t target = 0; // success once the raw objective reaches <= target
};

/// Hook receiving every candidate solution in generation order; used by the
/// invariance checks and the paired-seed tests.
class CandidateObserver {
public:
    virtual ~CandidateObserver() = default;
    virtual void on_candidate(std::uint64_t fe, const BitString& x, std::uint64_t raw) = 0;
};

struct BitRunResult {
    RunTrace trace;
    BitString best;
};

/// (1+1)-EA>0: keep the offspring iff it is at least as good as the parent.
BitRunResult run_opo_ea_gt0(const Problem& problem, const RunConfig& config,
                            CandidateObserver* observer = nullptr);

/// (1+1)-FEA>0: the same loop, but selection compares encounter frequencies
/// of the (transformed) objective values. Best-so-far reporting always uses
/// the raw objective.
BitRunResult run_opo_fea_gt0(const Problem& problem, const Transform& transform,
                             const RunConfig& config,
                             CandidateObserver* observer = nullptr);

/// Scalar-transform view of a problem: evaluates g(f(x)).
class TransformedProblem final : public Problem {
public:
    TransformedProblem(const Problem& base, Transform transform)
        : base_(base), transform_(std::move(transform)) {
        if (transform_.is_digest())
            throw std::invalid_argument("digest transform has no integer codomain");
        transform_.bind(base.upper_bound());
    }

    std::uint64_t evaluate(const BitString& x) const override {
        return transform_.apply(base_.evaluate(x));
    }
    std::size_t dimension() const override { return base_.dimension(); }
    std::uint64_t upper_bound() const override {
        return transform_.transformed_upper_bound(base_.upper_bound());
    }
    std::string name() const override {
        return base_.name() + "|" + transform_.spec_string();
    }

private:
    const Problem& base_;
    Transform transform_;
};

} // namespace ffalab

#endif
