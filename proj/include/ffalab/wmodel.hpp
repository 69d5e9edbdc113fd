#ifndef FFALAB_WMODEL_HPP
#define FFALAB_WMODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffalab/problem.hpp"

namespace ffalab {

/// Tunable benchmark parameters: base length n, neutrality factor m,
/// epistasis block size nu (0 disables the layer), ruggedness gamma.
/// The search-space dimension is s = m*n.
struct WModelParams {
    std::size_t n = 1;
    std::size_t m = 1;
    std::size_t nu = 0;
    std::size_t gamma = 0;
};

/// Hamming distance to the alternating target string 0101... (first bit 0).
std::uint64_t wmodel_base_objective(const BitString& x);

/// Collapse consecutive blocks of m bits to their majority bit; an even
/// split collapses to 0. m = 1 is the identity. The input length must be
/// divisible by m.
BitString wmodel_neutrality_reduce(const BitString& x, std::size_t m);

/// Bijective per-block mixing: within each block of nu bits the last output
/// bit is the parity of the block and output bit i (i < nu-1) is the parity
/// xor input bit i+1. A trailing shorter block uses the same rule at its own
/// size. Flipping one input bit changes at least nu-1 output bits.
BitString wmodel_epistasis(const BitString& x, std::size_t nu);

/// The ruggedness permutation of the objective values {0..q} for
/// 0 <= gamma <= q(q-1)/2. Always fixes 0. gamma counts the permutation's
/// inversions along a canonical path: first the largest values bubble down
/// toward the optimum, forming a zigzag of growing spikes (rugged regime,
/// up to floor(q/2)*ceil(q/2) inversions); after that the small values
/// migrate to the top end, consolidating the zigzag into the fully
/// deceptive reversal [0, q, q-1, ..., 1].
std::vector<std::uint64_t> wmodel_ruggedness_permutation(std::size_t gamma, std::size_t q);

/// One row of the instance catalog.
struct WModelCatalogRow {
    int id;
    std::size_t n, m, nu, gamma;
};

/// The 19 selected instances.
const std::vector<WModelCatalogRow>& wmodel_catalog();

class WModelProblem final : public Problem {
public:
    explicit WModelProblem(const WModelParams& params);

    static WModelProblem from_catalog(int id);

    std::uint64_t evaluate(const BitString& x) const override;
    std::size_t dimension() const override { return params_.m * params_.n; }
    std::uint64_t upper_bound() const override { return params_.n; }
    std::string name() const override { return name_; }

    const WModelParams& params() const { return params_; }

private:
    WModelParams params_;
    std::vector<std::uint64_t> ruggedness_; // precomputed r_gamma
    std::string name_;
};

} // namespace ffalab

#endif
