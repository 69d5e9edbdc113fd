#include "ffalab/wmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffalab {

std::uint64_t wmodel_base_objective(const BitString& x) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d += (x[i] != (i & 1)) ? 1 : 0;
    return d;
}

BitString wmodel_neutrality_reduce(const BitString& x, std::size_t m) {
    if (m == 0)
        throw std::invalid_argument("neutrality factor m must be >= 1");
    if (x.size() % m != 0)
        throw std::invalid_argument("input length is not divisible by the neutrality factor");
    if (m == 1)
        return x;
    BitString out(x.size() / m);
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < m; ++i)
            ones += x[j * m + i];
        out.set(j, 2 * ones > m); // even split collapses to 0
    }
    return out;
}

namespace {

// e applied to one block [start, start+len): output bit i is the block
// parity xor the mirrored input bit; for odd lengths the centre slot (which
// would cancel itself) carries the plain parity instead. e_2 is the
// identity, e_1 trivially so.
template <class In, class Out>
void epistasis_block(const In& in, Out& out, std::size_t start, std::size_t len) {
    std::uint8_t parity = 0;
    for (std::size_t i = 0; i < len; ++i)
        parity ^= in[start + i];
    for (std::size_t i = 0; i < len; ++i)
        out[start + i] = parity ^ in[start + len - 1 - i];
    if (len % 2 == 1)
        out[start + (len - 1) / 2] = parity;
}

} // namespace

BitString wmodel_epistasis(const BitString& x, std::size_t nu) {
    if (nu == 1)
        throw std::invalid_argument("epistasis block size nu must be 0 (off) or >= 2");
    if (nu == 0)
        return x;
    std::vector<std::uint8_t> in(x.size()), scratch(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        in[i] = x[i];
    for (std::size_t start = 0; start < in.size(); start += nu) {
        const std::size_t len = std::min(nu, in.size() - start);
        epistasis_block(in, scratch, start, len);
    }
    BitString out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out.set(i, scratch[i]);
    return out;
}

std::vector<std::uint64_t> wmodel_ruggedness_permutation(std::size_t gamma, std::size_t q) {
    if (q < 1)
        throw std::invalid_argument("ruggedness needs q >= 1");
    const std::size_t gamma_max = q * (q - 1) / 2;
    if (gamma > gamma_max)
        throw std::invalid_argument("gamma exceeds q*(q-1)/2");

    std::vector<std::uint64_t> perm(q + 1);
    for (std::size_t i = 0; i <= q; ++i)
        perm[i] = i;
    std::size_t remaining = gamma;

    // rugged regime: bubble q, q-1, ... leftward into positions 1, 3, 5, ...
    for (std::size_t t = 1; remaining > 0 && 2 * t - 1 <= q; ++t) {
        // after earlier phases the value q+1-t sits at position q
        for (std::size_t pos = q; remaining > 0 && pos > 2 * t - 1; --pos) {
            std::swap(perm[pos - 1], perm[pos]);
            --remaining;
        }
    }

    // deceptive regime: walk the small values out to the top end, smallest
    // first, consolidating the zigzag into the reversal; the region next to
    // the optimum turns into a high wall long before the last spikes vanish
    for (std::size_t v = 1; remaining > 0 && v <= q / 2; ++v) {
        std::size_t pos = static_cast<std::size_t>(
            std::find(perm.begin(), perm.end(), v) - perm.begin());
        for (std::size_t step = 0; remaining > 0 && step + 2 * v < q; ++step) {
            std::swap(perm[pos], perm[pos + 1]);
            ++pos;
            --remaining;
        }
    }
    return perm;
}

const std::vector<WModelCatalogRow>& wmodel_catalog() {
    static const std::vector<WModelCatalogRow> rows = {
        {1, 10, 2, 6, 10},   {2, 10, 2, 6, 18},   {3, 16, 1, 5, 72},
        {4, 16, 3, 9, 72},   {5, 25, 1, 23, 90},  {6, 32, 1, 2, 397},
        {7, 32, 4, 11, 0},   {8, 32, 4, 14, 0},   {9, 32, 4, 8, 128},
        {10, 50, 1, 36, 245},{11, 50, 2, 21, 256},{12, 50, 3, 16, 613},
        {13, 64, 2, 32, 256},{14, 64, 3, 21, 16}, {15, 64, 3, 21, 256},
        {16, 64, 3, 21, 403},{17, 64, 4, 52, 2},  {18, 75, 1, 60, 16},
        {19, 75, 2, 32, 4},
    };
    return rows;
}

WModelProblem::WModelProblem(const WModelParams& params) : params_(params) {
    if (params.n < 1)
        throw std::invalid_argument("w-model base length n must be >= 1");
    if (params.m < 1)
        throw std::invalid_argument("w-model neutrality factor m must be >= 1");
    if (params.nu == 1)
        throw std::invalid_argument("w-model epistasis nu must be 0 (off) or >= 2");
    ruggedness_ = wmodel_ruggedness_permutation(params.gamma, params.n);
    name_ = "wmodel:n=" + std::to_string(params.n) + ",m=" + std::to_string(params.m) +
            ",nu=" + std::to_string(params.nu) + ",gamma=" + std::to_string(params.gamma);
}

WModelProblem WModelProblem::from_catalog(int id) {
    for (const WModelCatalogRow& row : wmodel_catalog()) {
        if (row.id == id) {
            WModelProblem p(WModelParams{row.n, row.m, row.nu, row.gamma});
            p.name_ = "wmodel:id=" + std::to_string(id);
            return p;
        }
    }
    throw std::invalid_argument("w-model catalog id must be in 1..19");
}

std::uint64_t WModelProblem::evaluate(const BitString& x) const {
    if (x.size() != dimension())
        throw std::invalid_argument("bit string length does not match m*n");

    thread_local std::vector<std::uint8_t> reduced, mixed;
    const std::size_t n = params_.n;
    const std::size_t m = params_.m;

    reduced.resize(n);
    if (m == 1) {
        for (std::size_t j = 0; j < n; ++j)
            reduced[j] = x[j];
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t ones = 0;
            for (std::size_t i = 0; i < m; ++i)
                ones += x[j * m + i];
            reduced[j] = 2 * ones > m ? 1 : 0;
        }
    }

    const std::uint8_t* bits = reduced.data();
    if (params_.nu >= 2) {
        mixed.resize(n);
        for (std::size_t start = 0; start < n; start += params_.nu) {
            const std::size_t len = std::min(params_.nu, n - start);
            epistasis_block(reduced, mixed, start, len);
        }
        bits = mixed.data();
    }

    std::uint64_t base = 0;
    for (std::size_t j = 0; j < n; ++j)
        base += (bits[j] != (j & 1)) ? 1 : 0;

    return ruggedness_[base];
}

} // namespace ffalab
