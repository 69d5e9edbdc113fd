#ifndef FFALAB_TRANSFORM_HPP
#define FFALAB_TRANSFORM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffalab/md5.hpp"
#include "ffalab/rng.hpp"

namespace ffalab {

/// A bijective transformation of the objective value. Scalar kinds map
/// [0, UB] onto integers; the digest kind maps objective values to 128-bit
/// keys (injective in practice; collisions would abort the run).
class Transform {
public:
    enum class Kind { identity, negation, affine, permutation, digest };

    static Transform identity() { return Transform(Kind::identity); }

    /// y -> UB - y
    static Transform negation() { return Transform(Kind::negation); }

    /// y -> a*y + b with a > 0
    static Transform affine(std::uint64_t a, std::uint64_t b) {
        if (a == 0)
            throw std::invalid_argument("affine transform needs a > 0");
        Transform t(Kind::affine);
        t.a_ = a;
        t.b_ = b;
        return t;
    }

    /// Seed-derived random permutation of {0..UB} (Fisher-Yates).
    static Transform permutation(std::uint64_t seed) {
        Transform t(Kind::permutation);
        t.perm_seed_ = seed;
        return t;
    }

    /// y -> Md5 of the value encoded as 8 big-endian bytes.
    static Transform md5() { return Transform(Kind::digest); }

    Kind kind() const { return kind_; }
    bool is_digest() const { return kind_ == Kind::digest; }

    /// Bind the transform to a concrete objective range. Must be called
    /// before apply() for the negation and permutation kinds.
    void bind(std::uint64_t upper_bound) {
        ub_ = upper_bound;
        bound_ = true;
        if (kind_ == Kind::permutation && perm_.empty()) {
            table_max_ = upper_bound;
            perm_.resize(ub_ + 1);
            for (std::uint64_t i = 0; i <= ub_; ++i)
                perm_[i] = i;
            Rng rng(perm_seed_);
            for (std::uint64_t i = ub_; i > 0; --i) {
                const std::uint64_t j = rng.next_below(i + 1);
                std::swap(perm_[i], perm_[j]);
            }
        }
    }

    /// Explicit value table over 0..UB. Must be injective (a bijection onto
    /// its image); the image may exceed UB, in which case the dense
    /// frequency table is sized to the largest image value.
    static Transform from_table(std::vector<std::uint64_t> table, std::uint64_t upper_bound) {
        if (table.size() != upper_bound + 1)
            throw std::invalid_argument("value table size does not match UB+1");
        std::uint64_t max_image = 0;
        for (std::uint64_t v : table)
            max_image = v > max_image ? v : max_image;
        std::vector<bool> seen(max_image + 1, false);
        for (std::uint64_t v : table) {
            if (seen[v])
                throw std::invalid_argument("value table is not injective on [0, UB]");
            seen[v] = true;
        }
        Transform t(Kind::permutation);
        t.perm_ = std::move(table);
        t.ub_ = upper_bound;
        t.table_max_ = max_image;
        t.bound_ = true;
        return t;
    }

    std::uint64_t apply(std::uint64_t y) const {
        switch (kind_) {
        case Kind::identity:
            return y;
        case Kind::negation:
            if (!bound_)
                throw std::logic_error("negation transform used before bind()");
            return ub_ - y;
        case Kind::affine:
            return a_ * y + b_;
        case Kind::permutation:
            if (!bound_)
                throw std::logic_error("permutation transform used before bind()");
            return perm_.at(y);
        case Kind::digest:
            throw std::logic_error("digest transform has no scalar image");
        }
        return y;
    }

    Md5Digest apply_digest(std::uint64_t y) const {
        std::uint8_t buf[8];
        for (int i = 0; i < 8; ++i)
            buf[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(y >> (8 * (7 - i)));
        return ffalab::md5(buf, sizeof buf);
    }

    /// Largest scalar image over [0, UB]; sizes the dense frequency table.
    std::uint64_t transformed_upper_bound(std::uint64_t upper_bound) const {
        switch (kind_) {
        case Kind::identity:
        case Kind::negation:
            return upper_bound;
        case Kind::permutation:
            return perm_.empty() ? upper_bound : table_max_;
        case Kind::affine:
            return a_ * upper_bound + b_;
        case Kind::digest:
            throw std::logic_error("digest transform has no scalar codomain");
        }
        return upper_bound;
    }

    std::string spec_string() const {
        switch (kind_) {
        case Kind::identity:
            return "identity";
        case Kind::negation:
            return "neg";
        case Kind::affine:
            return "affine:a=" + std::to_string(a_) + ",b=" + std::to_string(b_);
        case Kind::permutation:
            return "perm:seed=" + std::to_string(perm_seed_);
        case Kind::digest:
            return "md5";
        }
        return "identity";
    }

private:
    explicit Transform(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::uint64_t a_ = 1, b_ = 0;
    std::uint64_t perm_seed_ = 0;
    std::uint64_t ub_ = 0;
    std::uint64_t table_max_ = 0;
    bool bound_ = false;
    std::vector<std::uint64_t> perm_;
};

} // namespace ffalab

#endif
