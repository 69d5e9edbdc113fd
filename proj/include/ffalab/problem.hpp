#ifndef FFALAB_PROBLEM_HPP
#define FFALAB_PROBLEM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "ffalab/bitstring.hpp"

namespace ffalab {

/// An evaluatable objective over bit strings of a fixed dimension.
/// All objectives are minimized, take integer values in [0, upper_bound()],
/// and attain 0 at a global optimum.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::uint64_t evaluate(const BitString& x) const = 0;
    virtual std::size_t dimension() const = 0;
    virtual std::uint64_t upper_bound() const = 0;

    /// Canonical spec string, e.g. "jump:s=32,k=6".
    virtual std::string name() const = 0;
};

class OneMax final : public Problem {
public:
    explicit OneMax(std::size_t s) : s_(s) {}
    std::uint64_t evaluate(const BitString& x) const override {
        return s_ - x.count_ones();
    }
    std::size_t dimension() const override { return s_; }
    std::uint64_t upper_bound() const override { return s_; }
    std::string name() const override { return "onemax:s=" + std::to_string(s_); }

private:
    std::size_t s_;
};

class LeadingOnes final : public Problem {
public:
    explicit LeadingOnes(std::size_t s) : s_(s) {}
    std::uint64_t evaluate(const BitString& x) const override {
        std::size_t prefix = 0;
        while (prefix < s_ && x[prefix] == 1)
            ++prefix;
        return s_ - prefix;
    }
    std::size_t dimension() const override { return s_; }
    std::uint64_t upper_bound() const override { return s_; }
    std::string name() const override { return "leadingones:s=" + std::to_string(s_); }

private:
    std::size_t s_;
};

class TwoMax final : public Problem {
public:
    explicit TwoMax(std::size_t s) : s_(s) {}
    std::uint64_t evaluate(const BitString& x) const override {
        const std::size_t ones = x.count_ones();
        if (ones == s_)
            return 0;
        const std::size_t zeros = s_ - ones;
        return 1 + s_ - (ones > zeros ? ones : zeros);
    }
    std::size_t dimension() const override { return s_; }
    std::uint64_t upper_bound() const override { return 1 + s_ / 2; }
    std::string name() const override { return "twomax:s=" + std::to_string(s_); }

private:
    std::size_t s_;
};

namespace detail {
inline std::size_t check_width(std::size_t s, std::size_t k, const char* what) {
    if (k < 2 || k > s - 1)
        throw std::invalid_argument(std::string(what) + " width k must satisfy 2 <= k <= s-1");
    return k;
}
} // namespace detail

/// Deceptive region of width k right before the all-ones optimum.
class Jump final : public Problem {
public:
    Jump(std::size_t s, std::size_t k) : s_(s), k_(detail::check_width(s, k, "jump")) {}
    std::uint64_t evaluate(const BitString& x) const override {
        const std::size_t ones = x.count_ones();
        if (ones == s_ || ones <= s_ - k_)
            return s_ - ones;
        return k_ + ones;
    }
    std::size_t dimension() const override { return s_; }
    std::uint64_t upper_bound() const override { return s_ + k_ - 1; }
    std::string name() const override {
        return "jump:s=" + std::to_string(s_) + ",k=" + std::to_string(k_);
    }
    std::size_t width() const { return k_; }

private:
    std::size_t s_, k_;
};

class Trap final : public Problem {
public:
    explicit Trap(std::size_t s) : s_(s) {}
    std::uint64_t evaluate(const BitString& x) const override {
        const std::size_t ones = x.count_ones();
        if (ones == 0)
            return 0;
        return s_ - ones + 1;
    }
    std::size_t dimension() const override { return s_; }
    std::uint64_t upper_bound() const override { return s_; }
    std::string name() const override { return "trap:s=" + std::to_string(s_); }

private:
    std::size_t s_;
};

/// Neutral region of width k before the optimum; shrinks the codomain.
class Plateau final : public Problem {
public:
    Plateau(std::size_t s, std::size_t k) : s_(s), k_(detail::check_width(s, k, "plateau")) {}
    std::uint64_t evaluate(const BitString& x) const override {
        const std::size_t ones = x.count_ones();
        if (ones == s_ || ones <= s_ - k_)
            return s_ - ones;
        return k_;
    }
    std::size_t dimension() const override { return s_; }
    std::uint64_t upper_bound() const override { return s_; }
    std::string name() const override {
        return "plateau:s=" + std::to_string(s_) + ",k=" + std::to_string(k_);
    }
    std::size_t width() const { return k_; }

private:
    std::size_t s_, k_;
};

} // namespace ffalab

#endif
