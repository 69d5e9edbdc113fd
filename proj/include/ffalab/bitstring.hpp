#ifndef FFALAB_BITSTRING_HPP
#define FFALAB_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffalab/rng.hpp"

namespace ffalab {

/// Fixed-length vector of bits with value semantics.
/// The length is set at construction and never changes afterwards.
class BitString {
public:
    explicit BitString(std::size_t n) : bits_(check_length(n), 0) {}

    std::size_t size() const { return bits_.size(); }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }

    void flip(std::size_t i) { bits_[i] ^= 1; }

    std::size_t count_ones() const {
        std::size_t c = 0;
        for (std::uint8_t b : bits_)
            c += b;
        return c;
    }

    bool operator==(const BitString& other) const = default;

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (std::uint8_t b : bits_)
            s.push_back(b ? '1' : '0');
        return s;
    }

    static BitString from_string(const std::string& s) {
        BitString x(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1')
                throw std::invalid_argument("bit string literal may only contain 0 and 1");
            x.set(i, s[i] == '1');
        }
        return x;
    }

private:
    static std::size_t check_length(std::size_t n) {
        if (n == 0)
            throw std::invalid_argument("bit string length must be at least 1");
        return n;
    }

    std::vector<std::uint8_t> bits_;
};

/// Uniform random bit string of length s: every bit is 0 or 1 with
/// probability 1/2, consuming one generator word per bit.
inline BitString random_bitstring(Rng& rng, std::size_t s) {
    BitString x(s);
    for (std::size_t i = 0; i < s; ++i)
        x.set(i, rng.next_bool());
    return x;
}

/// Standard mutation conditioned on flipping at least one bit: the per-bit
/// pass at rate 1/s is repeated until it flips something (rejection form;
/// this repo fixes the rejection variant so streams are reproducible).
/// Writes the mutated copy of x into out; x itself is never modified.
inline void mutate_gt0(Rng& rng, const BitString& x, BitString& out) {
    const std::size_t s = x.size();
    const double rate = 1.0 / static_cast<double>(s);
    std::vector<std::size_t> flips;
    do {
        flips.clear();
        for (std::size_t i = 0; i < s; ++i)
            if (rng.next_unit() < rate)
                flips.push_back(i);
    } while (flips.empty());
    out = x;
    for (std::size_t i : flips)
        out.flip(i);
}

inline BitString mutate_gt0(Rng& rng, const BitString& x) {
    BitString out(x.size());
    mutate_gt0(rng, x, out);
    return out;
}

} // namespace ffalab

#endif
