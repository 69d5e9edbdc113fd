#ifndef FFALAB_MD5_HPP
#define FFALAB_MD5_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace ffalab {

/// A 128-bit message digest.
struct Md5Digest {
    std::array<std::uint8_t, 16> bytes{};

    bool operator==(const Md5Digest&) const = default;

    std::string hex() const;
};

struct Md5DigestHash {
    std::size_t operator()(const Md5Digest& d) const {
        // first eight digest bytes are already uniformly distributed
        std::uint64_t h = 0;
        for (int i = 0; i < 8; ++i)
            h = (h << 8) | d.bytes[static_cast<std::size_t>(i)];
        return static_cast<std::size_t>(h);
    }
};

/// Md5 of an arbitrary byte buffer, implemented from the published
/// specification of the algorithm.
Md5Digest md5(const void* data, std::size_t len);

inline Md5Digest md5(const std::string& s) { return md5(s.data(), s.size()); }

} // namespace ffalab

#endif
