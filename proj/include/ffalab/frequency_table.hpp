#ifndef FFALAB_FREQUENCY_TABLE_HPP
#define FFALAB_FREQUENCY_TABLE_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ffalab/md5.hpp"

namespace ffalab {

/// Dense encounter-frequency store over the objective values 0..UB.
/// Counters are 64 bit wide: a single value can be seen twice per selection
/// step over the full 1e10-FE budget, which overflows 32-bit counters.
class FrequencyTable {
public:
    explicit FrequencyTable(std::uint64_t upper_bound)
        : counters_(upper_bound + 1, 0) {}

    std::uint64_t tick(std::uint64_t y) {
        if (y >= counters_.size())
            throw std::out_of_range("objective value outside [0, UB]");
        return ++counters_[y];
    }

    std::uint64_t count(std::uint64_t y) const {
        if (y >= counters_.size())
            throw std::out_of_range("objective value outside [0, UB]");
        return counters_[y];
    }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (std::uint64_t c : counters_)
            t += c;
        return t;
    }

    std::uint64_t upper_bound() const {
        return static_cast<std::uint64_t>(counters_.size()) - 1;
    }

private:
    std::vector<std::uint64_t> counters_;
};

/// Hash-table variant for keys that are not small integers (message
/// digests). A key that was never seen has count 0.
class HashedFrequencyTable {
public:
    std::uint64_t tick(const Md5Digest& key) { return ++entries_[key]; }

    std::uint64_t count(const Md5Digest& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second;
    }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& [k, c] : entries_)
            t += c;
        return t;
    }

    std::size_t distinct_keys() const { return entries_.size(); }

private:
    std::unordered_map<Md5Digest, std::uint64_t, Md5DigestHash> entries_;
};

enum class TieRule { accept_equal, accept_strictly_less };

/// One FFA selection step: increase the encounter frequencies of both
/// objective values, then accept the new solution iff its frequency is not
/// larger (ties accept, mirroring the "at least as good" rule), or strictly
/// smaller under the accept_strictly_less rule.
template <class Table, class Key>
bool tick_and_compare(Table& table, const Key& y_current, const Key& y_new,
                      TieRule tie = TieRule::accept_equal) {
    table.tick(y_current);
    table.tick(y_new);
    // re-read both counts: y_current and y_new may be the same entry
    const std::uint64_t hc = table.count(y_current);
    const std::uint64_t hn = table.count(y_new);
    return tie == TieRule::accept_equal ? hn <= hc : hn < hc;
}

} // namespace ffalab

#endif
