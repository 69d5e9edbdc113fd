#ifndef FFALAB_LOGFORMAT_HPP
#define FFALAB_LOGFORMAT_HPP

#include <cstdint>
#include <string>

#include "ffalab/trace.hpp"

namespace ffalab {

/// First line of a run log; every field is needed to replay the run.
struct LogHeader {
    std::string algo;
    std::string problem;
    std::string transform = "identity";
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::string rng;
    std::string tie = "le";

    bool operator==(const LogHeader&) const = default;
};

struct RunLog {
    LogHeader header;
    RunTrace trace;

    bool operator==(const RunLog&) const = default;
};

/// Byte-exact log text:
///   # algo=.. problem=.. transform=.. seed=.. budget=.. rng=.. tie=..
///   <fe>;<raw_objective>                          (one line per improvement)
///   # end status=<optimum_found|budget_exhausted> fes=<u64>
std::string emit_log(const RunLog& log);

/// Inverse of emit_log; throws std::runtime_error on corrupt input.
RunLog parse_log(const std::string& text);

} // namespace ffalab

#endif
