#include "ffalab/logformat.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace ffalab {

namespace {

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::runtime_error(std::string("log: bad ") + what + " value '" + s + "'");
    return v;
}

// "key=value" tokens separated by single spaces; keys never contain '=' but
// values may (e.g. transform=perm:seed=9), so split each token on the first
std::string field(const std::string& line, const std::string& key, const char* what) {
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
        const std::size_t eq = token.find('=');
        if (eq != std::string::npos && token.compare(0, eq, key) == 0)
            return token.substr(eq + 1);
    }
    throw std::runtime_error(std::string("log: missing field ") + what);
}

} // namespace

std::string emit_log(const RunLog& log) {
    std::ostringstream out;
    out << "# algo=" << log.header.algo << " problem=" << log.header.problem
        << " transform=" << log.header.transform << " seed=" << log.header.seed
        << " budget=" << log.header.budget << " rng=" << log.header.rng
        << " tie=" << log.header.tie << "\n";
    for (const ImprovementEvent& ev : log.trace.events)
        out << ev.fe << ";" << ev.objective << "\n";
    out << "# end status="
        << (log.trace.status == RunStatus::optimum_found ? "optimum_found"
                                                         : "budget_exhausted")
        << " fes=" << log.trace.total_fes << "\n";
    return out.str();
}

RunLog parse_log(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# algo=", 0) != 0)
        throw std::runtime_error("log: missing header line");

    RunLog log;
    log.header.algo = field(line, "algo", "algo");
    log.header.problem = field(line, "problem", "problem");
    log.header.transform = field(line, "transform", "transform");
    log.header.seed = parse_u64(field(line, "seed", "seed"), "seed");
    log.header.budget = parse_u64(field(line, "budget", "budget"), "budget");
    log.header.rng = field(line, "rng", "rng");
    log.header.tie = field(line, "tie", "tie");
    if (log.header.tie != "le" && log.header.tie != "lt")
        throw std::runtime_error("log: tie must be 'le' or 'lt'");

    bool saw_end = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.rfind("# end ", 0) == 0) {
            const std::string status = field(line, "status", "status");
            if (status == "optimum_found")
                log.trace.status = RunStatus::optimum_found;
            else if (status == "budget_exhausted")
                log.trace.status = RunStatus::budget_exhausted;
            else
                throw std::runtime_error("log: unknown status '" + status + "'");
            log.trace.total_fes = parse_u64(field(line, "fes", "fes"), "fes");
            saw_end = true;
            break;
        }
        const std::size_t sep = line.find(';');
        if (sep == std::string::npos)
            throw std::runtime_error("log: bad event line '" + line + "'");
        ImprovementEvent ev;
        ev.fe = parse_u64(line.substr(0, sep), "event fe");
        ev.objective = parse_u64(line.substr(sep + 1), "event objective");
        log.trace.events.push_back(ev);
    }
    if (!saw_end)
        throw std::runtime_error("log: missing end line");
    if (log.trace.events.empty())
        throw std::runtime_error("log: no improvement events");
    return log;
}

} // namespace ffalab
