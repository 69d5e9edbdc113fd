#include "ffalab/maxsat.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ffalab {

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    bool done = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        if (line[0] == '%') { // SATLib end marker
            done = true;
            continue;
        }
        if (!have_header) {
            std::istringstream hs(line);
            std::string p, cnf;
            long long vars = 0, clauses = 0;
            if (!(hs >> p >> cnf >> vars >> clauses) || p != "p" || cnf != "cnf" ||
                vars <= 0 || clauses < 0)
                throw DimacsError(DimacsError::Kind::bad_header, line_no,
                                  "expected 'p cnf <vars> <clauses>'");
            f.num_vars = static_cast<std::size_t>(vars);
            declared_clauses = static_cast<std::size_t>(clauses);
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        long long lit;
        while (ls >> lit) {
            if (done && lit == 0)
                continue; // trailing "0" line after '%'
            if (lit == 0) {
                if (current.empty())
                    throw DimacsError(DimacsError::Kind::empty_clause, line_no,
                                      "empty clause");
                f.clauses.push_back(current);
                current.clear();
                continue;
            }
            const long long v = lit < 0 ? -lit : lit;
            if (v > static_cast<long long>(f.num_vars))
                throw DimacsError(DimacsError::Kind::literal_out_of_range, line_no,
                                  "literal " + std::to_string(lit) + " exceeds " +
                                      std::to_string(f.num_vars) + " variables");
            current.push_back(static_cast<int>(lit));
        }
    }
    if (!have_header)
        throw DimacsError(DimacsError::Kind::bad_header, line_no, "missing 'p cnf' header");
    if (!current.empty())
        throw DimacsError(DimacsError::Kind::clause_count_mismatch, line_no,
                          "unterminated clause at end of input");
    if (f.clauses.size() != declared_clauses)
        throw DimacsError(DimacsError::Kind::clause_count_mismatch, line_no,
                          "header declares " + std::to_string(declared_clauses) +
                              " clauses but " + std::to_string(f.clauses.size()) +
                              " were read");
    return f;
}

CnfFormula parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f, const std::string& comment) {
    std::ostringstream out;
    if (!comment.empty())
        out << "c " << comment << "\n";
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause)
            out << lit << " ";
        out << "0\n";
    }
    return out.str();
}

std::uint64_t maxsat_evaluate(const CnfFormula& f, const BitString& x) {
    if (x.size() != f.num_vars)
        throw std::invalid_argument("assignment length does not match variable count");
    std::uint64_t unsatisfied = 0;
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            const bool value = x[var - 1] != 0;
            if (value == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat)
            ++unsatisfied;
    }
    return unsatisfied;
}

CnfFormula generate_uniform_3sat(Rng& rng, std::size_t vars, std::size_t clauses) {
    if (vars < 3)
        throw std::invalid_argument("uniform 3-SAT needs at least 3 variables");
    CnfFormula f;
    f.num_vars = vars;
    std::set<std::vector<int>> seen;
    while (f.clauses.size() < clauses) {
        int v[3];
        v[0] = static_cast<int>(rng.next_below(vars)) + 1;
        do {
            v[1] = static_cast<int>(rng.next_below(vars)) + 1;
        } while (v[1] == v[0]);
        do {
            v[2] = static_cast<int>(rng.next_below(vars)) + 1;
        } while (v[2] == v[0] || v[2] == v[1]);
        std::vector<int> clause(3);
        for (int i = 0; i < 3; ++i)
            clause[static_cast<std::size_t>(i)] = rng.next_bool() ? v[i] : -v[i];
        std::vector<int> key = clause;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            continue;
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

namespace {

// assignment: 0 unset, 1 true, -1 false
bool dpll(const CnfFormula& f, std::vector<int>& assign) {
    // unit propagation
    std::vector<int> trail;
    for (;;) {
        int unit = 0;
        for (const auto& clause : f.clauses) {
            bool sat = false;
            int unassigned = 0, last_free = 0;
            for (int lit : clause) {
                const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
                const int a = assign[var];
                if (a == 0) {
                    ++unassigned;
                    last_free = lit;
                } else if ((a > 0) == (lit > 0)) {
                    sat = true;
                    break;
                }
            }
            if (sat)
                continue;
            if (unassigned == 0) { // conflict
                for (int v : trail)
                    assign[static_cast<std::size_t>(v)] = 0;
                return false;
            }
            if (unassigned == 1) {
                unit = last_free;
                break;
            }
        }
        if (unit == 0)
            break;
        const std::size_t var = static_cast<std::size_t>(unit < 0 ? -unit : unit);
        assign[var] = unit > 0 ? 1 : -1;
        trail.push_back(static_cast<int>(var));
    }

    std::size_t branch = 0;
    for (std::size_t v = 1; v <= f.num_vars; ++v) {
        if (assign[v] == 0) {
            branch = v;
            break;
        }
    }
    if (branch == 0)
        return true; // everything assigned, no conflict

    for (int value : {1, -1}) {
        assign[branch] = value;
        if (dpll(f, assign))
            return true;
        assign[branch] = 0;
    }
    for (int v : trail)
        assign[static_cast<std::size_t>(v)] = 0;
    return false;
}

} // namespace

bool dpll_satisfiable(const CnfFormula& f) {
    std::vector<int> assign(f.num_vars + 1, 0);
    return dpll(f, assign);
}

} // namespace ffalab
