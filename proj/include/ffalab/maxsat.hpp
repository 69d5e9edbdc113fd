#ifndef FFALAB_MAXSAT_HPP
#define FFALAB_MAXSAT_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ffalab/problem.hpp"
#include "ffalab/rng.hpp"

namespace ffalab {

/// CNF formula: clauses of nonzero literals; positive literal = variable,
/// negative = negated variable, variables numbered 1..num_vars.
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;

    std::size_t num_clauses() const { return clauses.size(); }
};

/// DIMACS parse failure; carries the 1-based input line.
class DimacsError : public std::runtime_error {
public:
    enum class Kind { bad_header, literal_out_of_range, clause_count_mismatch, empty_clause };

    DimacsError(Kind kind, int line, const std::string& message)
        : std::runtime_error("dimacs line " + std::to_string(line) + ": " + message),
          kind_(kind), line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

private:
    Kind kind_;
    int line_;
};

/// Parse DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` header,
/// whitespace-separated literals with `0` terminators. `%` and a trailing
/// `0` line (SATLib habit) are tolerated after the last clause.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);

std::string to_dimacs(const CnfFormula& f, const std::string& comment = "");

/// Number of clauses with no satisfied literal; 0 iff x satisfies f.
/// Every clause is recomputed on every call.
std::uint64_t maxsat_evaluate(const CnfFormula& f, const BitString& x);

class MaxSatProblem final : public Problem {
public:
    MaxSatProblem(CnfFormula formula, std::string spec_name)
        : formula_(std::move(formula)), name_(std::move(spec_name)) {}

    std::uint64_t evaluate(const BitString& x) const override {
        return maxsat_evaluate(formula_, x);
    }
    std::size_t dimension() const override { return formula_.num_vars; }
    std::uint64_t upper_bound() const override { return formula_.num_clauses(); }
    std::string name() const override { return name_; }

    const CnfFormula& formula() const { return formula_; }

private:
    CnfFormula formula_;
    std::string name_;
};

/// Uniform random 3-SAT: every clause draws three distinct variables and
/// random signs; exact duplicate clauses are redrawn.
CnfFormula generate_uniform_3sat(Rng& rng, std::size_t vars, std::size_t clauses);

/// Complete satisfiability check (DPLL with unit propagation); usable up to
/// a few dozen variables, which covers corpus generation.
bool dpll_satisfiable(const CnfFormula& f);

} // namespace ffalab

#endif
