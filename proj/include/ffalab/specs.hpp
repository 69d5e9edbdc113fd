#ifndef FFALAB_SPECS_HPP
#define FFALAB_SPECS_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "ffalab/jssp.hpp"
#include "ffalab/problem.hpp"
#include "ffalab/transform.hpp"

namespace ffalab {

/// Bad problem/transform/config syntax: a usage error (exit code 2).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable corpus/log path: an I/O error (exit code 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Split "name:k1=v1,k2=v2" into a name and its arguments.
struct SpecString {
    std::string name;
    std::map<std::string, std::string> args;

    static SpecString parse(const std::string& text);

    std::uint64_t u64(const std::string& key) const;
    std::string str(const std::string& key) const;
    void expect_keys(std::initializer_list<const char*> keys) const;
};

/// Problem specs: onemax:s=N, leadingones:s=N, twomax:s=N, jump:s=N,k=K,
/// trap:s=N, plateau:s=N,k=K, wmodel:id=I, wmodel:n=..,m=..,nu=..,gamma=..,
/// maxsat:path=FILE.
std::unique_ptr<Problem> make_problem(const std::string& spec);

/// Transform specs: identity, neg, affine:a=..,b=.., perm:seed=.., md5.
Transform make_transform(const std::string& spec);

/// jssp:path=FILE
bool is_jssp_spec(const std::string& spec);
JsspInstance make_jssp_instance(const std::string& spec);

/// The problem dimension implied by a spec string when derivable (opens the
/// instance file for maxsat/jssp specs).
std::optional<std::size_t> dimension_of_spec(const std::string& spec);

} // namespace ffalab

#endif
