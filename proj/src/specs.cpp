#include "ffalab/specs.hpp"

#include <charconv>
#include <fstream>

#include "ffalab/maxsat.hpp"
#include "ffalab/wmodel.hpp"

namespace ffalab {

SpecString SpecString::parse(const std::string& text) {
    SpecString s;
    const std::size_t colon = text.find(':');
    s.name = text.substr(0, colon);
    if (s.name.empty())
        throw SpecError("empty spec string");
    if (colon == std::string::npos)
        return s;
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string::npos)
            comma = rest.size();
        const std::string kv = rest.substr(pos, comma - pos);
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 > kv.size())
            throw SpecError("bad argument '" + kv + "' in spec '" + text + "'");
        if (!s.args.emplace(kv.substr(0, eq), kv.substr(eq + 1)).second)
            throw SpecError("duplicate argument '" + kv.substr(0, eq) + "' in spec '" + text + "'");
        pos = comma + 1;
    }
    return s;
}

std::uint64_t SpecString::u64(const std::string& key) const {
    const auto it = args.find(key);
    if (it == args.end())
        throw SpecError("spec '" + name + "' is missing argument '" + key + "'");
    std::uint64_t v = 0;
    const std::string& raw = it->second;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
    if (ec != std::errc() || ptr != raw.data() + raw.size())
        throw SpecError("argument '" + key + "' of spec '" + name + "' is not an integer");
    return v;
}

std::string SpecString::str(const std::string& key) const {
    const auto it = args.find(key);
    if (it == args.end())
        throw SpecError("spec '" + name + "' is missing argument '" + key + "'");
    return it->second;
}

void SpecString::expect_keys(std::initializer_list<const char*> keys) const {
    for (const auto& [key, value] : args) {
        bool known = false;
        for (const char* k : keys)
            if (key == k)
                known = true;
        if (!known)
            throw SpecError("spec '" + name + "' does not take argument '" + key + "'");
    }
}

std::unique_ptr<Problem> make_problem(const std::string& spec) {
    const SpecString s = SpecString::parse(spec);
    try {
        if (s.name == "onemax") {
            s.expect_keys({"s"});
            return std::make_unique<OneMax>(s.u64("s"));
        }
        if (s.name == "leadingones") {
            s.expect_keys({"s"});
            return std::make_unique<LeadingOnes>(s.u64("s"));
        }
        if (s.name == "twomax") {
            s.expect_keys({"s"});
            return std::make_unique<TwoMax>(s.u64("s"));
        }
        if (s.name == "jump") {
            s.expect_keys({"s", "k"});
            return std::make_unique<Jump>(s.u64("s"), s.u64("k"));
        }
        if (s.name == "trap") {
            s.expect_keys({"s"});
            return std::make_unique<Trap>(s.u64("s"));
        }
        if (s.name == "plateau") {
            s.expect_keys({"s", "k"});
            return std::make_unique<Plateau>(s.u64("s"), s.u64("k"));
        }
        if (s.name == "wmodel") {
            if (s.args.count("id")) {
                s.expect_keys({"id"});
                return std::make_unique<WModelProblem>(
                    WModelProblem::from_catalog(static_cast<int>(s.u64("id"))));
            }
            s.expect_keys({"n", "m", "nu", "gamma"});
            WModelParams p;
            p.n = s.u64("n");
            p.m = s.args.count("m") ? s.u64("m") : 1;
            p.nu = s.args.count("nu") ? s.u64("nu") : 0;
            p.gamma = s.args.count("gamma") ? s.u64("gamma") : 0;
            return std::make_unique<WModelProblem>(p);
        }
        if (s.name == "maxsat") {
            s.expect_keys({"path"});
            const std::string path = s.str("path");
            std::ifstream in(path);
            if (!in)
                throw IoError("cannot open maxsat instance '" + path + "'");
            return std::make_unique<MaxSatProblem>(parse_dimacs(in), spec);
        }
    } catch (const std::invalid_argument& e) {
        throw SpecError("spec '" + spec + "': " + e.what());
    }
    throw SpecError("unknown problem spec '" + spec + "'");
}

Transform make_transform(const std::string& spec) {
    const SpecString s = SpecString::parse(spec);
    if (s.name == "identity") {
        s.expect_keys({});
        return Transform::identity();
    }
    if (s.name == "neg") {
        s.expect_keys({});
        return Transform::negation();
    }
    if (s.name == "affine") {
        s.expect_keys({"a", "b"});
        try {
            return Transform::affine(s.u64("a"), s.args.count("b") ? s.u64("b") : 0);
        } catch (const std::invalid_argument& e) {
            throw SpecError("spec '" + spec + "': " + e.what());
        }
    }
    if (s.name == "perm") {
        s.expect_keys({"seed"});
        return Transform::permutation(s.u64("seed"));
    }
    if (s.name == "md5") {
        s.expect_keys({});
        return Transform::md5();
    }
    throw SpecError("unknown transform spec '" + spec + "'");
}

bool is_jssp_spec(const std::string& spec) {
    return SpecString::parse(spec).name == "jssp";
}

JsspInstance make_jssp_instance(const std::string& spec) {
    const SpecString s = SpecString::parse(spec);
    if (s.name != "jssp")
        throw SpecError("expected a jssp spec, got '" + spec + "'");
    s.expect_keys({"path"});
    const std::string path = s.str("path");
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open jssp instance '" + path + "'");
    try {
        return JsspInstance::parse_orlib(in);
    } catch (const std::invalid_argument& e) {
        throw SpecError("jssp instance '" + path + "': " + e.what());
    }
}

std::optional<std::size_t> dimension_of_spec(const std::string& spec) {
    try {
        const SpecString s = SpecString::parse(spec);
        if (s.args.count("s"))
            return s.u64("s");
        if (s.name == "wmodel") {
            if (s.args.count("id")) {
                const auto id = static_cast<int>(s.u64("id"));
                for (const WModelCatalogRow& row : wmodel_catalog())
                    if (row.id == id)
                        return row.n * row.m;
                return std::nullopt;
            }
            const std::size_t m = s.args.count("m") ? s.u64("m") : 1;
            return s.u64("n") * m;
        }
        if (s.name == "maxsat")
            return parse_dimacs_file(s.str("path")).num_vars;
        if (s.name == "jssp") {
            const JsspInstance inst = JsspInstance::parse_orlib_file(s.str("path"));
            return inst.jobs() * inst.machines();
        }
    } catch (...) {
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace ffalab
