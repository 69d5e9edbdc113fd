#include <doctest.h>

#include <map>
#include <optional>
#include <set>

#include "ffalab/problem.hpp"

using namespace ffalab;

namespace {

BitString bits_of(std::uint64_t pattern, std::size_t s) {
    BitString x(s);
    for (std::size_t i = 0; i < s; ++i)
        x.set(i, (pattern >> i) & 1);
    return x;
}

BitString with_ones(std::size_t s, std::size_t ones) {
    BitString x(s);
    for (std::size_t i = 0; i < ones; ++i)
        x.set(i, true);
    return x;
}

} // namespace

TEST_CASE("onemax examples") {
    OneMax p(32);
    CHECK(p.evaluate(with_ones(32, 32)) == 0);
    CHECK(p.evaluate(with_ones(32, 0)) == 32);
    CHECK(OneMax(5).evaluate(BitString::from_string("10110")) == 2);
    // zero-count oracle
    const BitString x = BitString::from_string("10110");
    std::size_t zeros = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        zeros += x[i] == 0;
    CHECK(OneMax(5).evaluate(x) == zeros);
}

TEST_CASE("leadingones examples") {
    LeadingOnes p(6);
    CHECK(p.evaluate(BitString::from_string("111111")) == 0);
    CHECK(p.evaluate(BitString::from_string("011111")) == 6);
    CHECK(p.evaluate(BitString::from_string("110101")) == 4);
    // prefix-scan oracle over every 6-bit string
    for (std::uint64_t v = 0; v < 64; ++v) {
        const BitString x = bits_of(v, 6);
        std::size_t prefix = 0;
        while (prefix < 6 && x[prefix])
            ++prefix;
        CHECK(p.evaluate(x) == 6 - prefix);
    }
}

TEST_CASE("twomax examples") {
    TwoMax p(32);
    CHECK(p.evaluate(with_ones(32, 32)) == 0);
    CHECK(p.evaluate(with_ones(32, 0)) == 1);
    CHECK(p.evaluate(with_ones(32, 16)) == 17);
}

TEST_CASE("jump examples and parameter checks") {
    Jump p(32, 6);
    CHECK(p.evaluate(with_ones(32, 32)) == 0);
    CHECK(p.evaluate(with_ones(32, 30)) == 36);
    CHECK(p.evaluate(with_ones(32, 26)) == 6);
    CHECK_THROWS_AS(Jump(8, 9), std::invalid_argument);
    CHECK_THROWS_AS(Jump(8, 8), std::invalid_argument);
    CHECK_THROWS_AS(Jump(8, 1), std::invalid_argument);
}

TEST_CASE("trap examples") {
    Trap p(5);
    CHECK(p.evaluate(with_ones(5, 0)) == 0);
    CHECK(p.evaluate(with_ones(5, 5)) == 1);
    CHECK(p.evaluate(with_ones(5, 3)) == 3);
}

TEST_CASE("plateau examples and parameter checks") {
    Plateau p(32, 5);
    CHECK(p.evaluate(with_ones(32, 32)) == 0);
    CHECK(p.evaluate(with_ones(32, 30)) == 5);
    CHECK(p.evaluate(with_ones(32, 27)) == 5); // first branch value coincides with k
    CHECK_THROWS_AS(Plateau(8, 9), std::invalid_argument);
    CHECK_THROWS_AS(Plateau(4, 1), std::invalid_argument);
}

TEST_CASE("upper bounds are tight under exhaustive enumeration") {
    const std::size_t s = 10;
    std::vector<std::unique_ptr<Problem>> problems;
    problems.push_back(std::make_unique<OneMax>(s));
    problems.push_back(std::make_unique<LeadingOnes>(s));
    problems.push_back(std::make_unique<TwoMax>(s));
    problems.push_back(std::make_unique<Trap>(s));
    for (std::size_t k = 2; k <= s - 1; ++k) {
        problems.push_back(std::make_unique<Jump>(s, k));
        problems.push_back(std::make_unique<Plateau>(s, k));
    }
    for (const auto& p : problems) {
        std::uint64_t max_seen = 0;
        bool optimum_seen = false;
        for (std::uint64_t v = 0; v < (1ULL << s); ++v) {
            const std::uint64_t f = p->evaluate(bits_of(v, s));
            CHECK(f <= p->upper_bound());
            max_seen = std::max(max_seen, f);
            optimum_seen = optimum_seen || f == 0;
        }
        CHECK(max_seen == p->upper_bound());
        CHECK(optimum_seen);
    }
}

TEST_CASE("jump and trap are objective-value bijections of onemax") {
    const std::size_t s = 11;
    OneMax onemax(s);
    Trap trap(s);
    for (std::size_t k = 2; k <= s - 1; ++k) {
        Jump jump(s, k);
        std::map<std::uint64_t, std::uint64_t> jump_of, trap_of;
        for (std::uint64_t v = 0; v < (1ULL << s); ++v) {
            const BitString x = bits_of(v, s);
            const std::uint64_t om = onemax.evaluate(x);
            const std::uint64_t jm = jump.evaluate(x);
            const std::uint64_t tr = trap.evaluate(x);
            // each onemax value maps to exactly one jump/trap value
            if (jump_of.count(om))
                CHECK(jump_of[om] == jm);
            jump_of[om] = jm;
            if (trap_of.count(om))
                CHECK(trap_of[om] == tr);
            trap_of[om] = tr;
            // the stated closed forms
            CHECK(jm == (om == 0 ? 0 : (om >= k ? om : k + s - om)));
            CHECK(tr == (om == s ? 0 : om + 1));
        }
        std::set<std::uint64_t> jump_values, trap_values;
        for (const auto& [om, jm] : jump_of)
            jump_values.insert(jm);
        for (const auto& [om, tr] : trap_of)
            trap_values.insert(tr);
        CHECK(jump_values.size() == s + 1); // injective
        CHECK(trap_values.size() == s + 1);
    }
}

TEST_CASE("plateau is not injective as a function of the onemax value") {
    const std::size_t s = 10, k = 3;
    OneMax onemax(s);
    Plateau plateau(s, k);
    std::map<std::uint64_t, std::uint64_t> plateau_of;
    std::map<std::uint64_t, std::set<std::uint64_t>> preimages;
    for (std::uint64_t v = 0; v < (1ULL << s); ++v) {
        const BitString x = bits_of(v, s);
        preimages[plateau.evaluate(x)].insert(onemax.evaluate(x));
    }
    CHECK(preimages[k].size() >= 2); // codomain shrinks on the plateau
}
