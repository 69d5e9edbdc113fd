#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ffalab/stats.hpp"

using namespace ffalab;

TEST_CASE("ert over run sets") {
    CHECK(ert({{true, 100}, {true, 100}}) == doctest::Approx(100));
    CHECK(ert({{true, 500}, {false, 1000}}) == doctest::Approx(1500));
    CHECK(std::isinf(ert({{false, 10}, {false, 10}})));
    CHECK_THROWS_AS(ert({}), std::invalid_argument);
}

TEST_CASE("ert equals the mean hitting time when every run succeeds") {
    std::vector<RunOutcome> runs = {{true, 120}, {true, 80}, {true, 400}};
    std::vector<std::uint64_t> hits = {120, 80, 400};
    const CellSummary cell = summarize_cell(runs, hits);
    CHECK(cell.ert == doctest::Approx(cell.mean));
    CHECK(cell.mean == doctest::Approx(200.0));
}

TEST_CASE("ecdf over ert") {
    EcdfOverErt curve({10, 20, 30});
    CHECK(curve.at(20) == doctest::Approx(2.0 / 3.0));
    CHECK(curve.at(9) == doctest::Approx(0.0));
    CHECK(curve.at(1e9) == doctest::Approx(1.0));

    const double inf = std::numeric_limits<double>::infinity();
    EcdfOverErt all_failed({inf, inf});
    CHECK(all_failed.at(1e18) == doctest::Approx(0.0));

    EcdfOverErt half({3091.0, inf});
    CHECK(half.at(1e4) == doctest::Approx(0.5));

    // monotone, right-continuous, bounded by 1
    EcdfOverErt c({5, 5, 7, inf});
    double prev = -1;
    for (double t : {0.0, 4.9, 5.0, 5.1, 6.9, 7.0, 100.0}) {
        const double v = c.at(t);
        CHECK(v >= prev);
        CHECK(v <= 1.0);
        prev = v;
    }
    CHECK(c.at(5.0) == doctest::Approx(0.5)); // jump included at t
}

TEST_CASE("type-7 quantiles") {
    std::vector<double> v;
    for (int i = 1; i <= 100; ++i)
        v.push_back(i);
    CHECK(quantile(v, 0.5) == doctest::Approx(50.5));
    CHECK(quantile(v, 0.0) == doctest::Approx(1.0));
    CHECK(quantile(v, 1.0) == doctest::Approx(100.0));

    // cross-check against the interpolation formula evaluated by hand:
    // h = (4-1)*0.159 = 0.477 -> 1 + 0.477*(2-1)
    CHECK(quantile({1, 2, 3, 4}, 0.159) == doctest::Approx(1.477));
    CHECK(quantile({4, 2, 1, 3}, 0.159) == doctest::Approx(1.477)); // unsorted input
}

TEST_CASE("theory oracle for onemax") {
    // recompute the closed form independently of the implementation
    const double e = std::exp(1.0);
    for (std::size_t s : {std::size_t{16}, std::size_t{32}, std::size_t{64}}) {
        const double sd = static_cast<double>(s);
        const double plain =
            e * sd * std::log(sd) - 1.89254 * sd + 0.5 * e * std::log(sd) + 0.59789875;
        const double corrected = plain * (1.0 - std::pow(1.0 - 1.0 / sd, sd));
        CHECK(theory_ea_onemax(s) == doctest::Approx(corrected).epsilon(1e-12));
    }
    CHECK(theory_ea_onemax(32) == doctest::Approx(157.0710107931744).epsilon(1e-9));
    // the correction approaches 1 - 1/e from below
    CHECK(gt0_correction(1000000) == doctest::Approx(1.0 - 1.0 / std::exp(1.0)).epsilon(1e-5));
}

TEST_CASE("theory oracle for leadingones") {
    const double s2 = 0.5 * 4.0 * (std::pow(0.5, -1.0) - 1.0 + 0.5) * (1.0 - 0.25);
    CHECK(theory_ea_leadingones(2) == doctest::Approx(s2).epsilon(1e-12));
    CHECK(theory_ea_leadingones(32) == doctest::Approx(557.5359320994532).epsilon(1e-9));
    // without the correction the large-s limit is 0.5 s^2 (e - 1)
    const double s = 100000.0;
    const double uncorrected = theory_ea_leadingones(100000) / gt0_correction(100000);
    CHECK(uncorrected / (0.5 * s * s * (std::exp(1.0) - 1.0)) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("theory oracles increase with s") {
    for (std::size_t s = 3; s < 200; ++s) {
        CHECK(theory_ea_onemax(s + 1) > theory_ea_onemax(s));
        CHECK(theory_ea_leadingones(s + 1) > theory_ea_leadingones(s));
    }
}

TEST_CASE("weighted scale-model fit") {
    // exact data on 5 s^2 ln s
    std::vector<ScalePoint> exact;
    for (double s : {8.0, 16.0, 32.0, 64.0})
        exact.push_back({s, 5.0 * s * s * std::log(s), 1.0});
    ScaleFit fit = fit_scale_model(exact);
    CHECK(fit.coefficient == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

    // a huge-variance outlier barely moves the coefficient
    std::vector<ScalePoint> noisy = exact;
    noisy.push_back({128.0, 1e9, 1e12});
    // closed-form weighted least squares computed by hand
    double swgy = 0, swgg = 0;
    for (const ScalePoint& p : noisy) {
        const double w = 1.0 / p.variance, g = p.s * p.s * std::log(p.s);
        swgy += w * g * p.mean_runtime;
        swgg += w * g * g;
    }
    ScaleFit noisy_fit = fit_scale_model(noisy);
    CHECK(noisy_fit.coefficient == doctest::Approx(swgy / swgg).epsilon(1e-12));
    CHECK(noisy_fit.coefficient == doctest::Approx(5.0).epsilon(0.05));

    // two points: coefficient is the weighted projection, by hand
    std::vector<ScalePoint> two = {{10.0, 900.0, 4.0}, {20.0, 4500.0, 9.0}};
    double swgy2 = 0, swgg2 = 0;
    for (const ScalePoint& p : two) {
        const double w = 1.0 / p.variance, g = p.s * p.s * std::log(p.s);
        swgy2 += w * g * p.mean_runtime;
        swgg2 += w * g * g;
    }
    CHECK(fit_scale_model(two).coefficient == doctest::Approx(swgy2 / swgg2).epsilon(1e-12));

    CHECK_THROWS_AS(fit_scale_model({{10.0, 900.0, 0.0}, {20.0, 4500.0, 0.0}}),
                    std::invalid_argument);
}
