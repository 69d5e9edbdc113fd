#include "ffalab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffalab {

double ert(const std::vector<RunOutcome>& runs) {
    if (runs.empty())
        throw std::invalid_argument("ert of an empty run set");
    std::uint64_t total = 0;
    std::size_t successes = 0;
    for (const RunOutcome& r : runs) {
        total += r.fes;
        if (r.success)
            ++successes;
    }
    if (successes == 0)
        return std::numeric_limits<double>::infinity();
    return static_cast<double>(total) / static_cast<double>(successes);
}

double quantile(std::vector<double> values, double q) {
    if (values.empty())
        throw std::invalid_argument("quantile of an empty sample");
    if (q < 0.0 || q > 1.0)
        throw std::invalid_argument("quantile level outside [0, 1]");
    std::sort(values.begin(), values.end());
    const double h = static_cast<double>(values.size() - 1) * q;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= values.size())
        return values.back();
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

CellSummary summarize_cell(const std::vector<RunOutcome>& runs,
                           const std::vector<std::uint64_t>& hitting_times) {
    CellSummary c;
    c.runs = runs.size();
    for (const RunOutcome& r : runs)
        if (r.success)
            ++c.successes;
    c.success_fraction =
        c.runs == 0 ? 0.0 : static_cast<double>(c.successes) / static_cast<double>(c.runs);
    c.ert = runs.empty() ? std::numeric_limits<double>::infinity() : ert(runs);
    if (hitting_times.empty())
        return c;

    std::vector<double> ht(hitting_times.begin(), hitting_times.end());
    double sum = 0.0;
    for (double v : ht)
        sum += v;
    c.mean = sum / static_cast<double>(ht.size());
    double ss = 0.0;
    for (double v : ht)
        ss += (v - c.mean) * (v - c.mean);
    c.stddev = ht.size() > 1 ? std::sqrt(ss / static_cast<double>(ht.size() - 1)) : 0.0;
    c.median = quantile(ht, 0.5);
    c.q_low = quantile(ht, 0.159);
    c.q_high = quantile(ht, 0.841);
    return c;
}

EcdfOverErt::EcdfOverErt(std::vector<double> erts) : total_(erts.size()) {
    for (double e : erts)
        if (std::isfinite(e))
            finite_sorted_.push_back(e);
    std::sort(finite_sorted_.begin(), finite_sorted_.end());
}

double EcdfOverErt::at(double t) const {
    if (total_ == 0)
        return 0.0;
    const auto it = std::upper_bound(finite_sorted_.begin(), finite_sorted_.end(), t);
    return static_cast<double>(it - finite_sorted_.begin()) / static_cast<double>(total_);
}

std::vector<std::pair<double, double>> EcdfOverErt::points() const {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(finite_sorted_.size());
    for (std::size_t i = 0; i < finite_sorted_.size(); ++i)
        pts.emplace_back(finite_sorted_[i],
                         static_cast<double>(i + 1) / static_cast<double>(total_));
    return pts;
}

double gt0_correction(std::size_t s) {
    const double sd = static_cast<double>(s);
    return 1.0 - std::pow(1.0 - 1.0 / sd, sd);
}

double theory_ea_onemax(std::size_t s) {
    if (s < 2)
        throw std::invalid_argument("theory_ea_onemax needs s >= 2");
    constexpr double kC1 = 1.89254;
    constexpr double kC2 = 0.59789875;
    const double sd = static_cast<double>(s);
    const double e = std::exp(1.0);
    const double plain = e * sd * std::log(sd) - kC1 * sd + 0.5 * e * std::log(sd) + kC2;
    return plain * gt0_correction(s);
}

double theory_ea_leadingones(std::size_t s) {
    if (s < 2)
        throw std::invalid_argument("theory_ea_leadingones needs s >= 2");
    const double sd = static_cast<double>(s);
    const double plain =
        0.5 * sd * sd * (std::pow(1.0 - 1.0 / sd, 1.0 - sd) - 1.0 + 1.0 / sd);
    return plain * gt0_correction(s);
}

ScaleFit fit_scale_model(const std::vector<ScalePoint>& points) {
    std::size_t usable = 0;
    for (const ScalePoint& p : points)
        if (p.variance > 0.0)
            ++usable;
    if (usable < 2)
        throw std::invalid_argument("scale fit needs at least two points with positive variance");

    double swgy = 0.0, swgg = 0.0, sw = 0.0, swy = 0.0;
    for (const ScalePoint& p : points) {
        if (p.variance <= 0.0)
            continue;
        const double w = 1.0 / p.variance;
        const double g = p.s * p.s * std::log(p.s);
        swgy += w * g * p.mean_runtime;
        swgg += w * g * g;
        sw += w;
        swy += w * p.mean_runtime;
    }
    ScaleFit fit;
    fit.coefficient = swgy / swgg;

    const double ybar = swy / sw;
    double ss_res = 0.0, ss_tot = 0.0;
    for (const ScalePoint& p : points) {
        if (p.variance <= 0.0)
            continue;
        const double w = 1.0 / p.variance;
        const double g = p.s * p.s * std::log(p.s);
        const double r = p.mean_runtime - fit.coefficient * g;
        ss_res += w * r * r;
        ss_tot += w * (p.mean_runtime - ybar) * (p.mean_runtime - ybar);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

} // namespace ffalab
