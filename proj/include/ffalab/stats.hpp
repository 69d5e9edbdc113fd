#ifndef FFALAB_STATS_HPP
#define FFALAB_STATS_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ffalab {

/// Terminal state of one run as far as the statistics care: did it hit the
/// target, and how many FEs did it consume in total.
struct RunOutcome {
    bool success = false;
    std::uint64_t fes = 0;
};

/// Empirically estimated expected runtime: total FEs of all runs divided by
/// the number of successful runs; +infinity when nothing succeeded. Models
/// independent restarts after failed runs.
double ert(const std::vector<RunOutcome>& runs);

/// Empirical quantile with linear interpolation between order statistics
/// (the type-7 convention). q in [0, 1]; values need not be sorted.
double quantile(std::vector<double> values, double q);

/// Success fraction, ERT, and the moments/quantiles of the successful
/// hitting times for one (algorithm, instance) cell.
struct CellSummary {
    std::size_t runs = 0;
    std::size_t successes = 0;
    double success_fraction = 0.0;
    double ert = std::numeric_limits<double>::infinity();
    double mean = 0.0;   // of successful hitting times
    double median = 0.0;
    double stddev = 0.0; // sample standard deviation
    double q_low = 0.0;  // 15.9% quantile
    double q_high = 0.0; // 84.1% quantile
};

CellSummary summarize_cell(const std::vector<RunOutcome>& runs,
                           const std::vector<std::uint64_t>& hitting_times);

/// Fraction of instances whose ERT lies at or below a time threshold.
/// Instances with infinite ERT never count, but stay in the denominator.
class EcdfOverErt {
public:
    explicit EcdfOverErt(std::vector<double> erts);

    double at(double t) const;

    /// The step points (t, fraction), one per finite ERT, sorted by t.
    std::vector<std::pair<double, double>> points() const;

    std::size_t instances() const { return total_; }

private:
    std::vector<double> finite_sorted_;
    std::size_t total_;
};

/// 1 - (1-1/s)^s: the fraction of standard-mutation offspring that flip at
/// least one bit; expected runtimes of the plain EA shrink by this factor
/// for the >0 variant.
double gt0_correction(std::size_t s);

/// Closed-form expected runtime of the (1+1)-EA>0 on OneMax of dimension s
/// (leading terms only, the O((ln s)/s) term is dropped).
double theory_ea_onemax(std::size_t s);

/// Closed-form expected runtime of the (1+1)-EA>0 on LeadingOnes.
double theory_ea_leadingones(std::size_t s);

/// Weighted least-squares fit of mean runtimes against the single regressor
/// s^2 ln s, weights = 1/variance per point.
struct ScalePoint {
    double s;
    double mean_runtime;
    double variance;
};

struct ScaleFit {
    double coefficient = 0.0;
    double r_squared = 0.0;
};

ScaleFit fit_scale_model(const std::vector<ScalePoint>& points);

} // namespace ffalab

#endif
