// Divide-the-best interval scheme for univariate Lipschitz minimization,
// generic over the scalar type. One iteration engine covers the geometric
// and information characteristics crossed with four Lipschitz-estimation
// strategies (a-priori bound, adaptive global estimate, "maximum" and
// "maximum-additive" local tuning).
//
// The engine starts from trials at both domain endpoints, then repeatedly:
// keeps trials sorted, estimates per-interval Lipschitz constants, scores
// every interval with a characteristic, subdivides the lowest-scoring
// interval (first index on ties) at
//
//     x_new = (x_right + x_left)/2 - (z_right - z_left)/(2*l)
//
// and stops once the selected interval is no wider than
// epsilon_fraction*(b - a) or the trial cap is hit.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grosslip/problem.hpp"
#include "grosslip/scalar.hpp"

namespace grosslip {

/// The selected interval's estimate does not dominate its divided
/// difference (l <= H), so no lower minorant exists there; an a-priori
/// Lipschitz bound that is too small is the usual cause.
class minorant_violation : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CharacteristicKind { geometric, information };
enum class EstimatorKind { apriori, global, maximum_local, maximum_additive_local };
enum class StopReason { accuracy, iteration_cap };

template <ScalarLike S>
struct MethodConfig {
    CharacteristicKind characteristic = CharacteristicKind::geometric;
    EstimatorKind estimator = EstimatorKind::global;
    /// Reliability parameter r; unused by the a-priori estimator.
    double reliability = 1.1;
    /// A-priori Lipschitz bound, required (positive) by EstimatorKind::apriori.
    S apriori_bound = scalar_traits<S>::zero();
    /// Search accuracy as a fraction of the domain width.
    double epsilon_fraction = 1e-4;
    /// Cap on objective evaluations (including the two initial ones).
    std::size_t max_iterations = 1'000'000;
    /// Keep per-iteration estimate/characteristic vectors in the report.
    bool record_traces = false;

    void validate() const {
        if (!(reliability > 1.0))
            throw std::invalid_argument("reliability parameter must exceed 1");
        if (!(epsilon_fraction > 0.0))
            throw std::invalid_argument("epsilon fraction must be positive");
        if (max_iterations < 2)
            throw std::invalid_argument("iteration cap must allow the two initial trials");
        if (estimator == EstimatorKind::apriori && !scalar_positive(apriori_bound))
            throw std::invalid_argument("a-priori estimator needs a positive Lipschitz bound");
    }
};

template <ScalarLike S>
struct Trial {
    double x;
    S value;
};

template <ScalarLike S>
struct IterationTrace {
    std::vector<S> estimates;        // l, one per interval
    std::vector<S> characteristics;  // R, one per interval
    std::size_t selected;            // t, counting intervals from 2
};

template <ScalarLike S>
struct RunReport {
    std::vector<Trial<S>> trials;        // in evaluation order
    std::vector<std::size_t> selected;   // t per iteration
    std::vector<IterationTrace<S>> traces;  // filled when record_traces
    double best_x = 0.0;
    S best_value = scalar_traits<S>::zero();
    StopReason stop = StopReason::accuracy;

    std::size_t trial_count() const { return trials.size(); }
};

/// H_i = |z_i - z_{i-1}| / (x_i - x_{i-1}) for every adjacent pair.
template <ScalarLike S>
std::vector<S> divided_differences(std::span<const double> xs, std::span<const S> zs) {
    if (xs.size() != zs.size() || xs.size() < 2)
        throw std::invalid_argument("need matching abscissa/value arrays with >= 2 points");
    std::vector<S> diffs;
    diffs.reserve(xs.size() - 1);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        double width = xs[i] - xs[i - 1];
        if (!(width > 0.0)) throw std::invalid_argument("abscissas must be strictly increasing");
        diffs.push_back(scalar_traits<S>::div_finite(
            scalar_abs(scalar_traits<S>::sub(zs[i], zs[i - 1])), width));
    }
    return diffs;
}

template <ScalarLike S>
S max_divided_difference(std::span<const S> diffs) {
    S best = diffs.front();
    for (std::size_t i = 1; i < diffs.size(); ++i) best = scalar_max(best, diffs[i]);
    return best;
}

template <ScalarLike S>
std::vector<S> apriori_estimates(std::size_t intervals, const S& bound) {
    return std::vector<S>(intervals, bound);
}

/// Uniform adaptive estimate r*max(H_i), or one when all values coincide.
template <ScalarLike S>
std::vector<S> global_estimates(std::span<const S> diffs, double reliability) {
    S max_diff = max_divided_difference(diffs);
    S value = scalar_positive(max_diff) ? scalar_traits<S>::mul_finite(max_diff, reliability)
                                        : scalar_traits<S>::one();
    return std::vector<S>(diffs.size(), value);
}

namespace detail {

template <ScalarLike S>
S local_window_max(std::span<const S> diffs, std::size_t e) {
    S value = diffs[e];
    if (e > 0) value = scalar_max(value, diffs[e - 1]);
    if (e + 1 < diffs.size()) value = scalar_max(value, diffs[e + 1]);
    return value;
}

inline double max_interval_width(std::span<const double> xs) {
    double best = 0.0;
    for (std::size_t i = 1; i < xs.size(); ++i) best = std::max(best, xs[i] - xs[i - 1]);
    return best;
}

}  // namespace detail

/// "Maximum" local tuning: l_i = r*max(lambda_i, gamma_i) with
/// lambda_i the divided-difference maximum over the interval and its
/// neighbours and gamma_i = max(H)*width_i/max_width; one when all values
/// coincide.
template <ScalarLike S>
std::vector<S> mlt_estimates(std::span<const double> xs, std::span<const S> diffs,
                             double reliability) {
    S max_diff = max_divided_difference(diffs);
    std::vector<S> out;
    out.reserve(diffs.size());
    if (!scalar_positive(max_diff)) {
        out.assign(diffs.size(), scalar_traits<S>::one());
        return out;
    }
    double max_width = detail::max_interval_width(xs);
    for (std::size_t e = 0; e < diffs.size(); ++e) {
        S lambda = detail::local_window_max(diffs, e);
        S gamma = scalar_traits<S>::mul_finite(max_diff, (xs[e + 1] - xs[e]) / max_width);
        out.push_back(scalar_traits<S>::mul_finite(scalar_max(lambda, gamma), reliability));
    }
    return out;
}

/// "Maximum-additive" local tuning: l_i = r*max(H_i, (lambda_i + gamma_i)/2).
template <ScalarLike S>
std::vector<S> malt_estimates(std::span<const double> xs, std::span<const S> diffs,
                              double reliability) {
    S max_diff = max_divided_difference(diffs);
    std::vector<S> out;
    out.reserve(diffs.size());
    if (!scalar_positive(max_diff)) {
        out.assign(diffs.size(), scalar_traits<S>::one());
        return out;
    }
    double max_width = detail::max_interval_width(xs);
    for (std::size_t e = 0; e < diffs.size(); ++e) {
        S lambda = detail::local_window_max(diffs, e);
        S gamma = scalar_traits<S>::mul_finite(max_diff, (xs[e + 1] - xs[e]) / max_width);
        S blended = scalar_traits<S>::div_finite(scalar_traits<S>::add(lambda, gamma), 2.0);
        out.push_back(
            scalar_traits<S>::mul_finite(scalar_max(diffs[e], blended), reliability));
    }
    return out;
}

/// R = (z0 + z1)/2 - l*(x1 - x0)/2, the minimum of the V-shaped lower
/// minorant with slope l.
template <ScalarLike S>
S geometric_characteristic(double x0, double x1, const S& z0, const S& z1, const S& estimate) {
    return scalar_traits<S>::sub(
        scalar_traits<S>::div_finite(scalar_traits<S>::add(z1, z0), 2.0),
        scalar_traits<S>::mul_finite(estimate, 0.5 * (x1 - x0)));
}

/// R = 2*(z0 + z1) - l*(x1 - x0) - (z1 - z0)^2 / (l*(x1 - x0)).
template <ScalarLike S>
S information_characteristic(double x0, double x1, const S& z0, const S& z1,
                             const S& estimate) {
    S slack = scalar_traits<S>::mul_finite(estimate, x1 - x0);
    S dz = scalar_traits<S>::sub(z1, z0);
    return scalar_traits<S>::sub(
        scalar_traits<S>::sub(scalar_traits<S>::mul_finite(scalar_traits<S>::add(z1, z0), 2.0),
                              slack),
        scalar_traits<S>::div(scalar_traits<S>::mul(dz, dz), slack));
}

/// Smallest index attaining the minimal characteristic, reported in the
/// 2-based interval numbering (the first interval is t = 2).
template <ScalarLike S>
std::size_t select_interval(std::span<const S> characteristics) {
    if (characteristics.empty()) throw std::invalid_argument("no intervals to select from");
    std::size_t best = 0;
    for (std::size_t e = 1; e < characteristics.size(); ++e)
        if (scalar_less(characteristics[e], characteristics[best])) best = e;
    return best + 2;
}

/// x_new = (x0 + x1)/2 - (z1 - z0)/(2*l). The quotient must reduce to a
/// purely finite value; finite_value throws otherwise.
template <ScalarLike S>
double new_trial_point(double x0, double x1, const S& z0, const S& z1, const S& estimate) {
    S offset = scalar_traits<S>::div(scalar_traits<S>::sub(z1, z0),
                                     scalar_traits<S>::mul_finite(estimate, 2.0));
    return 0.5 * (x1 + x0) - scalar_traits<S>::finite_value(offset);
}

/// Stepwise driver. Construction performs the two endpoint trials; each
/// step() runs one full iteration (estimates, characteristics, selection,
/// stopping test, possibly a new trial). Observers expose the state of the
/// iteration just performed, which lets two runs be compared in lockstep.
template <ScalarLike S>
class GeneralScheme {
public:
    GeneralScheme(std::function<S(double)> objective, double lower, double upper,
                  MethodConfig<S> config)
        : objective_(std::move(objective)), config_(std::move(config)) {
        config_.validate();
        if (!(lower < upper))
            throw std::invalid_argument("domain must satisfy lower < upper");
        epsilon_ = config_.epsilon_fraction * (upper - lower);
        xs_ = {lower, upper};
        zs_.push_back(record_trial(lower));
        zs_.push_back(record_trial(upper));
    }

    bool finished() const { return stop_.has_value(); }
    StopReason stop_reason() const { return *stop_; }

    void step() {
        if (finished()) return;

        estimates_ = compute_estimates();
        characteristics_.clear();
        characteristics_.reserve(estimates_.size());
        for (std::size_t e = 0; e < estimates_.size(); ++e)
            characteristics_.push_back(
                config_.characteristic == CharacteristicKind::geometric
                    ? geometric_characteristic(xs_[e], xs_[e + 1], zs_[e], zs_[e + 1],
                                               estimates_[e])
                    : information_characteristic(xs_[e], xs_[e + 1], zs_[e], zs_[e + 1],
                                                 estimates_[e]));

        selected_ = select_interval<S>(characteristics_);
        report_.selected.push_back(selected_);
        if (config_.record_traces)
            report_.traces.push_back({estimates_, characteristics_, selected_});

        std::size_t e = selected_ - 2;
        if (xs_[e + 1] - xs_[e] <= epsilon_) {
            stop_ = StopReason::accuracy;
            return;
        }
        if (report_.trials.size() >= config_.max_iterations) {
            stop_ = StopReason::iteration_cap;
            return;
        }
        if (scalar_traits<S>::compare(estimates_[e], diffs_[e]) !=
            std::strong_ordering::greater)
            throw minorant_violation(
                "estimate does not exceed the divided difference on the selected interval "
                "(a-priori Lipschitz bound too small?)");

        double x_new = new_trial_point(xs_[e], xs_[e + 1], zs_[e], zs_[e + 1], estimates_[e]);
        if (x_new <= xs_[e] || x_new >= xs_[e + 1]) {
            // Inserting a duplicate abscissa would break the sorted-strict
            // invariant; at machine precision this is an accuracy stop.
            stop_ = StopReason::accuracy;
            return;
        }
        insert_trial(x_new);
    }

    void run_to_completion() {
        while (!finished()) step();
    }

    RunReport<S> take_report() {
        if (!stop_) throw std::logic_error("run has not finished");
        finalize();
        return std::move(report_);
    }

    std::size_t trial_count() const { return report_.trials.size(); }
    std::span<const double> abscissas() const { return xs_; }
    std::span<const S> values() const { return zs_; }
    std::span<const S> divided_diffs() const { return diffs_; }
    std::span<const S> last_estimates() const { return estimates_; }
    std::span<const S> last_characteristics() const { return characteristics_; }
    std::size_t last_selected() const { return selected_; }
    const std::vector<Trial<S>>& trials() const { return report_.trials; }
    double last_trial_x() const { return report_.trials.back().x; }
    /// True once any two recorded values differ (the adaptive estimators
    /// fall back to one until then).
    bool has_value_spread() const { return value_spread_; }

private:
    S record_trial(double x) {
        S value = objective_(x);
        if (!report_.trials.empty() && !value_spread_)
            value_spread_ = scalar_traits<S>::compare(value, report_.trials.front().value) !=
                            std::strong_ordering::equal;
        report_.trials.push_back({x, value});
        return value;
    }

    void insert_trial(double x) {
        S value = record_trial(x);
        auto at = std::lower_bound(xs_.begin(), xs_.end(), x);
        std::size_t idx = static_cast<std::size_t>(at - xs_.begin());
        xs_.insert(at, x);
        zs_.insert(zs_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(value));
    }

    std::vector<S> compute_estimates() {
        diffs_ = divided_differences<S>(xs_, zs_);
        switch (config_.estimator) {
            case EstimatorKind::apriori:
                return apriori_estimates(diffs_.size(), config_.apriori_bound);
            case EstimatorKind::global:
                return global_estimates<S>(diffs_, config_.reliability);
            case EstimatorKind::maximum_local:
                return mlt_estimates<S>(xs_, diffs_, config_.reliability);
            case EstimatorKind::maximum_additive_local:
                return malt_estimates<S>(xs_, diffs_, config_.reliability);
        }
        throw std::logic_error("unreachable estimator kind");
    }

    void finalize() {
        report_.stop = stop_.value_or(StopReason::iteration_cap);
        std::size_t best = 0;
        for (std::size_t i = 1; i < zs_.size(); ++i)
            if (scalar_less(zs_[i], zs_[best])) best = i;
        report_.best_x = xs_[best];
        report_.best_value = zs_[best];
    }

    std::function<S(double)> objective_;
    MethodConfig<S> config_;
    double epsilon_ = 0.0;
    std::vector<double> xs_;  // sorted trial abscissas
    std::vector<S> zs_;       // values aligned with xs_
    std::vector<S> diffs_;    // divided differences of the last iteration
    std::vector<S> estimates_;
    std::vector<S> characteristics_;
    std::size_t selected_ = 0;
    bool value_spread_ = false;
    std::optional<StopReason> stop_;
    RunReport<S> report_;
};

template <ScalarLike S>
RunReport<S> solve(const ScaledProblem<S>& problem, const MethodConfig<S>& config) {
    problem.validate();
    GeneralScheme<S> scheme([&problem](double x) { return problem(x); }, problem.base.lower,
                            problem.base.upper, config);
    scheme.run_to_completion();
    return scheme.take_report();
}

inline RunReport<double> solve(const Problem& problem, const MethodConfig<double>& config) {
    return solve(ScaledProblem<double>::identity(problem), config);
}

/// Names for the eight method variants as used on the command line:
/// geom-al, geom-gl, geom-ltm, geom-ltma, inf-al, inf-gl, inf-ltm, inf-ltma.
struct MethodId {
    CharacteristicKind characteristic;
    EstimatorKind estimator;

    friend bool operator==(const MethodId&, const MethodId&) = default;
};

std::optional<MethodId> parse_method_id(std::string_view id);
std::string to_string(MethodId id);
const std::vector<MethodId>& all_method_ids();

/// Harness-level defaults shared by sweeps and the command line tool.
struct RunSettings {
    double geometric_reliability = 1.1;
    double information_reliability = 1.5;
    double epsilon_fraction = 1e-4;
    std::size_t max_iterations = 1'000'000;
    bool record_traces = false;
};

template <ScalarLike S>
MethodConfig<S> make_config(MethodId id, const RunSettings& settings, S apriori_bound) {
    MethodConfig<S> config;
    config.characteristic = id.characteristic;
    config.estimator = id.estimator;
    config.reliability = id.characteristic == CharacteristicKind::geometric
                             ? settings.geometric_reliability
                             : settings.information_reliability;
    config.apriori_bound = std::move(apriori_bound);
    config.epsilon_fraction = settings.epsilon_fraction;
    config.max_iterations = settings.max_iterations;
    config.record_traces = settings.record_traces;
    return config;
}

}  // namespace grosslip
