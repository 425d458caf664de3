// Test objectives over an interval [a, b], the affine scaling wrapper
// g(x) = alpha*f(x) + beta, and brute-force grid oracles for minima and
// Lipschitz overestimates.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grosslip/scalar.hpp"

namespace grosslip {

struct KnownMinimum {
    double x;
    double value;
    std::string provenance;
};

/// A univariate objective, total and finite-valued on [lower, upper].
struct Problem {
    std::string name;
    double lower = 0.0;
    double upper = 1.0;
    std::function<double(double)> evaluate;
    std::vector<KnownMinimum> known_minima;

    double width() const { return upper - lower; }

    /// Evaluate with domain and finiteness checks.
    double operator()(double x) const {
        if (x < lower || x > upper)
            throw std::domain_error(name + ": argument " + format_double(x) +
                                    " outside [" + format_double(lower) + ", " +
                                    format_double(upper) + "]");
        double value = evaluate(x);
        if (!std::isfinite(value))
            throw std::domain_error(name + ": non-finite value at x = " + format_double(x));
        return value;
    }
};

/// g(x) = alpha*f(x) + beta with alpha > 0 under the scalar order.
template <ScalarLike S>
struct ScaledProblem {
    Problem base;
    S alpha = scalar_traits<S>::one();
    S beta = scalar_traits<S>::zero();

    static ScaledProblem identity(Problem p) { return {std::move(p)}; }

    void validate() const {
        if (!scalar_positive(alpha))
            throw std::invalid_argument("scaling constant alpha must be positive");
    }

    /// alpha*f(x) + beta in scalar arithmetic. mul_finite keeps a monomial
    /// alpha a monomial times f(x).
    S operator()(double x) const {
        return scalar_traits<S>::add(scalar_traits<S>::mul_finite(alpha, base(x)), beta);
    }
};

// The three benchmark objectives printed in the experiment suite. The f3
// domain is [-10, 10]; the f1 and f2 domains follow the Hansen-Jaumard
// benchmark set ([-1.5, 11] and [2.7, 7.5]).
double hansen_f1_value(double x);
double hansen_f2_value(double x);
double hansen_f3_value(double x);
Problem hansen_f1();
Problem hansen_f2();
Problem hansen_f3();

/// Argmin over the uniform grid lower, lower+step, ..., upper (the end point
/// always included); ties break toward the smallest x.
std::pair<double, double> grid_min(const Problem& p, double step);

/// Same grid search under the scalar total order.
template <ScalarLike S>
std::pair<double, S> grid_min(const ScaledProblem<S>& p, double step);

/// safety * max over grid-adjacent pairs of |f(x+step) - f(x)| / step.
double lipschitz_overestimate(const Problem& p, double step, double safety);

/// Frozen a-priori Lipschitz bounds for the built-in problems, produced by
/// lipschitz_overestimate(step = 1e-4, safety = 1.2).
std::optional<double> apriori_bound_for(const std::string& problem_name);

/// Built-in registry: f1, f2, f3.
const std::map<std::string, Problem>& builtin_problems();

/// Parse custom problems from a JSON array of
/// {"name": ..., "domain": [a, b], "expression": ...} records.
std::vector<Problem> load_problems(const std::string& json_text);
std::vector<Problem> load_problems_file(const std::string& path);

// --- implementation ---

namespace detail {

/// Number of steps so that lower + count*step covers (lower, upper).
inline std::size_t grid_steps(double lower, double upper, double step) {
    if (step <= 0.0) throw std::invalid_argument("grid step must be positive");
    double n = std::ceil((upper - lower) / step - 1e-12);
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

}  // namespace detail

template <ScalarLike S>
std::pair<double, S> grid_min(const ScaledProblem<S>& p, double step) {
    std::size_t n = detail::grid_steps(p.base.lower, p.base.upper, step);
    double best_x = p.base.lower;
    S best = p(best_x);
    for (std::size_t i = 1; i <= n; ++i) {
        double x = i == n ? p.base.upper : p.base.lower + static_cast<double>(i) * step;
        S value = p(x);
        if (scalar_less(value, best)) {
            best = std::move(value);
            best_x = x;
        }
    }
    return {best_x, std::move(best)};
}

}  // namespace grosslip
