// Executable checks built on top of the solver: a scale-invariance harness
// that runs a method on f and on alpha*f + beta and compares the two runs
// iteration by iteration, a demonstration of the ill-conditioning caused by
// extreme finite scaling constants, and cartesian benchmark sweeps.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grosslip/problem.hpp"
#include "grosslip/solver.hpp"

namespace grosslip {

/// A scaling/shifting pair g(x) = alpha*f(x) + beta. alpha must be positive
/// (and, for gross runs, a monomial so that the solver's divisions stay
/// within the supported shapes).
struct ScalePair {
    GrossNumber alpha = GrossNumber::finite(1.0);
    GrossNumber beta;
    std::string label = "1@0,0";

    static ScalePair from_literals(std::string_view alpha_text, std::string_view beta_text);
};

/// identity, (1/(1), (1)) and ((1), (1)^2).
const std::vector<ScalePair>& builtin_scale_pairs();

/// How two runs are compared: digit-exact when the scaling keeps every
/// machine operation identical (unit-digit monomial alpha whose power does
/// not collide with a beta term), otherwise within a relative tolerance
/// that documents the float rounding gap.
struct ComparisonRule {
    bool exact = true;
    double relative_tolerance = 0.0;
};

ComparisonRule comparison_rule(const GrossNumber& alpha, const GrossNumber& beta);
bool gross_close(const GrossNumber& a, const GrossNumber& b, const ComparisonRule& rule);
bool abscissa_close(double a, double b, const ComparisonRule& rule);

struct IterationCheck {
    bool estimates_match = true;        // scaled l_i relation
    bool characteristics_match = true;  // affine R_i relation
};

struct HomogeneityVerdict {
    std::string method_id;
    std::string problem_id;
    std::string scale_label;
    bool sequences_equal = false;
    std::optional<std::size_t> first_divergence;  // iteration index, from 1
    double base_abscissa = 0.0;                   // trial points at the divergence
    double scaled_abscissa = 0.0;
    std::pair<std::size_t, std::size_t> trial_counts{0, 0};
    std::vector<IterationCheck> iteration_checks;  // filled by deep checks

    bool deep_checks_ok() const {
        for (const IterationCheck& c : iteration_checks)
            if (!c.estimates_match || !c.characteristics_match) return false;
        return true;
    }
    bool passed() const { return sequences_equal && deep_checks_ok(); }
};

/// Run `method` on the plain problem (machine doubles) and on the scaled
/// problem (gross scalars) in lockstep and compare trial sequences, selected
/// intervals and stop iterations. With deep_checks, also verify at every
/// iteration that the scaled estimates equal alpha*l_i (or both fall back to
/// one) and that the scaled characteristics are the expected affine image of
/// the unscaled ones.
HomogeneityVerdict check_homogeneity(const Problem& problem, MethodId method,
                                     const ScalePair& scale, const RunSettings& settings,
                                     bool deep_checks = true);

/// Grid argmins of the scaled objective along three routes: machine doubles,
/// gross arithmetic with (1/(1), (1)), and the double-precision inversion
/// (g(x) - beta)/alpha of the double-precision g.
struct IllCondDemo {
    double alpha = 0.0;
    double beta = 0.0;
    double step = 0.0;
    double float_x = 0.0;       // argmin of alpha*f3 + beta in doubles
    double float_value = 0.0;
    double reference_x = 0.0;   // argmin of f3 itself
    double reference_value = 0.0;
    double gross_x = 0.0;       // argmin of (1/(1))*f3 + (1) in gross arithmetic
    GrossNumber gross_value;
    double gross_recovered_value = 0.0;  // (gross minimum - beta)/alpha, finite part
    double inverted_x = 0.0;    // argmin of the double-precision inversion
    double inverted_value = 0.0;
    bool float_path_lost_minimum = false;
};

IllCondDemo illcond_demo(double alpha, double beta, double step);

/// One cell of a methods x problems x scales sweep. Failures are recorded
/// and do not abort the remaining cells.
struct BenchmarkCell {
    std::string method_id;
    std::string problem_id;
    std::string scale_label;
    std::optional<RunReport<GrossNumber>> report;
    std::string error;
};

std::vector<BenchmarkCell> benchmark_suite(const std::vector<MethodId>& methods,
                                           const std::vector<Problem>& problems,
                                           const std::vector<ScalePair>& scales,
                                           const RunSettings& settings);

}  // namespace grosslip
