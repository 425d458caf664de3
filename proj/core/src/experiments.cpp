#include "grosslip/experiments.hpp"

#include <cmath>
#include <future>
#include <tuple>

namespace grosslip {

namespace {

using GrossTraits = scalar_traits<GrossNumber>;

GrossNumber inject_gross(double value) { return GrossNumber::finite(value); }

}  // namespace

ScalePair ScalePair::from_literals(std::string_view alpha_text, std::string_view beta_text) {
    ScalePair out;
    out.alpha = parse_gross(alpha_text);
    out.beta = parse_gross(beta_text);
    out.label = std::string(alpha_text) + "," + std::string(beta_text);
    if (!scalar_positive(out.alpha))
        throw std::invalid_argument("scaling constant alpha must be positive");
    return out;
}

const std::vector<ScalePair>& builtin_scale_pairs() {
    static const std::vector<ScalePair> pairs = {
        ScalePair::from_literals("1@0", "0"),
        ScalePair::from_literals("1@-1", "1@1"),
        ScalePair::from_literals("1@1", "1@2"),
    };
    return pairs;
}

ComparisonRule comparison_rule(const GrossNumber& alpha, const GrossNumber& beta) {
    bool unit_monomial = alpha.is_monomial() && alpha.terms().front().digit == 1.0;
    bool collision = false;
    if (unit_monomial) {
        for (const GrossTerm& t : beta.terms())
            collision |= t.power == alpha.terms().front().power;
    }
    if (unit_monomial && !collision) return {true, 0.0};
    return {false, 1e-9};
}

bool gross_close(const GrossNumber& a, const GrossNumber& b, const ComparisonRule& rule) {
    if (rule.exact) return a == b;
    // Walk the union of powers; a missing term is a zero digit.
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        double da = 0.0, db = 0.0;
        if (j == tb.size() || (i < ta.size() && ta[i].power > tb[j].power)) {
            da = ta[i++].digit;
        } else if (i == ta.size() || tb[j].power > ta[i].power) {
            db = tb[j++].digit;
        } else {
            da = ta[i++].digit;
            db = tb[j++].digit;
        }
        double scale = std::max({1.0, std::fabs(da), std::fabs(db)});
        if (std::fabs(da - db) > rule.relative_tolerance * scale) return false;
    }
    return true;
}

bool abscissa_close(double a, double b, const ComparisonRule& rule) {
    if (rule.exact) return a == b;
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rule.relative_tolerance * scale;
}

namespace {

// Expected scaled estimate/characteristic values for one iteration, built
// from the unscaled run's doubles with the same digit operations the scaled
// run performs, so that unit-digit scalings compare digit-exactly.
struct ExpectedRelations {
    const ScalePair& scale;
    CharacteristicKind characteristic;
    bool adaptive_floor;  // estimators fell back to one (all values equal)

    GrossNumber expected_estimate(double base_estimate) const {
        if (adaptive_floor) return GrossTraits::one();
        return scale.alpha * inject_gross(base_estimate);
    }

    GrossNumber expected_characteristic(double base_value, double first_trial_value) const {
        if (!adaptive_floor) {
            GrossNumber image = scale.alpha * inject_gross(base_value);
            if (characteristic == CharacteristicKind::geometric)
                return image + scale.beta;
            return image + scale.beta.scaled_by(4.0);
        }
        // All values equal: the image is R_i + z1*(alpha - 1) + beta for the
        // geometric characteristic and R_i + 4*(z1*(alpha - 1) + beta) for
        // the information one.
        GrossNumber shift =
            (scale.alpha - GrossTraits::one()).scaled_by(first_trial_value) + scale.beta;
        if (characteristic == CharacteristicKind::information) shift = shift.scaled_by(4.0);
        return inject_gross(base_value) + shift;
    }
};

}  // namespace

HomogeneityVerdict check_homogeneity(const Problem& problem, MethodId method,
                                     const ScalePair& scale, const RunSettings& settings,
                                     bool deep_checks) {
    HomogeneityVerdict verdict;
    verdict.method_id = to_string(method);
    verdict.problem_id = problem.name;
    verdict.scale_label = scale.label;

    double apriori = 0.0;
    if (method.estimator == EstimatorKind::apriori) {
        auto bound = apriori_bound_for(problem.name);
        if (!bound)
            throw std::invalid_argument("no a-priori Lipschitz bound known for " +
                                        problem.name);
        apriori = *bound;
    }

    GeneralScheme<double> base([&problem](double x) { return problem(x); }, problem.lower,
                               problem.upper, make_config<double>(method, settings, apriori));

    ScaledProblem<GrossNumber> scaled{problem, scale.alpha, scale.beta};
    scaled.validate();
    // The a-priori bound for the scaled objective is alpha times the bound
    // for the original one.
    GeneralScheme<GrossNumber> hat([&scaled](double x) { return scaled(x); }, problem.lower,
                                   problem.upper,
                                   make_config<GrossNumber>(method, settings,
                                                            scale.alpha.scaled_by(apriori)));

    ComparisonRule rule = comparison_rule(scale.alpha, scale.beta);
    verdict.sequences_equal = true;
    std::size_t iteration = 0;

    auto step_tagged = [](auto& scheme, const char* which) {
        try {
            scheme.step();
        } catch (const std::exception& error) {
            throw std::runtime_error(std::string(which) + " run failed: " + error.what());
        }
    };

    while (!base.finished() && !hat.finished()) {
        // The estimators fall back to one when the values recorded so far
        // all coincide, so sample the spread before this step's new trial.
        bool spread_before = base.has_value_spread();
        step_tagged(base, "unscaled");
        step_tagged(hat, "scaled");
        ++iteration;

        if (deep_checks) {
            ExpectedRelations expected{scale, method.characteristic,
                                       method.estimator != EstimatorKind::apriori &&
                                           !spread_before};
            IterationCheck check;
            auto base_l = base.last_estimates();
            auto hat_l = hat.last_estimates();
            auto base_r = base.last_characteristics();
            auto hat_r = hat.last_characteristics();
            if (base_l.size() != hat_l.size()) {
                check.estimates_match = check.characteristics_match = false;
            } else {
                double z1 = base.trials().front().value;
                for (std::size_t e = 0; e < base_l.size(); ++e) {
                    check.estimates_match &=
                        gross_close(hat_l[e], expected.expected_estimate(base_l[e]), rule);
                    check.characteristics_match &= gross_close(
                        hat_r[e], expected.expected_characteristic(base_r[e], z1), rule);
                }
            }
            verdict.iteration_checks.push_back(check);
        }

        bool diverged = false;
        if (base.last_selected() != hat.last_selected()) diverged = true;
        if (base.finished() != hat.finished()) diverged = true;
        if (!base.finished() && !hat.finished() &&
            !abscissa_close(base.last_trial_x(), hat.last_trial_x(), rule))
            diverged = true;

        if (diverged) {
            verdict.sequences_equal = false;
            verdict.first_divergence = iteration;
            verdict.base_abscissa = base.last_trial_x();
            verdict.scaled_abscissa = hat.last_trial_x();
            break;
        }
    }

    // Complete both runs so the trial counts are always reported.
    while (!base.finished()) step_tagged(base, "unscaled");
    while (!hat.finished()) step_tagged(hat, "scaled");
    verdict.trial_counts = {base.trial_count(), hat.trial_count()};
    if (verdict.trial_counts.first != verdict.trial_counts.second)
        verdict.sequences_equal = false;
    return verdict;
}

IllCondDemo illcond_demo(double alpha, double beta, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    IllCondDemo demo;
    demo.alpha = alpha;
    demo.beta = beta;
    demo.step = step;

    Problem f3 = hansen_f3();
    std::tie(demo.reference_x, demo.reference_value) = grid_min(f3, step);

    Problem scaled_float{"g3", f3.lower, f3.upper,
                         [alpha, beta](double x) { return alpha * hansen_f3_value(x) + beta; }};
    std::tie(demo.float_x, demo.float_value) = grid_min(scaled_float, step);

    Problem inverted{"f3-inverted", f3.lower, f3.upper, [alpha, beta](double x) {
                         double g = alpha * hansen_f3_value(x) + beta;
                         return (g - beta) / alpha;
                     }};
    std::tie(demo.inverted_x, demo.inverted_value) = grid_min(inverted, step);

    ScaledProblem<GrossNumber> gross{f3, GrossNumber::monomial(1.0, -1),
                                     GrossNumber::grossone()};
    std::tie(demo.gross_x, demo.gross_value) = grid_min(gross, step);
    demo.gross_recovered_value =
        (demo.gross_value - gross.beta).divided_by(gross.alpha).finite_value();

    demo.float_path_lost_minimum = std::fabs(demo.float_x - demo.reference_x) > step;
    return demo;
}

std::vector<BenchmarkCell> benchmark_suite(const std::vector<MethodId>& methods,
                                           const std::vector<Problem>& problems,
                                           const std::vector<ScalePair>& scales,
                                           const RunSettings& settings) {
    auto run_cell = [&settings](MethodId method, Problem problem, ScalePair scale) {
        BenchmarkCell cell{to_string(method), problem.name, scale.label, std::nullopt, ""};
        try {
            GrossNumber apriori;
            if (method.estimator == EstimatorKind::apriori) {
                auto bound = apriori_bound_for(problem.name);
                if (!bound)
                    throw std::invalid_argument("no a-priori Lipschitz bound known for " +
                                                problem.name);
                apriori = scale.alpha.scaled_by(*bound);
            }
            ScaledProblem<GrossNumber> scaled{std::move(problem), scale.alpha, scale.beta};
            cell.report = solve(scaled, make_config<GrossNumber>(method, settings, apriori));
        } catch (const std::exception& error) {
            cell.error = error.what();
        }
        return cell;
    };

    std::vector<std::future<BenchmarkCell>> futures;
    for (MethodId method : methods)
        for (const Problem& problem : problems)
            for (const ScalePair& scale : scales)
                futures.push_back(std::async(std::launch::async, run_cell, method, problem,
                                             scale));

    std::vector<BenchmarkCell> cells;
    cells.reserve(futures.size());
    for (auto& f : futures) cells.push_back(f.get());
    return cells;
}

}  // namespace grosslip
