// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Run it through ctest or directly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "grosslip/experiments.hpp"
#include "random_gross.hpp"

using namespace grosslip;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

bool near_reference_minimizer(double x, double tolerance) {
    return std::fabs(x + 0.491) <= tolerance || std::fabs(x + 6.775) <= tolerance ||
           std::fabs(x - 5.792) <= tolerance;
}

// 1. The three paper methods reproduce the f3 minimum at eps = 1e-4*(b-a).
void criterion_1() {
    Problem f3 = hansen_f3();
    double eps = 1e-4 * f3.width();
    struct Case {
        MethodId method;
        double reliability;
    };
    std::vector<Case> cases = {
        {{CharacteristicKind::geometric, EstimatorKind::apriori}, 1.1},
        {{CharacteristicKind::information, EstimatorKind::global}, 1.5},
        {{CharacteristicKind::geometric, EstimatorKind::maximum_local}, 1.1},
    };
    bool pass = true;
    std::string detail;
    for (const Case& c : cases) {
        MethodConfig<double> config;
        config.characteristic = c.method.characteristic;
        config.estimator = c.method.estimator;
        config.reliability = c.reliability;
        config.apriori_bound = apriori_bound_for("f3").value();
        auto start = Clock::now();
        RunReport<double> run = solve(f3, config);
        double elapsed = seconds_since(start);
        bool ok = std::fabs(run.best_value - (-12.0312)) <= 1e-3 &&
                  near_reference_minimizer(run.best_x, 2.0 * eps) && elapsed < 1.0 &&
                  run.stop == StopReason::accuracy;
        pass &= ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s z*=%.6f x*=%.6f trials=%zu %.0fms", detail.empty() ? "" : "; ",
                      to_string(c.method).c_str(), run.best_value, run.best_x,
                      run.trial_count(), elapsed * 1e3);
        detail += buf;
    }
    report(1, "f3 reproduction", pass, detail);
}

std::vector<HomogeneityVerdict> sweep(const std::vector<ScalePair>& scales, bool deep,
                                      const RunSettings& settings) {
    std::vector<HomogeneityVerdict> verdicts;
    for (const auto& [name, problem] : builtin_problems())
        for (MethodId method : all_method_ids())
            for (const ScalePair& scale : scales)
                verdicts.push_back(
                    check_homogeneity(problem, method, scale, settings, deep));
    return verdicts;
}

// 2. Gross scalings leave every trial sequence bitwise unchanged.
void criterion_2() {
    std::vector<ScalePair> scales = {ScalePair::from_literals("1@-1", "1@1"),
                                     ScalePair::from_literals("1@1", "1@2")};
    auto start = Clock::now();
    auto verdicts = sweep(scales, false, RunSettings{});
    double elapsed = seconds_since(start);
    std::size_t equal = 0;
    std::string first_bad;
    for (const auto& v : verdicts) {
        if (v.sequences_equal)
            ++equal;
        else if (first_bad.empty())
            first_bad = v.method_id + "/" + v.problem_id + "/" + v.scale_label;
    }
    bool pass = equal == verdicts.size() && elapsed < 10.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu sequences coincide exactly in %.2fs%s%s", equal,
                  verdicts.size(), elapsed, first_bad.empty() ? "" : "; first failure ",
                  first_bad.c_str());
    report(2, "strong homogeneity, gross scales", pass, buf);
}

// 3. Finite scalings: identity bitwise, (2, 10) within relative 1e-9.
void criterion_3() {
    std::vector<ScalePair> scales = {ScalePair::from_literals("1@0", "0"),
                                     ScalePair::from_literals("2@0", "10@0")};
    auto verdicts = sweep(scales, false, RunSettings{});
    std::size_t equal = 0;
    std::string first_bad;
    for (const auto& v : verdicts) {
        if (v.sequences_equal)
            ++equal;
        else if (first_bad.empty())
            first_bad = v.method_id + "/" + v.problem_id + "/" + v.scale_label;
    }
    bool pass = equal == verdicts.size();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu sequences coincide%s%s", equal, verdicts.size(),
                  first_bad.empty() ? "" : "; first failure ", first_bad.c_str());
    report(3, "strong homogeneity, finite scales", pass, buf);
}

// 4. Per-iteration scaling relations for the estimates and characteristics,
// covering all four characteristic/floor combinations.
void criterion_4() {
    std::vector<ScalePair> scales = {
        ScalePair::from_literals("1@0", "0"), ScalePair::from_literals("2@0", "10@0"),
        ScalePair::from_literals("1@-1", "1@1"), ScalePair::from_literals("1@1", "1@2")};
    auto verdicts = sweep(scales, true, RunSettings{});

    // the built-in objectives never flatten, so exercise the unit-estimate
    // branch on a constant objective with exactly representable values
    Problem constant{"constant", 0.0, 1.0, [](double) { return 2.0; }};
    RunSettings coarse;
    coarse.epsilon_fraction = 0.05;
    for (MethodId method : all_method_ids()) {
        if (method.estimator == EstimatorKind::apriori) continue;
        for (const ScalePair& scale :
             {ScalePair::from_literals("1@-1", "1@1"), ScalePair::from_literals("1@1", "1@2")})
            verdicts.push_back(check_homogeneity(constant, method, scale, coarse, true));
    }

    // This criterion is about the per-iteration trace relations; sequence
    // equality itself is criteria 2 and 3. Runs that part ways at a machine
    // tie are checked over their aligned prefix.
    std::size_t ok = 0;
    std::size_t iterations = 0;
    std::string first_bad;
    for (const auto& v : verdicts) {
        iterations += v.iteration_checks.size();
        if (v.deep_checks_ok() && !v.iteration_checks.empty())
            ++ok;
        else if (first_bad.empty())
            first_bad = v.method_id + "/" + v.problem_id + "/" + v.scale_label;
    }
    bool pass = ok == verdicts.size();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu/%zu runs, %zu iteration checks%s%s", ok,
                  verdicts.size(), iterations, first_bad.empty() ? "" : "; first failure ",
                  first_bad.c_str());
    report(4, "per-iteration scaling relations", pass, buf);
}

// 5. The double-precision path finds the wrong minimum; the gross path keeps
// the true one.
void criterion_5() {
    IllCondDemo demo = illcond_demo(1e-17, 1.0, 1e-4);
    char xs[32], vs[32];
    std::snprintf(xs, sizeof xs, "%.3f", demo.float_x);
    std::snprintf(vs, sizeof vs, "%.1f", demo.float_value);
    bool wrong_min = std::string(xs) == "-8.194" && std::string(vs) == "1.0" &&
                     demo.float_path_lost_minimum;
    double eps = 1e-4 * hansen_f3().width();
    bool recovered = std::fabs(demo.gross_recovered_value - (-12.0312)) <= 1e-3 &&
                     near_reference_minimizer(demo.gross_x, 2.0 * eps);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "double path argmin (%s, %s); gross path x=%.4f recovered=%.6f", xs, vs,
                  demo.gross_x, demo.gross_recovered_value);
    report(5, "ill-conditioning demo", wrong_min && recovered, buf);
}

// 6. Exact grossone arithmetic: unit inverse and the ordered-ring laws on
// dyadic digits.
void criterion_6() {
    auto start = Clock::now();
    bool pass = GrossNumber::grossone() * GrossNumber::monomial(1.0, -1) ==
                GrossNumber::finite(1.0);
    std::mt19937 rng(2026);
    int cases = 10000;
    for (int i = 0; i < cases && pass; ++i) {
        GrossNumber a = testing::random_gross(rng);
        GrossNumber b = testing::random_gross(rng);
        GrossNumber c = testing::random_gross(rng);
        pass &= a + b == b + a;
        pass &= (a + b) + c == a + (b + c);
        pass &= a * b == b * a;
        pass &= (a * b) * c == a * (b * c);
        pass &= a * (b + c) == a * b + a * c;
        if (a < b) {
            pass &= a + c < b + c;
            GrossNumber m = testing::random_pot_monomial(rng);
            pass &= m * a < m * b;
        }
    }
    double elapsed = seconds_since(start);
    char buf[160];
    std::snprintf(buf, sizeof buf, "unit inverse exact, %d ring-law cases in %.2fs", cases,
                  elapsed);
    report(6, "grossone arithmetic suite", pass && elapsed < 5.0, buf);
}

// 7. Interval selection is invariant under positive affine maps of the
// characteristics.
void criterion_7() {
    std::mt19937 rng(77);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    bool pass = true;
    int cases = 1000;
    for (int i = 0; i < cases && pass; ++i) {
        std::vector<GrossNumber> values;
        std::size_t n = len(rng);
        for (std::size_t j = 0; j < n; ++j) values.push_back(testing::random_gross(rng));
        GrossNumber scale = testing::random_positive_monomial(rng);
        GrossNumber shift = testing::random_gross(rng);
        std::vector<GrossNumber> mapped;
        for (const GrossNumber& v : values) mapped.push_back(scale * v + shift);
        pass &= select_interval<GrossNumber>(values) == select_interval<GrossNumber>(mapped);
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d random characteristic vectors", cases);
    report(7, "argmin invariance", pass, buf);
}

// 8. Every method lands within eps*Lbar of a brute-force grid minimum on
// small synthetic problems.
void criterion_8() {
    std::vector<Problem> problems = {
        {"vee", 0.0, 1.0, [](double x) { return std::fabs(x - 0.4); }},
        {"kinks", -1.0, 1.0,
         [](double x) { return std::min(std::fabs(x + 0.3), std::fabs(x - 0.5) + 0.3); }},
        {"parabola", -1.0, 2.0, [](double x) { return (x - 0.3) * (x - 0.3); }},
        {"slope-wave", 0.0, 3.0, [](double x) { return std::sin(3.0 * x) + 0.5 * x; }},
        {"double-well", -1.5, 1.5, [](double x) { return ((x * x - 1.0) * x + 0.3) * x; }},
    };
    bool pass = true;
    std::string first_bad;
    int checked = 0;
    for (const Problem& p : problems) {
        double bound = lipschitz_overestimate(p, 1e-4, 1.2);
        double eps = 1e-4 * p.width();
        auto [oracle_x, oracle_value] = grid_min(p, eps / 10.0);
        for (MethodId method : all_method_ids()) {
            MethodConfig<double> config;
            config.characteristic = method.characteristic;
            config.estimator = method.estimator;
            config.reliability =
                method.characteristic == CharacteristicKind::geometric ? 1.1 : 1.5;
            config.apriori_bound = bound;
            RunReport<double> run = solve(p, config);
            ++checked;
            if (std::fabs(run.best_value - oracle_value) > eps * bound) {
                pass = false;
                if (first_bad.empty())
                    first_bad = to_string(method) + "/" + p.name;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d method/problem pairs against the grid oracle%s%s",
                  checked, first_bad.empty() ? "" : "; first failure ", first_bad.c_str());
    report(8, "oracle equivalence", pass, buf);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
