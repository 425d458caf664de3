#include "grosslip/problem.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grosslip/expression.hpp"

namespace grosslip {

double hansen_f1_value(double x) {
    return (((((x * (1.0 / 6.0) - 52.0 / 25.0) * x + 39.0 / 80.0) * x + 71.0 / 10.0) * x -
             79.0 / 20.0) * x - 1.0) * x + 1.0 / 10.0;
}

double hansen_f2_value(double x) { return std::sin(x) + std::sin(10.0 * x / 3.0); }

double hansen_f3_value(double x) {
    double sum = 0.0;
    for (int k = 1; k <= 5; ++k)
        sum += -static_cast<double>(k) * std::sin((k + 1) * x + k);
    return sum;
}

Problem hansen_f1() {
    return {"f1", -1.5, 11.0, hansen_f1_value,
            {{10.0, -29763.233333333355, "grid oracle, step 1e-4"}}};
}

Problem hansen_f2() {
    return {"f2", 2.7, 7.5, hansen_f2_value,
            {{5.1457, -1.8995993417232193, "grid oracle, step 1e-4"}}};
}

Problem hansen_f3() {
    return {"f3", -10.0, 10.0, hansen_f3_value,
            {{-0.491, -12.0312, "reference minimizer"},
             {-6.775, -12.0312, "reference minimizer"},
             {5.792, -12.0312, "reference minimizer"}}};
}

std::pair<double, double> grid_min(const Problem& p, double step) {
    std::size_t n = detail::grid_steps(p.lower, p.upper, step);
    double best_x = p.lower;
    double best = p(best_x);
    for (std::size_t i = 1; i <= n; ++i) {
        double x = i == n ? p.upper : p.lower + static_cast<double>(i) * step;
        double value = p(x);
        if (value < best) {
            best = value;
            best_x = x;
        }
    }
    return {best_x, best};
}

double lipschitz_overestimate(const Problem& p, double step, double safety) {
    if (step <= 0.0) throw std::invalid_argument("step must be positive");
    if (safety < 1.0) throw std::invalid_argument("safety factor must be >= 1");
    std::size_t n = detail::grid_steps(p.lower, p.upper, step);
    double max_slope = 0.0;
    double prev_x = p.lower;
    double prev = p(prev_x);
    for (std::size_t i = 1; i <= n; ++i) {
        double x = i == n ? p.upper : p.lower + static_cast<double>(i) * step;
        double value = p(x);
        double slope = std::fabs(value - prev) / (x - prev_x);
        if (slope > max_slope) max_slope = slope;
        prev_x = x;
        prev = value;
    }
    return safety * max_slope;
}

std::optional<double> apriori_bound_for(const std::string& problem_name) {
    // lipschitz_overestimate(builtin, 1e-4, 1.2), frozen.
    if (problem_name == "f1") return 16642.199786156783;
    if (problem_name == "f2") return 5.142776082808469;
    if (problem_name == "f3") return 82.10332331982198;
    return std::nullopt;
}

const std::map<std::string, Problem>& builtin_problems() {
    static const std::map<std::string, Problem> registry = {
        {"f1", hansen_f1()}, {"f2", hansen_f2()}, {"f3", hansen_f3()}};
    return registry;
}

std::vector<Problem> load_problems(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    if (!doc.is_array())
        throw std::invalid_argument("problem file must contain a JSON array");
    std::vector<Problem> out;
    for (const auto& record : doc) {
        Problem p;
        p.name = record.at("name").get<std::string>();
        const auto& domain = record.at("domain");
        if (!domain.is_array() || domain.size() != 2)
            throw std::invalid_argument(p.name + ": domain must be [lower, upper]");
        p.lower = domain[0].get<double>();
        p.upper = domain[1].get<double>();
        if (!(p.lower < p.upper))
            throw std::invalid_argument(p.name + ": domain must satisfy lower < upper");
        auto expr = Expression::parse(record.at("expression").get<std::string>());
        p.evaluate = [expr = std::move(expr)](double x) { return expr(x); };
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Problem> load_problems_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_problems(buf.str());
}

}  // namespace grosslip
