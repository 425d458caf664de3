// Command line front end: solve a problem with one of the eight method
// variants, check scale invariance of the trial sequences, or run the
// ill-conditioning demonstration.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grosslip/experiments.hpp"
#include "grosslip/report.hpp"

namespace {

using namespace grosslip;

std::string resolve_out_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    if (const char* dir = std::getenv("GROSSLIP_OUT_DIR"))
        return std::string(dir) + "/" + path;
    return path;
}

std::map<std::string, Problem> make_registry(const std::string& problems_file) {
    std::map<std::string, Problem> registry = builtin_problems();
    if (!problems_file.empty())
        for (Problem& p : load_problems_file(problems_file)) {
            std::string name = p.name;
            registry.insert_or_assign(std::move(name), std::move(p));
        }
    return registry;
}

const Problem& find_problem(const std::map<std::string, Problem>& registry,
                            const std::string& name) {
    auto it = registry.find(name);
    if (it == registry.end())
        throw CLI::ValidationError("--function", "unknown problem '" + name + "'");
    return it->second;
}

MethodId require_method(const std::string& id) {
    auto method = parse_method_id(id);
    if (!method) throw CLI::ValidationError("--method", "unknown method '" + id + "'");
    return *method;
}

std::vector<ScalePair> parse_scales(const std::string& spec) {
    std::vector<ScalePair> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(';', start);
        std::string pair =
            spec.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::size_t comma = pair.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--scales", "expected '<alpha>,<beta>' in '" + pair + "'");
        out.push_back(
            ScalePair::from_literals(pair.substr(0, comma), pair.substr(comma + 1)));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

void write_report_file(const ReportRecord& record, const std::string& out_path,
                       const std::string& format) {
    std::string path = resolve_out_path(out_path);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    if (format == "csv")
        write_csv(record, out);
    else
        write_json(record, out);
    std::cout << "report written to " << path << "\n";
}

struct SolveOptions {
    std::string function;
    std::string method;
    std::string alpha;
    std::string beta;
    double reliability = 0.0;  // 0 = method default
    std::string apriori;       // gross literal; empty = frozen fixture
    double eps_fraction = 1e-4;
    std::size_t max_iter = 1'000'000;
    std::string out_path;
    std::string format = "json";
    std::string problems_file;
};

template <ScalarLike S>
int run_solve(const Problem& problem, MethodId method, const ScalePair& scale,
              const SolveOptions& opt) {
    RunSettings settings;
    settings.epsilon_fraction = opt.eps_fraction;
    settings.max_iterations = opt.max_iter;
    if (opt.reliability > 0.0)
        settings.geometric_reliability = settings.information_reliability = opt.reliability;

    S apriori = scalar_traits<S>::zero();
    if (method.estimator == EstimatorKind::apriori) {
        if (!opt.apriori.empty()) {
            GrossNumber parsed = parse_gross(opt.apriori);
            if constexpr (std::is_same_v<S, double>)
                apriori = parsed.finite_value();
            else
                apriori = parsed;
        } else {
            auto bound = apriori_bound_for(problem.name);
            if (!bound)
                throw CLI::ValidationError(
                    "--L", "no frozen Lipschitz bound for '" + problem.name +
                               "'; pass one explicitly");
            // The frozen bound covers the unscaled objective; the scaled one
            // needs alpha times that.
            if constexpr (std::is_same_v<S, double>)
                apriori = *bound;
            else
                apriori = scale.alpha.scaled_by(*bound);
        }
    }

    ScaledProblem<S> scaled{problem};
    if constexpr (std::is_same_v<S, GrossNumber>) {
        scaled.alpha = scale.alpha;
        scaled.beta = scale.beta;
    }
    MethodConfig<S> config = make_config<S>(method, settings, apriori);
    RunReport<S> report = solve(scaled, config);

    GrossNumber best = scalar_traits<S>::to_gross(report.best_value);
    std::cout << problem.name << " " << to_string(method);
    if constexpr (std::is_same_v<S, GrossNumber>)
        std::cout << " [alpha=" << to_literal(scale.alpha) << " beta=" << to_literal(scale.beta)
                  << "]";
    std::cout << ": x*=" << format_double(report.best_x) << " z*=" << pretty(best);
    if constexpr (std::is_same_v<S, GrossNumber>) {
        GrossNumber recovered = (best - scale.beta).divided_by(scale.alpha);
        std::cout << " f*=" << format_double(recovered.finite_value());
    }
    std::cout << " trials=" << report.trial_count() << " stop=" << to_string(report.stop)
              << "\n";

    if (!opt.out_path.empty()) {
        ReportRecord record = make_record(report, method, problem.name, scale, config);
        write_report_file(record, opt.out_path, opt.format);
    }
    return 0;
}

int cmd_solve(const SolveOptions& opt) {
    auto registry = make_registry(opt.problems_file);
    const Problem& problem = find_problem(registry, opt.function);
    MethodId method = require_method(opt.method);
    bool gross = !opt.alpha.empty() || !opt.beta.empty();
    ScalePair scale = ScalePair::from_literals(opt.alpha.empty() ? "1@0" : opt.alpha,
                                               opt.beta.empty() ? "0" : opt.beta);
    if (gross) return run_solve<GrossNumber>(problem, method, scale, opt);
    return run_solve<double>(problem, method, scale, opt);
}

struct HomogeneityOptions {
    std::string function = "all";
    std::string method = "all";
    std::string scales = "1@-1,1@1;1@1,1@2";
    double eps_fraction = 1e-4;
    std::size_t max_iter = 1'000'000;
    bool no_deep = false;
    std::string problems_file;
};

int cmd_homogeneity(const HomogeneityOptions& opt) {
    auto registry = make_registry(opt.problems_file);
    std::vector<Problem> problems;
    if (opt.function == "all")
        for (const auto& [name, p] : registry) problems.push_back(p);
    else
        problems.push_back(find_problem(registry, opt.function));

    std::vector<MethodId> methods;
    if (opt.method == "all")
        methods = all_method_ids();
    else
        methods.push_back(require_method(opt.method));

    std::vector<ScalePair> scales = parse_scales(opt.scales);
    RunSettings settings;
    settings.epsilon_fraction = opt.eps_fraction;
    settings.max_iterations = opt.max_iter;

    bool all_ok = true;
    std::printf("%-10s %-8s %-16s %8s %8s  %s\n", "method", "problem", "scale", "trials",
                "trials'", "verdict");
    for (const Problem& problem : problems)
        for (MethodId method : methods)
            for (const ScalePair& scale : scales) {
                HomogeneityVerdict v =
                    check_homogeneity(problem, method, scale, settings, !opt.no_deep);
                bool ok = v.passed();
                all_ok &= ok;
                std::printf("%-10s %-8s %-16s %8zu %8zu  %s\n", v.method_id.c_str(),
                            v.problem_id.c_str(), v.scale_label.c_str(),
                            v.trial_counts.first, v.trial_counts.second,
                            ok ? "coincide" : "DIVERGE");
                if (v.first_divergence)
                    std::printf("  first divergence at iteration %zu: x=%s vs x'=%s\n",
                                *v.first_divergence, format_double(v.base_abscissa).c_str(),
                                format_double(v.scaled_abscissa).c_str());
                else if (!ok)
                    std::printf("  per-iteration estimate/characteristic relation violated\n");
            }
    return all_ok ? 0 : 1;
}

struct DemoOptions {
    double alpha = 1e-17;
    double beta = 1.0;
    double step = 1e-4;
    std::string out_path;
};

int cmd_demo_illcond(const DemoOptions& opt) {
    IllCondDemo demo = illcond_demo(opt.alpha, opt.beta, opt.step);
    std::printf("reference f3 grid argmin: (%.4f, %.4f)\n", demo.reference_x,
                demo.reference_value);
    std::printf("double-precision scaled argmin: (%.3f, %.1f)  [exact: x=%s g=%s]\n",
                demo.float_x, demo.float_value, format_double(demo.float_x).c_str(),
                format_double(demo.float_value).c_str());
    std::printf("inverted reconstruction argmin: (%.4f, %.4f)\n", demo.inverted_x,
                demo.inverted_value);
    std::printf("gross-scaled argmin: x=%.4f g=%s\n", demo.gross_x,
                pretty(demo.gross_value).c_str());
    std::printf("gross-scaled recovered minimum: %.4f\n", demo.gross_recovered_value);
    std::printf("%s\n", demo.float_path_lost_minimum
                            ? "ill-conditioning detected: the double-precision path lost "
                              "the true minimum"
                            : "no ill-conditioning detected");

    if (!opt.out_path.empty()) {
        std::string path = resolve_out_path(opt.out_path);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << "x value series\n";
        Problem f3 = hansen_f3();
        std::size_t n = detail::grid_steps(f3.lower, f3.upper, opt.step);
        for (std::size_t i = 0; i <= n; ++i) {
            double x = i == n ? f3.upper : f3.lower + static_cast<double>(i) * opt.step;
            double f = hansen_f3_value(x);
            double g = opt.alpha * f + opt.beta;
            out << format_double(x) << ' ' << format_double(f) << " f3\n"
                << format_double(x) << ' ' << format_double(g) << " g3-float\n"
                << format_double(x) << ' ' << format_double((g - opt.beta) / opt.alpha)
                << " f3-inverted\n";
        }
        std::cout << "plot data written to " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz global optimization with grossone scalars"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "minimize one objective");
    solve->add_option("--function", solve_opt.function, "problem name (f1, f2, f3 or custom)")
        ->required();
    solve->add_option("--method", solve_opt.method,
                      "geom-al|geom-gl|geom-ltm|geom-ltma|inf-al|inf-gl|inf-ltm|inf-ltma")
        ->required();
    solve->add_option("--alpha", solve_opt.alpha, "scaling constant as a gross literal");
    solve->add_option("--beta", solve_opt.beta, "shifting constant as a gross literal");
    solve->add_option("--r", solve_opt.reliability, "reliability parameter override");
    solve->add_option("--L", solve_opt.apriori,
                      "a-priori Lipschitz bound for the optimized (scaled) objective, as a "
                      "gross literal");
    solve->add_option("--eps-frac", solve_opt.eps_fraction,
                      "accuracy as a fraction of the domain width");
    solve->add_option("--max-iter", solve_opt.max_iter, "objective evaluation cap");
    solve->add_option("--out", solve_opt.out_path, "report file path");
    solve->add_option("--format", solve_opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    solve->add_option("--problems-file", solve_opt.problems_file,
                      "JSON file with custom problems");

    HomogeneityOptions hom_opt;
    CLI::App* hom = app.add_subcommand(
        "homogeneity", "compare trial sequences on f and on alpha*f + beta");
    hom->add_option("--function", hom_opt.function, "problem name or 'all'");
    hom->add_option("--method", hom_opt.method, "method id or 'all'");
    hom->add_option("--scales", hom_opt.scales,
                    "semicolon-separated '<alpha>,<beta>' gross literal pairs");
    hom->add_option("--eps-frac", hom_opt.eps_fraction,
                    "accuracy as a fraction of the domain width");
    hom->add_option("--max-iter", hom_opt.max_iter, "objective evaluation cap");
    hom->add_flag("--no-deep", hom_opt.no_deep,
                  "skip the per-iteration estimate/characteristic checks");
    hom->add_option("--problems-file", hom_opt.problems_file,
                    "JSON file with custom problems");

    DemoOptions demo_opt;
    CLI::App* demo = app.add_subcommand(
        "demo-illcond", "show how extreme finite scaling loses the true minimum");
    demo->add_option("--alpha", demo_opt.alpha, "finite scaling constant");
    demo->add_option("--beta", demo_opt.beta, "finite shifting constant");
    demo->add_option("--step", demo_opt.step, "grid step");
    demo->add_option("--out", demo_opt.out_path, "plot data file path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_opt);
        if (hom->parsed()) return cmd_homogeneity(hom_opt);
        if (demo->parsed()) return cmd_demo_illcond(demo_opt);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
