// Lossless run records for the command line tool. JSON is the canonical
// interchange format; CSV is the tabulation format (metadata in '#key=value'
// comment lines, then one 'k,x,z' row per trial). Both re-parse to an equal
// record. Gross values travel as canonical literals.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "grosslip/experiments.hpp"
#include "grosslip/solver.hpp"

namespace grosslip {

inline constexpr int kReportSchemaVersion = 1;

struct ReportRecord {
    int schema_version = kReportSchemaVersion;
    std::string method;
    std::string problem;
    std::string alpha = "1@0";  // gross literals
    std::string beta = "0";
    struct Config {
        std::string characteristic;  // "geometric" | "information"
        std::string estimator;       // "apriori" | "global" | "mlt" | "malt"
        double reliability = 0.0;
        std::string apriori_bound = "0";  // gross literal
        double epsilon_fraction = 0.0;
        std::uint64_t max_iterations = 0;

        friend bool operator==(const Config&, const Config&) = default;
    } config;
    struct TrialRow {
        std::uint64_t k = 0;  // 1-based evaluation order
        double x = 0.0;
        std::string z;  // gross literal

        friend bool operator==(const TrialRow&, const TrialRow&) = default;
    };
    std::vector<TrialRow> trials;
    double best_x = 0.0;
    std::string best_value;  // gross literal
    std::uint64_t trial_count = 0;
    std::string stop_reason;  // "accuracy" | "iteration-cap"

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

std::string to_string(StopReason reason);
std::string to_string(CharacteristicKind kind);
std::string to_string(EstimatorKind kind);

template <ScalarLike S>
ReportRecord make_record(const RunReport<S>& report, MethodId method,
                         const std::string& problem, const ScalePair& scale,
                         const MethodConfig<S>& config) {
    ReportRecord out;
    out.method = to_string(method);
    out.problem = problem;
    out.alpha = to_literal(scale.alpha);
    out.beta = to_literal(scale.beta);
    out.config.characteristic = to_string(config.characteristic);
    out.config.estimator = to_string(config.estimator);
    out.config.reliability = config.reliability;
    out.config.apriori_bound = to_literal(scalar_traits<S>::to_gross(config.apriori_bound));
    out.config.epsilon_fraction = config.epsilon_fraction;
    out.config.max_iterations = config.max_iterations;
    out.trials.reserve(report.trials.size());
    for (std::size_t i = 0; i < report.trials.size(); ++i)
        out.trials.push_back({i + 1, report.trials[i].x,
                              to_literal(scalar_traits<S>::to_gross(report.trials[i].value))});
    out.best_x = report.best_x;
    out.best_value = to_literal(scalar_traits<S>::to_gross(report.best_value));
    out.trial_count = report.trial_count();
    out.stop_reason = to_string(report.stop);
    return out;
}

void write_json(const ReportRecord& record, std::ostream& out);
ReportRecord read_json(std::istream& in);

void write_csv(const ReportRecord& record, std::ostream& out);
ReportRecord read_csv(std::istream& in);

}  // namespace grosslip
