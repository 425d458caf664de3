#include "grosslip/report.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace grosslip {

std::string to_string(StopReason reason) {
    return reason == StopReason::accuracy ? "accuracy" : "iteration-cap";
}

std::string to_string(CharacteristicKind kind) {
    return kind == CharacteristicKind::geometric ? "geometric" : "information";
}

std::string to_string(EstimatorKind kind) {
    switch (kind) {
        case EstimatorKind::apriori: return "apriori";
        case EstimatorKind::global: return "global";
        case EstimatorKind::maximum_local: return "mlt";
        case EstimatorKind::maximum_additive_local: return "malt";
    }
    return "?";
}

void write_json(const ReportRecord& record, std::ostream& out) {
    nlohmann::json doc;
    doc["schema_version"] = record.schema_version;
    doc["method"] = record.method;
    doc["problem"] = record.problem;
    doc["alpha"] = record.alpha;
    doc["beta"] = record.beta;
    doc["config"] = {{"characteristic", record.config.characteristic},
                     {"estimator", record.config.estimator},
                     {"reliability", record.config.reliability},
                     {"apriori_bound", record.config.apriori_bound},
                     {"epsilon_fraction", record.config.epsilon_fraction},
                     {"max_iterations", record.config.max_iterations}};
    doc["trials"] = nlohmann::json::array();
    for (const auto& t : record.trials)
        doc["trials"].push_back({{"k", t.k}, {"x", t.x}, {"z", t.z}});
    doc["best_x"] = record.best_x;
    doc["best_value"] = record.best_value;
    doc["trial_count"] = record.trial_count;
    doc["stop_reason"] = record.stop_reason;
    out << doc.dump(2) << '\n';
}

ReportRecord read_json(std::istream& in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    ReportRecord record;
    record.schema_version = doc.at("schema_version").get<int>();
    record.method = doc.at("method").get<std::string>();
    record.problem = doc.at("problem").get<std::string>();
    record.alpha = doc.at("alpha").get<std::string>();
    record.beta = doc.at("beta").get<std::string>();
    const auto& config = doc.at("config");
    record.config.characteristic = config.at("characteristic").get<std::string>();
    record.config.estimator = config.at("estimator").get<std::string>();
    record.config.reliability = config.at("reliability").get<double>();
    record.config.apriori_bound = config.at("apriori_bound").get<std::string>();
    record.config.epsilon_fraction = config.at("epsilon_fraction").get<double>();
    record.config.max_iterations = config.at("max_iterations").get<std::uint64_t>();
    for (const auto& t : doc.at("trials"))
        record.trials.push_back({t.at("k").get<std::uint64_t>(), t.at("x").get<double>(),
                                 t.at("z").get<std::string>()});
    record.best_x = doc.at("best_x").get<double>();
    record.best_value = doc.at("best_value").get<std::string>();
    record.trial_count = doc.at("trial_count").get<std::uint64_t>();
    record.stop_reason = doc.at("stop_reason").get<std::string>();
    return record;
}

namespace {

double parse_double_field(const std::string& text, const std::string& what) {
    double value = 0.0;
    auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || next != text.data() + text.size())
        throw std::runtime_error("malformed " + what + ": '" + text + "'");
    return value;
}

std::uint64_t parse_count_field(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || next != text.data() + text.size())
        throw std::runtime_error("malformed " + what + ": '" + text + "'");
    return value;
}

}  // namespace

void write_csv(const ReportRecord& record, std::ostream& out) {
    out << "#schema_version=" << record.schema_version << '\n'
        << "#method=" << record.method << '\n'
        << "#problem=" << record.problem << '\n'
        << "#alpha=" << record.alpha << '\n'
        << "#beta=" << record.beta << '\n'
        << "#characteristic=" << record.config.characteristic << '\n'
        << "#estimator=" << record.config.estimator << '\n'
        << "#reliability=" << format_double(record.config.reliability) << '\n'
        << "#apriori_bound=" << record.config.apriori_bound << '\n'
        << "#epsilon_fraction=" << format_double(record.config.epsilon_fraction) << '\n'
        << "#max_iterations=" << record.config.max_iterations << '\n'
        << "#best_x=" << format_double(record.best_x) << '\n'
        << "#best_value=" << record.best_value << '\n'
        << "#trial_count=" << record.trial_count << '\n'
        << "#stop_reason=" << record.stop_reason << '\n'
        << "k,x,z\n";
    for (const auto& t : record.trials)
        out << t.k << ',' << format_double(t.x) << ',' << t.z << '\n';
}

ReportRecord read_csv(std::istream& in) {
    ReportRecord record;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("malformed metadata line: " + line);
            std::string key = line.substr(1, eq - 1);
            std::string value = line.substr(eq + 1);
            if (key == "schema_version")
                record.schema_version = static_cast<int>(parse_count_field(value, key));
            else if (key == "method") record.method = value;
            else if (key == "problem") record.problem = value;
            else if (key == "alpha") record.alpha = value;
            else if (key == "beta") record.beta = value;
            else if (key == "characteristic") record.config.characteristic = value;
            else if (key == "estimator") record.config.estimator = value;
            else if (key == "reliability")
                record.config.reliability = parse_double_field(value, key);
            else if (key == "apriori_bound") record.config.apriori_bound = value;
            else if (key == "epsilon_fraction")
                record.config.epsilon_fraction = parse_double_field(value, key);
            else if (key == "max_iterations")
                record.config.max_iterations = parse_count_field(value, key);
            else if (key == "best_x") record.best_x = parse_double_field(value, key);
            else if (key == "best_value") record.best_value = value;
            else if (key == "trial_count")
                record.trial_count = parse_count_field(value, key);
            else if (key == "stop_reason") record.stop_reason = value;
            else throw std::runtime_error("unknown metadata key: " + key);
            continue;
        }
        if (!header_seen) {
            if (line != "k,x,z") throw std::runtime_error("expected 'k,x,z' header");
            header_seen = true;
            continue;
        }
        std::size_t c1 = line.find(',');
        std::size_t c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::runtime_error("malformed trial row: " + line);
        ReportRecord::TrialRow row;
        row.k = parse_count_field(line.substr(0, c1), "trial index");
        row.x = parse_double_field(line.substr(c1 + 1, c2 - c1 - 1), "abscissa");
        row.z = line.substr(c2 + 1);
        record.trials.push_back(std::move(row));
    }
    return record;
}

}  // namespace grosslip
