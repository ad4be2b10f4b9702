#include "coorbit/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "coorbit/io.hpp"

namespace coorbit {

std::string finite_scale_note() {
    return "finite-dimensional certification is quantitative: every operator is bounded "
           "at this scale, so the report carries criterion values, oracle norms, and "
           "equivalence constants instead of a boolean verdict";
}

bool operator==(const BoundednessReport& a, const BoundednessReport& b) {
    return a.direction == b.direction && a.p == b.p && a.weight1 == b.weight1 &&
           a.weight2 == b.weight2 && a.criterion_value == b.criterion_value &&
           a.oracle_norm == b.oracle_norm && a.equivalence_ratio == b.equivalence_ratio &&
           a.window_constant_domain == b.window_constant_domain &&
           a.window_constant_codomain == b.window_constant_codomain && a.verdict == b.verdict &&
           a.tolerance_used == b.tolerance_used && a.warnings == b.warnings &&
           a.extras == b.extras;
}

bool ReportDocument::operator==(const ReportDocument& other) const {
    return version == other.version && config_echo == other.config_echo && note == other.note &&
           reports == other.reports && norm_table == other.norm_table &&
           wall_time_seconds == other.wall_time_seconds;
}

namespace {

// Hand-rolled emitter: fixed key order and 17 significant digits, so that
// identical documents serialize byte-identically on every run.

void emit_string(std::ostream& out, const std::string& value) {
    out << '"';
    for (char c : value) {
        switch (c) {
            case '"': out << "\\\""; break;
            case '\\': out << "\\\\"; break;
            case '\n': out << "\\n"; break;
            case '\t': out << "\\t"; break;
            default: out << c; break;
        }
    }
    out << '"';
}

void emit_number(std::ostream& out, double value) {
    if (std::isinf(value)) {
        // JSON has no infinity literal; the parser maps the string back.
        emit_string(out, value > 0 ? "inf" : "-inf");
        return;
    }
    out << format_double(value);
}

void emit_report(std::ostream& out, const BoundednessReport& report, const std::string& indent) {
    out << "{\n";
    const std::string inner = indent + "  ";
    out << inner << "\"direction\": ";
    emit_string(out, report.direction);
    out << ",\n" << inner << "\"p\": ";
    emit_number(out, report.p);
    out << ",\n" << inner << "\"weight1\": ";
    emit_string(out, report.weight1);
    out << ",\n" << inner << "\"weight2\": ";
    emit_string(out, report.weight2);
    out << ",\n" << inner << "\"criterion_value\": ";
    emit_number(out, report.criterion_value);
    out << ",\n" << inner << "\"oracle_norm\": ";
    emit_number(out, report.oracle_norm);
    out << ",\n" << inner << "\"equivalence_ratio\": ";
    emit_number(out, report.equivalence_ratio);
    out << ",\n" << inner << "\"window_constant_domain\": ";
    emit_number(out, report.window_constant_domain);
    out << ",\n" << inner << "\"window_constant_codomain\": ";
    emit_number(out, report.window_constant_codomain);
    out << ",\n" << inner << "\"verdict\": ";
    emit_string(out, report.verdict);
    out << ",\n" << inner << "\"tolerance_used\": ";
    emit_number(out, report.tolerance_used);
    out << ",\n" << inner << "\"warnings\": [";
    for (std::size_t i = 0; i < report.warnings.size(); ++i) {
        if (i > 0) out << ", ";
        emit_string(out, report.warnings[i]);
    }
    out << "],\n" << inner << "\"extras\": {";
    for (std::size_t i = 0; i < report.extras.size(); ++i) {
        if (i > 0) out << ", ";
        emit_string(out, report.extras[i].first);
        out << ": ";
        emit_number(out, report.extras[i].second);
    }
    out << "}\n" << indent << "}";
}

double number_from(const nlohmann::json& value) {
    if (value.is_string()) {
        const std::string s = value.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        throw std::runtime_error("unexpected string where a number was required");
    }
    return value.get<double>();
}

}  // namespace

std::string emit_json(const ReportDocument& document) {
    std::ostringstream out;
    out << "{\n  \"version\": ";
    emit_string(out, document.version);
    out << ",\n  \"config\": {";
    for (std::size_t i = 0; i < document.config_echo.size(); ++i) {
        if (i > 0) out << ",";
        out << "\n    ";
        emit_string(out, document.config_echo[i].first);
        out << ": ";
        emit_string(out, document.config_echo[i].second);
    }
    out << (document.config_echo.empty() ? "}" : "\n  }");
    out << ",\n  \"note\": ";
    emit_string(out, document.note);
    out << ",\n  \"reports\": [";
    for (std::size_t i = 0; i < document.reports.size(); ++i) {
        if (i > 0) out << ",";
        out << "\n    ";
        emit_report(out, document.reports[i], "    ");
    }
    out << (document.reports.empty() ? "]" : "\n  ]");
    out << ",\n  \"norm_table\": {";
    for (std::size_t i = 0; i < document.norm_table.size(); ++i) {
        if (i > 0) out << ",";
        out << "\n    ";
        emit_string(out, document.norm_table[i].first);
        out << ": ";
        emit_number(out, document.norm_table[i].second);
    }
    out << (document.norm_table.empty() ? "}" : "\n  }");
    if (document.wall_time_seconds) {
        out << ",\n  \"wall_time_seconds\": " << format_double(*document.wall_time_seconds);
    }
    out << "\n}\n";
    return out.str();
}

ReportDocument parse_json(const std::string& text) {
    const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(text);
    ReportDocument document;
    document.version = parsed.at("version").get<std::string>();
    document.config_echo.clear();
    for (const auto& [key, value] : parsed.at("config").items())
        document.config_echo.emplace_back(key, value.get<std::string>());
    document.note = parsed.at("note").get<std::string>();
    for (const auto& entry : parsed.at("reports")) {
        BoundednessReport report;
        report.direction = entry.at("direction").get<std::string>();
        report.p = number_from(entry.at("p"));
        report.weight1 = entry.at("weight1").get<std::string>();
        report.weight2 = entry.at("weight2").get<std::string>();
        report.criterion_value = number_from(entry.at("criterion_value"));
        report.oracle_norm = number_from(entry.at("oracle_norm"));
        report.equivalence_ratio = number_from(entry.at("equivalence_ratio"));
        report.window_constant_domain = number_from(entry.at("window_constant_domain"));
        report.window_constant_codomain = number_from(entry.at("window_constant_codomain"));
        report.verdict = entry.at("verdict").get<std::string>();
        report.tolerance_used = number_from(entry.at("tolerance_used"));
        for (const auto& warning : entry.at("warnings"))
            report.warnings.push_back(warning.get<std::string>());
        for (const auto& [key, value] : entry.at("extras").items())
            report.extras.emplace_back(key, number_from(value));
        document.reports.push_back(std::move(report));
    }
    for (const auto& [key, value] : parsed.at("norm_table").items())
        document.norm_table.emplace_back(key, number_from(value));
    if (parsed.contains("wall_time_seconds"))
        document.wall_time_seconds = parsed.at("wall_time_seconds").get<double>();
    return document;
}

}  // namespace coorbit
