#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coorbit/schur.hpp"

namespace coorbit {

inline constexpr const char* kVersionString = "coorbit 0.1.0";

/// Everything a CLI run emits: echoed configuration, certification reports,
/// norm tables. Serializes to JSON with a fixed key order and 17 significant
/// digits; parse(emit(doc)) == doc.
struct ReportDocument {
    std::string version = kVersionString;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::string note;
    std::vector<BoundednessReport> reports;
    std::vector<std::pair<std::string, double>> norm_table;
    /// Populated only when timing is requested; kept out of the default
    /// document so repeated runs stay byte-identical.
    std::optional<double> wall_time_seconds;

    bool operator==(const ReportDocument& other) const;
};

bool operator==(const BoundednessReport& a, const BoundednessReport& b);

std::string emit_json(const ReportDocument& document);
ReportDocument parse_json(const std::string& text);

/// Fixed explanatory note attached to every report.
std::string finite_scale_note();

}  // namespace coorbit
