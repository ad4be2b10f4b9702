#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coorbit/types.hpp"

namespace coorbit {

/// Configuration key is unknown, malformed, or the combination is invalid.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat key=value configuration for the CLI. Values keep their textual form
/// until resolve-time so that the config echo reproduces the input exactly.
struct Config {
    std::string representation1 = "wh";     // wh | affine
    std::string representation2 = "wh";
    int n1 = 16;
    int n2 = 16;
    int levels1 = 0;                        // 0 = auto (log2 n - 1)
    int levels2 = 0;
    std::string window1 = "gaussian";       // gaussian | delta | haar | <path>
    std::string window2 = "gaussian";
    std::string weight_family1 = "auto";    // auto | polynomial | dyadic | constant
    std::string weight_family2 = "auto";
    double s1 = 0.0;
    double s2 = 0.0;
    std::string sigma = "inf";              // number or "inf"
    std::string direction = "one_to_p";     // one_to_p | p_to_inf | all_p | regularizer
    std::string p = "2";                    // number or "inf"
    std::string operator_path;
    std::string out = "report.json";
    long seed = 0;
    bool emit_timing = false;
    bool inject_nan = false;                // selftest hook: corrupt the window
    int threads = 0;                        // 0 = COORBIT_NUM_THREADS or 1

    /// key=value lines; '#' starts a comment. Throws ConfigError / IOError.
    static Config from_file(const std::string& path);

    void set(const std::string& key, const std::string& value);

    /// All keys with their current textual values, in canonical order.
    std::vector<std::pair<std::string, std::string>> echo() const;

    /// Structural validation; throws ConfigError with a diagnostic.
    void validate() const;

    double p_value() const;                 // parses p, inf aware
    double sigma_value() const;
    int resolved_levels(int side) const;
    int resolved_threads() const;
    std::string resolved_weight_family(int side) const;
};

}  // namespace coorbit
