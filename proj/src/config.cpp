#include "coorbit/config.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "coorbit/io.hpp"
#include "coorbit/linalg.hpp"

namespace coorbit {

namespace {

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "on") return true;
    if (value == "false" || value == "0" || value == "off") return false;
    throw ConfigError("boolean expected for " + key + ", got '" + value + "'");
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("integer expected for " + key + ", got '" + value + "'");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("number expected for " + key + ", got '" + value + "'");
    }
}

double parse_exponent_like(const std::string& key, const std::string& value) {
    if (value == "inf") return std::numeric_limits<double>::infinity();
    return parse_real(key, value);
}

std::string trim(const std::string& s) {
    const std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw IOError("cannot open config file: " + path);
    Config config;
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value at line " + std::to_string(line_no));
        config.set(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return config;
}

void Config::set(const std::string& key, const std::string& value) {
    if (key == "representation1") representation1 = value;
    else if (key == "representation2") representation2 = value;
    else if (key == "n1") n1 = parse_int(key, value);
    else if (key == "n2") n2 = parse_int(key, value);
    else if (key == "levels1") levels1 = parse_int(key, value);
    else if (key == "levels2") levels2 = parse_int(key, value);
    else if (key == "window1") window1 = value;
    else if (key == "window2") window2 = value;
    else if (key == "weight_family1") weight_family1 = value;
    else if (key == "weight_family2") weight_family2 = value;
    else if (key == "s1") s1 = parse_real(key, value);
    else if (key == "s2") s2 = parse_real(key, value);
    else if (key == "sigma") sigma = value;
    else if (key == "direction") direction = value;
    else if (key == "p") p = value;
    else if (key == "operator") operator_path = value;
    else if (key == "out") out = value;
    else if (key == "seed") seed = parse_int(key, value);
    else if (key == "emit_timing") emit_timing = parse_bool(key, value);
    else if (key == "inject_nan") inject_nan = parse_bool(key, value);
    else if (key == "threads") threads = parse_int(key, value);
    else throw ConfigError("unknown configuration key: " + key);
}

std::vector<std::pair<std::string, std::string>> Config::echo() const {
    auto real_str = [](double v) {
        std::ostringstream out;
        out << v;
        return out.str();
    };
    return {
        {"representation1", representation1},
        {"representation2", representation2},
        {"n1", std::to_string(n1)},
        {"n2", std::to_string(n2)},
        {"levels1", std::to_string(levels1)},
        {"levels2", std::to_string(levels2)},
        {"window1", window1},
        {"window2", window2},
        {"weight_family1", weight_family1},
        {"weight_family2", weight_family2},
        {"s1", real_str(s1)},
        {"s2", real_str(s2)},
        {"sigma", sigma},
        {"direction", direction},
        {"p", p},
        {"operator", operator_path},
        {"out", out},
        {"seed", std::to_string(seed)},
        {"emit_timing", emit_timing ? "true" : "false"},
        {"inject_nan", inject_nan ? "true" : "false"},
        {"threads", std::to_string(threads)},
    };
}

double Config::p_value() const { return parse_exponent_like("p", p); }

double Config::sigma_value() const { return parse_exponent_like("sigma", sigma); }

int Config::resolved_levels(int side) const {
    const int n = side == 1 ? n1 : n2;
    const int levels = side == 1 ? levels1 : levels2;
    if (levels > 0) return levels;
    return std::max(1, linalg::log2_exact(static_cast<std::size_t>(n)) - 1);
}

int Config::resolved_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("COORBIT_NUM_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            return 1;
        }
    }
    return 1;
}

std::string Config::resolved_weight_family(int side) const {
    const std::string& family = side == 1 ? weight_family1 : weight_family2;
    if (family != "auto") return family;
    const std::string& repr = side == 1 ? representation1 : representation2;
    return repr == "affine" ? "dyadic" : "polynomial";
}

void Config::validate() const {
    auto check_side = [&](int side) {
        const std::string& repr = side == 1 ? representation1 : representation2;
        const int n = side == 1 ? n1 : n2;
        const std::string& window = side == 1 ? window1 : window2;
        if (repr != "wh" && repr != "affine")
            throw ConfigError("representation" + std::to_string(side) +
                              " must be 'wh' or 'affine'");
        if (n < 1) throw ConfigError("n" + std::to_string(side) + " must be positive");
        if (repr == "affine") {
            if (!linalg::is_power_of_two(static_cast<std::size_t>(n)) || n < 4)
                throw ConfigError("affine representation needs n to be a power of two, n >= 4");
            const int levels = resolved_levels(side);
            if (levels < 1 || (n >> levels) < 1)
                throw ConfigError("levels" + std::to_string(side) + " out of range");
            if (window != "haar")
                throw ConfigError("affine representation supports only the haar window");
        } else {
            if (window.empty())
                throw ConfigError("window" + std::to_string(side) + " must not be empty");
            if (window == "haar")
                throw ConfigError("haar window is only available for the affine representation");
            // gaussian and delta are named presets; any other value is a file path
        }
        const std::string family = resolved_weight_family(side);
        if (family != "polynomial" && family != "dyadic" && family != "constant")
            throw ConfigError("weight_family" + std::to_string(side) +
                              " must be auto, polynomial, dyadic, or constant");
        if (family == "polynomial" && repr != "wh")
            throw ConfigError("polynomial weights require the wh representation");
        if (family == "dyadic" && repr != "affine")
            throw ConfigError("dyadic weights require the affine representation");
    };
    check_side(1);
    check_side(2);

    if (direction != "one_to_p" && direction != "p_to_inf" && direction != "all_p" &&
        direction != "regularizer")
        throw ConfigError("direction must be one_to_p, p_to_inf, all_p, or regularizer");
    const double pv = p_value();
    if (!(pv >= 1.0)) throw ConfigError("p must satisfy p >= 1 (or 'inf')");
    const double sv = sigma_value();
    if (!(sv >= 0.0)) throw ConfigError("sigma must be nonnegative (or 'inf')");
    if (out.empty()) throw ConfigError("out must not be empty");
}

}  // namespace coorbit
