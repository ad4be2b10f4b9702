#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "coorbit/io.hpp"
#include "coorbit/pipeline.hpp"

namespace {

// Registers --config plus one override flag per configuration key; overrides
// are applied on top of the config file in command-line order.
struct CliOptions {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
};

void add_common_options(CLI::App* cmd, CliOptions& options) {
    cmd->add_option("--config", options.config_path, "key=value configuration file");
    static const char* keys[] = {
        "representation1", "representation2", "n1", "n2", "levels1", "levels2",
        "window1", "window2", "weight_family1", "weight_family2", "s1", "s2",
        "sigma", "direction", "p", "operator", "out", "seed", "emit_timing",
        "inject_nan", "threads",
    };
    for (const char* key : keys) {
        cmd->add_option_function<std::string>(
            std::string("--") + key,
            [&options, key](const std::string& value) {
                options.overrides.emplace_back(key, value);
            },
            std::string("override config key ") + key);
    }
}

int load_and_run(const CliOptions& options, int (*runner)(const coorbit::Config&)) {
    coorbit::Config config;
    try {
        if (!options.config_path.empty())
            config = coorbit::Config::from_file(options.config_path);
        for (const auto& [key, value] : options.overrides) config.set(key, value);
    } catch (const coorbit::IOError& error) {
        std::cerr << error.what() << "\n";
        return coorbit::kExitIO;
    } catch (const std::exception& error) {
        std::cerr << error.what() << "\n";
        return coorbit::kExitValidation;
    }
    return runner(config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coorbit: frame transforms, operator kernels, and Schur-test "
                 "boundedness reports on Z_N"};
    app.require_subcommand(1);

    CliOptions certify_options, selftest_options, cross_options, norms_options;
    CLI::App* certify = app.add_subcommand(
        "certify", "certify an operator between two coorbit-type spaces");
    add_common_options(certify, certify_options);
    CLI::App* selftest = app.add_subcommand(
        "selftest", "run the invariant suite at the configured size");
    add_common_options(selftest, selftest_options);
    CLI::App* cross = app.add_subcommand(
        "cross", "certify across two different representations");
    add_common_options(cross, cross_options);
    CLI::App* norms = app.add_subcommand("norms", "emit the norm table for an operator");
    add_common_options(norms, norms_options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? coorbit::kExitOk : coorbit::kExitValidation;
    }

    if (certify->parsed()) return load_and_run(certify_options, coorbit::run_certify);
    if (selftest->parsed()) return load_and_run(selftest_options, coorbit::run_selftest);
    if (cross->parsed()) return load_and_run(cross_options, coorbit::run_cross);
    if (norms->parsed()) return load_and_run(norms_options, coorbit::run_norms);
    return coorbit::kExitValidation;
}
