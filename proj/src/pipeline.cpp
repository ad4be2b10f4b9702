#include "coorbit/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "coorbit/io.hpp"
#include "coorbit/kernel.hpp"
#include "coorbit/linalg.hpp"
#include "coorbit/presets.hpp"
#include "coorbit/selftest.hpp"

namespace coorbit {

namespace {

FrameSpec build_frame(const Config& config, int side) {
    const std::string& repr = side == 1 ? config.representation1 : config.representation2;
    const int n = side == 1 ? config.n1 : config.n2;
    const std::string& window = side == 1 ? config.window1 : config.window2;
    if (repr == "affine") return haar_frame(n, config.resolved_levels(side));
    Signal w(0);
    if (window == "gaussian") {
        w = gaussian_window(n);
    } else if (window == "delta") {
        w = Signal::delta(static_cast<std::size_t>(n));
    } else {
        w = read_signal_file(window);
        if (static_cast<int>(w.length()) != n)
            throw ConfigError("window file length does not match n" + std::to_string(side));
        if (!w.finite()) throw ConfigError("window file contains non-finite entries");
    }
    return normalize_frame(FrameSpec::weyl_heisenberg(std::move(w), Lattice::tf_full(n)));
}

Weight build_weight(const Config& config, int side) {
    const std::string family = config.resolved_weight_family(side);
    const double s = side == 1 ? config.s1 : config.s2;
    if (family == "polynomial") return Weight::polynomial_tf(s);
    if (family == "dyadic") return Weight::dyadic(s);
    return Weight::constant();
}

OperatorMatrix load_operator(const Config& config) {
    if (config.operator_path.empty())
        throw ConfigError("an operator file is required (key 'operator')");
    const OperatorMatrix op = read_matrix_file(config.operator_path);
    if (op.cols() != static_cast<std::size_t>(config.n1) ||
        op.rows() != static_cast<std::size_t>(config.n2))
        throw ConfigError("operator shape " + std::to_string(op.rows()) + "x" +
                          std::to_string(op.cols()) + " does not match n2 x n1");
    return op;
}

void write_report(const Config& config, ReportDocument document,
                  std::chrono::steady_clock::time_point started) {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - started);
    if (config.emit_timing) document.wall_time_seconds = elapsed.count();
    std::cerr << "wall time: " << elapsed.count() << " s\n";

    std::ofstream output(config.out, std::ios::binary);
    if (!output) throw IOError("cannot open report file for writing: " + config.out);
    output << emit_json(document);
    if (!output) throw IOError("write failed: " + config.out);
}

std::vector<std::pair<std::string, double>> norm_table_for(const OperatorMatrix& op,
                                                           const FrameSpec& frame1,
                                                           const FrameSpec& frame2,
                                                           const Weight& w1, const Weight& w2,
                                                           double p) {
    const CoeffField2D vk = tensor_analysis(op, frame1, frame2);
    return {
        {"hilbert_schmidt", op.frobenius_norm()},
        {"l2_operator_norm", linalg::spectral_norm(op)},
        {"kernel_l1_weighted", weighted_lp_tensor(vk, 1.0, w1, w2)},
        {"kernel_sup_over_weight", weighted_lp_tensor(vk, kInf, w1.inverse(), w2.inverse())},
        {"schur_1_to_p", schur_norm_1_to_p(vk, p, w1, w2)},
        {"schur_p_to_inf", schur_norm_p_to_inf(vk, p, w1, w2)},
    };
}

int guarded(const Config& config, const char* command, int (*body)(const Config&)) {
    try {
        return body(config);
    } catch (const ConfigError& error) {
        std::cerr << command << ": " << error.what() << "\n";
        return kExitValidation;
    } catch (const IOError& error) {
        std::cerr << command << ": " << error.what() << "\n";
        return kExitIO;
    } catch (const std::exception& error) {
        std::cerr << command << ": " << error.what() << "\n";
        return kExitValidation;
    }
}

int certify_body(const Config& config) {
    const auto started = std::chrono::steady_clock::now();
    config.validate();
    const FrameSpec frame1 = build_frame(config, 1);
    const FrameSpec frame2 = build_frame(config, 2);
    const Weight w1 = build_weight(config, 1);
    const Weight w2 = build_weight(config, 2);
    const OperatorMatrix op = load_operator(config);

    BoundednessReport report;
    if (config.direction == "regularizer") {
        report = regularizer_check(op, frame1, frame2, w1, w2, 50,
                                   static_cast<unsigned>(config.seed) + 7u);
    } else {
        CertificationSpec spec;
        spec.direction = config.direction == "p_to_inf" ? CertificationDirection::PToInf
                         : config.direction == "all_p"  ? CertificationDirection::AllP
                                                        : CertificationDirection::OneToP;
        spec.p = config.p_value();
        spec.m1 = w1;
        spec.m2 = w2;
        spec.sigma = config.sigma_value();
        report = certify(op, frame1, frame2, spec);
    }

    ReportDocument document;
    document.config_echo = config.echo();
    document.note = finite_scale_note();
    document.reports.push_back(std::move(report));
    document.norm_table = norm_table_for(op, frame1, frame2, w1, w2, config.p_value());
    write_report(config, std::move(document), started);
    return kExitOk;
}

int cross_body(const Config& config) {
    if (config.representation1 == config.representation2)
        throw ConfigError("cross certification requires representation1 != representation2");
    return certify_body(config);
}

int norms_body(const Config& config) {
    const auto started = std::chrono::steady_clock::now();
    config.validate();
    const FrameSpec frame1 = build_frame(config, 1);
    const FrameSpec frame2 = build_frame(config, 2);
    const OperatorMatrix op = load_operator(config);

    ReportDocument document;
    document.config_echo = config.echo();
    document.note = finite_scale_note();
    document.norm_table = norm_table_for(op, frame1, frame2, build_weight(config, 1),
                                         build_weight(config, 2), config.p_value());
    write_report(config, std::move(document), started);
    return kExitOk;
}

int selftest_body(const Config& config) {
    config.validate();
    const auto results = run_selftest_suite(config.n1, static_cast<unsigned>(config.seed),
                                            config.inject_nan, config.resolved_threads());
    std::size_t name_width = 0;
    for (const auto& result : results) name_width = std::max(name_width, result.name.size());
    bool all_passed = true;
    std::string failed_name;
    for (const auto& result : results) {
        std::printf("%-*s  %-4s  observed %.3e  tolerance %.1e\n",
                    static_cast<int>(name_width), result.name.c_str(),
                    result.passed ? "ok" : "FAIL", result.observed, result.tolerance);
        if (!result.passed && all_passed) {
            all_passed = false;
            failed_name = result.name;
        }
    }
    if (!all_passed) {
        std::printf("selftest failed: %s\n", failed_name.c_str());
        return kExitInvariantFailure;
    }
    std::printf("selftest passed (%zu invariants)\n", results.size());
    return kExitOk;
}

}  // namespace

int run_certify(const Config& config) { return guarded(config, "certify", certify_body); }

int run_cross(const Config& config) { return guarded(config, "cross", cross_body); }

int run_norms(const Config& config) { return guarded(config, "norms", norms_body); }

int run_selftest(const Config& config) {
    try {
        return selftest_body(config);
    } catch (const ConfigError& error) {
        std::cerr << "selftest: " << error.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& error) {
        std::cerr << "selftest: " << error.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace coorbit
