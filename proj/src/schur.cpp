#include "coorbit/schur.hpp"

#include <cmath>
#include <random>

#include "coorbit/linalg.hpp"

namespace coorbit {

double schur_norm_1_to_p(const CoeffField2D& k, double p, const Weight& m1, const Weight& m2) {
    return mixed_norm(k, MixedNormSpec{p, MixedVariant::SupOverFirst, m1, m2});
}

double schur_norm_p_to_inf(const CoeffField2D& k, double p, const Weight& m1, const Weight& m2) {
    return mixed_norm(k, MixedNormSpec{conjugate_exponent(p), MixedVariant::SupOverSecond, m1, m2});
}

namespace {

double lp_of(const std::vector<double>& values, double p) {
    if (std::isinf(p)) {
        double sup = 0.0;
        for (double v : values) sup = std::max(sup, v);
        return sup;
    }
    double sum = 0.0;
    for (double v : values) sum += std::pow(v, p);
    return std::pow(sum, 1.0 / p);
}

}  // namespace

double opnorm_oracle_1_to_p(const CoeffField2D& k, double p, const Weight& m1, const Weight& m2) {
    if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
    double best = 0.0;
    std::vector<double> row(k.cols());
    for (std::size_t i1 = 0; i1 < k.rows(); ++i1) {
        for (std::size_t i2 = 0; i2 < k.cols(); ++i2)
            row[i2] = std::abs(k.at(i1, i2)) * m2(k.lattice2().point(i2));
        best = std::max(best, lp_of(row, p) / m1(k.lattice1().point(i1)));
    }
    return best;
}

double opnorm_oracle_p_to_inf(const CoeffField2D& k, double p, const Weight& m1,
                              const Weight& m2) {
    if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
    const double q = conjugate_exponent(p);
    double best = 0.0;
    std::vector<double> column(k.rows());
    for (std::size_t i2 = 0; i2 < k.cols(); ++i2) {
        for (std::size_t i1 = 0; i1 < k.rows(); ++i1)
            column[i1] = std::abs(k.at(i1, i2)) / m1(k.lattice1().point(i1));
        best = std::max(best, lp_of(column, q) * m2(k.lattice2().point(i2)));
    }
    return best;
}

std::string direction_name(CertificationDirection direction) {
    switch (direction) {
        case CertificationDirection::OneToP: return "one_to_p";
        case CertificationDirection::PToInf: return "p_to_inf";
        case CertificationDirection::AllP: return "all_p";
        case CertificationDirection::Regularizer: return "regularizer";
    }
    return "unknown";
}

double window_l1_constant(const FrameSpec& frame, const Weight& m) {
    const CoeffField1D gram_row = analyze(frame.scaled_window(), frame);
    return weighted_lp_norm(gram_row, 1.0, m.majorant());
}

namespace {

void require_parseval(const FrameSpec& frame, const char* which) {
    if (!is_parseval(frame))
        throw std::invalid_argument(std::string("certification requires a Parseval ") + which +
                                    " frame; call normalize_frame first");
}

double safe_ratio(double numerator, double denominator) {
    if (denominator > 0.0) return numerator / denominator;
    return numerator == 0.0 ? 1.0 : kInf;
}

}  // namespace

BoundednessReport certify(const OperatorMatrix& kernel, const FrameSpec& frame1,
                          const FrameSpec& frame2, const CertificationSpec& spec) {
    if (spec.direction == CertificationDirection::AllP)
        return certify_all_p(kernel, spec.m1, spec.m2, frame1, frame2);
    if (spec.direction == CertificationDirection::Regularizer)
        throw std::invalid_argument("regularizer certification is handled by regularizer_check");
    require_parseval(frame1, "domain");
    require_parseval(frame2, "codomain");

    BoundednessReport report;
    report.direction = direction_name(spec.direction);
    report.p = spec.p;
    report.weight1 = spec.m1.describe();
    report.weight2 = spec.m2.describe();
    report.tolerance_used = 1e-12;

    if (std::abs(spec.m1.parameter()) > spec.sigma || std::abs(spec.m2.parameter()) > spec.sigma)
        report.warnings.push_back("weight parameter exceeds the ambient guard sigma");

    const CoeffField2D vk = tensor_analysis(kernel, frame1, frame2);
    if (spec.direction == CertificationDirection::OneToP) {
        report.criterion_value =
            discrete_kernel_criterion(vk, spec.p, spec.m1, spec.m2, CriterionDirection::OneToP);
        report.oracle_norm = opnorm_oracle_1_to_p(vk, spec.p, spec.m1, spec.m2);
    } else {
        report.criterion_value =
            discrete_kernel_criterion(vk, spec.p, spec.m1, spec.m2, CriterionDirection::PToInf);
        report.oracle_norm = opnorm_oracle_p_to_inf(vk, spec.p, spec.m1, spec.m2);
    }
    report.equivalence_ratio = safe_ratio(report.oracle_norm, report.criterion_value);
    report.window_constant_domain = window_l1_constant(frame1, spec.m1);
    report.window_constant_codomain = window_l1_constant(frame2, spec.m2);
    return report;
}

BoundednessReport certify_all_p(const OperatorMatrix& kernel, const Weight& m1,
                                const Weight& m2, const FrameSpec& frame1,
                                const FrameSpec& frame2) {
    require_parseval(frame1, "domain");
    require_parseval(frame2, "codomain");

    BoundednessReport report;
    report.direction = direction_name(CertificationDirection::AllP);
    report.p = 1.0;
    report.weight1 = m1.describe();
    report.weight2 = m2.describe();
    report.tolerance_used = 1e-12;

    const CoeffField2D vk = tensor_analysis(kernel, frame1, frame2);
    // l^1 -> l^1 and l^inf -> l^inf endpoints of the interpolation bound.
    const double endpoint_one =
        discrete_kernel_criterion(vk, 1.0, m1, m2, CriterionDirection::OneToP);
    const double endpoint_inf =
        discrete_kernel_criterion(vk, kInf, m1, m2, CriterionDirection::PToInf);
    const double bound = std::max(endpoint_one, endpoint_inf);

    // Weight-conjugated lifted matrix: M(l2, l1) = k(l1, l2) m2(l2) / m1(l1).
    const std::size_t rows = vk.rows();
    const std::size_t cols = vk.cols();
    OperatorMatrix conjugated(cols, rows);
    for (std::size_t i2 = 0; i2 < cols; ++i2) {
        const double w2 = m2(vk.lattice2().point(i2));
        for (std::size_t i1 = 0; i1 < rows; ++i1) {
            conjugated(i2, i1) = vk.at(i1, i2) * (w2 / m1(vk.lattice1().point(i1)));
        }
    }

    // Exact norms at the endpoints, power iteration at p = 2, and seeded
    // sample quotients (norm lower bounds) at p = 4.
    double norm_one = 0.0;
    for (std::size_t i1 = 0; i1 < rows; ++i1) {
        double col_sum = 0.0;
        for (std::size_t i2 = 0; i2 < cols; ++i2) col_sum += std::abs(conjugated(i2, i1));
        norm_one = std::max(norm_one, col_sum);
    }
    double norm_inf = 0.0;
    for (std::size_t i2 = 0; i2 < cols; ++i2) {
        double row_sum = 0.0;
        for (std::size_t i1 = 0; i1 < rows; ++i1) row_sum += std::abs(conjugated(i2, i1));
        norm_inf = std::max(norm_inf, row_sum);
    }
    const double norm_two = linalg::spectral_norm(conjugated);

    double norm_four = 0.0;
    {
        std::mt19937_64 rng(linalg::kPowerIterationSeed);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        for (int sample = 0; sample < 32; ++sample) {
            Signal f(rows);
            double in_norm4 = 0.0;
            for (std::size_t i = 0; i < rows; ++i) {
                f[i] = cplx(uniform(rng), uniform(rng));
                in_norm4 += std::pow(std::abs(f[i]), 4.0);
            }
            const Signal g = conjugated.apply(f);
            double out_norm4 = 0.0;
            for (std::size_t i = 0; i < cols; ++i) out_norm4 += std::pow(std::abs(g[i]), 4.0);
            if (in_norm4 > 0.0)
                norm_four = std::max(norm_four, std::pow(out_norm4 / in_norm4, 0.25));
        }
    }

    report.criterion_value = bound;
    report.oracle_norm = std::max(std::max(norm_one, norm_inf), std::max(norm_two, norm_four));
    report.equivalence_ratio = safe_ratio(report.oracle_norm, report.criterion_value);
    report.window_constant_domain = window_l1_constant(frame1, m1);
    report.window_constant_codomain = window_l1_constant(frame2, m2);
    report.extras = {
        {"endpoint_one_to_one", endpoint_one},
        {"endpoint_inf_to_inf", endpoint_inf},
        {"lifted_norm_p1", norm_one},
        {"lifted_norm_p2", norm_two},
        {"lifted_norm_p4_sampled", norm_four},
        {"lifted_norm_pinf", norm_inf},
    };
    const double slack = 1e-10 * std::max(1.0, bound);
    if (norm_one > bound + slack || norm_inf > bound + slack || norm_two > bound + slack ||
        norm_four > bound + slack)
        report.warnings.push_back("interpolation bound violated");
    return report;
}

}  // namespace coorbit
