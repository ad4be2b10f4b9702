#include "coorbit/norms.hpp"

#include <cmath>

namespace coorbit {

double conjugate_exponent(double p) {
    if (p < 1.0) throw std::invalid_argument("exponent must satisfy p >= 1");
    if (p == 1.0) return kInf;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

namespace {

void check_exponent(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
}

// p-norm of pre-weighted magnitudes accumulated by the caller.
class LpAccumulator {
public:
    explicit LpAccumulator(double p) : p_(p), use_sup_(std::isinf(p)) {}

    void add(double magnitude) {
        if (use_sup_) {
            value_ = std::max(value_, magnitude);
        } else {
            value_ += std::pow(magnitude, p_);
        }
    }

    double result() const { return use_sup_ ? value_ : std::pow(value_, 1.0 / p_); }

private:
    double p_;
    bool use_sup_;
    double value_ = 0.0;
};

}  // namespace

double weighted_lp_norm(const CoeffField1D& coeffs, double p, const Weight& m) {
    check_exponent(p);
    LpAccumulator acc(p);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc.add(std::abs(coeffs[i]) * m(coeffs.lattice().point(i)));
    }
    return acc.result();
}

double mixed_norm(const CoeffField2D& coeffs, const MixedNormSpec& spec) {
    check_exponent(spec.p);
    const std::size_t rows = coeffs.rows();
    const std::size_t cols = coeffs.cols();

    std::vector<double> inv_m1(rows), m2(cols);
    for (std::size_t i = 0; i < rows; ++i) inv_m1[i] = 1.0 / spec.m1(coeffs.lattice1().point(i));
    for (std::size_t j = 0; j < cols; ++j) m2[j] = spec.m2(coeffs.lattice2().point(j));

    double sup = 0.0;
    if (spec.variant == MixedVariant::SupOverFirst) {
        // sup over lattice1 of the p-norm over lattice2
        for (std::size_t i = 0; i < rows; ++i) {
            LpAccumulator acc(spec.p);
            for (std::size_t j = 0; j < cols; ++j)
                acc.add(std::abs(coeffs.at(i, j)) * inv_m1[i] * m2[j]);
            sup = std::max(sup, acc.result());
        }
    } else {
        // sup over lattice2 of the p-norm over lattice1
        for (std::size_t j = 0; j < cols; ++j) {
            LpAccumulator acc(spec.p);
            for (std::size_t i = 0; i < rows; ++i)
                acc.add(std::abs(coeffs.at(i, j)) * inv_m1[i] * m2[j]);
            sup = std::max(sup, acc.result());
        }
    }
    return sup;
}

double weighted_lp_tensor(const CoeffField2D& coeffs, double p, const Weight& w1,
                          const Weight& w2) {
    check_exponent(p);
    const std::size_t rows = coeffs.rows();
    const std::size_t cols = coeffs.cols();
    std::vector<double> a(rows), b(cols);
    for (std::size_t i = 0; i < rows; ++i) a[i] = w1(coeffs.lattice1().point(i));
    for (std::size_t j = 0; j < cols; ++j) b[j] = w2(coeffs.lattice2().point(j));
    LpAccumulator acc(p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) acc.add(std::abs(coeffs.at(i, j)) * a[i] * b[j]);
    return acc.result();
}

double coorbit_norm(const Signal& f, const FrameSpec& frame, double p, const Weight& m) {
    return weighted_lp_norm(analyze(f, frame), p, m);
}

double discrete_kernel_criterion(const CoeffField2D& vk, double p, const Weight& m1,
                                 const Weight& m2, CriterionDirection direction) {
    check_exponent(p);
    const std::size_t rows = vk.rows();
    const std::size_t cols = vk.cols();
    std::vector<double> inv_m1(rows), m2v(cols);
    for (std::size_t i = 0; i < rows; ++i) inv_m1[i] = 1.0 / m1(vk.lattice1().point(i));
    for (std::size_t j = 0; j < cols; ++j) m2v[j] = m2(vk.lattice2().point(j));

    double sup = 0.0;
    if (direction == CriterionDirection::OneToP) {
        for (std::size_t i = 0; i < rows; ++i) {
            LpAccumulator acc(p);
            for (std::size_t j = 0; j < cols; ++j)
                acc.add(std::abs(vk.at(i, j)) * inv_m1[i] * m2v[j]);
            sup = std::max(sup, acc.result());
        }
    } else {
        const double q = conjugate_exponent(p);
        for (std::size_t j = 0; j < cols; ++j) {
            LpAccumulator acc(q);
            for (std::size_t i = 0; i < rows; ++i)
                acc.add(std::abs(vk.at(i, j)) * inv_m1[i] * m2v[j]);
            sup = std::max(sup, acc.result());
        }
    }
    return sup;
}

}  // namespace coorbit
