#include "coorbit/kernel.hpp"

#include <cmath>
#include <random>

#include "coorbit/linalg.hpp"

namespace coorbit {

CoeffField2D galerkin_kernel(const OperatorMatrix& a, const FrameSpec& frame1,
                             const FrameSpec& frame2) {
    if (a.cols() != static_cast<std::size_t>(frame1.dimension()) ||
        a.rows() != static_cast<std::size_t>(frame2.dimension()))
        throw DimensionError("operator shape does not match the frame dimensions");
    const OperatorMatrix& atoms2 = frame2.atom_table();
    const std::size_t n2 = static_cast<std::size_t>(frame2.dimension());
    CoeffField2D out = CoeffField2D::zeros(frame1.lattice(), frame2.lattice());
    for (std::size_t i1 = 0; i1 < frame1.size(); ++i1) {
        const Signal mapped = a.apply(frame1.atom(i1));
        for (std::size_t i2 = 0; i2 < frame2.size(); ++i2) {
            cplx sum(0.0, 0.0);
            for (std::size_t t = 0; t < n2; ++t) sum += mapped[t] * std::conj(atoms2(i2, t));
            out.at(i1, i2) = sum;
        }
    }
    return out;
}

LiftedOperator::LiftedOperator(const CoeffField2D& kernel_field)
    : matrix_(kernel_field.cols(), kernel_field.rows()),
      lattice1_(kernel_field.lattice1()),
      lattice2_(kernel_field.lattice2()) {
    for (std::size_t i2 = 0; i2 < kernel_field.cols(); ++i2)
        for (std::size_t i1 = 0; i1 < kernel_field.rows(); ++i1)
            matrix_(i2, i1) = kernel_field.at(i1, i2);
}

CoeffField1D LiftedOperator::apply(const CoeffField1D& coeffs) const {
    if (!(coeffs.lattice() == lattice1_))
        throw DimensionError("coefficient lattice does not match the lifted operator domain");
    Signal as_vector(coeffs.values());
    const Signal mapped = matrix_.apply(as_vector);
    return CoeffField1D(lattice2_, mapped.values());
}

LiftedOperator lift_operator(const CoeffField2D& kernel_field) {
    return LiftedOperator(kernel_field);
}

Signal apply_via_factorization(const CoeffField2D& kernel_field, const Signal& f,
                               const FrameSpec& frame1, const FrameSpec& frame2) {
    const LiftedOperator lifted(kernel_field);
    return synthesize(lifted.apply(analyze(f, frame1)), frame2);
}

KernelForm::KernelForm(OperatorMatrix kernel, FrameSpec frame1, FrameSpec frame2, Weight w1,
                       Weight w2)
    : kernel_(std::move(kernel)),
      frame1_(std::move(frame1)),
      frame2_(std::move(frame2)),
      w1_(std::move(w1)),
      w2_(std::move(w2)) {
    const CoeffField2D vk = tensor_analysis(kernel_, frame1_, frame2_);
    kernel_sup_norm_ = weighted_lp_tensor(vk, kInf, w1_.inverse(), w2_.inverse());
}

cplx KernelForm::evaluate(const Signal& v, const Signal& phi) const {
    return inner(kernel_.apply(v), phi);
}

double KernelForm::certified_bound(const Signal& v, const Signal& phi) const {
    return kernel_sup_norm_ * coorbit_norm(v, frame1_, 1.0, w1_) *
           coorbit_norm(phi, frame2_, 1.0, w2_);
}

KernelForm operator_from_kernel(OperatorMatrix kernel, const FrameSpec& frame1,
                                const FrameSpec& frame2, const Weight& w1, const Weight& w2) {
    return KernelForm(std::move(kernel), frame1, frame2, w1, w2);
}

KernelRecovery kernel_from_operator(const OperatorMatrix& a, const FrameSpec& frame1,
                                    const FrameSpec& frame2, const Weight& w1, const Weight& w2) {
    const CoeffField2D k_a = galerkin_kernel(a, frame1, frame2);
    KernelRecovery recovery;
    recovery.kernel = tensor_synthesis(k_a, frame1, frame2);
    // The Co l1_{w1} -> Co linf_{1/w2} norm of the lifted operator equals the
    // weighted sup norm of the kernel transform; both sides are reported.
    recovery.operator_norm_estimate = opnorm_oracle_1_to_p(k_a, kInf, w1, w2.inverse());
    recovery.kernel_sup_norm = weighted_lp_tensor(k_a, kInf, w1.inverse(), w2.inverse());
    recovery.equivalence_ratio = recovery.kernel_sup_norm > 0.0
                                     ? recovery.operator_norm_estimate / recovery.kernel_sup_norm
                                     : 1.0;
    return recovery;
}

AtomicDecomposition atomic_decompose(const Signal& f, const FrameSpec& frame, const Weight& w) {
    if (static_cast<int>(f.length()) != frame.dimension())
        throw DimensionError("signal length does not match the frame dimension");
    // Canonical dual coefficients <f, S^{-1} a_lambda> = <S^{-1} f, a_lambda>.
    const OperatorMatrix s = frame_operator(frame);
    const Signal precondition = linalg::solve_hermitian(s, f, 1e-10);
    const CoeffField1D coeffs = analyze(precondition, frame);

    AtomicDecomposition decomposition;
    decomposition.frame = frame;
    decomposition.atoms.reserve(coeffs.size());
    double mass = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == cplx(0.0, 0.0)) continue;   // exact zeros carry no atom
        const LatticePoint& point = frame.lattice().point(i);
        decomposition.atoms.emplace_back(point, coeffs[i]);
        mass += std::abs(coeffs[i]) * w(point);
    }
    decomposition.l1_weighted_mass = mass;
    return decomposition;
}

Signal reconstruct(const AtomicDecomposition& decomposition) {
    const FrameSpec& frame = decomposition.frame;
    // Atoms keep lattice order, so a single sweep matches them to indices.
    std::vector<cplx> coeffs(frame.size(), cplx(0.0, 0.0));
    std::size_t cursor = 0;
    for (const auto& [point, value] : decomposition.atoms) {
        while (cursor < frame.size() && !(frame.lattice().point(cursor) == point)) ++cursor;
        if (cursor == frame.size())
            throw std::invalid_argument("decomposition atom is not on the frame lattice");
        coeffs[cursor] = value;
    }
    return synthesize(CoeffField1D(frame.lattice(), std::move(coeffs)), frame);
}

namespace {

// max over mu of sum_lambda |<a_mu, b_lambda>| w(lambda) / w(mu) for two atom
// families given as row tables.
double gram_row_constant(const OperatorMatrix& a, const OperatorMatrix& b, const Lattice& lattice,
                         const Weight& w) {
    const std::size_t count = a.rows();
    const std::size_t n = a.cols();
    std::vector<double> weights(count);
    for (std::size_t i = 0; i < count; ++i) weights[i] = w(lattice.point(i));
    double best = 0.0;
    for (std::size_t mu = 0; mu < count; ++mu) {
        double sum = 0.0;
        for (std::size_t lambda = 0; lambda < count; ++lambda) {
            cplx g(0.0, 0.0);
            for (std::size_t t = 0; t < n; ++t) g += a(mu, t) * std::conj(b(lambda, t));
            sum += std::abs(g) * weights[lambda];
        }
        best = std::max(best, sum / weights[mu]);
    }
    return best;
}

OperatorMatrix dual_atom_table(const FrameSpec& frame) {
    const OperatorMatrix s = frame_operator(frame);
    const OperatorMatrix& atoms = frame.atom_table();
    const std::size_t n = atoms.cols();
    OperatorMatrix duals(atoms.rows(), n);
    for (std::size_t i = 0; i < atoms.rows(); ++i) {
        Signal a(n);
        for (std::size_t t = 0; t < n; ++t) a[t] = atoms(i, t);
        const Signal d = linalg::solve_hermitian(s, a, 1e-10);
        for (std::size_t t = 0; t < n; ++t) duals(i, t) = d[t];
    }
    return duals;
}

}  // namespace

AtomicEquivalence atomic_norm_equivalence(const FrameSpec& frame, const Weight& w) {
    const OperatorMatrix duals = dual_atom_table(frame);
    AtomicEquivalence equivalence;
    equivalence.mass_over_norm = gram_row_constant(duals, duals, frame.lattice(), w);
    equivalence.norm_over_mass =
        gram_row_constant(frame.atom_table(), frame.atom_table(), frame.lattice(), w);
    return equivalence;
}

ProjectiveBound projective_tensor_bound(const OperatorMatrix& kernel, const FrameSpec& frame1,
                                        const FrameSpec& frame2, const Weight& w1,
                                        const Weight& w2) {
    const CoeffField2D vk = tensor_analysis(kernel, frame1, frame2);
    ProjectiveBound bound;
    bound.lower = weighted_lp_tensor(vk, 1.0, w1, w2);

    // Coorbit l1 norms of every atom, reused across the double sum.
    std::vector<double> atom_norm1(frame1.size()), atom_norm2(frame2.size());
    for (std::size_t i = 0; i < frame1.size(); ++i)
        atom_norm1[i] = coorbit_norm(frame1.atom(i), frame1, 1.0, w1);
    for (std::size_t i = 0; i < frame2.size(); ++i)
        atom_norm2[i] = coorbit_norm(frame2.atom(i), frame2, 1.0, w2);

    double upper = 0.0;
    for (std::size_t i1 = 0; i1 < frame1.size(); ++i1)
        for (std::size_t i2 = 0; i2 < frame2.size(); ++i2)
            upper += std::abs(vk.at(i1, i2)) * atom_norm1[i1] * atom_norm2[i2];
    bound.upper = upper;

    // lower = sum |c| w1 w2 and upper = sum |c| alpha1 alpha2, so the ratio
    // bounds come from the extreme atom-norm-to-weight quotients.
    double max_ratio = 0.0;
    double min_ratio = kInf;
    for (std::size_t i1 = 0; i1 < frame1.size(); ++i1) {
        const double r1 = atom_norm1[i1] / w1(frame1.lattice().point(i1));
        for (std::size_t i2 = 0; i2 < frame2.size(); ++i2) {
            const double r = r1 * atom_norm2[i2] / w2(frame2.lattice().point(i2));
            max_ratio = std::max(max_ratio, r);
            min_ratio = std::min(min_ratio, r);
        }
    }
    bound.upper_to_lower = max_ratio;
    bound.lower_to_upper = min_ratio > 0.0 ? 1.0 / min_ratio : kInf;
    return bound;
}

BoundednessReport regularizer_check(const OperatorMatrix& kernel, const FrameSpec& frame1,
                                    const FrameSpec& frame2, const Weight& w1, const Weight& w2,
                                    int samples, unsigned seed) {
    if (!is_parseval(frame1) || !is_parseval(frame2))
        throw std::invalid_argument("regularizer_check requires Parseval frames");
    const CoeffField2D vk = tensor_analysis(kernel, frame1, frame2);
    const double bound = weighted_lp_tensor(vk, 1.0, w1, w2);

    BoundednessReport report;
    report.direction = direction_name(CertificationDirection::Regularizer);
    report.p = 1.0;
    report.weight1 = w1.describe();
    report.weight2 = w2.describe();
    report.tolerance_used = 1e-10;
    report.criterion_value = bound;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    double worst_quotient = 0.0;
    int violations = 0;
    for (int sample = 0; sample < samples; ++sample) {
        Signal f(static_cast<std::size_t>(frame1.dimension()));
        for (std::size_t t = 0; t < f.length(); ++t) f[t] = cplx(uniform(rng), uniform(rng));
        const double in_norm = coorbit_norm(f, frame1, kInf, w1.inverse());
        if (in_norm == 0.0) continue;
        const double out_norm = coorbit_norm(kernel.apply(f), frame2, 1.0, w2);
        const double quotient = out_norm / in_norm;
        worst_quotient = std::max(worst_quotient, quotient);
        if (quotient > bound * (1.0 + report.tolerance_used)) ++violations;
    }
    report.oracle_norm = worst_quotient;
    report.equivalence_ratio = bound > 0.0 ? worst_quotient / bound : 1.0;
    report.window_constant_domain = window_l1_constant(frame1, w1);
    report.window_constant_codomain = window_l1_constant(frame2, w2);
    report.extras = {
        {"samples", static_cast<double>(samples)},
        {"violations", static_cast<double>(violations)},
    };
    if (violations > 0) report.warnings.push_back("regularizer bound violated on a sample");
    return report;
}

}  // namespace coorbit
