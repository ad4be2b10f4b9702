#pragma once

#include "coorbit/schur.hpp"

namespace coorbit {

/// k_A(lambda1, lambda2) = <A pi1(lambda1) psi1, pi2(lambda2) psi2>, computed
/// by literal inner products (independent of the accelerated tensor_analysis
/// path, with which it must agree entrywise).
CoeffField2D galerkin_kernel(const OperatorMatrix& a, const FrameSpec& frame1,
                             const FrameSpec& frame2);

/// Integral operator on coefficient fields with kernel k_A:
/// (LF)(lambda2) = sum_{lambda1} F(lambda1) k_A(lambda1, lambda2).
class LiftedOperator {
public:
    explicit LiftedOperator(const CoeffField2D& kernel_field);

    const OperatorMatrix& matrix() const { return matrix_; }   // |L2| x |L1|
    const Lattice& domain_lattice() const { return lattice1_; }
    const Lattice& codomain_lattice() const { return lattice2_; }

    CoeffField1D apply(const CoeffField1D& coeffs) const;

private:
    OperatorMatrix matrix_;
    Lattice lattice1_;
    Lattice lattice2_;
};

LiftedOperator lift_operator(const CoeffField2D& kernel_field);

/// synthesize(lift(kA)(analyze(f))): reproduces A f when kA is the Galerkin
/// kernel of A and both frames are Parseval.
Signal apply_via_factorization(const CoeffField2D& kernel_field, const Signal& f,
                               const FrameSpec& frame1, const FrameSpec& frame2);

/// Bilinear-form view of an abstract kernel: (v, phi) -> <K v, phi>, together
/// with the certified bound |<K v, phi>| <= ||V_Psi K||_{l^inf_{1/w}} *
/// ||v||_{Co l^1_{w1}} * ||phi||_{Co l^1_{w2}}.
class KernelForm {
public:
    KernelForm(OperatorMatrix kernel, FrameSpec frame1, FrameSpec frame2, Weight w1, Weight w2);

    cplx evaluate(const Signal& v, const Signal& phi) const;
    double certified_bound(const Signal& v, const Signal& phi) const;

    double kernel_sup_norm() const { return kernel_sup_norm_; }
    const OperatorMatrix& kernel() const { return kernel_; }

private:
    OperatorMatrix kernel_;
    FrameSpec frame1_;
    FrameSpec frame2_;
    Weight w1_;
    Weight w2_;
    double kernel_sup_norm_ = 0.0;
};

KernelForm operator_from_kernel(OperatorMatrix kernel, const FrameSpec& frame1,
                                const FrameSpec& frame2, const Weight& w1, const Weight& w2);

struct KernelRecovery {
    OperatorMatrix kernel;
    double operator_norm_estimate = 0.0;   // exact lifted Co l1_{w1} -> Co linf_{1/w2} norm
    double kernel_sup_norm = 0.0;          // ||V_Psi K||_{l^inf_{1/w}}
    double equivalence_ratio = 1.0;
};

/// Unique kernel of an operator: tensor_synthesis of its Galerkin kernel.
/// Round trips with operator_from_kernel and reports the norm equivalence.
KernelRecovery kernel_from_operator(const OperatorMatrix& a, const FrameSpec& frame1,
                                    const FrameSpec& frame2, const Weight& w1, const Weight& w2);

/// Expansion f = sum c_lambda pi(lambda) psi over the full lattice with
/// canonical dual-frame coefficients c_lambda = <f, S^{-1} pi(lambda) psi>.
struct AtomicDecomposition {
    std::vector<std::pair<LatticePoint, cplx>> atoms;
    FrameSpec frame;
    double l1_weighted_mass = 0.0;
};

AtomicDecomposition atomic_decompose(const Signal& f, const FrameSpec& frame, const Weight& w);

Signal reconstruct(const AtomicDecomposition& decomposition);

/// Two-sided constants relating the decomposition mass to the coorbit l1
/// norm: mass <= mass_over_norm * ||f||_{Co l1_w} and
/// ||f||_{Co l1_w} <= norm_over_mass * mass. Schur row sums of the dual and
/// primal Gram matrices with weight ratios.
struct AtomicEquivalence {
    double mass_over_norm = 1.0;
    double norm_over_mass = 1.0;
};

AtomicEquivalence atomic_norm_equivalence(const FrameSpec& frame, const Weight& w);

/// Projective tensor bound for a kernel: lower = Co l^1_w norm under the
/// tensor frame, upper = sum over the 2D atomic decomposition of the product
/// of 1D atom norms, plus the computed constants tying the two together.
struct ProjectiveBound {
    double lower = 0.0;
    double upper = 0.0;
    double lower_to_upper = 1.0;   // lower <= lower_to_upper * upper
    double upper_to_lower = 1.0;   // upper <= upper_to_lower * lower
};

ProjectiveBound projective_tensor_bound(const OperatorMatrix& kernel, const FrameSpec& frame1,
                                        const FrameSpec& frame2, const Weight& w1,
                                        const Weight& w2);

/// Kernels with V_Psi K in l^1_{w1 (x) w2} regularize: verifies on sampled
/// inputs that ||A f||_{Co l1_{w2}} <= ||V_Psi K||_{l1_w} ||f||_{Co linf_{1/w1}}.
BoundednessReport regularizer_check(const OperatorMatrix& kernel, const FrameSpec& frame1,
                                    const FrameSpec& frame2, const Weight& w1, const Weight& w2,
                                    int samples = 50, unsigned seed = 7u);

}  // namespace coorbit
