#pragma once

#include <limits>

#include "coorbit/transforms.hpp"

namespace coorbit {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// q with 1/p + 1/q = 1; q = inf for p = 1 and q = 1 for p = inf.
double conjugate_exponent(double p);

/// Which variable carries the sup in the mixed norm. SupOverSecond is
/// L^{p,inf} (sup over lattice2 of the p-norm over lattice1), SupOverFirst
/// is the script variant (sup over lattice1, p-norm over lattice2).
enum class MixedVariant { SupOverSecond, SupOverFirst };

/// Mixed norm parameters; the effective weight on a pair is always
/// m1(lambda1)^{-1} * m2(lambda2), formed here and never by the caller.
struct MixedNormSpec {
    double p = 1.0;
    MixedVariant variant = MixedVariant::SupOverFirst;
    Weight m1 = Weight::constant();
    Weight m2 = Weight::constant();
};

/// (sum |F(lambda)|^p m(lambda)^p)^{1/p}; sup of |F| m for p = inf.
double weighted_lp_norm(const CoeffField1D& coeffs, double p, const Weight& m);

double mixed_norm(const CoeffField2D& coeffs, const MixedNormSpec& spec);

/// Plain weighted p-norm over a 2D field with product weight w1 (x) w2
/// (no inversion); used by the l1 kernel conditions.
double weighted_lp_tensor(const CoeffField2D& coeffs, double p, const Weight& w1,
                          const Weight& w2);

/// ||f||_{Co L^p_m} = weighted_lp_norm(analyze(f, frame), p, m).
double coorbit_norm(const Signal& f, const FrameSpec& frame, double p, const Weight& m);

enum class CriterionDirection { OneToP, PToInf };

/// Discrete kernel criterion for the transform VK of a kernel:
/// OneToP:  sup_{lambda1} (sum_{lambda2} |VK * m1^{-1} (x) m2|^p)^{1/p};
/// PToInf:  sup_{lambda2} (sum_{lambda1} |VK * m1^{-1} (x) m2|^q)^{1/q}.
double discrete_kernel_criterion(const CoeffField2D& vk, double p, const Weight& m1,
                                 const Weight& m2, CriterionDirection direction);

}  // namespace coorbit
