#pragma once

#include <vector>

#include "coorbit/types.hpp"

namespace coorbit::linalg {

// Power iteration defaults: fixed seed and iteration budget so that every
// report is reproducible.
inline constexpr unsigned kPowerIterationSeed = 0x5eedu;
inline constexpr int kPowerIterationMaxSteps = 1000;
inline constexpr double kPowerIterationTol = 1e-12;

bool is_power_of_two(std::size_t n);
int log2_exact(std::size_t n);   // n must be a power of two

/// Forward transform X(l) = sum_t x(t) e^{-2 pi i l t / n}; inverse uses the
/// conjugate exponent and is unscaled (forward followed by inverse gives n*x).
std::vector<cplx> fourier_forward(const std::vector<cplx>& x);
std::vector<cplx> fourier_inverse(const std::vector<cplx>& x);

/// Direct O(n^2) summation, kept as the ground-truth path for tests.
std::vector<cplx> dft(const std::vector<cplx>& x, bool inverse);

/// Cholesky solve S x = b for Hermitian positive definite S. Pivots below
/// rel_pivot_tol * max(diag S) are treated as singular.
Signal solve_hermitian(const OperatorMatrix& s, const Signal& b, double rel_pivot_tol);

/// Largest singular value via power iteration on A^H A (deterministic seed).
double spectral_norm(const OperatorMatrix& a,
                     unsigned seed = kPowerIterationSeed,
                     int max_steps = kPowerIterationMaxSteps,
                     double tol = kPowerIterationTol);

}  // namespace coorbit::linalg
