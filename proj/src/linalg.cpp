#include "coorbit/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace coorbit::linalg {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void fft_pow2_inplace(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double base = sign * kTwoPi / static_cast<double>(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx w = std::polar(1.0, base * static_cast<double>(j));
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

std::vector<cplx> dft(const std::vector<cplx>& x, bool inverse) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t l = 0; l < n; ++l) {
        cplx sum(0.0, 0.0);
        for (std::size_t t = 0; t < n; ++t) {
            const double angle =
                sign * kTwoPi * static_cast<double>((l * t) % n) / static_cast<double>(n);
            sum += x[t] * std::polar(1.0, angle);
        }
        out[l] = sum;
    }
    return out;
}

std::vector<cplx> fourier_forward(const std::vector<cplx>& x) {
    if (is_power_of_two(x.size())) {
        std::vector<cplx> a = x;
        fft_pow2_inplace(a, false);
        return a;
    }
    return dft(x, false);
}

std::vector<cplx> fourier_inverse(const std::vector<cplx>& x) {
    if (is_power_of_two(x.size())) {
        std::vector<cplx> a = x;
        fft_pow2_inplace(a, true);
        return a;
    }
    return dft(x, true);
}

Signal solve_hermitian(const OperatorMatrix& s, const Signal& b, double rel_pivot_tol) {
    const std::size_t n = s.rows();
    if (s.cols() != n || b.length() != n)
        throw DimensionError("solve_hermitian expects a square system");

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, s(i, i).real());
    if (!(max_diag > 0.0)) throw NotAFrameError("frame operator is zero");

    // In-place lower Cholesky with a pivot floor.
    OperatorMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = s(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > rel_pivot_tol * max_diag))
            throw NotAFrameError("frame operator is numerically singular");
        const double root = std::sqrt(d);
        l(j, j) = cplx(root, 0.0);
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx sum = s(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * std::conj(l(j, k));
            l(i, j) = sum / root;
        }
    }

    // L y = b, then L^H x = y.
    Signal y(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx sum = b[i];
        for (std::size_t k = 0; k < i; ++k) sum -= l(i, k) * y[k];
        y[i] = sum / l(i, i);
    }
    Signal x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        cplx sum = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) sum -= std::conj(l(k, ii)) * x[k];
        x[ii] = sum / l(ii, ii);
    }
    return x;
}

double spectral_norm(const OperatorMatrix& a, unsigned seed, int max_steps, double tol) {
    const std::size_t n = a.cols();
    if (n == 0 || a.rows() == 0) return 0.0;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    Signal v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = cplx(uniform(rng), uniform(rng));
    const double v0 = v.norm();
    if (v0 == 0.0) return 0.0;
    v *= cplx(1.0 / v0, 0.0);

    const OperatorMatrix ah = a.adjoint();
    double previous = 0.0;
    double sigma_sq = 0.0;
    for (int step = 0; step < max_steps; ++step) {
        const Signal w = a.apply(v);
        sigma_sq = w.norm() * w.norm();
        if (sigma_sq == 0.0) return 0.0;
        Signal next = ah.apply(w);
        const double nn = next.norm();
        if (nn == 0.0) break;
        next *= cplx(1.0 / nn, 0.0);
        v = next;
        if (std::abs(sigma_sq - previous) <= tol * std::max(1.0, sigma_sq)) break;
        previous = sigma_sq;
    }
    return std::sqrt(sigma_sq);
}

}  // namespace coorbit::linalg
