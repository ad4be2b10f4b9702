#include "coorbit/transforms.hpp"

#include <cmath>
#include <utility>

#include "coorbit/linalg.hpp"

namespace coorbit {

CoeffField1D::CoeffField1D(Lattice lattice, std::vector<cplx> values)
    : lattice_(std::move(lattice)), values_(std::move(values)) {
    if (values_.size() != lattice_.size())
        throw DimensionError("coefficient count does not match the lattice size");
}

CoeffField1D CoeffField1D::zeros(Lattice lattice) {
    std::vector<cplx> values(lattice.size(), cplx(0.0, 0.0));
    return CoeffField1D(std::move(lattice), std::move(values));
}

CoeffField2D::CoeffField2D(Lattice lattice1, Lattice lattice2, std::vector<cplx> values)
    : lattice1_(std::move(lattice1)),
      lattice2_(std::move(lattice2)),
      rows_(lattice1_.size()),
      cols_(lattice2_.size()),
      values_(std::move(values)) {
    if (values_.size() != rows_ * cols_)
        throw DimensionError("coefficient shape does not match the lattice sizes");
}

CoeffField2D CoeffField2D::zeros(Lattice lattice1, Lattice lattice2) {
    std::vector<cplx> values(lattice1.size() * lattice2.size(), cplx(0.0, 0.0));
    return CoeffField2D(std::move(lattice1), std::move(lattice2), std::move(values));
}

namespace {

void check_frame_signal(const Signal& f, const FrameSpec& frame) {
    if (static_cast<int>(f.length()) != frame.dimension())
        throw DimensionError("signal length does not match the frame dimension");
}

bool fft_eligible(const FrameSpec& frame) {
    return frame.representation() == RepresentationKind::WeylHeisenberg &&
           frame.lattice().is_full_tf() &&
           linalg::is_power_of_two(static_cast<std::size_t>(frame.dimension()));
}

// V f(k, l) = FFT_t[f(t) conj(psi(t-k))](l), one transform per time shift.
std::vector<cplx> analyze_tf_fft(const Signal& f, const FrameSpec& frame) {
    const std::size_t n = static_cast<std::size_t>(frame.dimension());
    const Signal window = frame.scaled_window();
    std::vector<cplx> out(n * n);
    std::vector<cplx> windowed(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t src = (t + n - k) % n;
            windowed[t] = f[t] * std::conj(window[src]);
        }
        const std::vector<cplx> spectrum = linalg::fourier_forward(windowed);
        for (std::size_t l = 0; l < n; ++l) out[k * n + l] = spectrum[l];
    }
    return out;
}

// f(t) = sum_k psi(t-k) * sum_l F(k, l) e^{2 pi i l t / N}, inner sums by FFT.
Signal synthesize_tf_fft(const CoeffField1D& coeffs, const FrameSpec& frame) {
    const std::size_t n = static_cast<std::size_t>(frame.dimension());
    const Signal window = frame.scaled_window();
    Signal out(n);
    std::vector<cplx> row(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) row[l] = coeffs[k * n + l];
        const std::vector<cplx> lifted = linalg::fourier_inverse(row);
        for (std::size_t t = 0; t < n; ++t) {
            const std::size_t src = (t + n - k) % n;
            out[t] += window[src] * lifted[t];
        }
    }
    return out;
}

}  // namespace

CoeffField1D analyze_direct(const Signal& f, const FrameSpec& frame) {
    check_frame_signal(f, frame);
    const OperatorMatrix& atoms = frame.atom_table();
    std::vector<cplx> values(frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        cplx sum(0.0, 0.0);
        for (std::size_t t = 0; t < f.length(); ++t) sum += f[t] * std::conj(atoms(i, t));
        values[i] = sum;
    }
    return CoeffField1D(frame.lattice(), std::move(values));
}

CoeffField1D analyze(const Signal& f, const FrameSpec& frame) {
    check_frame_signal(f, frame);
    if (fft_eligible(frame)) {
        return CoeffField1D(frame.lattice(), analyze_tf_fft(f, frame));
    }
    if (frame.representation() == RepresentationKind::Affine) {
        std::vector<cplx> values = dwt_analyze(f.values(), frame.filters(),
                                               frame.lattice().levels());
        if (frame.scale() != 1.0) {
            for (cplx& v : values) v *= frame.scale();
        }
        return CoeffField1D(frame.lattice(), std::move(values));
    }
    return analyze_direct(f, frame);
}

Signal synthesize_direct(const CoeffField1D& coeffs, const FrameSpec& frame) {
    if (!(coeffs.lattice() == frame.lattice()))
        throw DimensionError("coefficient lattice does not match the frame lattice");
    const OperatorMatrix& atoms = frame.atom_table();
    const std::size_t n = static_cast<std::size_t>(frame.dimension());
    Signal out(n);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const cplx c = coeffs[i];
        for (std::size_t t = 0; t < n; ++t) out[t] += c * atoms(i, t);
    }
    return out;
}

Signal synthesize(const CoeffField1D& coeffs, const FrameSpec& frame) {
    if (!(coeffs.lattice() == frame.lattice()))
        throw DimensionError("coefficient lattice does not match the frame lattice");
    if (fft_eligible(frame)) return synthesize_tf_fft(coeffs, frame);
    if (frame.representation() == RepresentationKind::Affine) {
        std::vector<cplx> scaled = coeffs.values();
        if (frame.scale() != 1.0) {
            for (cplx& v : scaled) v *= frame.scale();
        }
        return Signal(dwt_synthesize(scaled, frame.filters(), frame.lattice().levels(),
                                     static_cast<std::size_t>(frame.dimension())));
    }
    return synthesize_direct(coeffs, frame);
}

OperatorMatrix frame_operator(const FrameSpec& frame) {
    const OperatorMatrix& atoms = frame.atom_table();
    const std::size_t n = static_cast<std::size_t>(frame.dimension());
    OperatorMatrix s(n, n);
    for (std::size_t i = 0; i < frame.size(); ++i) {
        for (std::size_t t = 0; t < n; ++t) {
            const cplx at = atoms(i, t);
            for (std::size_t u = 0; u < n; ++u) s(t, u) += at * std::conj(atoms(i, u));
        }
    }
    return s;
}

namespace {

// Largest deviation of S from alpha * I, with alpha = trace(S) / N.
std::pair<double, double> scalar_deviation(const OperatorMatrix& s) {
    const std::size_t n = s.rows();
    double trace = 0.0;
    for (std::size_t t = 0; t < n; ++t) trace += s(t, t).real();
    const double alpha = trace / static_cast<double>(n);
    double deviation = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t u = 0; u < n; ++u) {
            const cplx expected = t == u ? cplx(alpha, 0.0) : cplx(0.0, 0.0);
            deviation = std::max(deviation, std::abs(s(t, u) - expected));
        }
    }
    return {alpha, deviation};
}

}  // namespace

FrameSpec normalize_frame(const FrameSpec& frame) {
    const OperatorMatrix s = frame_operator(frame);
    const auto [alpha, deviation] = scalar_deviation(s);
    if (!(alpha > 0.0) || deviation > 1e-8 * alpha)
        throw NonTightFrameError(
            "frame operator is not a scalar multiple of the identity; "
            "use dual_window for non-tight frames");
    return frame.scaled(1.0 / std::sqrt(alpha));
}

Signal dual_window(const FrameSpec& frame) {
    const OperatorMatrix s = frame_operator(frame);
    return linalg::solve_hermitian(s, frame.scaled_window(), 1e-10);
}

bool is_parseval(const FrameSpec& frame, double tol) {
    const OperatorMatrix s = frame_operator(frame);
    const auto [alpha, deviation] = scalar_deviation(s);
    return std::abs(alpha - 1.0) <= tol && deviation <= tol;
}

CoeffField2D tensor_analysis(const OperatorMatrix& kernel, const FrameSpec& frame1,
                             const FrameSpec& frame2) {
    if (kernel.cols() != static_cast<std::size_t>(frame1.dimension()) ||
        kernel.rows() != static_cast<std::size_t>(frame2.dimension()))
        throw DimensionError("kernel shape does not match the frame dimensions");
    CoeffField2D out = CoeffField2D::zeros(frame1.lattice(), frame2.lattice());
    for (std::size_t i1 = 0; i1 < frame1.size(); ++i1) {
        const Signal mapped = kernel.apply(frame1.atom(i1));
        const CoeffField1D row = analyze(mapped, frame2);
        for (std::size_t i2 = 0; i2 < frame2.size(); ++i2) out.at(i1, i2) = row[i2];
    }
    return out;
}

OperatorMatrix tensor_synthesis(const CoeffField2D& coeffs, const FrameSpec& frame1,
                                const FrameSpec& frame2) {
    if (!(coeffs.lattice1() == frame1.lattice()) || !(coeffs.lattice2() == frame2.lattice()))
        throw DimensionError("coefficient lattices do not match the frames");
    const std::size_t n1 = static_cast<std::size_t>(frame1.dimension());
    const std::size_t n2 = static_cast<std::size_t>(frame2.dimension());
    const OperatorMatrix& atoms1 = frame1.atom_table();
    const OperatorMatrix& atoms2 = frame2.atom_table();

    // Contract lattice1 first: tmp(lambda2, u) = sum_l1 F(l1, l2) conj(a1_l1(u)).
    OperatorMatrix tmp(frame2.size(), n1);
    for (std::size_t i2 = 0; i2 < frame2.size(); ++i2) {
        for (std::size_t i1 = 0; i1 < frame1.size(); ++i1) {
            const cplx c = coeffs.at(i1, i2);
            if (c == cplx(0.0, 0.0)) continue;
            for (std::size_t u = 0; u < n1; ++u) tmp(i2, u) += c * std::conj(atoms1(i1, u));
        }
    }
    OperatorMatrix out(n2, n1);
    for (std::size_t i2 = 0; i2 < frame2.size(); ++i2) {
        for (std::size_t t = 0; t < n2; ++t) {
            const cplx a = atoms2(i2, t);
            for (std::size_t u = 0; u < n1; ++u) out(t, u) += a * tmp(i2, u);
        }
    }
    return out;
}

CoeffField1D reproducing_projection(const CoeffField1D& coeffs, const FrameSpec& frame) {
    return analyze(synthesize(coeffs, frame), frame);
}

}  // namespace coorbit
