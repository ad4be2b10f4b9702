#pragma once

#include "coorbit/repr.hpp"

namespace coorbit {

/// Complex coefficients indexed by one lattice, stored in lattice order.
class CoeffField1D {
public:
    CoeffField1D(Lattice lattice, std::vector<cplx> values);
    static CoeffField1D zeros(Lattice lattice);

    std::size_t size() const { return values_.size(); }
    const Lattice& lattice() const { return lattice_; }
    cplx& operator[](std::size_t i) { return values_[i]; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }
    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

private:
    Lattice lattice_;
    std::vector<cplx> values_;
};

/// Complex coefficients indexed by a pair of lattices; row-major with rows
/// indexed by lattice1 and columns by lattice2.
class CoeffField2D {
public:
    CoeffField2D(Lattice lattice1, Lattice lattice2, std::vector<cplx> values);
    static CoeffField2D zeros(Lattice lattice1, Lattice lattice2);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Lattice& lattice1() const { return lattice1_; }
    const Lattice& lattice2() const { return lattice2_; }
    cplx& at(std::size_t i1, std::size_t i2) { return values_[i1 * cols_ + i2]; }
    const cplx& at(std::size_t i1, std::size_t i2) const { return values_[i1 * cols_ + i2]; }
    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

private:
    Lattice lattice1_;
    Lattice lattice2_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> values_;
};

/// V_psi f(lambda) = <f, pi(lambda) psi> in lattice order. Uses the FFT on
/// full TF lattices and the filter bank on affine lattices; both agree with
/// analyze_direct to 1e-12.
CoeffField1D analyze(const Signal& f, const FrameSpec& frame);

/// Ground-truth path: literal inner products against the atom table.
CoeffField1D analyze_direct(const Signal& f, const FrameSpec& frame);

/// sum_lambda F(lambda) pi(lambda) psi, summed in lattice order.
Signal synthesize(const CoeffField1D& coeffs, const FrameSpec& frame);
Signal synthesize_direct(const CoeffField1D& coeffs, const FrameSpec& frame);

/// S = sum_lambda pi(lambda) psi <., pi(lambda) psi> as an N x N matrix.
OperatorMatrix frame_operator(const FrameSpec& frame);

/// Rescales so that the frame operator is the identity. Throws
/// NonTightFrameError when S is not a scalar multiple of I within 1e-8;
/// non-tight frames are handled through dual_window instead.
FrameSpec normalize_frame(const FrameSpec& frame);

/// Canonical dual window S^{-1} psi. Throws NotAFrameError when the frame
/// operator is numerically singular.
Signal dual_window(const FrameSpec& frame);

bool is_parseval(const FrameSpec& frame, double tol = 1e-8);

/// V_Psi K(lambda1, lambda2) = <K pi1(lambda1) psi1, pi2(lambda2) psi2> for a
/// kernel K of shape N2 x N1.
CoeffField2D tensor_analysis(const OperatorMatrix& kernel, const FrameSpec& frame1,
                             const FrameSpec& frame2);

/// sum F(lambda1, lambda2) (pi2(lambda2) psi2) (x) (pi1(lambda1) psi1);
/// inverse of tensor_analysis for Parseval frames.
OperatorMatrix tensor_synthesis(const CoeffField2D& coeffs, const FrameSpec& frame1,
                                const FrameSpec& frame2);

/// P = V_psi V_psi^*: orthogonal projection onto the range of analyze.
CoeffField1D reproducing_projection(const CoeffField1D& coeffs, const FrameSpec& frame);

}  // namespace coorbit
