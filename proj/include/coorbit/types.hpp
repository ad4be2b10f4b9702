#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coorbit {

using cplx = std::complex<double>;

/// Signal length or matrix shape does not match the expected dimension.
class DimensionError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Frame operator is singular (the system does not span the space).
class NotAFrameError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Frame operator is not a scalar multiple of the identity.
class NonTightFrameError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex vector of length N, a discretized function on Z_N.
class Signal {
public:
    Signal() = default;
    explicit Signal(std::size_t n) : values_(n, cplx(0.0, 0.0)) {}
    explicit Signal(std::vector<cplx> values) : values_(std::move(values)) {}

    static Signal delta(std::size_t n, std::size_t position = 0);

    std::size_t length() const { return values_.size(); }
    cplx& operator[](std::size_t i) { return values_[i]; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }
    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

    double norm() const;      // l2
    bool finite() const;      // no NaN/Inf entries

    Signal& operator+=(const Signal& other);
    Signal& operator-=(const Signal& other);
    Signal& operator*=(cplx factor);

private:
    std::vector<cplx> values_;
};

Signal operator*(cplx factor, const Signal& f);
Signal operator+(Signal a, const Signal& b);
Signal operator-(Signal a, const Signal& b);

/// <a, b> = sum a(t) conj(b(t)), linear in the first argument.
cplx inner(const Signal& a, const Signal& b);

/// Complex N2 x N1 matrix. Serves both as an operator H1 -> H2 and as the
/// Hilbert-Schmidt kernel identified with it.
class OperatorMatrix {
public:
    OperatorMatrix() = default;
    OperatorMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}

    static OperatorMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::vector<cplx>& entries() { return entries_; }
    const std::vector<cplx>& entries() const { return entries_; }

    Signal apply(const Signal& f) const;   // f.length must equal cols
    OperatorMatrix adjoint() const;
    double frobenius_norm() const;
    bool finite() const;

    OperatorMatrix& operator+=(const OperatorMatrix& other);
    OperatorMatrix& operator-=(const OperatorMatrix& other);
    OperatorMatrix& operator*=(cplx factor);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

/// Rank-one operator u (x) v: f |-> <f, v> u, with matrix u v^H.
OperatorMatrix rank_one(const Signal& u, const Signal& v);

/// Hilbert-Schmidt inner product <A, B> = sum A(t,u) conj(B(t,u)).
cplx hs_inner(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace coorbit
