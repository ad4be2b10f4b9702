#include "coorbit/types.hpp"

#include <cmath>

namespace coorbit {

Signal Signal::delta(std::size_t n, std::size_t position) {
    Signal f(n);
    f[position] = cplx(1.0, 0.0);
    return f;
}

double Signal::norm() const {
    double sum = 0.0;
    for (const cplx& v : values_) sum += std::norm(v);
    return std::sqrt(sum);
}

bool Signal::finite() const {
    for (const cplx& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

Signal& Signal::operator+=(const Signal& other) {
    if (other.length() != length()) throw DimensionError("signal length mismatch in +=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Signal& Signal::operator-=(const Signal& other) {
    if (other.length() != length()) throw DimensionError("signal length mismatch in -=");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

Signal& Signal::operator*=(cplx factor) {
    for (cplx& v : values_) v *= factor;
    return *this;
}

Signal operator*(cplx factor, const Signal& f) {
    Signal out = f;
    out *= factor;
    return out;
}

Signal operator+(Signal a, const Signal& b) {
    a += b;
    return a;
}

Signal operator-(Signal a, const Signal& b) {
    a -= b;
    return a;
}

cplx inner(const Signal& a, const Signal& b) {
    if (a.length() != b.length()) throw DimensionError("signal length mismatch in inner product");
    cplx sum(0.0, 0.0);
    for (std::size_t i = 0; i < a.length(); ++i) sum += a[i] * std::conj(b[i]);
    return sum;
}

OperatorMatrix OperatorMatrix::identity(std::size_t n) {
    OperatorMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
    return m;
}

Signal OperatorMatrix::apply(const Signal& f) const {
    if (f.length() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    Signal out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        cplx sum(0.0, 0.0);
        const cplx* row = entries_.data() + r * cols_;
        for (std::size_t c = 0; c < cols_; ++c) sum += row[c] * f[c];
        out[r] = sum;
    }
    return out;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

double OperatorMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& v : entries_) sum += std::norm(v);
    return std::sqrt(sum);
}

bool OperatorMatrix::finite() const {
    for (const cplx& v : entries_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
    if (other.rows() != rows_ || other.cols() != cols_)
        throw DimensionError("matrix shape mismatch in +=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
    if (other.rows() != rows_ || other.cols() != cols_)
        throw DimensionError("matrix shape mismatch in -=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(cplx factor) {
    for (cplx& v : entries_) v *= factor;
    return *this;
}

OperatorMatrix rank_one(const Signal& u, const Signal& v) {
    OperatorMatrix m(u.length(), v.length());
    for (std::size_t r = 0; r < u.length(); ++r)
        for (std::size_t c = 0; c < v.length(); ++c) m(r, c) = u[r] * std::conj(v[c]);
    return m;
}

cplx hs_inner(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix shape mismatch in HS inner product");
    cplx sum(0.0, 0.0);
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        sum += a.entries()[i] * std::conj(b.entries()[i]);
    return sum;
}

}  // namespace coorbit
