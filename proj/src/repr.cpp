#include "coorbit/repr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "coorbit/linalg.hpp"

namespace coorbit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

int signed_representative(int k, int modulus) {
    int r = k % modulus;
    if (r < 0) r += modulus;
    return 2 * r <= modulus ? r : r - modulus;
}

double dyadic_scale(const AffineLatticePoint& p) { return std::exp2(-static_cast<double>(p.level)); }

Signal tf_shift(const Signal& f, const TFLatticePoint& p) {
    const int n = p.modulus;
    if (static_cast<int>(f.length()) != n)
        throw DimensionError("tf_shift: signal length does not match the lattice modulus");
    Signal out(f.length());
    for (int t = 0; t < n; ++t) {
        int src = (t - p.time_shift) % n;
        if (src < 0) src += n;
        const double angle = kTwoPi * static_cast<double>(p.freq_shift) *
                             static_cast<double>(t) / static_cast<double>(n);
        out[static_cast<std::size_t>(t)] =
            std::polar(1.0, angle) * f[static_cast<std::size_t>(src)];
    }
    return out;
}

FilterPair FilterPair::haar() {
    const double r = 1.0 / std::sqrt(2.0);
    return FilterPair{{r, r}, {r, -r}};
}

namespace {

// One periodized analysis stage, decimation keeping even indices:
// approx[i] = sum_n low[n] x[(2i+n) mod m], detail likewise with high.
void dwt_stage(const std::vector<cplx>& x, const FilterPair& filters, std::vector<cplx>& approx,
               std::vector<cplx>& detail) {
    const std::size_t m = x.size();
    const std::size_t half = m / 2;
    approx.assign(half, cplx(0.0, 0.0));
    detail.assign(half, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < half; ++i) {
        cplx a(0.0, 0.0), d(0.0, 0.0);
        for (std::size_t nu = 0; nu < filters.low.size(); ++nu) {
            const cplx xv = x[(2 * i + nu) % m];
            a += filters.low[nu] * xv;
            d += filters.high[nu] * xv;
        }
        approx[i] = a;
        detail[i] = d;
    }
}

// Adjoint stage: scatter approx/detail back through the same taps.
void dwt_stage_adjoint(const std::vector<cplx>& approx, const std::vector<cplx>& detail,
                       const FilterPair& filters, std::vector<cplx>& x) {
    const std::size_t m = 2 * approx.size();
    x.assign(m, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < approx.size(); ++i) {
        for (std::size_t nu = 0; nu < filters.low.size(); ++nu) {
            x[(2 * i + nu) % m] += filters.low[nu] * approx[i] + filters.high[nu] * detail[i];
        }
    }
}

void validate_dwt_shape(std::size_t n, int levels) {
    if (levels < 1) throw std::invalid_argument("filter bank needs at least one level");
    if (n % (std::size_t{1} << levels) != 0)
        throw DimensionError("signal length must be divisible by 2^levels");
    if ((n >> levels) < 1) throw DimensionError("too many filter bank levels");
}

}  // namespace

std::vector<cplx> dwt_analyze(const std::vector<cplx>& x, const FilterPair& filters, int levels) {
    validate_dwt_shape(x.size(), levels);
    const std::size_t n = x.size();
    std::vector<cplx> out(n);
    std::vector<cplx> current = x;
    std::vector<cplx> approx, detail;
    std::size_t offset = 0;
    for (int level = 0; level < levels; ++level) {
        dwt_stage(current, filters, approx, detail);
        for (std::size_t i = 0; i < detail.size(); ++i) out[offset + i] = detail[i];
        offset += detail.size();
        current = approx;
    }
    for (std::size_t i = 0; i < current.size(); ++i) out[offset + i] = current[i];
    return out;
}

std::vector<cplx> dwt_synthesize(const std::vector<cplx>& coeffs, const FilterPair& filters,
                                 int levels, std::size_t n) {
    validate_dwt_shape(n, levels);
    if (coeffs.size() != n) throw DimensionError("coefficient count must equal the signal length");
    // Start from the scaling band and undo the stages coarse to fine.
    const std::size_t scaling = n >> levels;
    std::vector<cplx> current(coeffs.end() - static_cast<std::ptrdiff_t>(scaling), coeffs.end());
    for (int level = levels - 1; level >= 0; --level) {
        const std::size_t count = n >> (level + 1);
        std::size_t offset = 0;
        for (int j = 0; j < level; ++j) offset += n >> (j + 1);
        std::vector<cplx> detail(coeffs.begin() + static_cast<std::ptrdiff_t>(offset),
                                 coeffs.begin() + static_cast<std::ptrdiff_t>(offset + count));
        std::vector<cplx> up;
        dwt_stage_adjoint(current, detail, filters, up);
        current = std::move(up);
    }
    return current;
}

Signal affine_atom(const FilterPair& filters, int n, int levels, const AffineLatticePoint& p) {
    validate_dwt_shape(static_cast<std::size_t>(n), levels);
    if (p.level < 0 || p.level > levels)
        throw std::out_of_range("affine_atom: level out of range");
    const int count = p.level == levels ? n >> levels : n >> (p.level + 1);
    if (p.shift < 0 || p.shift >= count)
        throw std::out_of_range("affine_atom: shift out of range");
    std::size_t offset = 0;
    for (int j = 0; j < std::min(p.level, levels); ++j) offset += static_cast<std::size_t>(n) >> (j + 1);
    std::vector<cplx> coeffs(static_cast<std::size_t>(n), cplx(0.0, 0.0));
    coeffs[offset + static_cast<std::size_t>(p.shift)] = cplx(1.0, 0.0);
    return Signal(dwt_synthesize(coeffs, filters, levels, static_cast<std::size_t>(n)));
}

Lattice Lattice::tf_full(int n) {
    if (n < 1) throw std::invalid_argument("lattice modulus must be positive");
    Lattice lat;
    lat.kind_ = LatticeKind::TF;
    lat.dimension_ = n;
    lat.full_tf_ = true;
    lat.points_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) lat.points_.push_back(TFLatticePoint{k, l, n});
    return lat;
}

Lattice Lattice::tf_points(int n, const std::vector<std::pair<int, int>>& pts) {
    if (n < 1) throw std::invalid_argument("lattice modulus must be positive");
    Lattice lat;
    lat.kind_ = LatticeKind::TF;
    lat.dimension_ = n;
    std::set<std::pair<int, int>> seen;
    for (const auto& [k, l] : pts) {
        if (k < 0 || k >= n || l < 0 || l >= n)
            throw std::out_of_range("lattice point outside Z_N x Z_N");
        if (!seen.insert({k, l}).second)
            throw std::invalid_argument("lattice points must be pairwise distinct");
        lat.points_.push_back(TFLatticePoint{k, l, n});
    }
    return lat;
}

Lattice Lattice::dyadic(int n, int levels) {
    validate_dwt_shape(static_cast<std::size_t>(n), levels);
    Lattice lat;
    lat.kind_ = LatticeKind::Affine;
    lat.dimension_ = n;
    lat.levels_ = levels;
    lat.points_.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < levels; ++j) {
        const int count = n >> (j + 1);
        for (int k = 0; k < count; ++k) lat.points_.push_back(AffineLatticePoint{j, k, levels});
    }
    for (int k = 0; k < (n >> levels); ++k)
        lat.points_.push_back(AffineLatticePoint{levels, k, levels});
    return lat;
}

bool Lattice::operator==(const Lattice& other) const {
    return kind_ == other.kind_ && dimension_ == other.dimension_ && levels_ == other.levels_ &&
           points_ == other.points_;
}

double Weight::operator()(const LatticePoint& p) const {
    switch (family_) {
        case WeightFamily::Constant:
            return 1.0;
        case WeightFamily::PolynomialTF: {
            const auto* tf = std::get_if<TFLatticePoint>(&p);
            if (tf == nullptr)
                throw std::invalid_argument("polynomial_tf weight needs a TF lattice point");
            const double x = std::abs(signed_representative(tf->time_shift, tf->modulus));
            const double omega = std::abs(signed_representative(tf->freq_shift, tf->modulus));
            return std::pow(1.0 + x + omega, s_);
        }
        case WeightFamily::Dyadic: {
            const auto* aff = std::get_if<AffineLatticePoint>(&p);
            if (aff == nullptr)
                throw std::invalid_argument("dyadic weight needs an affine lattice point");
            // nu_s(a) = |a|^{-s} with a = 2^{-level}
            return std::exp2(static_cast<double>(aff->level) * s_);
        }
    }
    return 1.0;
}

std::string Weight::describe() const {
    std::ostringstream out;
    switch (family_) {
        case WeightFamily::Constant:
            out << "constant";
            break;
        case WeightFamily::PolynomialTF:
            out << "polynomial_tf(s=" << s_ << ")";
            break;
        case WeightFamily::Dyadic:
            out << "dyadic(s=" << s_ << ")";
            break;
    }
    return out.str();
}

double weight_eval(const Weight& w, const LatticePoint& p) { return w(p); }

namespace {

// Group product of lattice points; nullopt when it leaves the lattice.
std::optional<LatticePoint> lattice_product(const LatticePoint& a, const LatticePoint& b,
                                            const LatticePoint& c) {
    if (const auto* ta = std::get_if<TFLatticePoint>(&a)) {
        const auto& tb = std::get<TFLatticePoint>(b);
        const auto& tc = std::get<TFLatticePoint>(c);
        const int n = ta->modulus;
        return TFLatticePoint{(ta->time_shift + tb.time_shift + tc.time_shift) % n,
                              (ta->freq_shift + tb.freq_shift + tc.freq_shift) % n, n};
    }
    const auto& aa = std::get<AffineLatticePoint>(a);
    const auto& ab = std::get<AffineLatticePoint>(b);
    const auto& ac = std::get<AffineLatticePoint>(c);
    const int level = aa.level + ab.level + ac.level;
    if (level > aa.levels) return std::nullopt;   // scale leaves the lattice
    return AffineLatticePoint{level, 0, aa.levels};
}

}  // namespace

bool check_moderate(const Weight& w, const Weight& m, const Lattice& lattice, long samples) {
    const std::size_t size = lattice.size();
    if (size == 0) return true;
    const double total = static_cast<double>(size) * static_cast<double>(size) *
                         static_cast<double>(size);

    auto holds = [&](std::size_t i1, std::size_t i2, std::size_t i3) {
        const auto product = lattice_product(lattice.point(i1), lattice.point(i2),
                                             lattice.point(i3));
        if (!product) return true;
        const double lhs = m(*product);
        const double rhs = w(lattice.point(i1)) * m(lattice.point(i2)) * w(lattice.point(i3));
        return lhs <= rhs * (1.0 + 1e-12);
    };

    if (static_cast<double>(samples) >= total) {
        for (std::size_t i1 = 0; i1 < size; ++i1)
            for (std::size_t i2 = 0; i2 < size; ++i2)
                for (std::size_t i3 = 0; i3 < size; ++i3)
                    if (!holds(i1, i2, i3)) return false;
        return true;
    }

    std::mt19937_64 rng(0xc0f5eedu);
    std::uniform_int_distribution<std::size_t> pick(0, size - 1);
    for (long s = 0; s < samples; ++s) {
        if (!holds(pick(rng), pick(rng), pick(rng))) return false;
    }
    return true;
}

FrameSpec FrameSpec::weyl_heisenberg(Signal window, Lattice lattice) {
    if (lattice.kind() != LatticeKind::TF)
        throw std::invalid_argument("Weyl-Heisenberg frame needs a TF lattice");
    if (static_cast<int>(window.length()) != lattice.dimension())
        throw DimensionError("window length does not match the lattice modulus");
    FrameSpec frame;
    frame.representation_ = RepresentationKind::WeylHeisenberg;
    frame.window_ = std::move(window);
    frame.lattice_ = std::move(lattice);
    frame.dimension_ = frame.lattice_.dimension();
    frame.build_atom_table();
    return frame;
}

FrameSpec FrameSpec::affine(FilterPair filters, int n, int levels) {
    FrameSpec frame;
    frame.representation_ = RepresentationKind::Affine;
    frame.filters_ = std::move(filters);
    frame.lattice_ = Lattice::dyadic(n, levels);
    frame.dimension_ = n;
    frame.window_ = affine_atom(frame.filters_, n, levels, AffineLatticePoint{0, 0, levels});
    frame.build_atom_table();
    return frame;
}

void FrameSpec::build_atom_table() {
    const std::size_t count = lattice_.size();
    const std::size_t n = static_cast<std::size_t>(dimension_);
    auto table = std::make_shared<OperatorMatrix>(count, n);
    for (std::size_t i = 0; i < count; ++i) {
        Signal a(0);
        if (representation_ == RepresentationKind::WeylHeisenberg) {
            a = tf_shift(window_, std::get<TFLatticePoint>(lattice_.point(i)));
        } else {
            a = affine_atom(filters_, dimension_, lattice_.levels(),
                            std::get<AffineLatticePoint>(lattice_.point(i)));
        }
        for (std::size_t t = 0; t < n; ++t) (*table)(i, t) = scale_ * a[t];
    }
    atoms_ = std::move(table);
}

Signal FrameSpec::scaled_window() const {
    Signal out = window_;
    out *= cplx(scale_, 0.0);
    return out;
}

FrameSpec FrameSpec::scaled(double factor) const {
    FrameSpec frame = *this;
    frame.scale_ *= factor;
    auto table = std::make_shared<OperatorMatrix>(*atoms_);
    *table *= cplx(factor, 0.0);
    frame.atoms_ = std::move(table);
    return frame;
}

Signal FrameSpec::atom(std::size_t index) const {
    if (index >= lattice_.size()) throw std::out_of_range("frame atom index out of range");
    const std::size_t n = static_cast<std::size_t>(dimension_);
    Signal out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = (*atoms_)(index, t);
    return out;
}

}  // namespace coorbit
