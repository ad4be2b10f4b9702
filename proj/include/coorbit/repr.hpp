#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "coorbit/types.hpp"

namespace coorbit {

enum class RepresentationKind { WeylHeisenberg, Affine };
enum class LatticeKind { TF, Affine };

/// Time-frequency shift index (k, l) on Z_N x Z_N.
struct TFLatticePoint {
    int time_shift = 0;   // k
    int freq_shift = 0;   // l
    int modulus = 1;      // N

    bool operator==(const TFLatticePoint&) const = default;
};

/// Dyadic scale-translation index. Levels 0 .. levels-1 are detail bands
/// (level 0 finest, translation stride 2^{level+1}); level == levels is the
/// residual scaling band. The scale value attached to a point is 2^{-level}.
struct AffineLatticePoint {
    int level = 0;    // j
    int shift = 0;    // k
    int levels = 1;   // J, depth of the decomposition

    bool operator==(const AffineLatticePoint&) const = default;
};

using LatticePoint = std::variant<TFLatticePoint, AffineLatticePoint>;

/// k -> k for k <= N/2, else k - N (minimal absolute residue).
int signed_representative(int k, int modulus);

double dyadic_scale(const AffineLatticePoint& p);   // 2^{-level}

/// M_l T_k f: translate by k (mod N), then modulate. Unitary.
Signal tf_shift(const Signal& f, const TFLatticePoint& p);

/// Real two-channel filter pair for the periodized wavelet bank.
struct FilterPair {
    std::vector<double> low;
    std::vector<double> high;

    static FilterPair haar();   // (1,1)/sqrt2 and (1,-1)/sqrt2
};

/// Periodized analysis cascade: input length n, `levels` stages. Output is
/// packed in lattice order: detail level 0 (n/2 entries), level 1 (n/4), ...,
/// then the scaling band (n >> levels entries) last.
std::vector<cplx> dwt_analyze(const std::vector<cplx>& x, const FilterPair& filters, int levels);

/// Adjoint of dwt_analyze (perfect reconstruction for orthogonal filters).
std::vector<cplx> dwt_synthesize(const std::vector<cplx>& coeffs, const FilterPair& filters,
                                 int levels, std::size_t n);

/// Single basis vector of the periodized filter bank on Z_n.
Signal affine_atom(const FilterPair& filters, int n, int levels, const AffineLatticePoint& p);

/// Indexed finite family of lattice points in a fixed, documented order:
/// TF: k ascending, l fastest; Affine: level ascending, shift ascending,
/// scaling band last.
class Lattice {
public:
    Lattice() = default;

    static Lattice tf_full(int n);
    static Lattice tf_points(int n, const std::vector<std::pair<int, int>>& pts);
    static Lattice dyadic(int n, int levels);

    LatticeKind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    int levels() const { return levels_; }
    std::size_t size() const { return points_.size(); }
    const LatticePoint& point(std::size_t i) const { return points_[i]; }
    const std::vector<LatticePoint>& points() const { return points_; }

    /// True for lattices built by tf_full (enables the FFT fast path).
    bool is_full_tf() const { return full_tf_; }

    bool operator==(const Lattice& other) const;

private:
    LatticeKind kind_ = LatticeKind::TF;
    std::vector<LatticePoint> points_;
    int dimension_ = 0;
    int levels_ = 0;
    bool full_tf_ = false;
};

enum class WeightFamily { PolynomialTF, Dyadic, Constant };

/// Weight family on lattice points: polynomial_tf(s) evaluates
/// (1 + |x| + |omega|)^s at the signed representatives, dyadic(s) evaluates
/// |a|^{-s} = 2^{level*s}, constant is 1.
class Weight {
public:
    static Weight polynomial_tf(double s) { return Weight(WeightFamily::PolynomialTF, s); }
    static Weight dyadic(double s) { return Weight(WeightFamily::Dyadic, s); }
    static Weight constant() { return Weight(WeightFamily::Constant, 0.0); }

    WeightFamily family() const { return family_; }
    double parameter() const { return s_; }

    /// Same family with |s|: a submultiplicative weight dominating the
    /// moderateness ratios of this one.
    Weight majorant() const { return Weight(family_, s_ < 0 ? -s_ : s_); }
    Weight inverse() const { return Weight(family_, -s_); }

    /// Throws std::invalid_argument if the point kind does not match the family.
    double operator()(const LatticePoint& p) const;

    std::string describe() const;

    bool operator==(const Weight&) const = default;

private:
    Weight(WeightFamily family, double s) : family_(family), s_(s) {}

    WeightFamily family_ = WeightFamily::Constant;
    double s_ = 0.0;
};

double weight_eval(const Weight& w, const LatticePoint& p);

/// Checks m(g1 g2 g3) <= w(g1) m(g2) w(g3) on lattice triples. Runs
/// exhaustively when samples covers the full triple count, otherwise on a
/// deterministic pseudo-random sample. Triples whose product leaves the
/// lattice are skipped.
bool check_moderate(const Weight& w, const Weight& m, const Lattice& lattice, long samples);

/// A window (or filter pair), a lattice, and a normalization constant c.
/// The frame atoms are c * pi(lambda) psi, materialized once at construction.
class FrameSpec {
public:
    FrameSpec() = default;

    static FrameSpec weyl_heisenberg(Signal window, Lattice lattice);
    static FrameSpec affine(FilterPair filters, int n, int levels);

    RepresentationKind representation() const { return representation_; }
    const Lattice& lattice() const { return lattice_; }
    int dimension() const { return dimension_; }
    std::size_t size() const { return lattice_.size(); }
    double scale() const { return scale_; }

    /// Unscaled window: the WH window signal, or the finest detail atom of
    /// the filter bank.
    const Signal& window() const { return window_; }
    const FilterPair& filters() const { return filters_; }

    Signal scaled_window() const;
    FrameSpec scaled(double factor) const;

    Signal atom(std::size_t index) const;
    /// Row `lambda` holds atom lambda; shared by the transform hot paths.
    const OperatorMatrix& atom_table() const { return *atoms_; }

private:
    void build_atom_table();

    RepresentationKind representation_ = RepresentationKind::WeylHeisenberg;
    Signal window_;
    FilterPair filters_;
    Lattice lattice_;
    double scale_ = 1.0;
    int dimension_ = 0;
    std::shared_ptr<const OperatorMatrix> atoms_;
};

}  // namespace coorbit
