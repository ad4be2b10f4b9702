#include <doctest.h>

#include "coorbit/norms.hpp"
#include "test_support.hpp"

using namespace coorbit;
using namespace coorbit::testing;

namespace {

// Small helper lattices so weighted fields have honest lattice points.
CoeffField2D field_on(const Lattice& l1, const Lattice& l2, std::vector<cplx> values) {
    return CoeffField2D(l1, l2, std::move(values));
}

}  // namespace

TEST_CASE("weighted lp norm basics") {
    const Lattice lattice = Lattice::tf_points(8, {{0, 0}, {1, 0}, {2, 0}});
    const CoeffField1D one(lattice, {cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    for (double p : {1.0, 2.0, 3.0, kInf})
        CHECK(weighted_lp_norm(one, p, Weight::constant()) == doctest::Approx(1.0));

    const CoeffField1D steps(lattice, {cplx(1, 0), cplx(2, 0), cplx(3, 0)});
    CHECK(weighted_lp_norm(steps, 1.0, Weight::constant()) == doctest::Approx(6.0));
}

TEST_CASE("weighted lp norm matches an independent sum") {
    std::mt19937_64 rng(41);
    const Lattice lattice = Lattice::tf_full(4);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<cplx> raw(lattice.size());
    for (cplx& v : raw) v = cplx(uniform(rng), uniform(rng));
    const CoeffField1D field(lattice, raw);
    const Weight m = Weight::polynomial_tf(1.0);

    double oracle = 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const auto p = std::get<TFLatticePoint>(lattice.point(i));
        const double w = 1.0 + std::abs(signed_representative(p.time_shift, 4)) +
                         std::abs(signed_representative(p.freq_shift, 4));
        oracle += std::norm(raw[i]) * w * w;
    }
    oracle = std::sqrt(oracle);
    CHECK(weighted_lp_norm(field, 2.0, m) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("weighted lp norm rejects p < 1") {
    const Lattice lattice = Lattice::tf_points(4, {{0, 0}});
    const CoeffField1D field(lattice, {cplx(1, 0)});
    CHECK_THROWS_AS(weighted_lp_norm(field, 0.5, Weight::constant()), std::invalid_argument);
}

TEST_CASE("mixed norm variants on the 2x2 example") {
    const Lattice l1 = Lattice::tf_points(4, {{0, 0}, {1, 0}});
    const Lattice l2 = Lattice::tf_points(4, {{0, 0}, {0, 1}});
    // rows = lattice1, cols = lattice2
    const CoeffField2D field = field_on(l1, l2, {cplx(1, 0), cplx(2, 0), cplx(3, 0), cplx(4, 0)});

    MixedNormSpec script{1.0, MixedVariant::SupOverFirst, Weight::constant(), Weight::constant()};
    CHECK(mixed_norm(field, script) == doctest::Approx(7.0));   // max(1+2, 3+4)

    MixedNormSpec plain{1.0, MixedVariant::SupOverSecond, Weight::constant(), Weight::constant()};
    CHECK(mixed_norm(field, plain) == doctest::Approx(6.0));    // max(1+3, 2+4)

    for (MixedVariant variant : {MixedVariant::SupOverFirst, MixedVariant::SupOverSecond}) {
        MixedNormSpec sup{kInf, variant, Weight::constant(), Weight::constant()};
        CHECK(mixed_norm(field, sup) == doctest::Approx(4.0));
    }
}

TEST_CASE("mixed norm factors on rank-one fields") {
    std::mt19937_64 rng(42);
    const Lattice l1 = Lattice::tf_full(3);
    const Lattice l2 = Lattice::tf_full(4);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<cplx> a(l1.size()), b(l2.size());
    for (cplx& v : a) v = cplx(uniform(rng), uniform(rng));
    for (cplx& v : b) v = cplx(uniform(rng), uniform(rng));

    std::vector<cplx> raw(l1.size() * l2.size());
    for (std::size_t i = 0; i < l1.size(); ++i)
        for (std::size_t j = 0; j < l2.size(); ++j) raw[i * l2.size() + j] = a[i] * b[j];
    const CoeffField2D field = field_on(l1, l2, raw);

    const Weight m1 = Weight::polynomial_tf(1.0);
    const Weight m2 = Weight::polynomial_tf(-0.5);
    for (double p : {1.0, 2.0, 3.0, kInf}) {
        MixedNormSpec spec{p, MixedVariant::SupOverFirst, m1, m2};
        // (max |a| / m1) * ||b m2||_p computed independently
        double lead = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            lead = std::max(lead, std::abs(a[i]) / m1(l1.point(i)));
        double tail = 0.0;
        if (std::isinf(p)) {
            for (std::size_t j = 0; j < b.size(); ++j)
                tail = std::max(tail, std::abs(b[j]) * m2(l2.point(j)));
        } else {
            for (std::size_t j = 0; j < b.size(); ++j)
                tail += std::pow(std::abs(b[j]) * m2(l2.point(j)), p);
            tail = std::pow(tail, 1.0 / p);
        }
        CHECK(mixed_norm(field, spec) == doctest::Approx(lead * tail).epsilon(1e-12));
    }
}

TEST_CASE("mixed norm satisfies the norm axioms") {
    std::mt19937_64 rng(43);
    const Lattice l1 = Lattice::tf_full(3);
    const Lattice l2 = Lattice::tf_full(3);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    for (double p : {1.0, 2.0, kInf}) {
        for (MixedVariant variant : {MixedVariant::SupOverFirst, MixedVariant::SupOverSecond}) {
            MixedNormSpec spec{p, variant, Weight::polynomial_tf(1.0),
                               Weight::polynomial_tf(-1.0)};
            std::vector<cplx> raw_f(81), raw_g(81);
            for (cplx& v : raw_f) v = cplx(uniform(rng), uniform(rng));
            for (cplx& v : raw_g) v = cplx(uniform(rng), uniform(rng));
            const CoeffField2D f = field_on(l1, l2, raw_f);
            const CoeffField2D g = field_on(l1, l2, raw_g);

            const cplx factor(0.3, -1.7);
            std::vector<cplx> raw_cf(81), raw_sum(81);
            for (std::size_t i = 0; i < 81; ++i) {
                raw_cf[i] = factor * raw_f[i];
                raw_sum[i] = raw_f[i] + raw_g[i];
            }
            const double nf = mixed_norm(f, spec);
            const double ng = mixed_norm(g, spec);
            REQUIRE(mixed_norm(field_on(l1, l2, raw_cf), spec) ==
                    doctest::Approx(std::abs(factor) * nf).epsilon(1e-10));
            REQUIRE(mixed_norm(field_on(l1, l2, raw_sum), spec) <= (nf + ng) * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("mixed norm is monotone in the weights") {
    std::mt19937_64 rng(44);
    const Lattice lattice = Lattice::tf_full(4);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<cplx> raw(lattice.size() * lattice.size());
    for (cplx& v : raw) v = cplx(uniform(rng), uniform(rng));
    const CoeffField2D field = field_on(lattice, lattice, raw);
    for (double p : {1.0, 2.0, kInf}) {
        // effective weight grows with m2 and shrinks with m1
        MixedNormSpec small{p, MixedVariant::SupOverFirst, Weight::polynomial_tf(1.0),
                            Weight::polynomial_tf(1.0)};
        MixedNormSpec large{p, MixedVariant::SupOverFirst, Weight::polynomial_tf(1.0),
                            Weight::polynomial_tf(2.0)};
        CHECK(mixed_norm(field, small) <= mixed_norm(field, large) * (1.0 + 1e-12));
    }
}

TEST_CASE("coorbit norm with p = 2 and constant weight is the l2 norm") {
    std::mt19937_64 rng(45);
    const FrameSpec frame = wh_gaussian_frame(16);
    const Signal f = random_signal(16, rng);
    CHECK(coorbit_norm(f, frame, 2.0, Weight::constant()) ==
          doctest::Approx(f.norm()).epsilon(1e-10));
    CHECK(coorbit_norm(Signal(16), frame, 2.0, Weight::constant()) == doctest::Approx(0.0));
}

TEST_CASE("dyadic coorbit norm equals the explicit wavelet sequence norm") {
    std::mt19937_64 rng(46);
    const int n = 16;
    const int levels = 3;
    const FrameSpec frame = haar_frame(n, levels);
    const Signal f = random_signal(n, rng);
    const double s = 0.7;
    const double p = 3.0;

    // Independent oracle: closed-form Haar atoms, stage-by-stage sums.
    double total = 0.0;
    for (int level = 0; level <= levels; ++level) {
        const int count = level == levels ? n >> levels : n >> (level + 1);
        double stage = 0.0;
        for (int shift = 0; shift < count; ++shift) {
            const Signal atom = explicit_haar_atom(n, levels, level, shift);
            stage += std::pow(std::abs(inner(f, atom)), p);
        }
        total += std::pow(std::exp2(static_cast<double>(level) * s), p) * stage;
    }
    const double oracle = std::pow(total, 1.0 / p);

    CHECK(coorbit_norm(f, frame, p, Weight::dyadic(s)) ==
          doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("weighted lp tensor norm on a rank-one field") {
    const Lattice l1 = Lattice::tf_points(4, {{0, 0}, {1, 0}});
    const Lattice l2 = Lattice::tf_points(4, {{0, 0}});
    const CoeffField2D field = field_on(l1, l2, {cplx(3, 0), cplx(0, 4)});
    CHECK(weighted_lp_tensor(field, 1.0, Weight::constant(), Weight::constant()) ==
          doctest::Approx(7.0));
    CHECK(weighted_lp_tensor(field, kInf, Weight::constant(), Weight::constant()) ==
          doctest::Approx(4.0));
}

TEST_CASE("discrete kernel criterion basics and coincidences") {
    std::mt19937_64 rng(47);
    const Lattice l1 = Lattice::tf_full(3);
    const Lattice l2 = Lattice::tf_full(3);

    const CoeffField2D zero = CoeffField2D::zeros(l1, l2);
    CHECK(discrete_kernel_criterion(zero, 2.0, Weight::constant(), Weight::constant(),
                                    CriterionDirection::OneToP) == doctest::Approx(0.0));

    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<cplx> raw(l1.size() * l2.size());
    for (cplx& v : raw) v = cplx(uniform(rng), uniform(rng));
    const CoeffField2D field = field_on(l1, l2, raw);
    const Weight m1 = Weight::polynomial_tf(1.5);
    const Weight m2 = Weight::polynomial_tf(-1.0);

    for (double p : {1.0, 2.0, 3.0, kInf}) {
        const double criterion =
            discrete_kernel_criterion(field, p, m1, m2, CriterionDirection::OneToP);
        const double mixed =
            mixed_norm(field, MixedNormSpec{p, MixedVariant::SupOverFirst, m1, m2});
        REQUIRE(std::abs(criterion - mixed) <= 1e-14 * std::max(1.0, mixed));

        const double q = conjugate_exponent(p);
        const double criterion_dual =
            discrete_kernel_criterion(field, p, m1, m2, CriterionDirection::PToInf);
        const double mixed_dual =
            mixed_norm(field, MixedNormSpec{q, MixedVariant::SupOverSecond, m1, m2});
        REQUIRE(std::abs(criterion_dual - mixed_dual) <= 1e-14 * std::max(1.0, mixed_dual));
    }
}

TEST_CASE("rank-one criterion factors like the mixed norm") {
    std::mt19937_64 rng(48);
    const Lattice l1 = Lattice::tf_full(3);
    const Lattice l2 = Lattice::tf_full(3);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<cplx> a(l1.size()), b(l2.size());
    for (cplx& v : a) v = cplx(uniform(rng), uniform(rng));
    for (cplx& v : b) v = cplx(uniform(rng), uniform(rng));
    std::vector<cplx> raw(l1.size() * l2.size());
    for (std::size_t i = 0; i < l1.size(); ++i)
        for (std::size_t j = 0; j < l2.size(); ++j) raw[i * l2.size() + j] = a[i] * b[j];
    const CoeffField2D field = field_on(l1, l2, raw);
    const Weight m1 = Weight::polynomial_tf(1.0);
    const Weight m2 = Weight::polynomial_tf(0.5);
    const double p = 2.0;

    double lead = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        lead = std::max(lead, std::abs(a[i]) / m1(l1.point(i)));
    double tail = 0.0;
    for (std::size_t j = 0; j < b.size(); ++j)
        tail += std::pow(std::abs(b[j]) * m2(l2.point(j)), p);
    tail = std::pow(tail, 1.0 / p);

    CHECK(discrete_kernel_criterion(field, p, m1, m2, CriterionDirection::OneToP) ==
          doctest::Approx(lead * tail).epsilon(1e-12));
}

TEST_CASE("conjugate exponent endpoints") {
    CHECK(std::isinf(conjugate_exponent(1.0)));
    CHECK(conjugate_exponent(kInf) == doctest::Approx(1.0));
    CHECK(conjugate_exponent(2.0) == doctest::Approx(2.0));
    CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0));
    CHECK_THROWS_AS(conjugate_exponent(0.5), std::invalid_argument);
}
