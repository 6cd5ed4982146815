#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/helpers.hpp"
#include "torex/forms.hpp"

using namespace torex;
using torex_test::random_real_poly;

namespace {

template <class R>
VecX<R> vec(std::initializer_list<long> xs) {
    VecX<R> v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v[i++] = scalar_traits<R>::from_long(x);
    return v;
}

PiScalar<Rat> rat_coeff(long num, long den) {
    return PiScalar<Rat>::from_real(Rat(num, den));
}

}  // namespace

TEST_CASE("the flat Kaehler form: reality, norm, projection fixed point") {
    for (int n = 1; n <= 3; ++n) {
        const auto omega = Form11<Rat>::kahler(n, Rat(1));
        CHECK(omega.is_real(0.0));
        // |omega|^2 = n identically.
        const auto inner = form_inner(omega, omega);
        CHECK(inner.eq(
            TrigPoly<Rat>::constant(n, Rat(1), rat_coeff(n, 1)), 0.0));
        // Constant forms are their own harmonic part.
        CHECK(omega.harmonic_project().eq(omega, 0.0));
    }
}

TEST_CASE("ddc of an eigen-mode has the rank-one coefficient matrix") {
    // n = 2, w = (1, i) in complex coordinates: u = (1, 0, 0, 1).
    const auto u = vec<Rat>({1, 0, 0, 1});
    const auto c = TrigPoly<Rat>::cosine(2, Rat(1), u);
    const auto form = ddc(c);

    // w^1 = 1, w^2 = i; entries must equal -2 pi^2 i wbar^p w^q cos.
    // (p,q) = (0,0): -2i; (0,1): -2i * 1 * i = 2; (1,0): -2i * (-i) * 1 = -2;
    // (1,1): -2i * (-i)(i) = -2i.
    const auto m2i = PiScalar<Rat>::monomial(Complex<Rat>(Rat(0), Rat(-2)), 2);
    const auto p2 = PiScalar<Rat>::monomial(Complex<Rat>(Rat(2)), 2);
    CHECK(form.entry(0, 0).eq(c.scaled(m2i), 0.0));
    CHECK(form.entry(0, 1).eq(c.scaled(p2), 0.0));
    CHECK(form.entry(1, 0).eq(c.scaled(-p2), 0.0));
    CHECK(form.entry(1, 1).eq(c.scaled(m2i), 0.0));

    // Real input gives a real (1,1)-form; ddc of a constant vanishes.
    CHECK(form.is_real(0.0));
    CHECK(ddc(TrigPoly<Rat>::constant(2, Rat(1), rat_coeff(5, 3))).is_zero(0.0));
}

TEST_CASE("|ddc f|^2 = lambda^2 f^2 on eigenfunctions") {
    // Two reps with |w|^2 = 5 on n = 2.
    for (auto coords : {std::initializer_list<long>{1, 2, 0, 0},
                        std::initializer_list<long>{0, 1, 2, 0}}) {
        const auto u = vec<Rat>(coords);
        const auto c = TrigPoly<Rat>::cosine(2, Rat(1), u);
        const auto s = TrigPoly<Rat>::sine(2, Rat(1), u);
        const auto lam_sq = PiScalar<Rat>::monomial(Complex<Rat>(Rat(400)), 4);  // (4*5)^2 pi^4
        CHECK(form_inner(ddc(c), ddc(c)).eq((c * c).scaled(lam_sq), 0.0));
        CHECK(form_inner(ddc(s), ddc(s)).eq((s * s).scaled(lam_sq), 0.0));
    }
}

TEST_CASE("pairing ddc f with omega recovers minus the laplacian") {
    std::mt19937_64 rng(99);
    const Rat vol(2);
    const std::vector<VecX<Rat>> freqs = {vec<Rat>({1, 0, 0, 0}), vec<Rat>({1, 1, 0, 2}),
                                          vec<Rat>({0, 0, 1, 1})};
    const auto omega = Form11<Rat>::kahler(2, vol);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_real_poly<Rat>(rng, 2, vol, freqs);
        CHECK(form_inner(omega, ddc(f)).eq(-f.laplacian(), 0.0));
        CHECK(form_inner(ddc(f), omega).eq(-f.laplacian(), 0.0));
    }
}

TEST_CASE("harmonic projection keeps the mean of each coefficient") {
    const auto u = vec<Rat>({1, 0});
    const auto c = TrigPoly<Rat>::cosine(1, Rat(1), u);
    // cos * ddc(cos): zero mode of entry (0,0) is -pi^2 i (two cross terms of
    // 1/4 each times -2 pi^2 i).
    const auto prod = ddc(c).mul_function(c);
    const auto h = prod.harmonic_project();
    CHECK(h.entry(0, 0).zero_mode().eq(
        PiScalar<Rat>::monomial(Complex<Rat>(Rat(0), Rat(-1)), 2), 0.0));
    CHECK(h.entry(0, 0).terms().size() == 1);

    // Idempotent, and annihilates ddc-exact forms (their coefficients have no
    // zero mode because ddc kills the constant part of the potential).
    CHECK(h.harmonic_project().eq(h, 0.0));
    std::mt19937_64 rng(5);
    const auto psi = random_real_poly<Rat>(
        rng, 1, Rat(1), {vec<Rat>({1, 0}), vec<Rat>({1, 1}), vec<Rat>({0, 2})});
    CHECK(ddc(psi).harmonic_project().is_zero(0.0));
}

TEST_CASE("reality of (1,1)-forms is the i-times-Hermitian condition") {
    // alpha = i * A with A Hermitian: real. Use A = [[1, 2+i], [2-i, -1]].
    const auto i_ = [](long re, long im) { return Complex<Rat>(Rat(re), Rat(im)); };
    const auto real_form = Form11<Rat>::constant(
        2, Rat(1), {i_(0, 1), i_(-1, 2), i_(1, 2), i_(0, -1)});
    // entries: i*1 = i; i*(2+i) = -1+2i; i*(2-i) = 1+2i; i*(-1) = -i.
    CHECK(real_form.is_real(0.0));

    // Breaking Hermitian symmetry breaks reality.
    const auto bad = Form11<Rat>::constant(
        2, Rat(1), {i_(0, 1), i_(-1, 2), i_(1, 3), i_(0, -1)});
    CHECK_FALSE(bad.is_real(0.0));
}

TEST_CASE("form arithmetic, scaling, and compatibility guards") {
    const auto omega1 = Form11<Rat>::kahler(2, Rat(1));
    const auto two_omega = omega1 + omega1;
    CHECK(two_omega.eq(omega1.scaled(Rat(2)), 0.0));
    CHECK((omega1 - omega1).is_zero(0.0));

    const auto f = TrigPoly<Rat>::cosine(2, Rat(1), vec<Rat>({1, 0, 0, 0}));
    const auto scaled = omega1.mul_function(f);
    CHECK(scaled.entry(0, 0).eq(f.scaled(PiScalar<Rat>::from(
                                    Complex<Rat>(Rat(0), Rat(1, 2)))),
                                0.0));

    const auto other_vol = Form11<Rat>::kahler(2, Rat(3));
    CHECK_THROWS_AS(omega1 + other_vol, DimensionMismatch);
    CHECK_THROWS_AS(Form11<Rat>::constant(2, Rat(1), {Complex<Rat>(Rat(1))}),
                    DimensionMismatch);
}
