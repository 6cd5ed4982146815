#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/helpers.hpp"
#include "torex/trigpoly.hpp"

using namespace torex;
using torex_test::quadrature_integral;
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

TEST_CASE("cosine and sine have the textbook mode coefficients") {
    const auto u = vec<Rat>({1, 0});
    const auto c = TrigPoly<Rat>::cosine(1, Rat(1), u);
    const auto s = TrigPoly<Rat>::sine(1, Rat(1), u);

    CHECK(c.terms().size() == 2);
    CHECK(c.coeff(u).eq(rat_coeff(1, 2), 0.0));
    CHECK(c.coeff(-u).eq(rat_coeff(1, 2), 0.0));

    CHECK(s.coeff(u).eq(PiScalar<Rat>::from(Complex<Rat>(Rat(0), Rat(-1, 2))), 0.0));
    CHECK(s.coeff(-u).eq(PiScalar<Rat>::from(Complex<Rat>(Rat(0), Rat(1, 2))), 0.0));

    CHECK(c.is_real(0.0));
    CHECK(s.is_real(0.0));
    CHECK((c + s).is_real(0.0));

    // A single exponential mode is not real.
    TrigPoly<Rat> e(1, Rat(1));
    e.add_mode(u, rat_coeff(1, 1));
    CHECK_FALSE(e.is_real(0.0));

    // Adding the negation restores the empty canonical form.
    CHECK((c - c).empty());
    CHECK((c + (-c)).empty());
}

TEST_CASE("products convolve frequencies: double angle and annihilation") {
    const auto u = vec<Rat>({1, 0});
    const auto c = TrigPoly<Rat>::cosine(1, Rat(1), u);
    const auto s = TrigPoly<Rat>::sine(1, Rat(1), u);

    const auto c2 = c * c;  // cos^2 = 1/2 + (1/2) cos(2u)
    CHECK(c2.zero_mode().eq(rat_coeff(1, 2), 0.0));
    CHECK(c2.coeff(vec<Rat>({2, 0})).eq(rat_coeff(1, 4), 0.0));
    CHECK(c2.coeff(vec<Rat>({-2, 0})).eq(rat_coeff(1, 4), 0.0));
    CHECK(c2.terms().size() == 3);

    const auto s2 = s * s;  // sin^2 = 1/2 - (1/2) cos(2u)
    CHECK(s2.zero_mode().eq(rat_coeff(1, 2), 0.0));
    CHECK(s2.coeff(vec<Rat>({2, 0})).eq(rat_coeff(-1, 4), 0.0));
    CHECK((c2 + s2).eq(TrigPoly<Rat>::constant(1, Rat(1), rat_coeff(1, 1)), 0.0));

    // sin * cos has no constant term.
    CHECK((s * c).zero_mode().is_zero(0.0));

    // f * 1 = f.
    const auto one = TrigPoly<Rat>::constant(1, Rat(1), rat_coeff(1, 1));
    CHECK((c * one).eq(c, 0.0));
}

TEST_CASE("integration keeps Vol times the zero mode") {
    const Rat vol(5, 3);
    const auto u = vec<Rat>({1, 0});
    const auto c = TrigPoly<Rat>::cosine(1, vol, u);

    CHECK(c.integrate().is_zero(0.0));  // oscillatory mode integrates to zero

    const auto k = TrigPoly<Rat>::constant(1, vol, rat_coeff(7, 2));
    CHECK(k.integrate().eq(rat_coeff(35, 6), 0.0));  // c * Vol = 7/2 * 5/3

    // Normalized eigenfunction has unit L2 norm: norm_sq * integral(cos^2) = 1.
    const Rat norm_sq = Rat(2) / vol;
    CHECK((c * c).integrate().scaled(norm_sq).eq(rat_coeff(1, 1), 0.0));
    const auto s = TrigPoly<Rat>::sine(1, vol, u);
    CHECK((s * s).integrate().scaled(norm_sq).eq(rat_coeff(1, 1), 0.0));
    CHECK((s * c).integrate().is_zero(0.0));
}

TEST_CASE("laplacian satisfies the eigen-relation and renders 4*pi^2") {
    const auto u = vec<Rat>({1, 0});
    const auto c = TrigPoly<Rat>::cosine(1, Rat(1), u);
    const auto lam = PiScalar<Rat>::monomial(Complex<Rat>(Rat(4)), 2);

    CHECK(c.laplacian().eq(c.scaled(lam), 0.0));
    CHECK(lam.str() == "4*pi^2");

    const auto k = TrigPoly<Rat>::constant(1, Rat(1), rat_coeff(3, 1));
    CHECK(k.laplacian().empty());

    // Non-unit squared norm: u = (1,2) has |u|^2 = 5.
    const auto v = vec<Rat>({1, 2});
    const auto cv = TrigPoly<Rat>::cosine(1, Rat(1), v);
    const auto lam5 = PiScalar<Rat>::monomial(Complex<Rat>(Rat(20)), 2);
    CHECK(cv.laplacian().eq(cv.scaled(lam5), 0.0));
}

TEST_CASE("gradient inner product: eigenfunction goldens") {
    const auto u = vec<Rat>({1, 2});  // |u|^2 = 5
    const Rat vol(1);
    const auto c = TrigPoly<Rat>::cosine(1, vol, u);
    const auto s = TrigPoly<Rat>::sine(1, vol, u);
    const auto lam = PiScalar<Rat>::monomial(Complex<Rat>(Rat(20)), 2);

    // |grad cos|^2 = lambda sin^2 and |grad sin|^2 = lambda cos^2.
    CHECK(grad_inner(c, c).eq((s * s).scaled(lam), 0.0));
    CHECK(grad_inner(s, s).eq((c * c).scaled(lam), 0.0));

    const auto k = TrigPoly<Rat>::constant(1, vol, rat_coeff(2, 1));
    CHECK(grad_inner(c, k).empty());
    CHECK(grad_inner(k, c).empty());
}

TEST_CASE("Leibniz rule ties laplacian, product, and grad_inner together") {
    std::mt19937_64 rng(20260817);
    const Rat vol(3, 2);
    const std::vector<VecX<Rat>> freqs = {vec<Rat>({1, 0, 0, 0}), vec<Rat>({0, 1, -1, 0}),
                                          vec<Rat>({2, 0, 1, 1}), vec<Rat>({0, 0, 0, 3})};
    for (int trial = 0; trial < 6; ++trial) {
        const auto f = random_real_poly<Rat>(rng, 2, vol, freqs);
        const auto g = random_real_poly<Rat>(rng, 2, vol, freqs);
        const auto lhs = (f * g).laplacian();
        const auto rhs = f.laplacian() * g + f * g.laplacian() -
                         grad_inner(f, g).scaled(Rat(2));
        CHECK(lhs.eq(rhs, 0.0));
    }
}

TEST_CASE("numeric evaluation agrees with the algebra") {
    std::mt19937_64 rng(7);
    const Rat vol(1, 2);  // basis diag(1, 1/2): volume 1/2, dual diag(1, 2)
    Mat<Rat> basis = Mat<Rat>::Identity(2, 2);
    basis(1, 1) = Rat(1, 2);
    const std::vector<VecX<Rat>> freqs = {vec<Rat>({1, 0}), vec<Rat>({0, 2}),
                                          vec<Rat>({1, 2})};
    const auto f = random_real_poly<Rat>(rng, 1, vol, freqs);
    const auto g = random_real_poly<Rat>(rng, 1, vol, freqs);

    // Pointwise multiplicativity at an arbitrary sample point.
    Eigen::VectorXd x(2);
    x << 0.37, -1.22;
    const auto lhs = (f * g).eval(x);
    const auto rhs = f.eval(x) * g.eval(x);
    CHECK(std::abs(lhs - rhs) < 1e-12);

    // Grid quadrature (independent oracle) matches symbolic integration.
    const auto prod = f * g;
    const auto symbolic = prod.integrate().eval();
    const auto numeric = quadrature_integral(prod, basis, 11);
    CHECK(std::abs(symbolic - numeric) < 1e-9);

    // And on a single non-real mode.
    TrigPoly<Rat> e(1, vol);
    e.add_mode(vec<Rat>({1, 2}), PiScalar<Rat>::from(Complex<Rat>(Rat(1, 3), Rat(2))));
    CHECK(std::abs(e.integrate().eval() - quadrature_integral(e, basis, 11)) < 1e-9);
}

TEST_CASE("conjugation flips frequencies and coefficients") {
    TrigPoly<Rat> f(1, Rat(1));
    f.add_mode(vec<Rat>({1, 1}), PiScalar<Rat>::from(Complex<Rat>(Rat(1, 2), Rat(3))));
    f.add_mode(vec<Rat>({0, 2}), PiScalar<Rat>::monomial(Complex<Rat>(Rat(0), Rat(-1)), 2));

    const auto fc = f.conj();
    CHECK(fc.coeff(vec<Rat>({-1, -1})).eq(
        PiScalar<Rat>::from(Complex<Rat>(Rat(1, 2), Rat(-3))), 0.0));
    CHECK(fc.coeff(vec<Rat>({0, -2})).eq(
        PiScalar<Rat>::monomial(Complex<Rat>(Rat(0), Rat(1)), 2), 0.0));
    CHECK(fc.conj().eq(f, 0.0));
}

TEST_CASE("mismatched dimension or volume is rejected") {
    const auto f = TrigPoly<Rat>::constant(1, Rat(1), rat_coeff(1, 1));
    const auto g = TrigPoly<Rat>::constant(2, Rat(1), rat_coeff(1, 1));
    const auto h = TrigPoly<Rat>::constant(1, Rat(2), rat_coeff(1, 1));
    CHECK_THROWS_AS(f * g, DimensionMismatch);
    CHECK_THROWS_AS(f + h, DimensionMismatch);

    TrigPoly<Rat> bad(1, Rat(1));
    CHECK_THROWS_AS(bad.add_mode(vec<Rat>({1, 0, 0, 0}), rat_coeff(1, 1)),
                    DimensionMismatch);
}

TEST_CASE("float mode merges frequencies that agree to 12 digits") {
    TrigPoly<double> f(1, 1.0, 1e-9);
    VecX<double> u(2), v(2);
    u << 0.70710678118654752, 0.0;
    v << 0.70710678118654755, 0.0;  // differs by ~3e-17
    f.add_mode(u, PiScalar<double>::from_real(1.0));
    f.add_mode(v, PiScalar<double>::from_real(2.0));
    CHECK(f.terms().size() == 1);
    CHECK(f.coeff(u).eq(PiScalar<double>::from_real(3.0), 1e-12));

    VecX<double> far(2);
    far << 0.70710688, 0.0;  // differs in the 7th digit: distinct key
    f.add_mode(far, PiScalar<double>::from_real(1.0));
    CHECK(f.terms().size() == 2);

    // Float laplacian eigenrelation within tolerance.
    const auto c = TrigPoly<double>::cosine(1, 1.0, u);
    const double lam = 4.0 * PiScalar<double>::pi_value() * PiScalar<double>::pi_value() *
                       u.dot(u);
    const auto diff = c.laplacian() - c.scaled(PiScalar<double>::monomial(
                                          Complex<double>(4.0 * u.dot(u)), 2));
    CHECK(diff.is_zero(1e-12));
    CHECK(lam == doctest::Approx(4.0 * 9.8696044 * 0.5).epsilon(1e-6));
}
