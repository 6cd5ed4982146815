#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torex/linalg.hpp"
#include "torex/pi_scalar.hpp"
#include "torex/rational.hpp"

using namespace torex;

TEST_CASE("rational parse / format round-trips in canonical form") {
    CHECK(format_rational(parse_rational("2/4")) == "1/2");
    CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
    CHECK(format_rational(parse_rational("5")) == "5");
    CHECK(format_rational(parse_rational("0/7")) == "0");
    CHECK(format_rational(parse_rational("7/1")) == "7");
    CHECK(parse_rational("1/3") + parse_rational("1/6") == Rat(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("float equality uses relative tolerance") {
    using T = scalar_traits<double>;
    CHECK(T::eq(1.0, 1.0 + 5e-10, 1e-9));
    CHECK_FALSE(T::eq(1.0, 1.0 + 5e-9, 1e-9));
    CHECK(T::eq(1e6, 1e6 * (1 + 5e-10), 1e-9));  // relative, not absolute
}

TEST_CASE("complex rational arithmetic") {
    using C = Complex<Rat>;
    const C i = C::i();
    CHECK((i * i).eq(C(Rat(-1)), 0.0));
    const C a(Rat(1, 2), Rat(-1, 2));  // (1-i)/2
    const C b(Rat(1, 2), Rat(1, 2));   // (1+i)/2
    CHECK((a * b).eq(C(Rat(1, 2)), 0.0));
    CHECK(a.conj().eq(b, 0.0));
    CHECK(a.norm_sq() == Rat(1, 2));
}

TEST_CASE("pi-Laurent scalars: arithmetic, grading, rendering") {
    using P = PiScalar<Rat>;
    using C = Complex<Rat>;
    const P two_pi2 = P::monomial(C(Rat(2)), 2);
    const P half = P::from_real(Rat(1, 2));
    const P prod = two_pi2 * two_pi2;  // 4 pi^4
    CHECK(prod.coeff(4).re == Rat(4));
    CHECK(prod.coeff(2).is_zero(0.0));
    CHECK((two_pi2 - two_pi2).is_zero(0.0));
    CHECK((two_pi2 + half).str() == "2*pi^2 + 1/2");
    CHECK(P::monomial(C(Rat(1, 4)), -2).str() == "1/4*pi^-2");
    CHECK((two_pi2.pi_shifted(-2)).eq(P::from_real(Rat(2)), 0.0));

    const auto sign = (two_pi2 + half).definite_sign(0.0);
    REQUIRE(sign.has_value());
    CHECK(*sign == 1);
    CHECK(*(-two_pi2).definite_sign(0.0) == -1);
    CHECK(*P().definite_sign(0.0) == 0);
    CHECK_FALSE((two_pi2 - half).definite_sign(0.0).has_value());

    // numeric evaluation: 2 pi^2 + 1/2
    const double want = 2 * 3.14159265358979323846 * 3.14159265358979323846 + 0.5;
    CHECK((two_pi2 + half).eval().real() == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("exact matrix inverse and determinant over rationals") {
    Mat<Rat> a(2, 2);
    a << Rat(1), Rat(2), Rat(3), Rat(4);
    CHECK(mat_det(a) == Rat(-2));
    const Mat<Rat> inv = mat_inverse(a);
    CHECK(inv(0, 0) == Rat(-2));
    CHECK(inv(0, 1) == Rat(1));
    CHECK(inv(1, 0) == Rat(3, 2));
    CHECK(inv(1, 1) == Rat(-1, 2));
    CHECK((a * inv).isIdentity(0));

    Mat<Rat> sing(2, 2);
    sing << Rat(1), Rat(2), Rat(2), Rat(4);
    CHECK_THROWS_AS(mat_inverse(sing), SingularBasis);

    // awkward denominators stay exact
    Mat<Rat> h(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h(i, j) = Rat(1, i + j + 1);
    const Mat<Rat> hinv = mat_inverse(h);
    CHECK((h * hinv).isIdentity(0));
    CHECK(mat_det(h) == Rat(1, 2160));
}

TEST_CASE("interleaved complex coordinate views") {
    VecX<Rat> u(4);
    u << Rat(1), Rat(-1), Rat(0), Rat(2);
    const auto w1 = complex_coord(u, 1);
    const auto w2 = complex_coord(u, 2);
    CHECK(w1.re == Rat(1));
    CHECK(w1.im == Rat(-1));
    CHECK(w2.re == Rat(0));
    CHECK(w2.im == Rat(2));
    const VecX<Rat> back = interleave<Rat>({w1, w2});
    CHECK(back == u);
}
