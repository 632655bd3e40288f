#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eulertop/bigfloat.hpp>
#include <eulertop/rational.hpp>

using namespace eulertop;

TEST_CASE("rational arithmetic is canonical") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational::parse("-3/2") == a);
    CHECK(Rational::parse("7").is_integer());
    CHECK((a * a.inverse()) == Rational(1));
    CHECK(a.pow(-2) == Rational(4, 9));
    CHECK(Rational(0).pow(3) == Rational(0));
    CHECK_THROWS(Rational(0).pow(-1));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(abs(Rational(-5, 7)) == Rational(5, 7));
    CHECK(Rational(123456, 7).decimal_height() == 6);
}

TEST_CASE("mpreal carries its precision through arithmetic") {
    MpReal a(1.0, 128);
    MpReal b(3L, 192);
    CHECK(a.precision() == 128);
    CHECK((a + b).precision() == 192);
    CHECK((a / b).precision() == 192);
    CHECK(MpReal::zero(64).is_zero());
    CHECK(MpReal().precision() == MpReal::kDefaultPrecision);
    CHECK_THROWS(MpReal::zero(8));

    MpReal x = MpReal(2L, 256);
    MpReal err = abs(sqrt(x) * sqrt(x) - x);
    CHECK(err <= MpReal::parse("1e-70", 256));
}

TEST_CASE("mpreal parse and print round-trip") {
    MpReal v = MpReal::parse("-0.125", 128);
    CHECK(v.to_double() == -0.125);
    MpReal back = MpReal::parse(v.str(), 128);
    CHECK(back == v);

    // 40 digits of pi, checked against the builtin constant.
    MpReal ref = MpReal::parse("3.141592653589793238462643383279502884197", 256);
    CHECK(abs(MpReal::pi(256) - ref) <= MpReal::parse("1e-38", 256));
}

TEST_CASE("mpreal precision change preserves representable values") {
    MpReal fine = MpReal::parse("1e-30", 320);
    MpReal coarse = fine.at_precision(128);
    CHECK(coarse.precision() == 128);
    MpReal lifted = MpReal(0.75, 64).at_precision(256);
    CHECK(lifted == MpReal(0.75, 256));
    CHECK(ldexp(MpReal(3L, 128), -2) == MpReal(0.75, 128));
}

TEST_CASE("rational lift into mpreal is exact for dyadic values") {
    Rational q(-11, 16);
    MpReal m(q, 128);
    CHECK(m == MpReal(-0.6875, 128));
}

TEST_CASE("complex square root takes the principal branch") {
    mpfr_prec_t p = 256;
    BigComplex minus_one(MpReal(-1.0, p));
    BigComplex i = sqrt(minus_one);
    CHECK(i.re.is_zero());
    CHECK(abs(i.im - MpReal(1L, p)) <= MpReal::parse("1e-70", p));

    BigComplex z(MpReal(-3.0, p), MpReal(4.0, p));
    BigComplex r = sqrt(z);
    CHECK(r.re.sign() >= 0);
    BigComplex back = r * r - z;
    CHECK(abs(back) <= MpReal::parse("1e-70", p));

    // Real nonnegative input stays exactly real.
    BigComplex four(MpReal(4.0, p));
    CHECK(sqrt(four).im.is_zero());
    CHECK(sqrt(four).re == MpReal(2L, p));
}

TEST_CASE("complex arithmetic matches hand expansion") {
    mpfr_prec_t p = 128;
    BigComplex a(MpReal(1L, p), MpReal(2L, p));
    BigComplex b(MpReal(3L, p), MpReal(-1L, p));
    BigComplex prod = a * b;
    CHECK(prod.re == MpReal(5L, p));
    CHECK(prod.im == MpReal(5L, p));
    BigComplex quot = prod / b;
    CHECK(abs(quot - a) <= MpReal::parse("1e-35", p));
    CHECK(conj(a).im == MpReal(-2L, p));
    CHECK(a.is_real(MpReal::parse("1e-30", p)) == false);
}

TEST_CASE("approx_equal enforces matching precision") {
    MpReal a(1.0, 128);
    MpReal b(1.0, 256);
    CHECK_THROWS_AS((void)approx_equal(a, b, Tolerance::defaults(128)), PrecisionMismatch);

    MpReal c(1.0, 256);
    MpReal d = c + MpReal::parse("1e-50", 256);
    CHECK(approx_equal(c, d, Tolerance::defaults(256)));
    CHECK(!approx_equal(c, c + MpReal(0.5, 256), Tolerance::defaults(256)));

    Tolerance rel{MpReal::zero(256), MpReal::parse("1e-10", 256)};
    MpReal big = MpReal::parse("1e40", 256);
    CHECK(approx_equal(big, big + MpReal(1e25, 256), rel));
}
