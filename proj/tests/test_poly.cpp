#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eulertop/poly.hpp>

#include <map>

using namespace eulertop;

namespace {

const std::vector<std::string> kXY{"x", "y"};

SparsePoly make_var(const std::vector<std::string>& vars, const std::string& n) {
    return SparsePoly::variable(vars, n);
}

}  // namespace

TEST_CASE("construction and term bookkeeping") {
    SparsePoly zero = SparsePoly::constant(kXY, Rational(0));
    CHECK(zero.is_zero());
    CHECK(zero.total_degree() == -1);
    CHECK(zero.term_count() == 0);

    SparsePoly x = make_var(kXY, "x");
    SparsePoly y = make_var(kXY, "y");
    SparsePoly p = x * x * y - y + SparsePoly::constant(kXY, Rational(3));
    CHECK(p.total_degree() == 3);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient({2, 1}) == Rational(1));
    CHECK(p.coefficient({0, 1}) == Rational(-1));
    CHECK(p.constant_term() == Rational(3));
    CHECK(p.degree_in("x") == 2);
    CHECK(p.degree_in("y") == 1);
    CHECK(!p.is_homogeneous());
    CHECK((x * y - y * x).is_zero());
}

TEST_CASE("printer writes graded lexicographic order") {
    std::vector<std::string> vars{"a", "b", "c", "d", "e", "f"};
    SparsePoly a = make_var(vars, "a");
    SparsePoly b = make_var(vars, "b");
    SparsePoly c = make_var(vars, "c");
    SparsePoly d = make_var(vars, "d");
    SparsePoly e = make_var(vars, "e");
    SparsePoly f = make_var(vars, "f");
    SparsePoly g = a * f - b * e - c * c.scaled(Rational(3)) + c * d;
    CHECK(g.str() == "a*f - b*e - 3*c^2 + c*d");

    SparsePoly x = make_var(kXY, "x");
    CHECK((x - x).str() == "0");
    CHECK(SparsePoly::constant(kXY, Rational(-7, 2)).str() == "-7/2");
}

TEST_CASE("evaluation and substitution") {
    SparsePoly x = make_var(kXY, "x");
    SparsePoly y = make_var(kXY, "y");
    SparsePoly p = x * x + y.scaled(Rational(2));
    CHECK(p.eval({{"x", Rational(3)}, {"y", Rational(-1, 2)}}) == Rational(8));

    // Substitution leaves unnamed variables alone.
    SparsePoly q = p.subst({{"x", y + SparsePoly::constant(kXY, Rational(1))}});
    CHECK(q.eval({{"x", Rational(0)}, {"y", Rational(2)}}) == Rational(13));
}

TEST_CASE("exact division detects cofactors and rejects non-divisors") {
    SparsePoly x = make_var(kXY, "x");
    SparsePoly y = make_var(kXY, "y");
    SparsePoly prod = (x + y) * (x - y) * (x + SparsePoly::constant(kXY, Rational(1, 3)));
    auto quo = prod.divided_exactly_by(x + y);
    REQUIRE(quo.has_value());
    CHECK((*quo - (x - y) * (x + SparsePoly::constant(kXY, Rational(1, 3)))).is_zero());
    CHECK(!prod.divided_exactly_by(x + SparsePoly::constant(kXY, Rational(1))).has_value());
    CHECK(!(x * x + y).divided_exactly_by(x + y).has_value());
}

TEST_CASE("resultant of two quadratics in y") {
    // Res_y((y-1)(y-2), (y-3)(y-4)) over Q[x,y]; frozen from the Sylvester
    // determinant: (1-3)(1-4)(2-3)(2-4) = 12.
    SparsePoly y = make_var(kXY, "y");
    auto c = [&](long v) { return SparsePoly::constant(kXY, Rational(v)); };
    SparsePoly p = (y - c(1)) * (y - c(2));
    SparsePoly q = (y - c(3)) * (y - c(4));
    SparsePoly r = resultant_in("y", p, q);
    CHECK(r.str() == "12");

    // Shared root forces a zero resultant.
    SparsePoly q2 = (y - c(2)) * (y - c(5));
    CHECK(resultant_in("y", p, q2).is_zero());

    // Degree gate: both arguments must be genuinely quadratic in y.
    SparsePoly x = make_var(kXY, "x");
    CHECK_THROWS(resultant_in("y", y + x, q));

    // Symbolic cross-check: Res_y((y-x)(y-2x), (y-3x)(y-4x)) = 12x^4.
    SparsePoly ps = (y - x) * (y - x.scaled(Rational(2)));
    SparsePoly qs = (y - x.scaled(Rational(3))) * (y - x.scaled(Rational(4)));
    SparsePoly rs = resultant_in("y", ps, qs);
    CHECK((rs - (x * x * x * x).scaled(Rational(12))).is_zero());
}

TEST_CASE("randomized identity check separates equal from proportional") {
    SparsePoly x = make_var(kXY, "x");
    SparsePoly y = make_var(kXY, "y");
    SparsePoly p = (x + y) * (x + y);
    SparsePoly q = x * x + x * y.scaled(Rational(2)) + y * y;

    auto eq = random_identity_test(p, q, IdentityMode::equal, 24, 11);
    CHECK(eq.pass);
    CHECK(eq.informative > 0);

    auto prop = random_identity_test(x, x.scaled(Rational(2)), IdentityMode::proportional, 24, 11);
    CHECK(prop.pass);
    REQUIRE(prop.ratio.has_value());
    CHECK(*prop.ratio == Rational(1, 2));

    auto bad = random_identity_test(p, p + x, IdentityMode::equal, 24, 11);
    CHECK(!bad.pass);
    CHECK(bad.witness.has_value());
}

TEST_CASE("exponent packing holds at the advertised limits") {
    std::vector<std::string> many;
    for (int i = 0; i < 14; ++i) many.push_back("v" + std::to_string(i));
    SparsePoly prod = SparsePoly::constant(many, Rational(1));
    for (const auto& n : many) prod = prod * make_var(many, n);
    CHECK(prod.total_degree() == 14);
    CHECK(prod.term_count() == 1);

    SparsePoly x = make_var(kXY, "x");
    SparsePoly high = x.pow(255);
    CHECK(high.degree_in("x") == 255);
    CHECK_THROWS(high * x);
}
