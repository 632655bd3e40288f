#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eulertop/biquad.hpp>
#include <eulertop/euler_map.hpp>
#include <eulertop/varieties.hpp>

using namespace eulertop;

namespace {

const TopConfig kRef{Rational(1), Rational(2), Rational(3), Rational(1)};

XiPoint<Rational> xi_point(long a, long b, long c) {
    return {Rational(a), Rational(b), Rational(c)};
}

}  // namespace

TEST_CASE("xi coordinates of the reference top") {
    auto pf = xi_prefactors(kRef);
    CHECK(pf[0] == Rational(-1, 12));
    CHECK(pf[1] == Rational(1, 12));
    CHECK(pf[2] == Rational(-1, 4));

    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    auto xi = xi_from_state(kRef, s);
    CHECK(xi.xi1 == Rational(-1, 12));
    CHECK(xi.xi2 == Rational(1, 12));
    CHECK(xi.xi3 == Rational(-1, 4));

    BodyState<Rational> t{Rational(2), Rational(-1), Rational(3)};
    auto xit = xi_from_state(kRef, t);
    CHECK(xit.xi1 == pf[0] * Rational(4));
    CHECK(xit.xi2 == pf[1]);
    CHECK(xit.xi3 == pf[2] * Rational(9));
}

TEST_CASE("period-3 condition values at hand-picked points") {
    CHECK(v3_condition(xi_point(-3, 0, 0)).is_zero());
    CHECK(v3_condition(xi_point(1, 1, 1)).is_zero());
    CHECK(v3_condition(xi_point(0, 0, 0)) == Rational(-3));
}

TEST_CASE("invariant-space period condition at the reference invariants") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    auto H = invariants(kRef, s);
    auto A = a_coeffs(kRef, H);
    CHECK(A.A0 == Rational(24));
    CHECK(A.A1 == Rational(96, 13));
    CHECK(A.A2 == Rational(-48, 13));
    CHECK(A.A3 == Rational(-48, 13));
    CHECK((A.A1 + A.A2 + A.A3).is_zero());
    CHECK(gamma_top(2, 1, A) == Rational(24));
}

TEST_CASE("quadratic slice of the period-3 variety") {
    auto r = v3_sample(Rational(0), Rational(0));
    CHECK(r.exact);
    REQUIRE(r.exact_roots.has_value());
    CHECK(r.exact_roots->first == Rational(1));
    CHECK(r.exact_roots->second == Rational(-3));

    // Both roots satisfy the condition exactly.
    for (const Rational& root : {r.exact_roots->first, r.exact_roots->second}) {
        CHECK(v3_condition(XiPoint<Rational>{Rational(0), Rational(0), root}).is_zero());
    }

    // Negative discriminant: roots leave the rationals but still verify
    // numerically through the complex lift.
    auto c = v3_sample(Rational(3), Rational(2), 256);
    CHECK(!c.exact);
    XiPoint<BigComplex> p{BigComplex(Rational(3), 256), BigComplex(Rational(2), 256),
                          c.roots.first};
    CHECK(abs(v3_condition(p)) <= MpReal::parse("1e-70", 256));
}

TEST_CASE("state lift inverts the xi substitution") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    auto xi = xi_from_state(kRef, s);

    auto lift = state_from_xi(kRef, xi, {1, 1, 1}, 256);
    CHECK(lift.exact);
    REQUIRE(lift.exact_state.has_value());
    CHECK(*lift.exact_state == s);

    auto flipped = state_from_xi(kRef, xi, {-1, 1, -1}, 256);
    REQUIRE(flipped.exact_state.has_value());
    CHECK(flipped.exact_state->x1 == Rational(-1));
    CHECK(flipped.exact_state->x2 == Rational(1));
    CHECK(flipped.exact_state->x3 == Rational(-1));

    // Non-square radicand: the numeric lift still lands on the xi point.
    BodyState<Rational> t{Rational(1), Rational(1), Rational(2)};
    auto xit = xi_from_state(kRef, t);
    XiPoint<Rational> wobble{xit.xi1, xit.xi2, xit.xi3 * Rational(3)};
    auto nl = state_from_xi(kRef, wobble, {1, 1, 1}, 256);
    CHECK(!nl.exact);
    auto back = xi_from_state(kRef, nl.state);
    CHECK(abs(back.xi3 - BigComplex(wobble.xi3, 256)) <= MpReal::parse("1e-70", 256));
}

TEST_CASE("rational square root recognizes exact squares") {
    auto a = rational_sqrt(Rational(9, 4));
    REQUIRE(a.has_value());
    CHECK(*a == Rational(3, 2));
    CHECK(rational_sqrt(Rational(0)).has_value());
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(-1)).has_value());
}

TEST_CASE("the three lines sit inside every period condition") {
    std::vector<std::string> sv{"s1", "s2", "s3"};
    SparsePoly s1 = SparsePoly::variable(sv, "s1");
    SparsePoly s2 = SparsePoly::variable(sv, "s2");
    SparsePoly s3 = SparsePoly::variable(sv, "s3");
    SparsePoly one = SparsePoly::constant(sv, Rational(1));
    XiPoint<SparsePoly> p{s1, s2, s3};

    const std::array<std::map<std::string, SparsePoly>, 3> lines{
        std::map<std::string, SparsePoly>{{"s1", one}, {"s3", s2}},
        std::map<std::string, SparsePoly>{{"s2", one}, {"s3", s1}},
        std::map<std::string, SparsePoly>{{"s3", one}, {"s2", s1}},
    };
    for (const auto& line : lines) {
        CHECK(singular_quartic(p).subst(line).is_zero());
        for (int axis = 1; axis <= 3; ++axis) {
            CHECK(gamma_xi(3, axis, p).subst(line).is_zero());
            CHECK(gamma_xi(4, axis, p).subst(line).is_zero());
        }
    }

    CHECK(three_lines_member(xi_point(1, 5, 5)));
    CHECK(three_lines_member(xi_point(2, 1, 2)));
    CHECK(three_lines_member(xi_point(7, 7, 1)));
    CHECK(!three_lines_member(xi_point(1, 2, 3)));
    CHECK(!three_lines_member(xi_point(0, 0, 0)));
}

TEST_CASE("the linear period-2 conditions meet only at the singular corner") {
    auto corner = xi_point(1, 1, 1);
    for (int axis = 1; axis <= 3; ++axis) CHECK(gamma_xi(2, axis, corner).is_zero());
    CHECK(singular_quartic(corner).is_zero());
    CHECK(v3_condition(corner).is_zero());

    // Any other common zero would contradict the invertible linear system.
    auto off = xi_point(1, 1, 2);
    bool all_zero = true;
    for (int axis = 1; axis <= 3; ++axis)
        all_zero = all_zero && gamma_xi(2, axis, off).is_zero();
    CHECK(!all_zero);
}

TEST_CASE("period-3 condition is symmetric in the xi variables") {
    std::vector<std::string> sv{"s1", "s2", "s3"};
    SparsePoly s1 = SparsePoly::variable(sv, "s1");
    SparsePoly s2 = SparsePoly::variable(sv, "s2");
    SparsePoly s3 = SparsePoly::variable(sv, "s3");
    SparsePoly v = v3_condition(XiPoint<SparsePoly>{s1, s2, s3});
    CHECK(v.subst({{"s1", s2}, {"s2", s1}}) == v);
    CHECK(v.subst({{"s1", s2}, {"s2", s3}, {"s3", s1}}) == v);
}

TEST_CASE("singular quartic splits into the two denominator branches") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    auto xi = xi_from_state(kRef, s);
    Rational quartic = singular_quartic(xi);
    Rational d_minus = denominator(kRef, s);
    Rational sum = xi.xi1 + xi.xi2 + xi.xi3;
    Rational d_plus = (Rational(1) - sum) * Rational(2) - d_minus;
    CHECK(quartic == d_minus * d_plus);
    CHECK(quartic == Rational(14, 9));

    // A state on the singular set zeroes the quartic through one branch.
    BodyState<Rational> sing{Rational(2), Rational(4), Rational(0)};
    CHECK(denominator(kRef, sing).is_zero());
    CHECK(singular_quartic(xi_from_state(kRef, sing)).is_zero());
}

TEST_CASE("body-space and invariant-space period conditions agree up to scale") {
    auto v2 = substitution_consistency(2, 1, 20, 31);
    CHECK(v2.pass);
    REQUIRE(v2.constant.has_value());
    CHECK(*v2.constant == Rational(1));

    auto v3 = substitution_consistency(3, 2, 20, 32);
    CHECK(v3.pass);
    REQUIRE(v3.constant.has_value());
    CHECK(*v3.constant == Rational(1));

    // The fitted constant at the quartic level depends on the axis: -2 on
    // the first, +2 on the other two.
    auto v4 = substitution_consistency(4, 1, 20, 33);
    CHECK(v4.pass);
    REQUIRE(v4.constant.has_value());
    CHECK(*v4.constant == Rational(-2));

    auto v4b = substitution_consistency(4, 3, 20, 34);
    CHECK(v4b.pass);
    REQUIRE(v4b.constant.has_value());
    CHECK(*v4b.constant == Rational(2));
}

TEST_CASE("derived period-3 invariants solve the conic exactly") {
    auto H = rational_p3_invariants(kRef, 50);
    CHECK(H.H1 == Rational(9));
    CHECK(H.H2 == Rational(153));
    auto A = a_coeffs(kRef, H);
    CHECK(a_condition_p3(A).is_zero());
    CHECK_THROWS_AS(rational_p3_invariants(kRef, 2), NotFound);
}
