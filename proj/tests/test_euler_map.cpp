#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <eulertop/euler_map.hpp>

#include <random>

using namespace eulertop;

namespace {

const TopConfig kRef{Rational(1), Rational(2), Rational(3), Rational(1)};

Rational draw_rational(std::mt19937_64& rng, long bound, long den_max) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, den_max);
    return Rational(num(rng), den(rng));
}

Rational draw_nonzero(std::mt19937_64& rng, long bound, long den_max) {
    for (;;) {
        Rational r = draw_rational(rng, bound, den_max);
        if (!r.is_zero()) return r;
    }
}

BodyState<Rational> draw_state(std::mt19937_64& rng) {
    return {draw_rational(rng, 8, 4), draw_rational(rng, 8, 4), draw_rational(rng, 8, 4)};
}

}  // namespace

TEST_CASE("one step of the reference configuration, frozen by hand") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    CHECK(denominator(kRef, s) == Rational(7, 6));

    BodyState<Rational> X = euler_step(kRef, s);
    CHECK(X.x1 == Rational(-1, 14));
    CHECK(X.x2 == Rational(19, 14));
    CHECK(X.x3 == Rational(11, 14));

    auto H = invariants(kRef, s);
    CHECK(H.H1 == Rational(72, 13));
    CHECK(H.H2 == Rational(168, 13));
}

TEST_CASE("explicit map agrees with the linear-system oracle") {
    std::mt19937_64 rng(1234);
    int checked = 0;
    while (checked < 100) {
        TopConfig cfg{draw_nonzero(rng, 10, 3), draw_nonzero(rng, 10, 3),
                      draw_nonzero(rng, 10, 3), draw_nonzero(rng, 6, 2)};
        BodyState<Rational> s = draw_state(rng);
        try {
            BodyState<Rational> a = euler_step(cfg, s);
            BodyState<Rational> b = euler_step_implicit(cfg, s);
            CHECK(a == b);
            ++checked;
        } catch (const SingularPoint&) {
        } catch (const SingularSystem&) {
        }
    }
}

TEST_CASE("both invariants are conserved along orbits") {
    std::mt19937_64 rng(77);
    int checked = 0;
    while (checked < 25) {
        TopConfig cfg{draw_nonzero(rng, 10, 3), draw_nonzero(rng, 10, 3),
                      draw_nonzero(rng, 10, 3), draw_nonzero(rng, 4, 2)};
        BodyState<Rational> s = draw_state(rng);
        try {
            auto H0 = invariants(cfg, s);
            auto path = orbit(cfg, s, 6);
            for (const auto& p : path) {
                auto H = invariants(cfg, p);
                CHECK(H.H1 == H0.H1);
                CHECK(H.H2 == H0.H2);
            }
            ++checked;
        } catch (const SingularPoint&) {
        } catch (const InvariantsUndefined&) {
        }
    }
}

TEST_CASE("inverse step undoes the map exactly") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    BodyState<Rational> X = euler_step(kRef, s);
    CHECK(euler_inverse(kRef, X) == s);

    std::mt19937_64 rng(9);
    int checked = 0;
    while (checked < 50) {
        BodyState<Rational> t = draw_state(rng);
        try {
            CHECK(euler_inverse(kRef, euler_step(kRef, t)) == t);
            ++checked;
        } catch (const SingularPoint&) {
        }
    }
}

TEST_CASE("step difference approaches the rigid body vector field") {
    // ((X - x)/delta) - f(x) shrinks linearly in delta; f is the classical
    // right-hand side fi = (Ij - Ik) xj xk / Ii.
    BodyState<Rational> s{Rational(1), Rational(2, 3), Rational(-1, 2)};
    const Rational I1(1), I2(2), I3(3);
    auto f = [&](const BodyState<Rational>& x) {
        return BodyState<Rational>{(I2 - I3) * x.x2 * x.x3 / I1,
                                   (I3 - I1) * x.x3 * x.x1 / I2,
                                   (I1 - I2) * x.x1 * x.x2 / I3};
    };
    auto err = [&](const Rational& delta) {
        TopConfig cfg{I1, I2, I3, delta};
        BodyState<Rational> X = euler_step(cfg, s);
        BodyState<Rational> rate{(X.x1 - s.x1) / delta, (X.x2 - s.x2) / delta,
                                 (X.x3 - s.x3) / delta};
        return max_abs_diff(rate, f(s));
    };
    Rational e2 = err(Rational(1, 100));
    Rational e3 = err(Rational(1, 1000));
    Rational e4 = err(Rational(1, 10000));
    Rational r23 = e2 / e3;
    Rational r34 = e3 / e4;
    CHECK(r23 > Rational(8));
    CHECK(r23 < Rational(12));
    CHECK(r34 > Rational(19, 2));
    CHECK(r34 < Rational(21, 2));
}

TEST_CASE("coordinate axes are fixed") {
    BodyState<Rational> a{Rational(5, 2), Rational(0), Rational(0)};
    BodyState<Rational> b{Rational(0), Rational(-3), Rational(0)};
    BodyState<Rational> c{Rational(0), Rational(0), Rational(7)};
    for (const auto& s : {a, b, c}) {
        CHECK(is_fixed_point(s));
        CHECK(euler_step(kRef, s) == s);
    }
    CHECK(!is_fixed_point(BodyState<Rational>{Rational(1), Rational(1), Rational(0)}));
}

TEST_CASE("fully symmetric body does not move") {
    TopConfig cfg{Rational(2), Rational(2), Rational(2), Rational(1)};
    CHECK(cfg.is_fully_symmetric());
    BodyState<Rational> s{Rational(3), Rational(-1), Rational(1, 2)};
    CHECK(euler_step(cfg, s) == s);
}

TEST_CASE("vanishing denominator raises with the step index") {
    BodyState<Rational> s{Rational(2), Rational(4), Rational(0)};
    CHECK(denominator(kRef, s).is_zero());
    CHECK_THROWS_AS(euler_step(kRef, s), SingularPoint);
    try {
        euler_step(kRef, s, 3);
        FAIL("expected SingularPoint");
    } catch (const SingularPoint& e) {
        CHECK(e.step == 3);
    }
}

TEST_CASE("invariants are undefined where their denominator vanishes") {
    TopConfig cfg{Rational(3), Rational(2), Rational(6), Rational(1)};
    BodyState<Rational> s{Rational(4), Rational(1), Rational(1)};
    CHECK_THROWS_AS(invariants(cfg, s), InvariantsUndefined);
}

TEST_CASE("orbit returns the start plus n images") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    auto path = orbit(kRef, s, 3);
    REQUIRE(path.size() == 4);
    CHECK(path[0] == s);
    CHECK(path[1] == euler_step(kRef, s));
    CHECK(path[3] == euler_step(kRef, path[2]));
    CHECK_THROWS(orbit(kRef, s, -1));
}

TEST_CASE("numeric evaluation tracks the rational orbit") {
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    mpfr_prec_t prec = 256;
    BodyState<MpReal> sm{MpReal(s.x1, prec), MpReal(s.x2, prec), MpReal(s.x3, prec)};
    auto exact = orbit(kRef, s, 5);
    auto approx = orbit(kRef, sm, 5);
    MpReal worst = MpReal::zero(prec);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        worst = max(worst, abs(approx[i].x1 - MpReal(exact[i].x1, prec)));
        worst = max(worst, abs(approx[i].x2 - MpReal(exact[i].x2, prec)));
        worst = max(worst, abs(approx[i].x3 - MpReal(exact[i].x3, prec)));
    }
    CHECK(worst <= MpReal::parse("1e-70", prec));
}
