#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "eulertop/bigfloat.hpp"
#include "eulertop/biquad.hpp"
#include "eulertop/euler_map.hpp"
#include "eulertop/poly.hpp"
#include "eulertop/rational.hpp"

namespace eulertop {

struct NotFound : std::runtime_error {
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

template <typename E>
struct XiPoint {
    E xi1, xi2, xi3;
};

inline SparsePoly lift_rational(const Rational& r, const SparsePoly& like) {
    return SparsePoly::constant(like.vars(), r);
}

// delta^2 (I3-I1)(I1-I2)/(4 I2 I3) and cyclic. In these variables the map's
// denominator, the period conditions and the singular set all become
// polynomial statements independent of the inertia scale.
inline std::array<Rational, 3> xi_prefactors(const TopConfig& cfg) {
    const Rational &I1 = cfg.I1(), &I2 = cfg.I2(), &I3 = cfg.I3();
    const Rational d2 = cfg.delta() * cfg.delta();
    return {d2 * (I3 - I1) * (I1 - I2) / (Rational(4) * I2 * I3),
            d2 * (I1 - I2) * (I2 - I3) / (Rational(4) * I3 * I1),
            d2 * (I2 - I3) * (I3 - I1) / (Rational(4) * I1 * I2)};
}

// xi_k = alpha_j alpha_k x_k^2 exactly, for every step size.
template <typename S>
XiPoint<S> xi_from_state(const TopConfig& cfg, const BodyState<S>& s) {
    const auto pf = xi_prefactors(cfg);
    return {lift_rational(pf[0], s.x1) * s.x1 * s.x1, lift_rational(pf[1], s.x2) * s.x2 * s.x2,
            lift_rational(pf[2], s.x3) * s.x3 * s.x3};
}

// (1 + xi1 + xi2 + xi3)^2 - 4 (1 + xi1 xi2 + xi2 xi3 + xi3 xi1).
// Zero exactly on the invariant variety of period-3 points.
template <typename E>
E v3_condition(const XiPoint<E>& p) {
    const E one = lift_rational(Rational(1), p.xi1);
    const E s = one + p.xi1 + p.xi2 + p.xi3;
    const E e2 = one + p.xi1 * p.xi2 + p.xi2 * p.xi3 + p.xi3 * p.xi1;
    return s * s - (e2 + e2 + e2 + e2);
}

// A1^2 + 2 A0 (A2 - A3) - 3 A0^2, the invariant-space form of the same
// period-3 condition.
template <typename E>
E a_condition_p3(const ACoeffs<E>& A) {
    return A.A1 * A.A1 + entry_scale(A.A0 * (A.A2 - A.A3), Rational(2)) -
           entry_scale(A.A0 * A.A0, Rational(3));
}

// Period conditions in invariant space, per axis, levels 2..4.
template <typename E>
E gamma_top(int n, int axis, const ACoeffs<E>& A) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    const E &A0 = A.A0, &A1 = A.A1, &A2 = A.A2, &A3 = A.A3;
    switch (n) {
        case 2:
            if (axis == 1) return A0 - A2 + A3;
            if (axis == 2) return A0 - A2 - A3;
            return A0 + A2 + A3;
        case 3: {
            const E common = a_condition_p3(A);
            if (axis == 1) {
                const E s = A1 + A0;
                return common * (s * s + entry_scale(A0 * A3, Rational(4)));
            }
            if (axis == 2) {
                const E s = A1 + A0;
                return common * (s * s + entry_scale(A3 * A1, Rational(4)));
            }
            const E s = A1 - A0;
            return common * (s * s + entry_scale(A1 * A2, Rational(4)));
        }
        case 4: {
            if (axis == 1) {
                const E s = A1 - A0;
                const E s2 = s * s;
                const E big = s2 * s2 - entry_scale(A2 * (A0 + A3) * (A1 * A1 + A0 * A0),
                                                    Rational(8));
                return entry_scale(s * (A0 - A2 - A3) * big, Rational(2));
            }
            if (axis == 2) {
                const E s = A1 + A0;
                const E s2 = s * s;
                const E big = s2 * s2 + entry_scale(A0 * A1 * A3 * (A0 - A2), Rational(16));
                return entry_scale((A0 - A1) * (A0 - A2 + A3) * big, Rational(2));
            }
            const E s = A1 - A0;
            const E s2 = s * s;
            const E big = s2 * s2 + entry_scale(A0 * A1 * A2 * (A0 + A3), Rational(16));
            return entry_scale((A0 + A1) * (A0 - A2 + A3) * big, Rational(2));
        }
        default:
            throw std::invalid_argument("gamma closed forms cover levels 2, 3 and 4");
    }
}

// The same conditions in body space, levels 2..4. These are the published
// forms after substituting the invariants; nonzero overall prefactors were
// dropped in that substitution (see substitution_consistency).
template <typename E>
E gamma_xi(int n, int axis, const XiPoint<E>& p) {
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    const E one = entry_like(Rational(1), p.xi1);
    const E &x1 = p.xi1, &x2 = p.xi2, &x3 = p.xi3;
    const E lin1 = one + x1 - x2 - x3;
    const E lin2 = one - x1 + x2 - x3;
    const E lin3 = one - x1 - x2 + x3;
    switch (n) {
        case 2:
            return axis == 1 ? lin1 : axis == 2 ? lin2 : lin3;
        case 3: {
            const E common = v3_condition(p);
            if (axis == 1)
                return common *
                       (lin1 * lin1 -
                        entry_scale(x1 * x1 - x1 * x2 + x2 * x3 - x3 * x1, Rational(4)));
            if (axis == 2)
                return common *
                       (lin2 * lin2 -
                        entry_scale(x2 * x2 - x1 * x2 - x2 * x3 + x3 * x1, Rational(4)));
            return common * (lin3 * lin3 -
                             entry_scale(x3 * x3 + x1 * x2 - x2 * x3 - x3 * x1, Rational(4)));
        }
        case 4: {
            const E two = entry_like(Rational(2), p.xi1);
            auto form = [&](const E& xa, const E& xb, const E& xc, const E& lin) {
                const E da = xa - one;       // (xi_a - 1)
                const E db = xb - xc;        // (xi_b - xi_c)
                const E da2 = da * da, db2 = db * db;
                const E first = da2 - db2;   // (1-xi_a)^2 - (xi_b-xi_c)^2
                const E wide = two + xa + xa - xb - xc;
                const E second = da2 * (entry_scale(lin * lin, Rational(2)) - da2) +
                                 db2 * (wide * wide + entry_scale(xb * xc, Rational(4)) -
                                        entry_scale(xa, Rational(8)));
                return first * second;
            };
            if (axis == 1) return form(x1, x2, x3, lin1);
            if (axis == 2) return form(x2, x3, x1, lin2);
            return form(x3, x1, x2, lin3);
        }
        default:
            throw std::invalid_argument("gamma closed forms cover levels 2, 3 and 4");
    }
}

// true iff xi lies on one of the three lines
// {xi1=1, xi2=xi3} u {xi2=1, xi3=xi1} u {xi3=1, xi1=xi2}.
template <typename E>
bool three_lines_member(const XiPoint<E>& p) {
    const E one = lift_rational(Rational(1), p.xi1);
    return (p.xi1 == one && p.xi2 == p.xi3) || (p.xi2 == one && p.xi3 == p.xi1) ||
           (p.xi3 == one && p.xi1 == p.xi2);
}

// (1 - xi1 - xi2 - xi3)^2 - 4 xi1 xi2 xi3: the product of the two
// denominator branches, zero exactly on the singular set of the map.
template <typename E>
E singular_quartic(const XiPoint<E>& p) {
    const E one = lift_rational(Rational(1), p.xi1);
    const E s = one - p.xi1 - p.xi2 - p.xi3;
    const E prod = p.xi1 * p.xi2 * p.xi3;
    return s * s - (prod + prod + prod + prod);
}

// r = root^2 with rational root >= 0? GMP perfect-square tests on the
// canonical numerator and denominator.
std::optional<Rational> rational_sqrt(const Rational& r);

struct SubstitutionVerdict {
    bool pass = false;
    int informative = 0;               // trials contributing a ratio constraint
    std::optional<Rational> constant;  // fitted C in gt = C * (A0/(1-xi1))^k * gx
    std::string witness;               // first failing sample, when pass = false
};

// Random-sample check that the invariant-space and body-space period
// conditions agree up to the substitution prefactor (A0/(1-xi1))^k with
// k = 1, 4, 6 for n = 2, 3, 4, times one global constant.
SubstitutionVerdict substitution_consistency(int n, int axis, int trials, std::uint64_t seed);

struct V3Roots {
    bool exact = false;
    std::optional<std::pair<Rational, Rational>> exact_roots;  // plus branch first
    std::pair<BigComplex, BigComplex> roots;                   // plus branch first
};

// Solves the period-3 variety condition for xi3 given (xi1, xi2):
// xi3^2 + 2(1-xi1-xi2) xi3 + ((1+xi1+xi2)^2 - 4 - 4 xi1 xi2) = 0.
// Discriminant/4 = 4(1-xi1)(1-xi2).
V3Roots v3_sample(const Rational& xi1, const Rational& xi2,
                  mpfr_prec_t precision = MpReal::kDefaultPrecision);

struct XiLift {
    BodyState<BigComplex> state;
    bool exact = false;
    std::optional<BodyState<Rational>> exact_state;  // when all radicands are rational squares
};

// Inverts the xi substitution: x_k = sign_k sqrt(xi_k / prefactor_k).
// Complex components appear when a radicand is negative. A zero prefactor
// with nonzero xi has no preimage (axially symmetric inertia).
XiLift state_from_xi(const TopConfig& cfg, const XiPoint<Rational>& xi, std::array<int, 3> signs,
                     mpfr_prec_t precision = MpReal::kDefaultPrecision);

// Smallest integer H1 in [1, bound] admitting a rational H2 on the
// period-3 conic (square discriminant), filtered so the level recursion's
// divisor entries a, c, d, f stay nonzero on all three axes. Throws
// NotFound when the scan is exhausted.
InvariantPair<Rational> rational_p3_invariants(const TopConfig& cfg, long bound);

}  // namespace eulertop
