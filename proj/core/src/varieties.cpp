#include "eulertop/varieties.hpp"

#include <gmp.h>

#include <random>
#include <utility>

namespace eulertop {

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.num().get_mpz_t()) || !mpz_perfect_square_p(r.den().get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), r.den().get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

SubstitutionVerdict substitution_consistency(int n, int axis, int trials, std::uint64_t seed) {
    if (trials < 20) throw std::invalid_argument("substitution check needs at least 20 trials");
    if (n < 2 || n > 4) throw std::invalid_argument("gamma closed forms cover levels 2, 3 and 4");
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");

    std::mt19937_64 rng(seed);
    auto draw = [&rng](long lo, long hi, long max_den) {
        std::uniform_int_distribution<long> dn(lo, hi), dd(1, max_den);
        const long nu = dn(rng);
        return Rational(nu, dd(rng));
    };

    const int k = n == 2 ? 1 : n == 3 ? 4 : 6;
    SubstitutionVerdict out;
    std::optional<Rational> C;
    int done = 0;
    for (int guard = 0; done < trials && guard < trials * 200; ++guard) {
        const Rational I1 = draw(-20, 20, 6), I2 = draw(-20, 20, 6), I3 = draw(-20, 20, 6);
        if (I1.is_zero() || I2.is_zero() || I3.is_zero()) continue;
        if (I1 == I2 || I2 == I3 || I3 == I1) continue;
        const TopConfig cfg(I1, I2, I3, Rational(1));
        const BodyState<Rational> s{draw(-10, 10, 4), draw(-10, 10, 4), draw(-10, 10, 4)};
        const XiPoint<Rational> xi = xi_from_state(cfg, s);
        const Rational om = Rational(1) - xi.xi1;
        if (om.is_zero()) continue;
        InvariantPair<Rational> H;
        try {
            H = invariants(cfg, s);
        } catch (const InvariantsUndefined&) {
            continue;
        }
        const auto A = a_coeffs(cfg, H);
        const Rational gt = gamma_top(n, axis, A);
        const Rational gx = gamma_xi(n, axis, xi);
        const Rational base = A.A0 / om;
        ++done;
        if (gx.is_zero()) {
            if (!gt.is_zero()) {
                out.witness = "body-space condition vanishes but invariant-space one does not"
                              " at I=(" +
                              I1.str() + "," + I2.str() + "," + I3.str() + "), x=(" + s.x1.str() +
                              "," + s.x2.str() + "," + s.x3.str() + ")";
                return out;
            }
            continue;
        }
        const Rational cand = gt / (base.pow(k) * gx);
        ++out.informative;
        if (!C) {
            C = cand;
            continue;
        }
        if (cand != *C) {
            out.witness = "ratio " + cand.str() + " departs from fitted constant " + C->str() +
                          " at I=(" + I1.str() + "," + I2.str() + "," + I3.str() + "), x=(" +
                          s.x1.str() + "," + s.x2.str() + "," + s.x3.str() + ")";
            return out;
        }
    }
    out.pass = out.informative >= 2;
    if (!out.pass) out.witness = "too few informative samples";
    out.constant = C;
    return out;
}

V3Roots v3_sample(const Rational& xi1, const Rational& xi2, mpfr_prec_t precision) {
    const Rational p = Rational(1) - xi1 - xi2;
    const Rational disc4 = Rational(4) * (Rational(1) - xi1) * (Rational(1) - xi2);
    V3Roots out;
    if (auto r = rational_sqrt(disc4)) {
        out.exact = true;
        out.exact_roots = std::pair<Rational, Rational>{-p + *r, -p - *r};
    }
    const BigComplex rc = sqrt(BigComplex(MpReal(disc4, precision)));
    const BigComplex mp(MpReal(-p, precision));
    out.roots = {mp + rc, mp - rc};
    return out;
}

XiLift state_from_xi(const TopConfig& cfg, const XiPoint<Rational>& xi, std::array<int, 3> signs,
                     mpfr_prec_t precision) {
    const auto pf = xi_prefactors(cfg);
    const std::array<const Rational*, 3> comp{&xi.xi1, &xi.xi2, &xi.xi3};
    std::array<BigComplex, 3> num{BigComplex::zero(precision),
                                  BigComplex::zero(precision),
                                  BigComplex::zero(precision)};
    std::array<std::optional<Rational>, 3> ex;
    for (int k = 0; k < 3; ++k) {
        const Rational& x = *comp[k];
        const Rational sg(signs[k] < 0 ? -1 : 1);
        if (pf[k].is_zero()) {
            if (!x.is_zero()) throw AxiallySymmetric(k + 1);
            ex[k] = Rational(0);
            continue;  // component stays zero
        }
        const Rational rad = x / pf[k];
        if (auto rt = rational_sqrt(rad)) ex[k] = sg * *rt;
        const BigComplex root = sqrt(BigComplex(MpReal(rad, precision)));
        num[k] = signs[k] < 0 ? -root : root;
    }
    XiLift out{BodyState<BigComplex>{num[0], num[1], num[2]}};
    if (ex[0] && ex[1] && ex[2]) {
        out.exact = true;
        out.exact_state = BodyState<Rational>{*ex[0], *ex[1], *ex[2]};
    }
    return out;
}

InvariantPair<Rational> rational_p3_invariants(const TopConfig& cfg, long bound) {
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    const Rational &I1 = cfg.I1(), &I2 = cfg.I2(), &I3 = cfg.I3();
    if (I1 == I2 || I2 == I3 || I3 == I1)
        throw std::invalid_argument("distinct inertia required for the period-3 conic search");

    const Rational A0 = Rational(4) * I1 * I2 * I3;
    const Rational q1 = I2 - I3, q2 = I3 - I1, q3 = I1 - I2;

    auto usable = [&cfg](const InvariantPair<Rational>& H) {
        for (int axis = 1; axis <= 3; ++axis) {
            const BiquadParams<Rational> q = top_params(cfg, H, axis);
            if (q.a.is_zero() || q.c.is_zero() || q.d.is_zero() || q.f.is_zero()) return false;
        }
        return true;
    };

    for (long t = 1; t <= bound; ++t) {
        const Rational H1(t);
        const Rational p1 = q1 * I1 * H1, p2 = q2 * I2 * H1, p3 = q3 * I3 * H1;
        // a_condition_p3 as a quadratic in H2
        const Rational A = q1 * q1;
        const Rational B = Rational(-2) * p1 * q1 + Rational(2) * A0 * (q3 - q2);
        const Rational Cc =
            p1 * p1 + Rational(2) * A0 * (p2 - p3) - Rational(3) * A0 * A0;
        const Rational disc = B * B - Rational(4) * A * Cc;
        if (disc.sign() < 0) continue;
        const auto root = rational_sqrt(disc);
        if (!root) continue;
        const Rational twoA = Rational(2) * A;
        Rational lo = (-B - *root) / twoA, hi = (-B + *root) / twoA;
        if (hi < lo) std::swap(lo, hi);
        for (const Rational& H2 : {lo, hi}) {
            const InvariantPair<Rational> H{H1, H2};
            if (!a_condition_p3(a_coeffs(cfg, H)).is_zero()) continue;
            if (usable(H)) return H;
        }
    }
    throw NotFound("no usable rational invariant pair with integer H1 <= " +
                   std::to_string(bound));
}

}  // namespace eulertop
