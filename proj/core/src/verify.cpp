#include "eulertop/verify.hpp"

#include <exception>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "eulertop/axisym.hpp"
#include "eulertop/biquad.hpp"
#include "eulertop/euler_map.hpp"
#include "eulertop/perisearch.hpp"
#include "eulertop/poly.hpp"
#include "eulertop/varieties.hpp"

namespace eulertop {
namespace {

struct Draw {
    std::mt19937_64 rng;
    explicit Draw(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

    Rational rational(long bound, long den_max, bool nonzero = false) {
        for (;;) {
            Rational r(integer(-bound, bound), integer(1, den_max));
            if (!nonzero || !r.is_zero()) return r;
        }
    }

    TopConfig config(bool distinct_inertia) {
        for (;;) {
            const Rational i1 = rational(10, 4, true), i2 = rational(10, 4, true),
                           i3 = rational(10, 4, true);
            if (distinct_inertia && (i1 == i2 || i2 == i3 || i1 == i3)) continue;
            return TopConfig(i1, i2, i3, rational(6, 3, true));
        }
    }

    BodyState<Rational> state(long bound = 8, long den_max = 4) {
        return {rational(bound, den_max), rational(bound, den_max), rational(bound, den_max)};
    }
};

template <typename Fn>
CriterionResult run(int id, const char* name, Fn body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    try {
        body(r);
    } catch (const std::exception& ex) {
        r.pass = false;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += std::string("exception: ") + ex.what();
    }
    return r;
}

const SparsePoly* find_wedge(const CorrelationReport<SparsePoly>& rep, char g, char h) {
    for (const auto& w : rep.hat_wedges)
        if (w.first.first == g && w.first.second == h) return &w.second;
    return nullptr;
}

}  // namespace

CriterionResult verify_invariant_conservation(const VerifyOptions& opt) {
    return run(1, "invariant-conservation", [&](CriterionResult& r) {
        Draw draw(opt.seed * 1000 + 1);
        int done = 0, attempts = 0;
        while (done < opt.conservation_trials) {
            if (++attempts > opt.conservation_trials * 50) {
                r.detail = "sampling stalled";
                return;
            }
            const TopConfig cfg = draw.config(false);
            const BodyState<Rational> s = draw.state();
            try {
                const auto H0 = invariants(cfg, s);
                BodyState<Rational> cur = s;
                for (int k = 0; k < opt.conservation_steps; ++k) {
                    cur = euler_step(cfg, cur, k);
                    if (invariants(cfg, cur) != H0) {
                        r.detail = "invariant drift on orbit " + std::to_string(done) +
                                   " at step " + std::to_string(k + 1);
                        return;
                    }
                    ++r.work;
                }
            } catch (const SingularPoint&) {
                continue;
            } catch (const InvariantsUndefined&) {
                continue;
            }
            ++done;
        }
        r.pass = true;
        r.detail = std::to_string(done) + " random rational orbits, " +
                   std::to_string(opt.conservation_steps) +
                   " steps each: both integrals bit-identical throughout";
    });
}

CriterionResult verify_oracle_equivalence(const VerifyOptions& opt) {
    return run(2, "oracle-equivalence", [&](CriterionResult& r) {
        Draw draw(opt.seed * 1000 + 2);
        int done = 0, attempts = 0;
        while (done < opt.oracle_trials) {
            if (++attempts > opt.oracle_trials * 50) {
                r.detail = "sampling stalled";
                return;
            }
            const TopConfig cfg = draw.config(false);
            const BodyState<Rational> s = draw.state();
            try {
                const auto X = euler_step(cfg, s);
                if (X != euler_step_implicit(cfg, s)) {
                    r.detail = "explicit and linear-solve updates disagree";
                    return;
                }
                ++r.work;
                if (euler_inverse(cfg, X) != s) {
                    r.detail = "inverse of forward is not the identity";
                    return;
                }
                ++r.work;
            } catch (const SingularPoint&) {
                continue;
            } catch (const SingularSystem&) {
                continue;
            }
            ++done;
        }
        r.pass = true;
        r.detail = std::to_string(done) +
                   " random rational states: explicit update = linear-system solve, "
                   "inverse(forward) = identity, all exact";
    });
}

namespace {

// Shared sampler for the per-axis relation checks: a random distinct-inertia
// configuration with defined invariants and a nonsingular short orbit.
struct OrbitSample {
    TopConfig cfg;
    BiquadParams<Rational> q[3];
    std::vector<BodyState<Rational>> states;
};

bool next_orbit_sample(Draw& draw, int steps, OrbitSample& out) {
    for (int guard = 0; guard < 200; ++guard) {
        const TopConfig cfg = draw.config(true);
        const BodyState<Rational> s = draw.state();
        try {
            const auto H = invariants(cfg, s);
            OrbitSample sample{cfg, {top_params(cfg, H, 1), top_params(cfg, H, 2),
                                     top_params(cfg, H, 3)},
                               orbit(cfg, s, steps)};
            out = std::move(sample);
            return true;
        } catch (const SingularPoint&) {
        } catch (const InvariantsUndefined&) {
        } catch (const AxiallySymmetric&) {
        }
    }
    return false;
}

Rational axis_coord(const BodyState<Rational>& s, int axis) {
    return axis == 0 ? s.x1 : axis == 1 ? s.x2 : s.x3;
}

}  // namespace

CriterionResult verify_biquadratic_reduction(const VerifyOptions& opt) {
    return run(3, "biquadratic-reduction", [&](CriterionResult& r) {
        Draw draw(opt.seed * 1000 + 3);
        for (int orb = 0; orb < opt.reduction_orbits; ++orb) {
            OrbitSample sm{TopConfig(Rational(1), Rational(2), Rational(3)), {}, {}};
            if (!next_orbit_sample(draw, opt.reduction_steps, sm)) {
                r.detail = "sampling stalled";
                return;
            }
            for (std::size_t k = 0; k + 1 < sm.states.size(); ++k)
                for (int ax = 0; ax < 3; ++ax) {
                    if (!s_eval(sm.q[ax], axis_coord(sm.states[k + 1], ax),
                                axis_coord(sm.states[k], ax))
                             .is_zero()) {
                        r.detail = "axis " + std::to_string(ax + 1) +
                                   " relation nonzero on orbit " + std::to_string(orb);
                        return;
                    }
                    ++r.work;
                }
        }
        r.pass = true;
        r.detail = std::to_string(opt.reduction_orbits) + " random orbits x " +
                   std::to_string(opt.reduction_steps) +
                   " steps x 3 axes: one-step relation vanishes exactly";
    });
}

CriterionResult verify_two_step_relation(const VerifyOptions& opt) {
    return run(4, "two-step-relation", [&](CriterionResult& r) {
        // (a) the closed-form two-step parameters annihilate (x, X^(2)) pairs.
        Draw draw(opt.seed * 1000 + 4);
        for (int orb = 0; orb < opt.reduction_orbits; ++orb) {
            OrbitSample sm{TopConfig(Rational(1), Rational(2), Rational(3)), {}, {}};
            if (!next_orbit_sample(draw, opt.reduction_steps, sm)) {
                r.detail = "sampling stalled";
                return;
            }
            const BiquadParams<Rational> q2[3] = {q_second(sm.q[0]), q_second(sm.q[1]),
                                                  q_second(sm.q[2])};
            for (std::size_t k = 0; k + 2 < sm.states.size(); ++k)
                for (int ax = 0; ax < 3; ++ax) {
                    if (!s_eval(q2[ax], axis_coord(sm.states[k + 2], ax),
                                axis_coord(sm.states[k], ax))
                             .is_zero()) {
                        r.detail = "two-step relation nonzero on axis " + std::to_string(ax + 1);
                        return;
                    }
                    ++r.work;
                }
        }

        // (b) composing the generic relation with itself: the y-resultant of
        // S(X,y;q) and S(y,x;q) factors through (X-x)^2 S(X,x;q2).
        const std::vector<std::string> vars = {"X", "a", "b", "c", "d", "e", "f", "x", "y"};
        const auto q = generic_params(vars);
        const auto Xv = SparsePoly::variable(vars, "X");
        const auto xv = SparsePoly::variable(vars, "x");
        const auto yv = SparsePoly::variable(vars, "y");
        const SparsePoly res = resultant_in("y", s_eval(q, Xv, yv), s_eval(q, yv, xv));
        const SparsePoly target = (Xv - xv) * (Xv - xv) * s_eval(q_second(q), Xv, xv);
        const auto quot = res.divided_exactly_by(target);
        ++r.work;
        if (!quot || quot->is_zero()) {
            r.detail = "resultant of the composed generic relations is not a multiple of "
                       "(X-x)^2 times the two-step relation";
            return;
        }
        r.pass = true;
        r.detail = "orbit checks exact on all axes; symbolic resultant = (X-x)^2 * S2 * "
                   "cofactor of degree " +
                   std::to_string(quot->total_degree());
    });
}

CriterionResult verify_gamma3_factorization(const VerifyOptions& opt) {
    return run(5, "gamma3-factorization", [&](CriterionResult& r) {
        (void)opt;
        const auto q = generic_params();
        const auto q2 = q_second(q);
        const auto g3 = gamma_general(3, q);
        const auto rep = check_full_correlation(q, q2, g3);
        r.work += 15;
        if (!rep.fully_correlated) {
            r.detail = "level-2 wedge fails to factor: " + rep.note;
            return;
        }

        const std::vector<std::string> vars = {"a", "b", "c", "d", "e", "f"};
        auto V = [&](const char* n) { return SparsePoly::variable(vars, n); };
        const SparsePoly A = V("a"), B = V("b"), C = V("c"), D = V("d"), E = V("e"), F = V("f");
        const struct {
            char g, h;
            SparsePoly want;
        } displayed[4] = {
            {'a', 'b', (A * A * E).scaled(Rational(2)) - A * B * D + B * B * B},
            {'a', 'c', A * A * F + A * C * C - A * C * D + B * B * C},
            // The (b,c) sign is forced by the composition resultant; a
            // commonly quoted form negates this cofactor.
            {'b', 'c', A * B * F - (A * C * E).scaled(Rational(2)) + B * C * C},
            {'e', 'f', E * D * F - E * E * E - (B * F * F).scaled(Rational(2))},
        };
        for (const auto& row : displayed) {
            const SparsePoly* got = find_wedge(rep, row.g, row.h);
            ++r.work;
            if (!got || *got != row.want) {
                r.detail = std::string("cofactor of (") + row.g + "," + row.h +
                           ") differs from the closed form";
                return;
            }
        }
        r.pass = true;
        r.detail = "all 15 level-2 wedges divisible by the degree-2 common factor; "
                   "4 displayed cofactors match verbatim";
    });
}

CriterionResult verify_higher_correlations(const VerifyOptions& opt) {
    return run(6, "gamma45-correlation", [&](CriterionResult& r) {
        const auto q = generic_params();
        const auto q2 = q_second(q);
        const auto q3 = q_next(q, q, q2, 2);
        const auto g4 = gamma_general(4, q);
        const auto rep3 = check_full_correlation(q, q3, g4);
        r.work += 15;
        if (!rep3.fully_correlated) {
            r.detail = "level-3 wedge fails the degree-4 factor: " + rep3.note;
            return;
        }

        if (!opt.g5_randomized) {
            const auto q4 = q_next(q, q2, q3, 3);
            const auto g5 = gamma_general(5, q);
            const auto rep4 = check_full_correlation(q, q4, g5);
            r.work += 15;
            if (!rep4.fully_correlated) {
                r.detail = "level-4 wedge fails the degree-6 factor: " + rep4.note;
                return;
            }
            r.pass = true;
            r.detail = "exact symbolic division: 15 level-3 wedges / degree-4 factor and "
                       "15 level-4 wedges / degree-6 factor all exact";
            return;
        }

        // Randomized alternative: restrict every entry to a random rational
        // line g_i(t) and check the univariate divisibility. A symbolic
        // failure survives restriction to a generic line, so independent
        // passing lines bound the failure probability by (degree/|range|)^N.
        Draw draw(opt.seed * 1000 + 6);
        const std::vector<std::string> tv = {"t"};
        const auto t = SparsePoly::variable(tv, "t");
        int good = 0, attempts = 0;
        while (good < opt.g5_lines) {
            if (++attempts > opt.g5_lines * 20) {
                r.detail = "line sampling stalled";
                return;
            }
            auto line_entry = [&]() {
                const long u0 = draw.integer(-9, 9);
                const long u1 = draw.integer(1, 9) * (draw.integer(0, 1) ? 1 : -1);
                return SparsePoly::constant(tv, Rational(u0)) + t.scaled(Rational(u1));
            };
            const BiquadParams<SparsePoly> ql{line_entry(), line_entry(), line_entry(),
                                              line_entry(), line_entry(), line_entry()};
            try {
                const auto q2l = q_second(ql);
                const auto q3l = q_next(ql, ql, q2l, 2);
                const auto q4l = q_next(ql, q2l, q3l, 3);
                const auto g5l = gamma_general(5, ql);
                if (g5l.is_zero()) continue;
                for (int i = 0; i < 6; ++i)
                    for (int j = i + 1; j < 6; ++j) {
                        const auto w = wedge(kEntryNames[i], kEntryNames[j], ql, q4l);
                        ++r.work;
                        if (!w.divided_exactly_by(g5l)) {
                            r.detail = std::string("restricted wedge (") + kEntryNames[i] +
                                       "," + kEntryNames[j] +
                                       ") not divisible on line " + std::to_string(good);
                            return;
                        }
                    }
            } catch (const ZeroDivisor&) {
                continue;  // degenerate line; the recursion's divisor vanished
            }
            ++good;
        }
        r.pass = true;
        r.detail = "level-3 symbolic exact; level-4 via " + std::to_string(good) +
                   " random line restrictions, all univariate divisions exact";
    });
}

CriterionResult verify_period3_collapse(const VerifyOptions& opt) {
    return run(7, "period3-collapse", [&](CriterionResult& r) {
        const TopConfig cfg(Rational(1), Rational(2), Rational(3));
        const auto H = rational_p3_invariants(cfg, opt.p3_search_bound);
        ++r.work;
        if (!a_condition_p3(a_coeffs(cfg, H)).is_zero()) {
            r.detail = "returned invariants miss the period-3 conic";
            return;
        }
        const auto q = top_params(cfg, H, 1);
        if (!gamma_general(3, q).is_zero()) {
            r.detail = "degree-2 level factor nonzero at the found invariants";
            return;
        }
        const auto q3 = q_next(q, q, q_second(q), 2);
        r.work += 6;
        if (!q3.a.is_zero() || !q3.b.is_zero() || !q3.d.is_zero() || !q3.e.is_zero() ||
            !q3.f.is_zero() || q3.c.is_zero()) {
            r.detail = "three-step parameters did not collapse onto the (Q-x)^2 line";
            return;
        }

        const std::vector<std::string> vars = {"Q", "x"};
        const auto Qv = SparsePoly::variable(vars, "Q");
        const auto xv = SparsePoly::variable(vars, "x");
        auto lift = [&](const Rational& v) { return SparsePoly::constant(vars, v); };
        const BiquadParams<SparsePoly> qs{lift(q3.a), lift(q3.b), lift(q3.c),
                                          lift(q3.d), lift(q3.e), lift(q3.f)};
        const SparsePoly S = s_eval(qs, Qv, xv);
        ++r.work;
        if (S != ((Qv - xv) * (Qv - xv)).scaled(q3.c)) {
            r.detail = "expanded three-step relation is not proportional to (Q-x)^2";
            return;
        }
        if (S.coefficient({1, 1}) != Rational(-2) * q3.c) {
            r.detail = "Qx monomial coefficient is not -2 times the (Q-x)^2 coefficient";
            return;
        }
        r.pass = true;
        r.detail = "invariants (" + H.H1.str() + ", " + H.H2.str() +
                   "): three-step relation collapses to c (Q-x)^2 with c = " + q3.c.str() +
                   "; Qx monomial coefficient equals -2c";
    });
}

CriterionResult verify_period3_orbits(const VerifyOptions& opt) {
    return run(8, "period3-orbits", [&](CriterionResult& r) {
        Draw draw(opt.seed * 1000 + 8);
        const TopConfig cfg(Rational(1), Rational(2), Rational(3));
        const auto pf = xi_prefactors(cfg);
        const mpfr_prec_t prec = opt.precision;
        const MpReal ok = MpReal::parse("1e-40", prec);
        const MpReal min_move = MpReal::parse("1e-3", prec);
        const MpReal den_floor = MpReal::parse("1e-8", prec);
        const MpReal membership = MpReal::parse("1e-60", prec);

        int done = 0, skipped = 0, attempts = 0;
        while (done < opt.variety_orbit_samples) {
            if (++attempts > 100 * opt.variety_orbit_samples) {
                r.detail = "sampling stalled, " + std::to_string(skipped) + " skips";
                return;
            }
            const Rational xi1 = draw.rational(3, 3);
            const Rational xi2 = draw.rational(3, 3);
            const auto roots = v3_sample(xi1, xi2, prec);
            const BigComplex& xi3 = roots.roots.first;
            const BodyState<BigComplex> s{sqrt(BigComplex(xi1 / pf[0], prec)),
                                          sqrt(BigComplex(xi2 / pf[1], prec)),
                                          sqrt(xi3 / BigComplex(pf[2], prec))};
            try {
                if (abs(v3_condition(xi_from_state(cfg, s))) > membership) {
                    ++skipped;
                    continue;
                }
                BodyState<BigComplex> cur = s;
                bool near = false;
                for (int k = 0; k < 3 && !near; ++k) {
                    if (abs(denominator(cfg, cur)) < den_floor) near = true;
                    else cur = euler_step(cfg, cur, k);
                }
                if (near) {
                    ++skipped;
                    continue;
                }
                if (!(period_residual(cfg, s, 1) >= min_move)) {
                    ++skipped;  // landed on (or next to) a rest point; resample
                    continue;
                }
                const MpReal r3 = period_residual(cfg, s, 3);
                r.work += 2;
                if (!(r3 <= ok)) {
                    r.detail = "three-step return residual " + r3.str(3) + " on sample " +
                               std::to_string(done);
                    return;
                }
            } catch (const SingularPoint&) {
                ++skipped;
                continue;
            }
            ++done;
        }
        r.pass = true;
        r.detail = std::to_string(done) +
                   " variety samples return after exactly 3 steps (residual <= 1e-40, "
                   "one-step displacement >= 1e-3); " +
                   std::to_string(skipped) + " degenerate draws resampled";
    });
}

CriterionResult verify_condition_form_consistency(const VerifyOptions& opt) {
    return run(9, "condition-form-consistency", [&](CriterionResult& r) {
        std::string consts;
        int combo = 0;
        for (int n = 2; n <= 4; ++n)
            for (int axis = 1; axis <= 3; ++axis) {
                const auto v = substitution_consistency(n, axis, opt.substitution_trials,
                                                        opt.seed * 1000 + 9 + combo);
                ++combo;
                r.work += v.informative;
                if (!v.pass) {
                    r.detail = "n=" + std::to_string(n) + " axis " + std::to_string(axis) +
                               " inconsistent: " + v.witness;
                    return;
                }
                if (axis == 1 && v.constant) {
                    if (!consts.empty()) consts += ", ";
                    consts += "n=" + std::to_string(n) + ": " + v.constant->str();
                }
            }
        r.pass = true;
        r.detail = "all 9 (level, axis) pairs proportional across " +
                   std::to_string(opt.substitution_trials) +
                   " rational trials each; axis-1 constants " + consts;
    });
}

CriterionResult verify_period24_exclusion(const VerifyOptions& opt) {
    return run(10, "period24-exclusion", [&](CriterionResult& r) {
        // (a) the three linear period-2 conditions meet only at (1,1,1),
        // which lies on the singular quartic.
        const std::vector<std::string> vars = {"s1", "s2", "s3"};
        const XiPoint<SparsePoly> P{SparsePoly::variable(vars, "s1"),
                                    SparsePoly::variable(vars, "s2"),
                                    SparsePoly::variable(vars, "s3")};
        const SparsePoly lin[3] = {gamma_xi(2, 1, P), gamma_xi(2, 2, P), gamma_xi(2, 3, P)};
        Rational M[3][3], rhs[3];
        for (int i = 0; i < 3; ++i) {
            if (lin[i].total_degree() != 1) {
                r.detail = "period-2 condition is not linear";
                return;
            }
            M[i][0] = lin[i].coefficient({1, 0, 0});
            M[i][1] = lin[i].coefficient({0, 1, 0});
            M[i][2] = lin[i].coefficient({0, 0, 1});
            rhs[i] = -lin[i].constant_term();
        }
        auto det3 = [](const Rational m[3][3]) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        const Rational det = det3(M);
        ++r.work;
        if (det.is_zero()) {
            r.detail = "period-2 linear system is degenerate";
            return;
        }
        Rational sol[3];
        for (int col = 0; col < 3; ++col) {
            Rational t[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) t[i][j] = (j == col) ? rhs[i] : M[i][j];
            sol[col] = det3(t) / det;
        }
        const Rational one(1);
        if (sol[0] != one || sol[1] != one || sol[2] != one) {
            r.detail = "period-2 conditions meet away from (1,1,1)";
            return;
        }
        if (!singular_quartic(XiPoint<Rational>{one, one, one}).is_zero()) {
            r.detail = "(1,1,1) misses the singular quartic";
            return;
        }
        r.work += 2;

        // (b) the three lines carry every higher factor: substitute each
        // parametrization and demand the zero polynomial.
        const SparsePoly v3 = v3_condition(P);
        SparsePoly second3[3], first4[3], second4[3], full4[3];
        for (int ax = 0; ax < 3; ++ax) {
            auto s3q = gamma_xi(3, ax + 1, P).divided_exactly_by(v3);
            if (!s3q) {
                r.detail = "level-3 condition lost its variety factor";
                return;
            }
            second3[ax] = std::move(*s3q);
            first4[ax] = lin[(ax + 1) % 3] * lin[(ax + 2) % 3];
            full4[ax] = gamma_xi(4, ax + 1, P);
            auto s4q = full4[ax].divided_exactly_by(first4[ax]);
            if (!s4q) {
                r.detail = "level-4 condition lost its linear factors";
                return;
            }
            second4[ax] = std::move(*s4q);
            r.work += 2;
        }
        const SparsePoly one3 = SparsePoly::constant(vars, Rational(1));
        const std::map<std::string, SparsePoly> lines[3] = {
            {{"s1", one3}, {"s3", SparsePoly::variable(vars, "s2")}},
            {{"s2", one3}, {"s3", SparsePoly::variable(vars, "s1")}},
            {{"s3", one3}, {"s2", SparsePoly::variable(vars, "s1")}},
        };
        const SparsePoly quartic = singular_quartic(P);
        for (int ln = 0; ln < 3; ++ln) {
            for (int ax = 0; ax < 3; ++ax) {
                const bool dead = second3[ax].subst(lines[ln]).is_zero() &&
                                  first4[ax].subst(lines[ln]).is_zero() &&
                                  second4[ax].subst(lines[ln]).is_zero() &&
                                  full4[ax].subst(lines[ln]).is_zero();
                r.work += 4;
                if (!dead) {
                    r.detail = "line " + std::to_string(ln + 1) + " leaves an axis-" +
                               std::to_string(ax + 1) + " factor alive";
                    return;
                }
            }
            ++r.work;
            if (!quartic.subst(lines[ln]).is_zero()) {
                r.detail = "line " + std::to_string(ln + 1) + " leaves the singular quartic";
                return;
            }
        }

        // (c) the numeric search over the reference box agrees: nothing
        // genuine at period 2 or 4.
        SearchRegion region =
            SearchRegion::cube(opt.search_box_lo, opt.search_box_hi, opt.search_grid);
        region.precision = opt.precision;
        const TopConfig cfg(Rational(1), Rational(2), Rational(3));
        std::string counts;
        for (long n : {2L, 4L}) {
            const auto rep = newton_periodic_search(cfg, n, region, opt.seed);
            r.work += rep.starts;
            long genuine = 0, fixed = 0, singular = 0, on_v3 = 0;
            for (const auto& c : rep.candidates) {
                switch (c.classification) {
                    case Classification::genuine: ++genuine; break;
                    case Classification::fixed_axis: ++fixed; break;
                    case Classification::singular_set: ++singular; break;
                    case Classification::on_v3: ++on_v3; break;
                }
            }
            if (genuine != 0) {
                r.detail = "period-" + std::to_string(n) + " search found " +
                           std::to_string(genuine) + " genuine candidates";
                return;
            }
            if (!counts.empty()) counts += "; ";
            counts += "n=" + std::to_string(n) + ": " + std::to_string(rep.candidates.size()) +
                      " roots (" + std::to_string(fixed) + " fixed-axis, " +
                      std::to_string(singular) + " singular, " + std::to_string(on_v3) +
                      " on the period-3 variety), 0 genuine";
        }
        r.pass = true;
        r.detail = "unique meet of the linear conditions is (1,1,1) on the singular "
                   "quartic; the three lines kill every factor; " +
                   counts;
    });
}

CriterionResult verify_axisym_quantization(const VerifyOptions& opt) {
    return run(11, "axisym-quantization", [&](CriterionResult& r) {
        const mpfr_prec_t prec = opt.precision;

        struct {
            long n;
            Rational want;
        } table[] = {{1, Rational(0)}, {3, Rational(3)}, {4, Rational(1)}, {6, Rational(1, 3)}};
        for (const auto& row : table) {
            const auto m = mu(row.n, prec);
            ++r.work;
            if (!m.exact || !m.mu_squared_exact || *m.mu_squared_exact != row.want) {
                r.detail = "squared tangent at n=" + std::to_string(row.n) + " is off";
                return;
            }
        }
        bool diverged = false;
        try {
            (void)mu(2, prec);
        } catch (const DivergentMu&) {
            diverged = true;
        }
        ++r.work;
        if (!diverged) {
            r.detail = "half-turn tangent failed to diverge at n=2";
            return;
        }
        const auto m5 = mu(5, prec);
        const MpReal want5 = MpReal(5, prec) - ldexp(sqrt(MpReal(5, prec)), 1);
        ++r.work;
        if (m5.exact || !(abs(m5.mu_squared - want5) <= MpReal::parse("1e-70", prec))) {
            r.detail = "squared tangent at n=5 is off";
            return;
        }

        // The published list's n=6 entry, 2 - sqrt(3), is the tangent of
        // pi/12 and therefore drives a 12-cycle, not a 6-cycle; demonstrate
        // that, then certify n=6 from the formula value 1/3 below.
        const AxisymTop top(Rational(2), Rational(1));
        const TopConfig cfg = top.config();
        {
            const MpReal u = MpReal(2, prec) - sqrt(MpReal(3, prec));
            const BodyState<MpReal> s{MpReal(-2, prec) * u, MpReal(1, prec),
                                      MpReal(Rational(1, 2), prec)};
            const MpReal r12 = period_residual(cfg, s, 12);
            const MpReal r6 = period_residual(cfg, s, 6);
            r.work += 2;
            if (!(r12 <= MpReal::parse("1e-40", prec)) || !(r6 >= MpReal::parse("1e-3", prec))) {
                r.detail = "published-list n=6 value did not behave as the 12-cycle tangent "
                           "(residuals " +
                           r12.str(3) + ", " + r6.str(3) + ")";
                return;
            }
        }

        const auto qx = quantized_x1(4, top, prec);
        ++r.work;
        if (!qx.exact || !qx.exact_values ||
            qx.exact_values->first != Rational(-2) || qx.exact_values->second != Rational(2)) {
            r.detail = "period-4 levels are not exactly -2 and 2";
            return;
        }

        const auto plane = plane_invariant_relation(4, top, prec);
        ++r.work;
        if (!plane.exact || !plane.exact_value || *plane.exact_value != Rational(-4)) {
            r.detail = "period-4 plane value is not exactly -4";
            return;
        }

        Draw draw(opt.seed * 1000 + 11);
        int done = 0, attempts = 0;
        while (done < opt.axisym_random_pairs) {
            if (++attempts > opt.axisym_random_pairs * 50) {
                r.detail = "sampling stalled";
                return;
            }
            const Rational x2 = draw.rational(6, 4), x3 = draw.rational(6, 4);
            if (x2.is_zero() && x3.is_zero()) continue;
            const BodyState<Rational> st{Rational(2), x2, x3};
            const auto orb = orbit(cfg, st, 4);
            r.work += 2;
            if (orb[4] != st || orb[1] == st) {
                r.detail = "exact level-2 start failed the four-step return";
                return;
            }
            const auto H = invariants(cfg, st);
            ++r.work;
            if (top.I2() * H.H1 - H.H2 != *plane.exact_value) {
                r.detail = "plane relation broken on an exact period-4 state";
                return;
            }
            const auto cert = verify_axisym_period(4, top, x2, x3, prec);
            ++r.work;
            if (!cert.exact || !cert.periodic || !cert.minimal || cert.on_axis) {
                r.detail = "library certificate for the period-4 level failed";
                return;
            }
            ++done;
        }

        for (long n : {3L, 5L, 6L}) {
            const auto cert = verify_axisym_period(n, top, Rational(1), Rational(1, 2), prec);
            ++r.work;
            if (!cert.periodic || !cert.minimal ||
                !(cert.residual <= MpReal::parse("1e-40", prec))) {
                r.detail = "numeric certificate failed at n=" + std::to_string(n) +
                           " (residual " + cert.residual.str(3) + ")";
                return;
            }
        }

        r.pass = true;
        r.detail = "tangent table exact at n=1,3,4,6 and to 1e-70 at n=5; published n=6 "
                   "list value certified as the 12-cycle tangent instead; " +
                   std::to_string(done) +
                   " exact period-4 certificates at level 2 with plane value -4; numeric "
                   "certificates at n=3,5,6 within 1e-40";
    });
}

CriterionResult verify_singular_factorization(const VerifyOptions& opt) {
    return run(12, "singular-factorization", [&](CriterionResult& r) {
        (void)opt;
        const std::vector<std::string> vars = {"a1", "a2", "a3", "x1", "x2", "x3"};
        auto V = [&](const char* n) { return SparsePoly::variable(vars, n); };
        const SparsePoly a1 = V("a1"), a2 = V("a2"), a3 = V("a3");
        const SparsePoly x1 = V("x1"), x2 = V("x2"), x3 = V("x3");
        const XiPoint<SparsePoly> xi{a2 * a3 * x1 * x1, a3 * a1 * x2 * x2, a1 * a2 * x3 * x3};
        const SparsePoly one = SparsePoly::constant(vars, Rational(1));
        const SparsePoly sum = one - xi.xi1 - xi.xi2 - xi.xi3;
        const SparsePoly odd = (a1 * a2 * a3 * x1 * x2 * x3).scaled(Rational(2));
        ++r.work;
        if (singular_quartic(xi) != (sum + odd) * (sum - odd)) {
            r.detail = "quartic does not split into the two denominator branches";
            return;
        }
        r.pass = true;
        r.detail = "quartic = (branch with +2 a1 a2 a3 x1 x2 x3) x (map denominator), "
                   "symbolically in six variables";
    });
}

std::vector<CriterionResult> verify_all(const VerifyOptions& opt) {
    return {verify_invariant_conservation(opt), verify_oracle_equivalence(opt),
            verify_biquadratic_reduction(opt),  verify_two_step_relation(opt),
            verify_gamma3_factorization(opt),   verify_higher_correlations(opt),
            verify_period3_collapse(opt),       verify_period3_orbits(opt),
            verify_condition_form_consistency(opt), verify_period24_exclusion(opt),
            verify_axisym_quantization(opt),    verify_singular_factorization(opt)};
}

}  // namespace eulertop
