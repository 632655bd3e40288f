#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "eulertop/bigfloat.hpp"
#include "eulertop/rational.hpp"

namespace eulertop {

struct SingularPoint : std::runtime_error {
    int step;
    explicit SingularPoint(int step_index = 0)
        : std::runtime_error("map denominator vanishes at step " + std::to_string(step_index)),
          step(step_index) {}
};

struct SingularSystem : std::runtime_error {
    SingularSystem() : std::runtime_error("implicit update system is singular") {}
};

struct InvariantsUndefined : std::runtime_error {
    InvariantsUndefined() : std::runtime_error("invariant denominator 1 - a2*a3*x1^2 vanishes") {}
};

// Inertia triple and time step, all exact. The alpha combinations drive
// every formula downstream, so they are computed once here.
class TopConfig {
  public:
    TopConfig(Rational I1, Rational I2, Rational I3, Rational delta = Rational(1));

    const Rational& I1() const { return I1_; }
    const Rational& I2() const { return I2_; }
    const Rational& I3() const { return I3_; }
    const Rational& delta() const { return delta_; }
    const Rational& alpha1() const { return a1_; }
    const Rational& alpha2() const { return a2_; }
    const Rational& alpha3() const { return a3_; }

    bool is_fully_symmetric() const { return I1_ == I2_ && I2_ == I3_; }
    bool is_axially_symmetric() const {
        return !is_fully_symmetric() && (I1_ == I2_ || I2_ == I3_ || I1_ == I3_);
    }

    TopConfig reversed() const { return TopConfig(I1_, I2_, I3_, -delta_); }

  private:
    Rational I1_, I2_, I3_, delta_;
    Rational a1_, a2_, a3_;
};

template <typename S>
struct BodyState {
    S x1, x2, x3;

    friend bool operator==(const BodyState& a, const BodyState& b) {
        return a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
    }
    friend bool operator!=(const BodyState& a, const BodyState& b) { return !(a == b); }
};

template <typename S>
struct InvariantPair {
    S H1, H2;

    friend bool operator==(const InvariantPair& a, const InvariantPair& b) {
        return a.H1 == b.H1 && a.H2 == b.H2;
    }
    friend bool operator!=(const InvariantPair& a, const InvariantPair& b) { return !(a == b); }
};

inline mpfr_prec_t state_precision(const BodyState<BigComplex>& s) {
    return std::max(s.x1.precision(), std::max(s.x2.precision(), s.x3.precision()));
}
inline mpfr_prec_t state_precision(const BodyState<MpReal>& s) {
    return std::max(s.x1.precision(), std::max(s.x2.precision(), s.x3.precision()));
}

inline Rational lift_rational(const Rational& r, const BodyState<Rational>&) { return r; }
inline BigComplex lift_rational(const Rational& r, const BodyState<BigComplex>& like) {
    return BigComplex(r, state_precision(like));
}
inline MpReal lift_rational(const Rational& r, const BodyState<MpReal>& like) {
    return MpReal(r, state_precision(like));
}

// Scalar likes, for code that lifts per coordinate.
inline Rational lift_rational(const Rational& r, const Rational&) { return r; }
inline BigComplex lift_rational(const Rational& r, const BigComplex& like) {
    return BigComplex(r, like.precision());
}
inline MpReal lift_rational(const Rational& r, const MpReal& like) {
    return MpReal(r, like.precision());
}

inline bool is_singular_value(const Rational& v) { return v.is_zero(); }
inline bool is_singular_value(const BigComplex& v) { return v.is_zero() || !v.is_finite(); }
inline bool is_singular_value(const MpReal& v) { return v.is_zero() || !v.is_finite(); }

// Common denominator of the one-step update:
// 1 - 2 a1 a2 a3 x1 x2 x3 - a2 a3 x1^2 - a3 a1 x2^2 - a1 a2 x3^2.
template <typename S>
S denominator(const TopConfig& cfg, const BodyState<S>& s) {
    const S a1 = lift_rational(cfg.alpha1(), s);
    const S a2 = lift_rational(cfg.alpha2(), s);
    const S a3 = lift_rational(cfg.alpha3(), s);
    const S one = lift_rational(Rational(1), s);
    const S w = a1 * a2 * a3 * s.x1 * s.x2 * s.x3;
    return one - w - w - a2 * a3 * s.x1 * s.x1 - a3 * a1 * s.x2 * s.x2 - a1 * a2 * s.x3 * s.x3;
}

// One step of the explicit update. Exact on rational states.
template <typename S>
BodyState<S> euler_step(const TopConfig& cfg, const BodyState<S>& s, int step_index = 0) {
    const S a1 = lift_rational(cfg.alpha1(), s);
    const S a2 = lift_rational(cfg.alpha2(), s);
    const S a3 = lift_rational(cfg.alpha3(), s);
    const S one = lift_rational(Rational(1), s);
    const S t1 = a2 * a3 * s.x1 * s.x1;
    const S t2 = a3 * a1 * s.x2 * s.x2;
    const S t3 = a1 * a2 * s.x3 * s.x3;
    const S w = a1 * a2 * a3 * s.x1 * s.x2 * s.x3;
    const S D = one - w - w - t1 - t2 - t3;
    if (is_singular_value(D)) throw SingularPoint(step_index);
    const S two = one + one;
    return {(s.x1 * (one - t1 + t2 + t3) + two * a1 * s.x2 * s.x3) / D,
            (s.x2 * (one + t1 - t2 + t3) + two * a2 * s.x3 * s.x1) / D,
            (s.x3 * (one + t1 + t2 - t3) + two * a3 * s.x1 * s.x2) / D};
}

// Same step obtained by solving the defining scheme, which is linear in
// the updated state: serves as an independent oracle for euler_step.
//   I1 (X1 - x1) = (delta/2)(I2 - I3)(X2 x3 + x2 X3)   and cyclic.
template <typename S>
BodyState<S> euler_step_implicit(const TopConfig& cfg, const BodyState<S>& s) {
    const Rational half = Rational(1, 2) * cfg.delta();
    const S k1 = lift_rational(half * (cfg.I2() - cfg.I3()), s);
    const S k2 = lift_rational(half * (cfg.I3() - cfg.I1()), s);
    const S k3 = lift_rational(half * (cfg.I1() - cfg.I2()), s);
    const S i1 = lift_rational(cfg.I1(), s);
    const S i2 = lift_rational(cfg.I2(), s);
    const S i3 = lift_rational(cfg.I3(), s);

    // Row-major 3x3 system M X = r.
    const S m[3][3] = {{i1, -(k1 * s.x3), -(k1 * s.x2)},
                       {-(k2 * s.x3), i2, -(k2 * s.x1)},
                       {-(k3 * s.x2), -(k3 * s.x1), i3}};
    const S r[3] = {i1 * s.x1, i2 * s.x2, i3 * s.x3};

    auto det3 = [](const S t[3][3]) {
        return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
               t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
               t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
    };
    const S det = det3(m);
    if (is_singular_value(det)) throw SingularSystem{};

    S sol[3] = {s.x1, s.x2, s.x3};
    for (int col = 0; col < 3; ++col) {
        S t[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[i][j] = (j == col) ? r[i] : m[i][j];
        sol[col] = det3(t) / det;
    }
    return {sol[0], sol[1], sol[2]};
}

template <typename S>
BodyState<S> euler_inverse(const TopConfig& cfg, const BodyState<S>& s, int step_index = 0) {
    return euler_step(cfg.reversed(), s, step_index);
}

template <typename S>
InvariantPair<S> invariants(const TopConfig& cfg, const BodyState<S>& s) {
    const S a2 = lift_rational(cfg.alpha2(), s);
    const S a3 = lift_rational(cfg.alpha3(), s);
    const S one = lift_rational(Rational(1), s);
    const S den = one - a2 * a3 * s.x1 * s.x1;
    if (is_singular_value(den)) throw InvariantsUndefined{};
    const S i1 = lift_rational(cfg.I1(), s);
    const S i2 = lift_rational(cfg.I2(), s);
    const S i3 = lift_rational(cfg.I3(), s);
    const S s1 = s.x1 * s.x1, s2 = s.x2 * s.x2, s3 = s.x3 * s.x3;
    return {(i1 * s1 + i2 * s2 + i3 * s3) / den,
            (i1 * i1 * s1 + i2 * i2 * s2 + i3 * i3 * s3) / den};
}

template <typename S>
bool is_fixed_point(const BodyState<S>& s) {
    int zeros = 0;
    if (is_singular_value(s.x1)) ++zeros;
    if (is_singular_value(s.x2)) ++zeros;
    if (is_singular_value(s.x3)) ++zeros;
    return zeros >= 2;
}

// [s, X^(1), ..., X^(n)]; throws SingularPoint carrying the failing step.
template <typename S>
std::vector<BodyState<S>> orbit(const TopConfig& cfg, const BodyState<S>& s, int n) {
    if (n < 0) throw std::invalid_argument("orbit length must be >= 0");
    std::vector<BodyState<S>> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    out.push_back(s);
    for (int i = 0; i < n; ++i) out.push_back(euler_step(cfg, out.back(), i));
    return out;
}

template <typename S>
auto max_abs_diff(const BodyState<S>& a, const BodyState<S>& b) {
    auto d1 = abs(a.x1 - b.x1);
    auto d2 = abs(a.x2 - b.x2);
    auto d3 = abs(a.x3 - b.x3);
    auto m = d1;
    if (d2 > m) m = d2;
    if (d3 > m) m = d3;
    return m;
}

}  // namespace eulertop
