#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulertop/bigfloat.hpp"
#include "eulertop/euler_map.hpp"
#include "eulertop/rational.hpp"

namespace eulertop {

struct DivergentMu : std::domain_error {
    DivergentMu()
        : std::domain_error("mu is undefined at n = 2: cos(pi) = -1 zeroes its denominator") {}
};

// Axially symmetric inertia, symmetry axis fixed to axis 1 (I3 = I2),
// delta = 1. Other pairings are handled by relabeling at the interface.
class AxisymTop {
  public:
    AxisymTop(Rational I1, Rational I2) : i1_(std::move(I1)), i2_(std::move(I2)) {
        if (i1_.is_zero() || i2_.is_zero())
            throw std::invalid_argument("inertia moments must be nonzero");
        if (i1_ == i2_)
            throw std::invalid_argument("I1 = I2 is the fully symmetric top, not the axial one");
    }

    const Rational& I1() const { return i1_; }
    const Rational& I2() const { return i2_; }
    TopConfig config() const { return TopConfig(i1_, i2_, i2_, Rational(1)); }

  private:
    Rational i1_, i2_;
};

// One step of the map for the symmetric top: x1 is untouched and (x2,x3)
// rotates by the angle with
//   cos = (4 I2^2 - (I2-I1)^2 x1^2) / (4 I2^2 + (I2-I1)^2 x1^2),
//   sin = 4 I2 (I2-I1) x1       / (4 I2^2 + (I2-I1)^2 x1^2).
// The sin sign is forced by agreement with the general map.
template <typename S>
BodyState<S> rotation_step(const AxisymTop& top, const BodyState<S>& s) {
    const S i1 = lift_rational(top.I1(), s.x1);
    const S i2 = lift_rational(top.I2(), s.x1);
    const S four = lift_rational(Rational(4), s.x1);
    const S diff = i2 - i1;
    const S sq = diff * diff * s.x1 * s.x1;
    const S den = four * i2 * i2 + sq;
    const S cosw = (four * i2 * i2 - sq) / den;
    const S sinw = four * i2 * diff * s.x1 / den;
    return {s.x1, s.x2 * cosw + s.x3 * sinw, s.x3 * cosw - s.x2 * sinw};
}

struct MuValue {
    long n = 1;
    bool exact = false;                  // cos(2 pi / n) rational: n in {1, 3, 4, 6}
    std::optional<Rational> mu_squared_exact;
    MpReal mu_squared;                   // always set, at the requested precision
};

// mu_n^2 = (1 - cos(2 pi / n)) / (1 + cos(2 pi / n)): the squared tangent
// of the half rotation angle at period n. Exact values 0, 3, 1, 1/3 for
// n = 1, 3, 4, 6. (A published list gives 2 - sqrt(3) at n = 6; that is
// the half-angle tangent of pi/12, i.e. the period-12 value, and the
// formula value 1/sqrt(3) is used here. See the n = 6 certificate test.)
MuValue mu(long n, mpfr_prec_t precision = MpReal::kDefaultPrecision);

struct QuantizedX1 {
    bool exact = false;                  // mu itself rational: n in {1, 4}
    std::optional<std::pair<Rational, Rational>> exact_values;  // ascending
    std::pair<MpReal, MpReal> values;                           // ascending
};

// The two periodic x1 levels +-mu_n 2 I2 / (I2 - I1).
QuantizedX1 quantized_x1(long n, const AxisymTop& top,
                         mpfr_prec_t precision = MpReal::kDefaultPrecision);

struct AxisymCertificate {
    long n = 1;
    bool exact = false;      // rational x1: the orbit was iterated exactly
    bool periodic = false;   // X^(n) = x (exactly, or residual within tolerance)
    bool minimal = true;     // no return at any 1 <= k < n
    bool on_axis = false;    // x2 = x3 = 0: every step returns, minimality not asserted
    std::optional<Rational> x1_exact;
    MpReal x1;               // the plus-mu branch level that was used
    MpReal residual;         // max coordinate |X^(n) - x|; exact 0 when exact && periodic
    std::vector<long> early_returns;
};

// Sets x1 to the plus-branch quantized level for period n, then iterates
// the *general* map n times and certifies the return. Exact rational
// iteration when mu is rational,
// otherwise the orbit runs at the given precision and the return is
// checked against tol.absolute.
AxisymCertificate verify_axisym_period(long n, const AxisymTop& top, const Rational& x2,
                                       const Rational& x3,
                                       mpfr_prec_t precision = MpReal::kDefaultPrecision,
                                       const Tolerance& tol = Tolerance::defaults());

struct PlaneRelation {
    bool exact = false;
    std::optional<Rational> exact_value;
    MpReal value;
};

// The invariant-plane relation at period n:
//   I2 H1 - H2 = mu_n^2 / (1 + mu_n^2) * 4 I1 I2^2 / (I2 - I1).
// Returns the right side; exact whenever mu_n^2 is rational.
PlaneRelation plane_invariant_relation(long n, const AxisymTop& top,
                                       mpfr_prec_t precision = MpReal::kDefaultPrecision);

}  // namespace eulertop
