#pragma once

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "eulertop/rational.hpp"

namespace eulertop {

struct PrecisionMismatch : std::invalid_argument {
    PrecisionMismatch() : std::invalid_argument("operands carry different precision_bits") {}
};

// Arbitrary-precision real. Every value carries its mantissa size in bits
// (>= 64); binary operations round to the larger of the two operand
// precisions, nearest-even. Values are immutable after construction.
class MpReal {
  public:
    static constexpr mpfr_prec_t kDefaultPrecision = 256;
    static constexpr mpfr_prec_t kMinPrecision = 64;

    MpReal() {
        init(kDefaultPrecision);
        mpfr_set_zero(x_, +1);
    }
    // Zero at a chosen precision. A constructor from bare mpfr_prec_t would
    // be ambiguous against the value constructors (it is a plain integer
    // typedef), hence the named factory.
    static MpReal zero(mpfr_prec_t prec) { return MpReal(0.0, prec); }
    MpReal(double v, mpfr_prec_t prec = kDefaultPrecision) {
        init(prec);
        mpfr_set_d(x_, v, MPFR_RNDN);
    }
    MpReal(long v, mpfr_prec_t prec = kDefaultPrecision) {
        init(prec);
        mpfr_set_si(x_, v, MPFR_RNDN);
    }
    MpReal(int v, mpfr_prec_t prec = kDefaultPrecision) : MpReal(static_cast<long>(v), prec) {}
    MpReal(const Rational& v, mpfr_prec_t prec = kDefaultPrecision) {
        init(prec);
        mpfr_set_q(x_, v.raw().get_mpq_t(), MPFR_RNDN);
    }

    static MpReal parse(const std::string& s, mpfr_prec_t prec = kDefaultPrecision);

    MpReal(const MpReal& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    MpReal(MpReal&& o) noexcept {
        x_[0] = o.x_[0];
        o.engaged_ = false;
    }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            if (!engaged_) { mpfr_init2(x_, mpfr_get_prec(o.x_)); engaged_ = true; }
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        if (this != &o) {
            if (engaged_) mpfr_clear(x_);
            x_[0] = o.x_[0];
            engaged_ = true;
            o.engaged_ = false;
        }
        return *this;
    }
    ~MpReal() {
        if (engaged_) mpfr_clear(x_);
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
    mpfr_srcptr raw() const { return x_; }

    // Same value re-rounded to another mantissa size.
    MpReal at_precision(mpfr_prec_t prec) const {
        MpReal r = MpReal::zero(prec);
        mpfr_set(r.x_, x_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Decimal scientific notation; digits=0 picks enough for the full mantissa.
    std::string str(int digits = 0) const;

    friend MpReal operator+(const MpReal& a, const MpReal& b) { return bin(mpfr_add, a, b); }
    friend MpReal operator-(const MpReal& a, const MpReal& b) { return bin(mpfr_sub, a, b); }
    friend MpReal operator*(const MpReal& a, const MpReal& b) { return bin(mpfr_mul, a, b); }
    friend MpReal operator/(const MpReal& a, const MpReal& b) { return bin(mpfr_div, a, b); }
    friend MpReal operator-(const MpReal& a) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    MpReal& operator+=(const MpReal& o) { return *this = *this + o; }
    MpReal& operator-=(const MpReal& o) { return *this = *this - o; }
    MpReal& operator*=(const MpReal& o) { return *this = *this * o; }
    MpReal& operator/=(const MpReal& o) { return *this = *this / o; }

    friend MpReal operator*(const MpReal& a, long b) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }
    friend MpReal operator*(long a, const MpReal& b) { return b * a; }
    friend MpReal operator/(const MpReal& a, long b) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
        return r;
    }

    // NaN compares false everywhere, as in IEEE.
    friend bool operator==(const MpReal& a, const MpReal& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const MpReal& a, const MpReal& b) { return !(a == b); }
    friend bool operator<(const MpReal& a, const MpReal& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const MpReal& a, const MpReal& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const MpReal& a, const MpReal& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const MpReal& a, const MpReal& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

    friend MpReal abs(const MpReal& a) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend MpReal sqrt(const MpReal& a) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_sqrt(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend MpReal hypot(const MpReal& a, const MpReal& b) {
        MpReal r = MpReal::zero(std::max(a.precision(), b.precision()));
        mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend MpReal max(const MpReal& a, const MpReal& b) {
        MpReal r = MpReal::zero(std::max(a.precision(), b.precision()));
        mpfr_max(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }

    static MpReal pi(mpfr_prec_t prec = kDefaultPrecision);
    friend MpReal cos(const MpReal& a) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_cos(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend MpReal sin(const MpReal& a) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_sin(r.x_, a.x_, MPFR_RNDN);
        return r;
    }

    // a * 2^e, exact.
    friend MpReal ldexp(const MpReal& a, long e) {
        MpReal r = MpReal::zero(a.precision());
        mpfr_mul_2si(r.x_, a.x_, e, MPFR_RNDN);
        return r;
    }

  private:
    void init(mpfr_prec_t prec) {
        if (prec < kMinPrecision) throw std::invalid_argument("precision_bits must be >= 64");
        mpfr_init2(x_, prec);
    }
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static MpReal bin(BinOp op, const MpReal& a, const MpReal& b) {
        MpReal r = MpReal::zero(std::max(a.precision(), b.precision()));
        op(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }

    mpfr_t x_;
    bool engaged_ = true;  // false only after a move-out
};

// Complex scalar over MpReal. Square roots of negative reals land here when
// a reduced coordinate is lifted back to a state, so downstream code never
// needs a separate real/complex switch.
struct BigComplex {
    MpReal re, im;

    BigComplex() = default;
    static BigComplex zero(mpfr_prec_t prec) {
        return BigComplex(MpReal::zero(prec), MpReal::zero(prec));
    }
    BigComplex(MpReal r) : re(std::move(r)), im(MpReal::zero(re.precision())) {}
    BigComplex(MpReal r, MpReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(const Rational& v, mpfr_prec_t prec = MpReal::kDefaultPrecision)
        : re(v, prec), im(MpReal::zero(prec)) {}
    BigComplex(double v, mpfr_prec_t prec = MpReal::kDefaultPrecision) : re(v, prec), im(MpReal::zero(prec)) {}
    BigComplex(long v, mpfr_prec_t prec = MpReal::kDefaultPrecision) : re(v, prec), im(MpReal::zero(prec)) {}
    BigComplex(int v, mpfr_prec_t prec = MpReal::kDefaultPrecision) : re(v, prec), im(MpReal::zero(prec)) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }
    bool is_real(const MpReal& eps) const { return abs(im) <= eps; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        MpReal n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    friend MpReal abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }

    // Principal branch; sqrt(-1) = +i.
    friend BigComplex sqrt(const BigComplex& a);

    std::string str(int digits = 0) const;
};

using BigScalar = BigComplex;

// Comparison rule shared by every numeric check:
//   pass iff |a - b| <= absolute + relative * max(|a|, |b|).
struct Tolerance {
    MpReal absolute;
    MpReal relative;

    static Tolerance defaults(mpfr_prec_t prec = MpReal::kDefaultPrecision) {
        return {MpReal::parse("1e-40", prec), MpReal::zero(prec)};
    }
    static Tolerance absolute_only(const std::string& eps,
                                   mpfr_prec_t prec = MpReal::kDefaultPrecision) {
        return {MpReal::parse(eps, prec), MpReal::zero(prec)};
    }
};

bool approx_equal(const MpReal& a, const MpReal& b, const Tolerance& tol);
bool approx_equal(const BigComplex& a, const BigComplex& b, const Tolerance& tol);

}  // namespace eulertop
