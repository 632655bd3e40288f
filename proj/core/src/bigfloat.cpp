#include "eulertop/bigfloat.hpp"

#include <cmath>

namespace eulertop {

MpReal MpReal::parse(const std::string& s, mpfr_prec_t prec) {
    MpReal r = MpReal::zero(prec);
    if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a real number: '" + s + "'");
    return r;
}

std::string MpReal::str(int digits) const {
    if (digits <= 0)
        digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 2;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, x_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

MpReal MpReal::pi(mpfr_prec_t prec) {
    MpReal r = MpReal::zero(prec);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

BigComplex sqrt(const BigComplex& a) {
    const mpfr_prec_t prec = a.precision();
    if (a.im.is_zero()) {
        if (a.re.sign() >= 0) return {sqrt(a.re), MpReal::zero(prec)};
        return {MpReal::zero(prec), sqrt(-a.re)};
    }
    // Stable half-angle form: t = sqrt((|a| + |re|)/2) never cancels.
    MpReal r = abs(a);
    MpReal t = sqrt(ldexp(r + abs(a.re), -1));
    MpReal u = ldexp(a.im / t, -1);
    if (a.re.sign() >= 0) return {t, u};
    if (a.im.sign() >= 0) return {u, t};
    return {-u, -t};
}

std::string BigComplex::str(int digits) const {
    if (im.is_zero()) return re.str(digits);
    return re.str(digits) + (im.sign() < 0 ? " - " : " + ") + abs(im).str(digits) + "i";
}

bool approx_equal(const MpReal& a, const MpReal& b, const Tolerance& tol) {
    if (a.precision() != b.precision()) throw PrecisionMismatch{};
    return abs(a - b) <= tol.absolute + tol.relative * max(abs(a), abs(b));
}

bool approx_equal(const BigComplex& a, const BigComplex& b, const Tolerance& tol) {
    if (a.precision() != b.precision()) throw PrecisionMismatch{};
    return abs(a - b) <= tol.absolute + tol.relative * max(abs(a), abs(b));
}

}  // namespace eulertop
