#include "eulertop/axisym.hpp"

#include <stdexcept>

namespace eulertop {

namespace {

std::optional<Rational> exact_mu_squared(long n) {
    switch (n) {
        case 1: return Rational(0);
        case 3: return Rational(3);
        case 4: return Rational(1);
        case 6: return Rational(1, 3);
        default: return std::nullopt;  // cos(2 pi / n) irrational for all other n
    }
}

}  // namespace

MuValue mu(long n, mpfr_prec_t precision) {
    if (n < 1) throw std::invalid_argument("period must be at least 1");
    if (n == 2) throw DivergentMu{};
    MuValue out;
    out.n = n;
    if (auto ex = exact_mu_squared(n)) {
        out.exact = true;
        out.mu_squared_exact = *ex;
        out.mu_squared = MpReal(*ex, precision);
        return out;
    }
    const MpReal angle = MpReal::pi(precision) * 2 / n;
    const MpReal c = cos(angle);
    const MpReal one(Rational(1), precision);
    out.mu_squared = (one - c) / (one + c);
    return out;
}

QuantizedX1 quantized_x1(long n, const AxisymTop& top, mpfr_prec_t precision) {
    const MuValue m = mu(n, precision);
    const Rational factor = Rational(2) * top.I2() / (top.I2() - top.I1());
    QuantizedX1 out;
    if (m.exact) {
        if (auto root = [&]() -> std::optional<Rational> {
                const Rational& ms = *m.mu_squared_exact;
                if (ms.is_zero()) return Rational(0);
                if (ms == Rational(1)) return Rational(1);
                return std::nullopt;  // 3 and 1/3 have irrational roots
            }()) {
            const Rational v = *root * factor;
            out.exact = true;
            out.exact_values = v.sign() < 0 ? std::pair<Rational, Rational>{v, -v}
                                            : std::pair<Rational, Rational>{-v, v};
        }
    }
    const MpReal mu_num = sqrt(m.mu_squared);
    const MpReal v = mu_num * MpReal(factor, precision);
    const MpReal av = abs(v);
    out.values = {-av, av};
    return out;
}

AxisymCertificate verify_axisym_period(long n, const AxisymTop& top, const Rational& x2,
                                       const Rational& x3, mpfr_prec_t precision,
                                       const Tolerance& tol) {
    if (n < 1) throw std::invalid_argument("period must be at least 1");
    const QuantizedX1 q = quantized_x1(n, top, precision);
    const Rational factor = Rational(2) * top.I2() / (top.I2() - top.I1());
    const TopConfig cfg = top.config();

    AxisymCertificate cert;
    cert.n = n;
    cert.on_axis = x2.is_zero() && x3.is_zero();
    cert.residual = MpReal(0.0, precision);

    if (q.exact) {
        // plus-mu branch: mu * factor with the rational mu recovered from
        // the sorted pair (its larger magnitude entry carries the sign info)
        const Rational x1 =
            factor.sign() < 0 ? q.exact_values->first : q.exact_values->second;
        cert.exact = true;
        cert.x1_exact = x1;
        cert.x1 = MpReal(x1, precision);
        const BodyState<Rational> start{x1, x2, x3};
        BodyState<Rational> s = start;
        for (long k = 1; k <= n; ++k) {
            s = euler_step(cfg, s, static_cast<int>(k - 1));
            if (k < n && s == start) {
                cert.early_returns.push_back(k);
                cert.minimal = false;
            }
        }
        cert.periodic = s == start;
        if (!cert.periodic) {
            const Rational r = max_abs_diff(s, start);
            cert.residual = MpReal(r, precision);
        }
        if (cert.on_axis) cert.minimal = true;  // not asserted on the axis
        return cert;
    }

    const MpReal mu_num = sqrt(mu(n, precision).mu_squared);
    const MpReal x1 = mu_num * MpReal(factor, precision);
    cert.x1 = x1;
    const BodyState<MpReal> start{x1, MpReal(x2, precision), MpReal(x3, precision)};
    BodyState<MpReal> s = start;
    for (long k = 1; k <= n; ++k) {
        s = euler_step(cfg, s, static_cast<int>(k - 1));
        if (k < n && !cert.on_axis && max_abs_diff(s, start) <= tol.absolute) {
            cert.early_returns.push_back(k);
            cert.minimal = false;
        }
    }
    cert.residual = max_abs_diff(s, start);
    cert.periodic = cert.residual <= tol.absolute;
    return cert;
}

PlaneRelation plane_invariant_relation(long n, const AxisymTop& top, mpfr_prec_t precision) {
    const MuValue m = mu(n, precision);
    const Rational geom =
        Rational(4) * top.I1() * top.I2() * top.I2() / (top.I2() - top.I1());
    PlaneRelation out;
    if (m.exact) {
        const Rational& ms = *m.mu_squared_exact;
        out.exact = true;
        out.exact_value = ms / (Rational(1) + ms) * geom;
        out.value = MpReal(*out.exact_value, precision);
        return out;
    }
    const MpReal one(Rational(1), precision);
    out.value = m.mu_squared / (one + m.mu_squared) * MpReal(geom, precision);
    return out;
}

}  // namespace eulertop
