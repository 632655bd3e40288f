#include "eulertop/biquad.hpp"

#include <algorithm>

namespace eulertop {

BiquadParams<SparsePoly> generic_params(std::vector<std::string> vars) {
    for (const char* name : {"a", "b", "c", "d", "e", "f"})
        if (std::find(vars.begin(), vars.end(), name) == vars.end())
            throw std::invalid_argument(std::string("variable list must contain '") + name + "'");
    return {SparsePoly::variable(vars, "a"), SparsePoly::variable(vars, "b"),
            SparsePoly::variable(vars, "c"), SparsePoly::variable(vars, "d"),
            SparsePoly::variable(vars, "e"), SparsePoly::variable(vars, "f")};
}

template <typename E>
E gamma_general(int n, const BiquadParams<E>& q) {
    const E& a = q.a;
    const E& b = q.b;
    const E& c = q.c;
    const E& d = q.d;
    const E& e = q.e;
    const E& f = q.f;
    auto S = [](const E& v, long k) { return entry_scale(v, Rational(k)); };

    switch (n) {
        case 3:
            return a * f - b * e - S(c * c, 3) + c * d;
        case 4:
            return S(a * c * f, 2) - a * d * f + b * b * f + a * e * e - S(c * c * c, 2) +
                   c * c * d - S(b * c * e, 2);
        case 5: {
            const E a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e, f2 = f * f;
            const E b3 = b2 * b, c3 = c2 * c, c4 = c3 * c, e3 = e2 * e;
            const E blk2 = -(c * f2 * d) + S(c * f * e2, 2) + f * d * e2 - S(e * b * f2, 3) -
                           e2 * e2 - c2 * f2;
            const E blk3 = S(c4 * f, -13) + S(c3 * f * d, 18) + d * e3 * b + S(c * f2 * b2, 2) +
                           S(d * c2 * e2, 7) - c * e2 * d2 - S(c * e3 * b, 2) +
                           S(c2 * f * e * b, 2) - S(f * d2 * c2, 7) - S(c3 * e2, 14) +
                           c * d * d2 * f + f * b2 * e2 + f2 * d * b2 - e * b * d2 * f;
            const E blk4 = -(c * d2 * b2 * f) - b3 * e3 - S(c3 * d * e * b, 4) + c * d * b2 * e2 +
                           S(e * c4 * b, 13) - f2 * b2 * b2 + S(f * b2 * c2 * d, 7) + c4 * d2 -
                           S(c4 * c * d, 5) + S(c4 * c2, 5) - S(f * b3 * e * c, 2) -
                           e2 * c2 * b2 + e * b3 * d * f - S(f * b2 * c3, 14);
            return a2 * a * (f * f2) + a2 * blk2 + a * blk3 + blk4;
        }
        default:
            throw std::invalid_argument("general gamma closed forms cover levels 3, 4 and 5");
    }
}

template Rational gamma_general<Rational>(int, const BiquadParams<Rational>&);
template SparsePoly gamma_general<SparsePoly>(int, const BiquadParams<SparsePoly>&);

}  // namespace eulertop
