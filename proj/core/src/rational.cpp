#include "eulertop/rational.hpp"

#include <algorithm>

namespace eulertop {

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero{};
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (v.get_den() == 0) throw DivisionByZero{};
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero{};
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), k);
    return Rational(std::move(r));  // canonical in, canonical out
}

std::size_t Rational::decimal_height() const {
    return std::max(mpz_sizeinbase(v_.get_num_mpz_t(), 10),
                    mpz_sizeinbase(v_.get_den_mpz_t(), 10));
}

}  // namespace eulertop
