#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulertop/rational.hpp"

namespace eulertop {

struct VariableMismatch : std::invalid_argument {
    VariableMismatch() : std::invalid_argument("polynomials over different variable lists") {}
};

struct DegreeOverflow : std::overflow_error {
    DegreeOverflow() : std::overflow_error("monomial exponent exceeds 255") {}
};

// Sparse multivariate polynomial over Rational, canonical form (merged
// terms, no zero coefficients), at most 14 variables, per-variable and
// total degree at most 255.
//
// Monomials are packed into one 128-bit key: total degree in the top
// byte, then one byte per variable in list order. Unsigned comparison of
// keys is then exactly graded lexicographic order, and multiplying
// monomials is integer addition of keys. Terms are kept in a map sorted
// descending, so begin() is the leading term.
class SparsePoly {
  public:
    using Key = unsigned __int128;
    using TermMap = std::map<Key, Rational, std::greater<Key>>;
    static constexpr int kMaxVars = 14;
    static constexpr unsigned kMaxDegree = 255;

    SparsePoly() = default;  // zero over the empty variable list
    explicit SparsePoly(std::vector<std::string> vars);

    static SparsePoly constant(std::vector<std::string> vars, Rational c);
    static SparsePoly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    // Accumulates c on the monomial with the given exponents (one per variable).
    void add_term(const std::vector<unsigned>& exps, const Rational& c);
    Rational coefficient(const std::vector<unsigned>& exps) const;
    Rational constant_term() const;

    unsigned degree_in(const std::string& var) const;
    // Coefficient of var^k, as a polynomial over the same list (var removed
    // from each term).
    SparsePoly coeff_in(const std::string& var, unsigned k) const;

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator-(const SparsePoly& a);
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly scaled(const Rational& c) const;
    SparsePoly pow(unsigned e) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    // Trial division in graded-lex order. Returns the quotient when the
    // division is exact, nullopt when a nonzero remainder appears.
    std::optional<SparsePoly> divided_exactly_by(const SparsePoly& d) const;

    Rational eval(const std::map<std::string, Rational>& at) const;

    // Simultaneous substitution; each replacement must live over the same
    // variable list. Variables absent from `at` stay themselves.
    SparsePoly subst(const std::map<std::string, SparsePoly>& at) const;

    // Graded-lex descending, e.g. "a*f - b*e - 3*c^2 + c*d".
    std::string str() const;

    unsigned exponent_of(Key k, int var_index) const {
        return static_cast<unsigned>(k >> (112 - 8 * var_index)) & 0xFFu;
    }
    static unsigned degree_of(Key k) { return static_cast<unsigned>(k >> 120); }

  private:
    int index_of(const std::string& var) const;  // -1 when absent
    Key key_from_exps(const std::vector<unsigned>& exps) const;
    void require_same_vars(const SparsePoly& o) const {
        if (vars_ != o.vars_) throw VariableMismatch{};
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Determinant of the 4x4 Sylvester matrix of p and q, both required to be
// of degree exactly 2 in y; eliminates y.
SparsePoly resultant_in(const std::string& y, const SparsePoly& p, const SparsePoly& q);

enum class IdentityMode { equal, proportional };

struct IdentityVerdict {
    bool pass = false;
    int trials = 0;
    int informative = 0;  // points where the mode's comparison applied
    std::optional<Rational> ratio;  // proportional mode: the common ratio p/q
    std::optional<std::map<std::string, Rational>> witness;  // failing point
};

// Schwartz-Zippel style randomized identity test at uniformly random
// rational points with numerator and denominator bounded by coeff_bound.
// "equal" demands identical values at every point; "proportional" demands
// one constant ratio across all points where both values are nonzero.
IdentityVerdict random_identity_test(const SparsePoly& p, const SparsePoly& q, IdentityMode mode,
                                     int trials, std::uint64_t seed,
                                     long coeff_bound = 1000000);

}  // namespace eulertop
