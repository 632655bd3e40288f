#include "eulertop/poly.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace eulertop {

namespace {

struct KeyHash {
    std::size_t operator()(SparsePoly::Key k) const {
        auto lo = static_cast<std::uint64_t>(k);
        auto hi = static_cast<std::uint64_t>(k >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

}  // namespace

SparsePoly::SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (static_cast<int>(vars_.size()) > kMaxVars)
        throw std::invalid_argument("at most 14 variables supported");
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, Rational c) {
    SparsePoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Key{0}, std::move(c));
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, const std::string& name) {
    SparsePoly p(std::move(vars));
    int i = p.index_of(name);
    if (i < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    Key k = (Key{1} << 120) | (Key{1} << (112 - 8 * i));
    p.terms_.emplace(k, Rational(1));
    return p;
}

int SparsePoly::index_of(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

SparsePoly::Key SparsePoly::key_from_exps(const std::vector<unsigned>& exps) const {
    if (exps.size() != vars_.size())
        throw std::invalid_argument("exponent vector length differs from variable list");
    unsigned deg = 0;
    Key k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxDegree) throw DegreeOverflow{};
        deg += exps[i];
        k |= Key{exps[i]} << (112 - 8 * static_cast<int>(i));
    }
    if (deg > kMaxDegree) throw DegreeOverflow{};
    return k | (Key{deg} << 120);
}

int SparsePoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(degree_of(terms_.begin()->first));
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = degree_of(terms_.begin()->first);
    for (const auto& [k, c] : terms_)
        if (degree_of(k) != d) return false;
    return true;
}

void SparsePoly::add_term(const std::vector<unsigned>& exps, const Rational& c) {
    if (c.is_zero()) return;
    Key k = key_from_exps(exps);
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SparsePoly::coefficient(const std::vector<unsigned>& exps) const {
    auto it = terms_.find(key_from_exps(exps));
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePoly::constant_term() const {
    auto it = terms_.find(Key{0});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned SparsePoly::degree_in(const std::string& var) const {
    int i = index_of(var);
    if (i < 0) throw std::invalid_argument("unknown variable '" + var + "'");
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, exponent_of(k, i));
    return d;
}

SparsePoly SparsePoly::coeff_in(const std::string& var, unsigned kwant) const {
    int i = index_of(var);
    if (i < 0) throw std::invalid_argument("unknown variable '" + var + "'");
    SparsePoly r(vars_);
    const Key mask = Key{0xFF} << (112 - 8 * i);
    for (const auto& [k, c] : terms_) {
        if (exponent_of(k, i) != kwant) continue;
        Key stripped = (k & ~mask) - (Key{kwant} << 120);
        r.terms_.emplace(stripped, c);
    }
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    require_same_vars(o);
    for (const auto& [k, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    require_same_vars(o);
    for (const auto& [k, c] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    r += b;
    return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r = a;
    r -= b;
    return r;
}

SparsePoly operator-(const SparsePoly& a) {
    SparsePoly r(a.vars_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.require_same_vars(b);
    SparsePoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.total_degree() + b.total_degree() > static_cast<int>(SparsePoly::kMaxDegree))
        throw DegreeOverflow{};
    std::unordered_map<SparsePoly::Key, Rational, KeyHash> acc;
    acc.reserve(std::min<std::size_t>(a.term_count() * b.term_count(), 1u << 20));
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            auto [it, fresh] = acc.try_emplace(ka + kb);
            if (fresh)
                it->second = ca * cb;
            else
                it->second += ca * cb;
        }
    for (auto& [k, c] : acc)
        if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
    return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
    SparsePoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r = constant(vars_, Rational(1));
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

std::optional<SparsePoly> SparsePoly::divided_exactly_by(const SparsePoly& d) const {
    require_same_vars(d);
    if (d.is_zero()) throw DivisionByZero{};
    const int nv = static_cast<int>(vars_.size());
    const Key dk = d.terms_.begin()->first;
    const Rational& dc = d.terms_.begin()->second;

    auto monomial_divides = [&](Key m) {
        if (degree_of(dk) > degree_of(m)) return false;
        for (int i = 0; i < nv; ++i)
            if (exponent_of(dk, i) > exponent_of(m, i)) return false;
        return true;
    };

    SparsePoly q(vars_);
    TermMap rem = terms_;
    while (!rem.empty()) {
        const Key rk = rem.begin()->first;
        if (!monomial_divides(rk)) return std::nullopt;
        const Key tk = rk - dk;
        const Rational tc = rem.begin()->second / dc;
        q.terms_.emplace_hint(q.terms_.end(), tk, tc);
        // rem -= tc * x^tk * d; the leading term cancels by construction.
        for (const auto& [k, c] : d.terms_) {
            const Key nk = k + tk;
            auto it = rem.find(nk);
            if (it == rem.end()) {
                rem.emplace(nk, -(c * tc));
            } else {
                it->second -= c * tc;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return q;
}

Rational SparsePoly::eval(const std::map<std::string, Rational>& at) const {
    const int nv = static_cast<int>(vars_.size());
    std::vector<const Rational*> vals(nv, nullptr);
    for (int i = 0; i < nv; ++i) {
        auto it = at.find(vars_[i]);
        if (it != at.end()) vals[i] = &it->second;
    }
    std::vector<unsigned> maxexp(nv, 0);
    for (const auto& [k, c] : terms_)
        for (int i = 0; i < nv; ++i) maxexp[i] = std::max(maxexp[i], exponent_of(k, i));
    for (int i = 0; i < nv; ++i)
        if (maxexp[i] > 0 && vals[i] == nullptr)
            throw std::invalid_argument("missing variable '" + vars_[i] + "' in assignment");

    std::vector<std::vector<Rational>> pows(nv);
    for (int i = 0; i < nv; ++i) {
        pows[i].reserve(maxexp[i] + 1);
        pows[i].push_back(Rational(1));
        for (unsigned e = 1; e <= maxexp[i]; ++e) pows[i].push_back(pows[i].back() * *vals[i]);
    }
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nv; ++i) {
            unsigned e = exponent_of(k, i);
            if (e) t *= pows[i][e];
        }
        acc += t;
    }
    return acc;
}

SparsePoly SparsePoly::subst(const std::map<std::string, SparsePoly>& at) const {
    const int nv = static_cast<int>(vars_.size());
    std::vector<SparsePoly> rep(nv);
    for (int i = 0; i < nv; ++i) {
        auto it = at.find(vars_[i]);
        if (it == at.end()) {
            rep[i] = variable(vars_, vars_[i]);
        } else {
            if (it->second.vars() != vars_) throw VariableMismatch{};
            rep[i] = it->second;
        }
    }
    // Power caches, filled lazily per variable.
    std::vector<std::vector<SparsePoly>> pows(nv);
    auto power = [&](int i, unsigned e) -> const SparsePoly& {
        auto& cache = pows[i];
        if (cache.empty()) cache.push_back(constant(vars_, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * rep[i]);
        return cache[e];
    };
    SparsePoly acc(vars_);
    for (const auto& [k, c] : terms_) {
        SparsePoly t = constant(vars_, c);
        for (int i = 0; i < nv; ++i) {
            unsigned e = exponent_of(k, i);
            if (e) t = t * power(i, e);
        }
        acc += t;
    }
    return acc;
}

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational ac = abs(c);
        std::string mono;
        for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
            unsigned e = exponent_of(k, i);
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += ac.str();
        } else {
            if (ac != Rational(1)) {
                out += ac.str();
                out += "*";
            }
            out += mono;
        }
    }
    return out;
}

namespace {

SparsePoly det3(const SparsePoly m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

SparsePoly det4(const SparsePoly m[4][4]) {
    SparsePoly acc(m[0][0].vars());
    for (int j = 0; j < 4; ++j) {
        if (m[0][j].is_zero()) continue;
        SparsePoly minor[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        SparsePoly cof = m[0][j] * det3(minor);
        if (j % 2)
            acc -= cof;
        else
            acc += cof;
    }
    return acc;
}

}  // namespace

SparsePoly resultant_in(const std::string& y, const SparsePoly& p, const SparsePoly& q) {
    if (p.vars() != q.vars()) throw VariableMismatch{};
    if (p.degree_in(y) != 2 || q.degree_in(y) != 2)
        throw std::invalid_argument("resultant_in expects degree exactly 2 in '" + y + "'");
    const SparsePoly p2 = p.coeff_in(y, 2), p1 = p.coeff_in(y, 1), p0 = p.coeff_in(y, 0);
    const SparsePoly q2 = q.coeff_in(y, 2), q1 = q.coeff_in(y, 1), q0 = q.coeff_in(y, 0);
    const SparsePoly z(p.vars());
    const SparsePoly m[4][4] = {
        {p2, p1, p0, z},
        {z, p2, p1, p0},
        {q2, q1, q0, z},
        {z, q2, q1, q0},
    };
    return det4(m);
}

IdentityVerdict random_identity_test(const SparsePoly& p, const SparsePoly& q, IdentityMode mode,
                                     int trials, std::uint64_t seed, long coeff_bound) {
    if (p.vars() != q.vars()) throw VariableMismatch{};
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<long> den(1, coeff_bound);

    IdentityVerdict v;
    v.trials = trials;
    for (int t = 0; t < trials; ++t) {
        std::map<std::string, Rational> at;
        for (const auto& var : p.vars()) at.emplace(var, Rational(num(rng), den(rng)));
        const Rational pv = p.eval(at);
        const Rational qv = q.eval(at);
        if (mode == IdentityMode::equal) {
            ++v.informative;
            if (pv != qv) {
                v.witness = at;
                return v;
            }
        } else {
            if (pv.is_zero() || qv.is_zero()) continue;
            ++v.informative;
            const Rational r = pv / qv;
            if (!v.ratio) {
                v.ratio = r;
            } else if (*v.ratio != r) {
                v.witness = at;
                return v;
            }
        }
    }
    v.pass = true;
    return v;
}

}  // namespace eulertop
