#include "eulertop/perisearch.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>

#include "eulertop/varieties.hpp"

namespace eulertop {

SearchRegion SearchRegion::cube(double lo, double hi, int resolution) {
    SearchRegion r;
    r.box = {{{lo, hi}, {lo, hi}, {lo, hi}}};
    r.grid_resolution = resolution;
    r.validate();
    return r;
}

void SearchRegion::validate() const {
    for (const auto& iv : box)
        if (!(iv[0] < iv[1])) throw std::invalid_argument("search box interval is empty");
    if (grid_resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
    if (newton_max_iters < 1) throw std::invalid_argument("need at least one Newton iteration");
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::fixed_axis: return "fixed_axis";
        case Classification::singular_set: return "singular_set";
        case Classification::on_v3: return "on_v3";
        case Classification::genuine: return "genuine";
    }
    return "?";
}

namespace {

template <typename S>
MpReal residual_impl(const TopConfig& cfg, const BodyState<S>& s, long n) {
    if (n < 1) throw std::invalid_argument("period must be at least 1");
    BodyState<S> cur = s;
    for (long k = 0; k < n; ++k) cur = euler_step(cfg, cur, static_cast<int>(k));
    return max_abs_diff(cur, s);
}

}  // namespace

MpReal period_residual(const TopConfig& cfg, const BodyState<MpReal>& s, long n) {
    return residual_impl(cfg, s, n);
}

MpReal period_residual(const TopConfig& cfg, const BodyState<BigComplex>& s, long n) {
    return residual_impl(cfg, s, n);
}

MpReal period_residual(const TopConfig& cfg, const BodyState<Rational>& s, long n,
                       mpfr_prec_t precision) {
    const BodyState<MpReal> lifted{MpReal(s.x1, precision), MpReal(s.x2, precision),
                                   MpReal(s.x3, precision)};
    return residual_impl(cfg, lifted, n);
}

namespace {

using Vec3 = std::array<MpReal, 3>;

Vec3 make_vec(mpfr_prec_t prec) {
    return {MpReal(0.0, prec), MpReal(0.0, prec), MpReal(0.0, prec)};
}

MpReal norm_inf(const Vec3& v) { return max(max(abs(v[0]), abs(v[1])), abs(v[2])); }

struct Workspace {
    const TopConfig& cfg;
    long n;
    mpfr_prec_t prec;

    std::optional<Vec3> eval(const Vec3& x) const {
        BodyState<MpReal> s{x[0], x[1], x[2]};
        BodyState<MpReal> cur = s;
        try {
            for (long k = 0; k < n; ++k) cur = euler_step(cfg, cur, static_cast<int>(k));
        } catch (const SingularPoint&) {
            return std::nullopt;
        }
        return Vec3{cur.x1 - s.x1, cur.x2 - s.x2, cur.x3 - s.x3};
    }

    // Central differences, step max(1,|x_j|) 2^-60 per column.
    std::optional<std::array<Vec3, 3>> jacobian(const Vec3& x) const {
        const MpReal one(1L, prec);
        std::array<Vec3, 3> cols{make_vec(prec), make_vec(prec), make_vec(prec)};
        for (int j = 0; j < 3; ++j) {
            const MpReal h = ldexp(max(one, abs(x[j])), -60);
            Vec3 xp = x, xm = x;
            xp[j] = xp[j] + h;
            xm[j] = xm[j] - h;
            const auto fp = eval(xp), fm = eval(xm);
            if (!fp || !fm) return std::nullopt;
            const MpReal scale = ldexp(h, 1);  // 2h
            for (int i = 0; i < 3; ++i) cols[j][i] = ((*fp)[i] - (*fm)[i]) / scale;
        }
        return cols;
    }
};

// Gaussian elimination with partial pivoting; cols are Jacobian columns.
std::optional<Vec3> solve3(const std::array<Vec3, 3>& cols, const Vec3& rhs, mpfr_prec_t prec) {
    MpReal m[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = cols[j][i];
        m[i][3] = rhs[i];
    }
    const MpReal tiny = MpReal::parse("1e-60", prec);
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (abs(m[r][col]) > abs(m[piv][col])) piv = r;
        if (!(abs(m[piv][col]) > tiny)) return std::nullopt;
        if (piv != col)
            for (int j = col; j < 4; ++j) std::swap(m[col][j], m[piv][j]);
        for (int r = col + 1; r < 3; ++r) {
            const MpReal f = m[r][col] / m[col][col];
            for (int j = col; j < 4; ++j) m[r][j] = m[r][j] - f * m[col][j];
        }
    }
    Vec3 out = make_vec(prec);
    for (int i = 2; i >= 0; --i) {
        MpReal acc = m[i][3];
        for (int j = i + 1; j < 3; ++j) acc = acc - m[i][j] * out[j];
        out[i] = acc / m[i][i];
    }
    return out;
}

struct RawCandidate {
    long index;
    Vec3 state;
    MpReal residual;
};

bool state_less(const Vec3& a, const Vec3& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    if (a[1] != b[1]) return a[1] < b[1];
    return a[2] < b[2];
}

}  // namespace

SearchReport newton_periodic_search(const TopConfig& cfg, long n, const SearchRegion& region,
                                    std::uint64_t seed) {
    region.validate();
    if (n < 1) throw std::invalid_argument("period must be at least 1");
    const mpfr_prec_t prec = region.precision;
    const Workspace ws{cfg, n, prec};
    const int res = region.grid_resolution;
    const long total = static_cast<long>(res) * res * res;

    const MpReal conv = MpReal(region.convergence_tol, prec);
    const MpReal near_singular = MpReal(1e-6, prec);
    const MpReal snap = MpReal(region.dedup_radius, prec);

    // Grid nodes per axis, exact doubles lifted once.
    std::array<std::vector<MpReal>, 3> nodes;
    for (int axis = 0; axis < 3; ++axis) {
        const double lo = region.box[axis][0], hi = region.box[axis][1];
        nodes[axis].reserve(res);
        for (int i = 0; i < res; ++i)
            nodes[axis].push_back(MpReal(lo + (hi - lo) * i / (res - 1), prec));
    }

    struct Shard {
        std::vector<RawCandidate> found;
        long converged = 0, dropped = 0, near_singular = 0;
    };
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned nthreads = std::min<unsigned>(hw, 8);
    std::vector<Shard> shards(nthreads);

    auto run_range = [&](long lo_idx, long hi_idx, Shard& shard) {
        for (long idx = lo_idx; idx < hi_idx; ++idx) {
            const int i = static_cast<int>(idx / (static_cast<long>(res) * res));
            const int j = static_cast<int>((idx / res) % res);
            const int k = static_cast<int>(idx % res);
            Vec3 x{nodes[0][i], nodes[1][j], nodes[2][k]};

            {
                const XiPoint<MpReal> xi =
                    xi_from_state(cfg, BodyState<MpReal>{x[0], x[1], x[2]});
                if (abs(singular_quartic(xi)) <= near_singular) ++shard.near_singular;
            }

            auto fx = ws.eval(x);
            if (!fx) {
                ++shard.dropped;
                continue;
            }
            bool converged = false;
            for (int iter = 0; iter < region.newton_max_iters; ++iter) {
                if (norm_inf(*fx) <= conv) {
                    converged = true;
                    break;
                }
                const auto J = ws.jacobian(x);
                if (!J) break;
                const Vec3 rhs{-(*fx)[0], -(*fx)[1], -(*fx)[2]};
                const auto d = solve3(*J, rhs, prec);
                if (!d) break;
                bool accepted = false;
                MpReal lambda(1L, prec);
                const MpReal fnorm = norm_inf(*fx);
                for (int halve = 0; halve < 13; ++halve) {
                    const Vec3 xn{x[0] + lambda * (*d)[0], x[1] + lambda * (*d)[1],
                                  x[2] + lambda * (*d)[2]};
                    const auto fn = ws.eval(xn);
                    if (fn && norm_inf(*fn) < fnorm) {
                        x = xn;
                        fx = fn;
                        accepted = true;
                        break;
                    }
                    lambda = ldexp(lambda, -1);
                }
                if (!accepted) break;
            }
            if (!converged && fx && norm_inf(*fx) <= conv) converged = true;
            if (converged) {
                // Roots on the fixed axes are degenerate (the residual there is a
                // product of small terms), so Newton stalls with near-zero coordinates
                // orders of magnitude above the convergence scale. Zero those
                // coordinates and keep the snapped state only if it still satisfies
                // the periodicity equation; axis points then come out exact.
                Vec3 polished = x;
                bool snapped = false;
                for (int c = 0; c < 3; ++c) {
                    if (abs(polished[c]) <= snap && !(polished[c] == MpReal(0L, prec))) {
                        polished[c] = MpReal(0L, prec);
                        snapped = true;
                    }
                }
                if (snapped) {
                    const auto fs = ws.eval(polished);
                    if (fs && norm_inf(*fs) <= conv) {
                        x = polished;
                        fx = fs;
                    }
                }
                ++shard.converged;
                shard.found.push_back(RawCandidate{idx, x, norm_inf(*fx)});
            } else {
                ++shard.dropped;
            }
        }
    };

    if (nthreads == 1) {
        run_range(0, total, shards[0]);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (total + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            const long lo = static_cast<long>(t) * chunk;
            const long hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, lo, hi, std::ref(shards[t]));
        }
        for (auto& th : pool) th.join();
    }

    SearchReport rep;
    rep.period = n;
    rep.starts = total;
    rep.seed = seed;
    std::vector<RawCandidate> all;
    for (auto& sh : shards) {
        rep.converged += sh.converged;
        rep.dropped += sh.dropped;
        rep.near_singular_starts += sh.near_singular;
        for (auto& c : sh.found) all.push_back(std::move(c));
    }
    std::sort(all.begin(), all.end(), [](const RawCandidate& a, const RawCandidate& b) {
        if (state_less(a.state, b.state)) return true;
        if (state_less(b.state, a.state)) return false;
        return a.index < b.index;
    });

    const MpReal radius = MpReal(region.dedup_radius, prec);
    const MpReal cls = MpReal(region.classification_tol, prec);

    // Cluster converged roots; each cluster is represented by its sharpest member.
    std::vector<RawCandidate> reps;
    for (const auto& cand : all) {
        bool dup = false;
        for (auto& rep : reps) {
            const MpReal d =
                max(max(abs(cand.state[0] - rep.state[0]), abs(cand.state[1] - rep.state[1])),
                    abs(cand.state[2] - rep.state[2]));
            if (d <= radius) {
                if (cand.residual < rep.residual) rep = cand;
                dup = true;
                break;
            }
        }
        if (!dup) reps.push_back(cand);
    }

    for (const auto& cand : reps) {
        CandidateReport out;
        out.state = BodyState<MpReal>{cand.state[0], cand.state[1], cand.state[2]};
        out.period = n;
        out.residual = cand.residual;

        const XiPoint<MpReal> xi = xi_from_state(cfg, out.state);
        out.distance_to_singular = abs(singular_quartic(xi));
        const int small = (abs(cand.state[0]) <= cls ? 1 : 0) +
                          (abs(cand.state[1]) <= cls ? 1 : 0) +
                          (abs(cand.state[2]) <= cls ? 1 : 0);
        if (small >= 2)
            out.classification = Classification::fixed_axis;
        else if (out.distance_to_singular <= cls)
            out.classification = Classification::singular_set;
        else if (abs(v3_condition(xi)) <= cls)
            out.classification = Classification::on_v3;
        else
            out.classification = Classification::genuine;

        // residual again at doubled precision, from the same point
        const mpfr_prec_t wide = prec * 2;
        const BodyState<MpReal> lifted{cand.state[0].at_precision(wide),
                                       cand.state[1].at_precision(wide),
                                       cand.state[2].at_precision(wide)};
        try {
            const MpReal r2 = period_residual(cfg, lifted, n);
            out.reverified = r2 <= MpReal(region.convergence_tol, wide);
        } catch (const SingularPoint&) {
            out.reverified = false;
        }
        rep.candidates.push_back(std::move(out));
    }
    return rep;
}

}  // namespace eulertop
