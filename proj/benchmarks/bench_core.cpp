#include <benchmark/benchmark.h>

#include <eulertop/biquad.hpp>
#include <eulertop/euler_map.hpp>
#include <eulertop/poly.hpp>

using namespace eulertop;

namespace {

const TopConfig& ref_config() {
    static const TopConfig cfg(Rational(1), Rational(2), Rational(3), Rational(1));
    return cfg;
}

void BM_map_step_rational(benchmark::State& state) {
    const auto& cfg = ref_config();
    BodyState<Rational> s{Rational(1), Rational(1), Rational(1)};
    // Rational orbits grow digit counts without bound; restart periodically
    // so the benchmark measures a bounded-size step.
    int k = 0;
    for (auto _ : state) {
        s = euler_step(cfg, s);
        if (++k == 8) {
            s = {Rational(1), Rational(1), Rational(1)};
            k = 0;
        }
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_map_step_rational);

void BM_map_step_mpreal(benchmark::State& state) {
    const auto& cfg = ref_config();
    const mpfr_prec_t prec = 256;
    BodyState<MpReal> s{MpReal(Rational(1), prec), MpReal(Rational(1), prec),
                        MpReal(Rational(1), prec)};
    for (auto _ : state) {
        s = euler_step(cfg, s);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_map_step_mpreal);

void BM_invariants_rational(benchmark::State& state) {
    const auto& cfg = ref_config();
    const BodyState<Rational> s{Rational(3, 7), Rational(-5, 2), Rational(11, 13)};
    for (auto _ : state) {
        auto H = invariants(cfg, s);
        benchmark::DoNotOptimize(H);
    }
}
BENCHMARK(BM_invariants_rational);

SparsePoly dense_poly(int terms, unsigned seed) {
    const std::vector<std::string> vars = {"a", "b", "c", "d"};
    SparsePoly p = SparsePoly::constant(vars, Rational(0));
    auto v = [&](int i) { return SparsePoly::variable(vars, vars[i]); };
    unsigned st = seed;
    auto rnd = [&] { return st = st * 1103515245u + 12345u; };
    for (int t = 0; t < terms; ++t) {
        SparsePoly m = SparsePoly::constant(vars, Rational(long(rnd() % 19) - 9));
        for (int i = 0; i < 4; ++i)
            for (unsigned e = rnd() % 3; e > 0; --e) m = m * v(i);
        p = p + m;
    }
    return p;
}

void BM_poly_multiply(benchmark::State& state) {
    const SparsePoly p = dense_poly(24, 2), q = dense_poly(24, 5);
    for (auto _ : state) {
        auto r = p * q;
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_poly_multiply);

void BM_resultant_biquadratics(benchmark::State& state) {
    // The composition oracle's workload: eliminate the middle variable from
    // two copies of the generic biquadratic.
    const std::vector<std::string> vars = {"X", "y", "x", "a", "b", "c", "d", "e", "f"};
    const auto q = generic_params(vars);
    const SparsePoly X = SparsePoly::variable(vars, "X"), y = SparsePoly::variable(vars, "y"),
                     x = SparsePoly::variable(vars, "x");
    const SparsePoly s1 = s_eval(q, y, x), s2 = s_eval(q, X, y);
    for (auto _ : state) {
        auto r = resultant_in("y", s1, s2);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_resultant_biquadratics);

void BM_q_second_symbolic(benchmark::State& state) {
    const auto q = generic_params();
    for (auto _ : state) {
        auto q2 = q_second(q);
        benchmark::DoNotOptimize(q2);
    }
}
BENCHMARK(BM_q_second_symbolic);

void BM_top_params_rational(benchmark::State& state) {
    const auto& cfg = ref_config();
    const BodyState<Rational> s{Rational(3, 7), Rational(-5, 2), Rational(11, 13)};
    const auto H = invariants(cfg, s);
    for (auto _ : state) {
        auto q = top_params(cfg, H, 1);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_top_params_rational);

}  // namespace

BENCHMARK_MAIN();
