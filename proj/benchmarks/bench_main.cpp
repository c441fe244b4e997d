#include <benchmark/benchmark.h>

#include "hypeval/hypergeometric.hpp"
#include "hypeval/kummer.hpp"
#include "hypeval/recurrence.hpp"
#include "hypeval/sampling.hpp"
#include "hypeval/transforms.hpp"

using namespace hypeval;

// coeff() memoizes, so expand the terminating form each iteration.
static void BM_CoefficientExpansion(benchmark::State& state)
{
    const long n = state.range(0);
    for (auto _ : state) {
        CoeffForm f = coeff_form(Coefficient::P, n, CoeffVariant::thm2);
        RatFunc v = f.series ? f.prefactor * sum_terminating(*f.series) : f.prefactor;
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_CoefficientExpansion)->DenseRange(2, 12, 2);

static void BM_RatFuncEquality(benchmark::State& state)
{
    const long n = state.range(0);
    RatFunc x = coeff(Coefficient::Q, n, CoeffVariant::thm1);
    RatFunc y = coeff(Coefficient::Q, n, CoeffVariant::alt_c);
    for (auto _ : state) benchmark::DoNotOptimize(equal(x, y));
}
BENCHMARK(BM_RatFuncEquality)->Arg(4)->Arg(8);

template <class Real>
static void BM_GenkumResidual(benchmark::State& state)
{
    Sampler s(7);
    Point p = s.genkum_point();
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(genkum_residual<Real>(n, p));
}
BENCHMARK(BM_GenkumResidual<double>)->Arg(-5)->Arg(0)->Arg(5);
BENCHMARK(BM_GenkumResidual<long double>)->Arg(0);
BENCHMARK(BM_GenkumResidual<Quad>)->Arg(0);

template <class Real>
static void BM_TwoFOneAtMinusOne(benchmark::State& state)
{
    const BigRational A(13, 2), B(1, 4), C(17, 4);
    for (auto _ : state) benchmark::DoNotOptimize(eval_2f1_neg1<Real>(A, B, C).value);
}
BENCHMARK(BM_TwoFOneAtMinusOne<double>);
BENCHMARK(BM_TwoFOneAtMinusOne<long double>);
BENCHMARK(BM_TwoFOneAtMinusOne<Quad>);

static void BM_Certificate(benchmark::State& state)
{
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(CertificateFamily::p_cert, n));
}
BENCHMARK(BM_Certificate)->Arg(4)->Arg(8)->Arg(12);

static void BM_Orbit(benchmark::State& state)
{
    Sampler s(7);
    OrbitLabel label = s.orbit_label(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(orbit_terminating(label));
}
BENCHMARK(BM_Orbit)->DenseRange(0, 3);

BENCHMARK_MAIN();
