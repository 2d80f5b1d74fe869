#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "qtheta/barnes.hpp"
#include "qtheta/hkernel.hpp"
#include "qtheta/lfun.hpp"
#include "qtheta/shintani.hpp"

using Complex = std::complex<double>;
namespace barnes = qtheta::barnes;
namespace hkernel = qtheta::hkernel;
namespace shintani = qtheta::shintani;

namespace {

const double kEps5 = (3.0 + std::sqrt(5.0)) / 2.0;

void BM_hurwitz_zeta(benchmark::State& state) {
    const Complex s(0.5, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(barnes::hurwitz_zeta(s, 0.3));
}
BENCHMARK(BM_hurwitz_zeta);

void BM_log_gamma2_r(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const barnes::PeriodPair w(1.0, kEps5);
    for (auto _ : state)
        benchmark::DoNotOptimize(barnes::log_gamma2_r(r, Complex(0.7, 0.0), w));
}
BENCHMARK(BM_log_gamma2_r)->Arg(1)->Arg(2)->Arg(3);

void BM_double_sine(benchmark::State& state) {
    const barnes::PeriodPair w(1.0, std::sqrt(2.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(barnes::double_sine(Complex(0.3, 0.0), w));
}
BENCHMARK(BM_double_sine);

void BM_coeff_C(benchmark::State& state) {
    const hkernel::KernelParams p{Complex(6.0, 0.0), Complex(0.2, 0.0),
                                  {1.0, 2.0}, 0.3, 0.5};
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hkernel::coeff_C(N, Complex(0.8, 0.35), p));
}
BENCHMARK(BM_coeff_C)->Arg(1)->Arg(4)->Arg(8);

void BM_tail_sum_J(benchmark::State& state) {
    const hkernel::KernelParams p{Complex(6.0, 0.0), Complex(0.2, 0.0),
                                  {1.0, 2.0}, 0.3, 0.5};
    for (auto _ : state)
        benchmark::DoNotOptimize(hkernel::tail_sum_J(1, Complex(0.9, 0.0), p, 1e-10));
}
BENCHMARK(BM_tail_sum_J);

void BM_zeta_contour(benchmark::State& state) {
    const shintani::ShintaniParams ps(kEps5, 1.0 / kEps5, 0.2, 0.2);
    const Complex s(0.0, 0.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(shintani::zeta_contour(s, ps));
}
BENCHMARK(BM_zeta_contour)->Unit(benchmark::kMillisecond);

void BM_zeta_direct(benchmark::State& state) {
    const shintani::ShintaniParams ps(kEps5, 1.0 / kEps5, 0.2, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(shintani::zeta_direct(Complex(1.5, 0.0), ps));
}
BENCHMARK(BM_zeta_direct);

void BM_zeta_deriv_m(benchmark::State& state) {
    const shintani::ShintaniParams ps(kEps5, 1.0 / kEps5, 0.2, 0.2);
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(shintani::zeta_deriv_m(m, ps));
}
BENCHMARK(BM_zeta_deriv_m)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
