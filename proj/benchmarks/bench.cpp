#include <benchmark/benchmark.h>

#include "qtwist/apoly/apoly.hpp"
#include "qtwist/jones/jones.hpp"
#include "qtwist/qrec/qrec.hpp"
#include "qtwist/volnum/volnum.hpp"

using namespace qtwist;

static void BM_ColoredJones(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jones::colored_jones(2, n));
}
BENCHMARK(BM_ColoredJones)->Arg(4)->Arg(8)->Arg(12);

static void BM_Multisum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jones::colored_jones_multisum(jones::Named::FiveTwo, n));
}
BENCHMARK(BM_Multisum)->Arg(4)->Arg(8);

static void BM_VerifyAj(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(apoly::verify_aj(p));
}
BENCHMARK(BM_VerifyAj)->Arg(-6)->Arg(2)->Arg(6);

static void BM_KFreeInterior(benchmark::State& state) {
  const auto spec = qrec::load_recurrence(std::string(QTWIST_FIXTURE_DIR) + "/five_two_kfree.rec");
  for (auto _ : state) benchmark::DoNotOptimize(qrec::check_kfree(spec, 6, 9));
}
BENCHMARK(BM_KFreeInterior)->Unit(benchmark::kMillisecond);

static void BM_Jhat(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(volnum::jhat(jones::TwistKnot{-1}, n, 128));
}
BENCHMARK(BM_Jhat)->Arg(25)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_OptimisticVolume(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(volnum::optimistic_volume(p, 128));
}
BENCHMARK(BM_OptimisticVolume)->Arg(-1)->Arg(2)->Arg(-4)->Unit(benchmark::kMillisecond);

static void BM_Dilog(benchmark::State& state) {
  const exactalg::Complex z(0.3, 0.8, 128);
  for (auto _ : state) benchmark::DoNotOptimize(volnum::bloch_wigner(z, static_cast<mpfr_prec_t>(state.range(0))));
}
BENCHMARK(BM_Dilog)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
