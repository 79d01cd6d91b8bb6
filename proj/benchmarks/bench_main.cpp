#include <benchmark/benchmark.h>

#include "acm5/family.hpp"

using namespace acm5;

namespace {

FamilyParams point(int64_t i) {
  static const FamilyParams ps[] = {{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 0, 2, 0}, {3, 4, 0, 0}};
  return ps[i];
}

}  // namespace

static void Wedge(benchmark::State& state) {
  Form a = frame::e(1, 2) + frame::e(3, 4), b = frame::e(1, 3) - frame::e(2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(Wedge);

static void Hodge(benchmark::State& state) {
  Form a = frame::e(1, 2) + Scalar(Rational(3, 7)) * frame::e(2, 5) - frame::e(3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(hodge(a));
}
BENCHMARK(Hodge);

static void Build(benchmark::State& state) {
  FamilyParams p = point(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build(p));
}
BENCHMARK(Build)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void Koszul(benchmark::State& state) {
  auto c = build(point(state.range(0))).coframe;
  for (auto _ : state) benchmark::DoNotOptimize(koszul_connection(c));
}
BENCHMARK(Koszul)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void AcmTensorsPointwise(benchmark::State& state) {
  auto w = build(point(state.range(0))).omega_g;
  for (auto _ : state) benchmark::DoNotOptimize(acm_tensors(w));
}
BENCHMARK(AcmTensorsPointwise)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void Classify(benchmark::State& state) {
  auto gamma = intrinsic_torsion(build(point(state.range(0))).omega_g);
  w_subspaces();
  for (auto _ : state) benchmark::DoNotOptimize(classify(gamma));
}
BENCHMARK(Classify)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void CharConnection(benchmark::State& state) {
  auto inst = build(point(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_connection(inst.coframe, inst.omega_g));
}
BENCHMARK(CharConnection)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void VerifyIdentities(benchmark::State& state) {
  auto inst = build(point(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(inst));
}
BENCHMARK(VerifyIdentities)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void IdentifyGroup(benchmark::State& state) {
  FamilyParams p = point(state.range(0) == 2 ? 3 : state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(identify_group(p));
}
BENCHMARK(IdentifyGroup)->DenseRange(0, 1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
