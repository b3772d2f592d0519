#include <benchmark/benchmark.h>

#include "generators.hpp"

namespace {

using namespace lrel;

const Complex kI(0.0, 1.0);

void BM_Orthonormalize(benchmark::State& state) {
  const Index n = state.range(0);
  testing::Gen gen(1);
  const Matrix m = gen.matrix(2 * n, n);
  for (auto _ : state) benchmark::DoNotOptimize(orthonormalize(m));
}
BENCHMARK(BM_Orthonormalize)->RangeMultiplier(2)->Range(4, 64);

void BM_Intersect(benchmark::State& state) {
  const Index n = state.range(0);
  testing::Gen gen(2);
  const Subspace a = gen.subspace(n, n / 2 + 1);
  const Subspace b = gen.subspace(n, n / 2 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_Intersect)->RangeMultiplier(2)->Range(4, 64);

void BM_Adjoint(benchmark::State& state) {
  testing::Gen gen(3);
  const Relation t = gen.relation(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adjoint(t));
}
BENCHMARK(BM_Adjoint)->RangeMultiplier(2)->Range(4, 64);

void BM_ZTransform(benchmark::State& state) {
  testing::Gen gen(4);
  const Relation t = gen.relation(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(z_transform(t, kI));
}
BENCHMARK(BM_ZTransform)->RangeMultiplier(2)->Range(4, 64);

void BM_Classify(benchmark::State& state) {
  testing::Gen gen(5);
  const Relation t = gen.dissipative(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify(t));
}
BENCHMARK(BM_Classify)->RangeMultiplier(2)->Range(4, 64);

void BM_ReductionCertificates(benchmark::State& state) {
  testing::Gen gen(6);
  const auto pair = gen.reducing_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduction_certificates(pair.t, pair.k));
}
BENCHMARK(BM_ReductionCertificates)->RangeMultiplier(2)->Range(4, 32);

void BM_NflDecompose(benchmark::State& state) {
  const Index n = state.range(0);
  testing::Gen gen(7);
  Matrix d = Matrix::Zero(n, n);
  d.topLeftCorner(n / 2, n / 2) = gen.unitary(n / 2);
  d.bottomRightCorner(n - n / 2, n - n / 2) = gen.contraction_matrix(n - n / 2, 0.9);
  const Matrix q = gen.unitary(n);
  const Relation v = from_operator(q * d * q.adjoint());
  for (auto _ : state) benchmark::DoNotOptimize(nfl_decompose(v));
}
BENCHMARK(BM_NflDecompose)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_ShiftExample(benchmark::State& state) {
  shift_model::WindowConfig w;
  w.n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(shift_model::run_example(w));
}
BENCHMARK(BM_ShiftExample)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
