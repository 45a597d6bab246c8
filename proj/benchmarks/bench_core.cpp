#include <benchmark/benchmark.h>

#include <random>

#include "accyc/almost_cyclic.hpp"
#include "accyc/groupscan.hpp"
#include "accyc/screening.hpp"

using namespace accyc;

namespace {

Mat random_mat(const Field& F, size_t n, std::mt19937_64& rng) {
  std::vector<uint32_t> e(n * n);
  for (auto& x : e) x = (uint32_t)(rng() % F->q());
  return Mat(F, n, n, e);
}

void FieldMul(benchmark::State& state) {
  Field F = field_create(2, (uint32_t)state.range(0));
  uint32_t a = F->generator(), b = F->q() - 1;
  for (auto _ : state) {
    a = F->mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(FieldMul)->Arg(1)->Arg(8)->Arg(16)->Arg(20);

void MatMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Field F = field_create(3, 1);
  size_t n = state.range(0);
  Mat a = random_mat(F, n, rng), b = random_mat(F, n, rng);
  for (auto _ : state) {
    Mat c = mat_mul(a, b);
    benchmark::DoNotOptimize(c.entries().data());
  }
  state.SetComplexityN(n);
}
BENCHMARK(MatMul)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void Charpoly(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Field F = field_create(3, 1);
  Mat a = random_mat(F, state.range(0), rng);
  for (auto _ : state) {
    Poly p = charpoly(a);
    benchmark::DoNotOptimize(p.coeffs().data());
  }
}
BENCHMARK(Charpoly)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void InvariantFactors(benchmark::State& state) {
  std::mt19937_64 rng(3);
  Field F = field_create(2, 1);
  Mat a = random_mat(F, state.range(0), rng);
  for (auto _ : state) {
    auto fs = invariant_factors(a);
    benchmark::DoNotOptimize(fs.data());
  }
}
BENCHMARK(InvariantFactors)->Arg(4)->Arg(6)->Arg(8);

void StrictVerdict(benchmark::State& state) {
  std::mt19937_64 rng(4);
  Field F = field_create(2, 1);
  Mat a = random_mat(F, state.range(0), rng);
  for (auto _ : state) {
    Verdict v = is_almost_cyclic(a, Mode::Strict);
    benchmark::DoNotOptimize(v.almost_cyclic);
  }
}
BENCHMARK(StrictVerdict)->Arg(4)->Arg(7)->Arg(12);

void ClosureGL25(benchmark::State& state) {
  Field F = field_create(5, 1);
  GroupSpec spec = gl_group(2, F);
  for (auto _ : state) {
    ClosureResult c = closure_enumerate(spec, 1000);
    benchmark::DoNotOptimize(c.order);
  }
}
BENCHMARK(ClosureGL25);

void ScreenRule(benchmark::State& state) {
  Rule rule;
  rule.id = "bench";
  rule.family = "psl3";
  rule.consts["n"] = 3;
  rule.grid.vars.push_back({"q", VarSpec::Kind::PrimePower, 5, 199});
  rule.dim_id = "gmst2.A";
  rule.alpha = "worst";
  rule.cap_id = "mu-psl";
  rule.expect = {{5}, {7}, {13}};
  for (auto _ : state) {
    SurvivorReport rep = screen(rule);
    benchmark::DoNotOptimize(rep.survivors.size());
  }
}
BENCHMARK(ScreenRule);

}  // namespace

BENCHMARK_MAIN();
