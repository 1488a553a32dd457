#include <benchmark/benchmark.h>

#include <random>

#include "qres/chart.hpp"
#include "qres/collection.hpp"
#include "qres/diffops.hpp"
#include "qres/qmodule.hpp"
#include "qres/sequence.hpp"

using namespace qres;

namespace {

Polynomial random_poly(const RingPtr &ring, std::mt19937_64 &rng,
                       uint32_t max_exp, size_t terms) {
  std::uniform_int_distribution<uint32_t> expd(0, max_exp);
  std::uniform_int_distribution<int64_t> coeff(1, ring->p() - 1);
  Polynomial f(ring);
  for (size_t t = 0; t < terms; ++t) {
    ExpVec e(ring->nvars());
    for (auto &x : e)
      x = expd(rng);
    f.add_term(e, coeff(rng));
  }
  return f;
}

void BM_poly_multiply(benchmark::State &state) {
  auto r = make_ring(3, {"x1", "x2", "x3", "x4"});
  std::mt19937_64 rng(1);
  Polynomial a = random_poly(r, rng, 8, size_t(state.range(0)));
  Polynomial b = random_poly(r, rng, 8, size_t(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_multiply)->Arg(8)->Arg(32)->Arg(128);

void BM_q_expand(benchmark::State &state) {
  auto r = make_ring(3, {"x1", "x2", "x3", "x4"});
  std::mt19937_64 rng(2);
  Polynomial f = random_poly(r, rng, 20, size_t(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(q_expand(f, 3));
}
BENCHMARK(BM_q_expand)->Arg(16)->Arg(64)->Arg(256);

void BM_diff_plus(benchmark::State &state) {
  auto r = make_ring(3, {"x1", "x2", "x3", "x4", "x5"});
  std::mt19937_64 rng(3);
  QModule M = normal_form(r, 1, {random_poly(r, rng, 6, 12)});
  for (auto _ : state)
    benchmark::DoNotOptimize(diff_plus_ideal(M, 2));
}
BENCHMARK(BM_diff_plus);

void BM_eta_origin(benchmark::State &state) {
  auto r = make_ring(3, {"x1", "x2", "x3", "x4", "x5"});
  std::mt19937_64 rng(4);
  QModule M = normal_form(r, 1, {random_poly(r, rng, 6, 12)});
  PointSpec o = PointSpec::origin(5);
  for (auto _ : state)
    benchmark::DoNotOptimize(eta_at(M, o));
}
BENCHMARK(BM_eta_origin);

void BM_five_var_sequence(benchmark::State &state) {
  auto r = make_ring(3, {"x1", "x2", "x3", "x4", "x5"});
  ExpVec all_ones(5, 1);
  SequenceJob job;
  job.ring = r;
  job.e = 1;
  job.generators = {Polynomial::monomial(r, all_ones, 1)};
  job.ctx = LogContext::trivial(r);
  job.steps = {StepSpec{{0, 1, 2, 3, 4}, 0, true, 0},
               StepSpec{{1, 2, 3, 4}, 1, true, 0},
               StepSpec{{2, 3, 4}, 2, true, 0}};
  for (auto _ : state)
    benchmark::DoNotOptimize(run_sequence(job));
}
BENCHMARK(BM_five_var_sequence);

} // namespace

BENCHMARK_MAIN();
