#include <benchmark/benchmark.h>

#include "simplexlab/fp.hpp"
#include "simplexlab/mmm.hpp"
#include "simplexlab/simplex.hpp"
#include "simplexlab/survey.hpp"
#include "simplexlab/width.hpp"

using namespace simplexlab;

namespace {

void BM_EmptinessScan(benchmark::State& state) {
  CyclicSimplexSpec spec(static_cast<std::int64_t>(state.range(0)),
                         {1, 8, 17, 42});  // empty class at determinant 65
  for (auto _ : state) {
    auto res = is_empty(spec);
    benchmark::DoNotOptimize(res.empty);
  }
}
BENCHMARK(BM_EmptinessScan)->Arg(65);

void BM_CosetWalk(benchmark::State& state) {
  SuperLattice d(4, state.range(0), {{1, 8, 17, 42}});
  for (auto _ : state) {
    std::int64_t sum = 0;
    d.for_each_coset([&](std::span<const std::int64_t> num) {
      sum += num[0];
      return true;
    });
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_CosetWalk)->Arg(65);

void BM_WidthSearch(benchmark::State& state) {
  CyclicSimplexSpec spec(65, {59, 51, 48, 1});  // width 3, several box passes
  for (auto _ : state) {
    WidthCertificate cert = width(spec);
    benchmark::DoNotOptimize(cert.width);
  }
}
BENCHMARK(BM_WidthSearch);

void BM_CanonicalForm(benchmark::State& state) {
  CyclicSimplexSpec spec(65, {59, 51, 48, 1});
  for (auto _ : state) {
    CanonicalForm c = canonical_form(spec);
    benchmark::DoNotOptimize(c.tuple[0]);
  }
}
BENCHMARK(BM_CanonicalForm);

void BM_Lemma3(benchmark::State& state) {
  for (auto _ : state) {
    fp::LemmaReport r = fp::verify_lemma3(state.range(0));
    benchmark::DoNotOptimize(r.failures);
  }
}
BENCHMARK(BM_Lemma3)->Arg(5)->Arg(7);

void BM_EnumerateEmpty(benchmark::State& state) {
  for (auto _ : state) {
    auto classes = enumerate_empty(state.range(0));
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_EnumerateEmpty)->Arg(30)->Arg(50);

void BM_NoncyclicSearch(benchmark::State& state) {
  for (auto _ : state) {
    NoncyclicSearchReport rep = search_noncyclic_terminal(state.range(0));
    benchmark::DoNotOptimize(rep.empty_found);
  }
}
BENCHMARK(BM_NoncyclicSearch)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
