#include <benchmark/benchmark.h>

#include <string>

#include "bennequin/bounds.hpp"
#include "bennequin/braid.hpp"
#include "bennequin/corpus.hpp"
#include "bennequin/front.hpp"

namespace {

std::string long_braid_text() {
  return bennequin::render(bennequin::torus_braid(8, 143));  // 1001 letters
}

std::string long_front_text() {
  std::string text = "L1";
  for (int i = 0; i < 200; ++i) text += " X1";
  return text + " R1";
}

void BM_BraidParse(benchmark::State& state) {
  std::string text = long_braid_text();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bennequin::BraidWord::parse(text));
  }
}
BENCHMARK(BM_BraidParse);

void BM_ClosureComponents(benchmark::State& state) {
  bennequin::BraidWord word = bennequin::torus_braid(8, 143);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bennequin::component_count(word));
  }
}
BENCHMARK(BM_ClosureComponents);

void BM_SharpBoundFromBraid(benchmark::State& state) {
  bennequin::BraidWord word = bennequin::torus_braid(5, 101);  // knot closure
  for (auto _ : state) {
    benchmark::DoNotOptimize(bennequin::sharp_bound_from_braid(word));
  }
}
BENCHMARK(BM_SharpBoundFromBraid);

void BM_FrontInvariants(benchmark::State& state) {
  bennequin::FrontDiagram front = bennequin::FrontDiagram::parse(long_front_text());
  for (auto _ : state) {
    bennequin::OrientedFront oriented = bennequin::orient(front);
    benchmark::DoNotOptimize(bennequin::thurston_bennequin(oriented));
    benchmark::DoNotOptimize(bennequin::rotation_number(oriented));
  }
}
BENCHMARK(BM_FrontInvariants);

void BM_TorusCorpusVerify(benchmark::State& state) {
  std::vector<bennequin::CorpusRecord> records = bennequin::torus_corpus(13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bennequin::verify_corpus(records));
  }
}
BENCHMARK(BM_TorusCorpusVerify);

}  // namespace

BENCHMARK_MAIN();
