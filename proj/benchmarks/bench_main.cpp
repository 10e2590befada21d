#include <benchmark/benchmark.h>

#include <random>

#include "zsub/classify.hpp"
#include "zsub/corpus.hpp"
#include "zsub/green.hpp"
#include "zsub/int_semigroup.hpp"
#include "zsub/pm_family.hpp"
#include "zsub/subdirect.hpp"

using namespace zsub;

namespace {

  void BM_JDecompositionT3(benchmark::State& state) {
    auto const S = corpus::full_transformation(3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(JDecomposition(S));
    }
  }
  BENCHMARK(BM_JDecompositionT3);

  void BM_ClassifyStandardCorpus(benchmark::State& state) {
    auto const corpus = corpus::standard();
    for (auto _ : state) {
      for (auto const& e : corpus) {
        benchmark::DoNotOptimize(classify(e.semigroup));
      }
    }
  }
  BENCHMARK(BM_ClassifyStandardCorpus);

  // Sum of two eventually periodic sets with the given period.
  void BM_ZSetSum(benchmark::State& state) {
    auto const d = state.range(0);
    auto a = unite(ZSet::of({-7, 3, 11}), ZSet::ray(20, d, ZSet::Direction::Up));
    auto b = unite(ZSet::of({0, 5}), ZSet::ray(-4, d + 1, ZSet::Direction::Down));
    for (auto _ : state) {
      benchmark::DoNotOptimize(a + b);
    }
  }
  BENCHMARK(BM_ZSetSum)->Arg(2)->Arg(6)->Arg(12);

  void BM_IntClassify(benchmark::State& state) {
    std::mt19937_64                             rng(7);
    std::uniform_int_distribution<std::int64_t> val(1, state.range(0));
    std::vector<std::vector<std::int64_t>>      sets(64);
    for (auto& s : sets) {
      for (int i = 0; i < 4; ++i) {
        s.push_back(val(rng));
      }
    }
    for (auto _ : state) {
      for (auto const& s : sets) {
        benchmark::DoNotOptimize(classify_int_subsemigroup(s));
      }
    }
  }
  BENCHMARK(BM_IntClassify)->Arg(20)->Arg(200);

  // One generator (+-1, x) per element: the closure of the whole of Z x S.
  void BM_StructuredClosure(benchmark::State& state) {
    auto const         S = state.range(0) == 0 ? corpus::full_transformation(3)
                                               : corpus::symmetric_group_3();
    std::vector<ZPair> gens;
    for (auto x : S.elements()) {
      gens.push_back({3, x});
      gens.push_back({-2, x});
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(structured_closure(S, gens));
    }
    state.SetLabel(state.range(0) == 0 ? "T3" : "S3");
  }
  BENCHMARK(BM_StructuredClosure)->Arg(0)->Arg(1);

  void BM_WindowedClosure(benchmark::State& state) {
    auto const         S = corpus::symmetric_group_3();
    std::vector<ZPair> gens;
    for (auto x : S.elements()) {
      gens.push_back({3, x});
      gens.push_back({-2, x});
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(windowed_closure(S, gens, state.range(0)));
    }
  }
  BENCHMARK(BM_WindowedClosure)->Arg(50)->Arg(200);

  void BM_CertificateBatch(benchmark::State& state) {
    auto const         S   = corpus::null_semigroup(2);
    auto const         lki = lki_decomposition(S);
    std::vector<MSpec> specs;
    for (unsigned mask = 0; mask < 64; ++mask) {
      std::vector<std::int64_t> support{0};
      for (std::int64_t k = 1; k <= 6; ++k) {
        if (mask >> (k - 1) & 1u) {
          support.push_back(k);
        }
      }
      specs.emplace_back(support);
    }
    for (auto _ : state) {
      for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t j = i + 1; j < specs.size(); ++j) {
          benchmark::DoNotOptimize(noniso_certificate(S, lki, specs[i], specs[j]));
        }
      }
    }
    state.SetItemsProcessed(state.iterations() * 64 * 63 / 2);
  }
  BENCHMARK(BM_CertificateBatch);

}  // namespace

BENCHMARK_MAIN();
