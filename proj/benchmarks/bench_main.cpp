#include <benchmark/benchmark.h>

#include <random>

#include "punchline/humor.hpp"
#include "punchline/kb_format.hpp"
#include "punchline/km_check.hpp"

namespace {

using namespace punchline;

KnowledgeBase doctor_kb() {
  return parse_kb(
             "atoms: R H T i N\n"
             "strict: H -> N\n"
             "default: i & N ~> R\n"
             "default: i & !T ~> !R\n"
             "default: i & H ~> !T\n")
      .kb;
}

// A wider base: chains of defaults over n atoms, each rule one step more
// specific than the one before.
KnowledgeBase chain_kb(std::size_t atoms) {
  AtomUniverse universe;
  for (std::size_t i = 0; i < atoms; ++i) universe.intern("x" + std::to_string(i));
  std::vector<DefaultRule> defaults;
  std::optional<Formula> context;
  for (std::size_t i = 0; i + 1 < atoms; ++i) {
    Formula head = Formula::atom(AtomId{static_cast<std::uint32_t>(i)});
    context = context ? Formula::conjunction(*context, head) : head;
    Formula body = Formula::atom(AtomId{static_cast<std::uint32_t>(i + 1)});
    defaults.push_back({*context, (i % 2 != 0) ? body : Formula::negation(body), false});
  }
  return KnowledgeBase(std::move(universe), {}, std::move(defaults));
}

void BM_ModelEnumeration(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  AtomUniverse universe;
  for (std::size_t i = 0; i < n; ++i) universe.intern("x" + std::to_string(i));
  std::optional<Formula> phi;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    Formula clause = Formula::disjunction(
        Formula::atom(AtomId{static_cast<std::uint32_t>(i)}),
        Formula::negation(Formula::atom(AtomId{static_cast<std::uint32_t>(i + 1)})));
    phi = phi ? Formula::conjunction(*phi, clause) : clause;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(models_of(*phi, universe).size());
  }
}
BENCHMARK(BM_ModelEnumeration)->Arg(12)->Arg(16)->Arg(20);

void BM_Stratify(benchmark::State& state) {
  const KnowledgeBase kb = chain_kb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(z_stratify(kb).rank_count());
  }
}
BENCHMARK(BM_Stratify)->Arg(6)->Arg(9)->Arg(12);

void BM_BuildDistribution(benchmark::State& state) {
  const KnowledgeBase kb = chain_kb(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_distribution(kb).top_level());
  }
}
BENCHMARK(BM_BuildDistribution)->Arg(6)->Arg(9)->Arg(12);

void BM_Analyze(benchmark::State& state) {
  const KnowledgeBase kb = doctor_kb();
  const Statement st{parse_formula("i & N", kb.universe()),
                     parse_formula("i & H", kb.universe())};
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(kb, st, OrderMethod::kLex).potentially_funny);
  }
}
BENCHMARK(BM_Analyze);

void BM_KmTrials(benchmark::State& state) {
  const KnowledgeBase kb = doctor_kb();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        check_km_postulates(kb, OrderMethod::kLex, 100, 42).violations.size());
  }
}
BENCHMARK(BM_KmTrials);

}  // namespace

BENCHMARK_MAIN();
