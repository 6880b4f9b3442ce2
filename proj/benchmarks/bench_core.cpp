#include <benchmark/benchmark.h>

#include "monocover/cover.hpp"
#include "monocover/examples.hpp"
#include "monocover/group.hpp"
#include "monocover/perm.hpp"
#include "monocover/report.hpp"
#include "monocover/search.hpp"

namespace {

using namespace monocover;

MonodromyPair pair_of(int degree, const char* alpha, const char* beta) {
  return MonodromyPair(parse_cycles(alpha, degree),
                       parse_cycles(beta, degree));
}

const MonodromyPair& reference_pair() {
  static const MonodromyPair pair = pair_of(4, "(1 2 3)", "(2 3 4)");
  return pair;
}

const MonodromyPair& octic_pair() {
  static const MonodromyPair pair =
      pair_of(8, "(1 2 3 4 5 6 7)", "(8 3 4 1 5 6)");
  return pair;
}

void BM_commutator(benchmark::State& state) {
  const MonodromyPair& pair = octic_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutator(pair.alpha, pair.beta));
  }
}
BENCHMARK(BM_commutator);

void BM_parse_and_format(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        format_cycles(parse_cycles("(1 2 3 4 5 6 7)(8 9)", 9)));
  }
}
BENCHMARK(BM_parse_and_format);

void BM_is_primitive_octic(benchmark::State& state) {
  const MonodromyPair& pair = octic_pair();
  const GeneratedGroup group(8, {pair.alpha, pair.beta});
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_primitive(group));
  }
}
BENCHMARK(BM_is_primitive_octic);

void BM_group_order_octic(benchmark::State& state) {
  const MonodromyPair& pair = octic_pair();
  const GeneratedGroup group(8, {pair.alpha, pair.beta});
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_order(group));
  }
}
BENCHMARK(BM_group_order_octic);

void BM_analyze_reference(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(reference_pair()));
  }
}
BENCHMARK(BM_analyze_reference);

void BM_analyze_family(benchmark::State& state) {
  const ExampleRecord record = example_3(static_cast<int>(state.range(0)));
  const MonodromyPair pair(parse_cycles(record.alpha_cycles, record.degree),
                           parse_cycles(record.beta_cycles, record.degree));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(pair));
  }
}
BENCHMARK(BM_analyze_family)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_canonical_form_full(benchmark::State& state) {
  const MonodromyPair pair = pair_of(5, "(1 2 3)", "(2 3 4 5)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(pair, DedupMode::full));
  }
}
BENCHMARK(BM_canonical_form_full)->Unit(benchmark::kMicrosecond);

void BM_certificate_round_trip(benchmark::State& state) {
  const MonodromyPair& pair = reference_pair();
  const Certificate certificate{pair, analyze(pair),
                                canonical_form(pair, DedupMode::off)};
  const std::string line = certificate_json_line(certificate);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certificate_from_json_line(line));
  }
}
BENCHMARK(BM_certificate_round_trip)->Unit(benchmark::kMicrosecond);

void BM_search(benchmark::State& state) {
  SearchConfig cfg;
  cfg.degree = static_cast<int>(state.range(0));
  cfg.worker_count = static_cast<int>(state.range(1));
  std::uint64_t scanned = 0;
  for (auto _ : state) {
    const SearchResult result = search(cfg);
    scanned += result.stats.pairs_scanned;
    benchmark::DoNotOptimize(result);
  }
  state.counters["pairs/s"] = benchmark::Counter(
      static_cast<double>(scanned), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_search)
    ->Unit(benchmark::kMillisecond)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 4});

}  // namespace

BENCHMARK_MAIN();
