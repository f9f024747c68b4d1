#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "coinkit/convkit.hpp"
#include "coinkit/fastsingle.hpp"
#include "coinkit/heavylight.hpp"
#include "coinkit/knapsack.hpp"
#include "coinkit/topk_dp.hpp"
#include "coinkit/wordbreak.hpp"

using namespace coinkit;

namespace {

std::vector<Value> distinct_coins(std::uint64_t seed, Value count, Value u) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Value> value(1, u);
  std::set<Value> picked{u};
  while (static_cast<Value>(picked.size()) < std::min(count, u)) picked.insert(value(rng));
  return {picked.begin(), picked.end()};
}

BoolArray random_mask(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution bit(density);
  BoolArray out(n);
  for (auto& b : out) b = bit(rng) ? 1 : 0;
  return out;
}

void report_work(benchmark::State& state, const WorkCounter& work) {
  state.counters["work"] = benchmark::Counter(static_cast<double>(work.ops),
                                              benchmark::Counter::kAvgIterations);
}

void BM_BooleanConvolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double density = static_cast<double>(state.range(1)) / 1000.0;
  std::mt19937_64 rng(1);
  const BoolArray a = random_mask(rng, n, density);
  const BoolArray b = random_mask(rng, n, density);
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(boolean_convolve(a, b, 2 * n - 1, &work));
  report_work(state, work);
}
BENCHMARK(BM_BooleanConvolve)->ArgsProduct({{1 << 10, 1 << 14, 1 << 18}, {5, 500}});

void BM_MinPlusBinary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<Value> value(0, 64);
  CostArray a(n);
  for (auto& c : a) c = Cost(value(rng));
  const auto b = BinaryCostArray::from_mask(random_mask(rng, n, 0.3));
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(minplus_binary_convolve(a, b, &work));
  report_work(state, work);
}
BENCHMARK(BM_MinPlusBinary)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_AllTargetsT43(benchmark::State& state) {
  const Value t = state.range(0);
  const CoinSet coins = normalize_coins(distinct_coins(3, 64, t), t);
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(all_targets_t43(coins, t, {}, &work));
  report_work(state, work);
}
BENCHMARK(BM_AllTargetsT43)->RangeMultiplier(4)->Range(1 << 12, 1 << 16)->Unit(benchmark::kMillisecond);

void BM_Algo1(benchmark::State& state) {
  const Value t = state.range(0);
  const CoinSet coins = normalize_coins(distinct_coins(4, 32, 200), t);
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(algo1_all_targets(coins, t, &work));
  report_work(state, work);
}
BENCHMARK(BM_Algo1)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_DpAllTargets(benchmark::State& state) {
  const Value t = state.range(0);
  const CoinSet coins = normalize_coins(distinct_coins(4, 32, 200), t);
  for (auto _ : state) benchmark::DoNotOptimize(dp_all_targets(coins, t));
}
BENCHMARK(BM_DpAllTargets)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_MinCoinsSingle(benchmark::State& state) {
  const Value t = state.range(0);
  const CoinSet coins = normalize_coins(distinct_coins(5, 64, 300), t);
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(min_coins_single(coins, t, &work));
  report_work(state, work);
}
BENCHMARK(BM_MinCoinsSingle)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_SingleCapacityNu(benchmark::State& state) {
  const Value t = state.range(0);
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<Profit> profit(1, 1'000'000);
  std::vector<Item> items;
  for (const Value w : distinct_coins(6, 40, 200)) items.push_back({w, profit(rng)});
  const KnapsackInstance inst = normalize_items(items, t);
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(single_capacity_nu(inst, t, &work));
  report_work(state, work);
}
BENCHMARK(BM_SingleCapacityNu)->Arg(1'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_MinWordBreak(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 1);
  std::string text(n, 'a');
  for (auto& c : text) c = static_cast<char>('a' + letter(rng));
  std::vector<std::string> dict;
  std::uniform_int_distribution<std::size_t> len(1, 24);
  for (int k = 0; k < 200; ++k) {
    const std::size_t l = len(rng);
    std::uniform_int_distribution<std::size_t> start(0, n - l);
    dict.push_back(text.substr(start(rng), l));
  }
  const auto inst = WordBreakInstance::from(text, dict);
  WorkCounter work;
  for (auto _ : state) benchmark::DoNotOptimize(min_word_break(inst, {}, nullptr, &work));
  report_work(state, work);
}
BENCHMARK(BM_MinWordBreak)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
