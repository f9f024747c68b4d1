#include <cmath>
#include <numeric>
#include <random>

#include "coinkit/topk_dp.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coinkit;

namespace {

CoinSet coins_of(std::vector<Value> v) { return CoinSet::from_values(v); }

std::vector<Value> adversarial_family(Value u, Value k) {
  const Value x = (u + k - 2) / (k - 1);
  std::vector<Value> out;
  for (Value i = 1; i <= k - 1; ++i) out.push_back(i * x);
  out.push_back((k - 1) * x - 1);
  return out;
}

}  // namespace

TEST_CASE("RankedCoins sorts descending") {
  CHECK(RankedCoins::from(coins_of({3, 10, 5})).values_desc == std::vector<Value>{10, 5, 3});
}

TEST_CASE("topk_index_bound examples") {
  CHECK(topk_index_bound(5, 25, 10) == 2);
  CHECK(topk_index_bound(5, 1, 3) == 3);
  CHECK(topk_index_bound(10, 40, 10) == 5);
}

TEST_CASE("algo1 examples") {
  const auto coins = coins_of({1, 5, 10, 25});
  CHECK(algo1_all_targets(coins, 200) == dp_all_targets(coins, 200));
  const auto c35 = coins_of({3, 5});
  CHECK(algo1_all_targets(c35, 8) == dp_all_targets(c35, 8));
  CHECK(algo1_all_targets(c35, 0) == CostArray{Cost(0)});
  CHECK(algo1_all_targets(CoinSet{}, 3) == dp_all_targets(CoinSet{}, 3));
}

TEST_CASE("tsigma examples") {
  const auto coins = coins_of({2, 3, 97});
  CHECK(tsigma_all_targets(coins, 300) == dp_all_targets(coins, 300));

  const auto light = coins_of({2, 3, 4});
  REQUIRE(tsigma_threshold(300, light.sigma()) >= light.u());
  CHECK(tsigma_all_targets(light, 300) == algo1_all_targets(light, 300));

  const auto heavy = coins_of({50, 61, 77});
  REQUIRE(tsigma_threshold(120, heavy.sigma()) < 50);
  CHECK(tsigma_all_targets(heavy, 120) == dp_all_targets(heavy, 120));
}

TEST_CASE("tsigma threshold is an exact integer cube root") {
  CHECK(tsigma_threshold(8, 1) == 2);
  CHECK(tsigma_threshold(9, 3) == 3);
  CHECK(tsigma_threshold(28, 1) == 4);
  CHECK(tsigma_threshold(0, 5) == 1);
}

TEST_CASE("algo1 and tsigma agree with the dp on random instances") {
  std::mt19937_64 rng(51);
  for (int round = 0; round < 200; ++round) {
    const Value t = static_cast<Value>(rng() % 10'000);
    const auto coins = normalize_coins(oracle::random_coins(rng, 30, 100), t);
    const auto expect = dp_all_targets(coins, t);
    REQUIRE(algo1_all_targets(coins, t) == expect);
    REQUIRE(tsigma_all_targets(coins, t) == expect);
  }
}

TEST_CASE("adversarial family still matches") {
  for (Value u : {20, 57, 100}) {
    for (Value k = 3; k <= 8; ++k) {
      const auto coins = coins_of(adversarial_family(u, k));
      const Value t = 3000;
      const auto expect = dp_all_targets(coins, t);
      CHECK(algo1_all_targets(coins, t) == expect);
      CHECK(tsigma_all_targets(coins, t) == expect);
    }
  }
}

TEST_CASE("erdos_graham_bound examples") {
  CHECK(erdos_graham_bound(RankedCoins{{5, 3}}, 2) == 7);
  CHECK(erdos_graham_bound(RankedCoins{{6, 4}}, 2) == 2);
  CHECK(erdos_graham_bound(RankedCoins{{10, 9, 8}}, 3) == 44);
  CHECK_THROWS_AS(erdos_graham_bound(RankedCoins{{5, 3}}, 1), ValidationError);
  CHECK_THROWS_AS(erdos_graham_bound(RankedCoins{{5, 3}}, 3), ValidationError);

  // Every even integer above 2 is a sum of 4s and 6s.
  const auto d46 = dp_all_targets(coins_of({4, 6}), 100);
  for (Value j = 4; j <= 100; j += 2) CHECK(d46[static_cast<std::size_t>(j)].is_finite());
  // Nothing above 44 is missing for {8, 9, 10}.
  CHECK(oracle::frobenius_scan({8, 9, 10}, 400) <= 44);
}

TEST_CASE("Erdos-Graham bound dominates the Frobenius number") {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 100) {
    const auto raw = oracle::random_coins(rng, 8, 120);
    if (raw.size() < 2) continue;
    const auto ranked = RankedCoins::from(coins_of(raw));
    const auto k = static_cast<int>(raw.size());
    Value d = 0;
    for (const Value v : raw) d = std::gcd(d, v);
    std::vector<Value> scaled;
    for (const Value v : raw) scaled.push_back(v / d);
    const auto frob = frobenius_brute(coins_of(scaled), 200);
    if (frob.has_value()) CHECK(*frob * d <= erdos_graham_bound(ranked, k));
    ++checked;
  }
}

TEST_CASE("implicit answers from algo1") {
  const auto coins = coins_of({3, 5});
  const auto ans = implicit_all_targets(coins);
  CHECK(ans.prefix.size() == 25);
  CHECK(implicit_query(ans, 1'000'001) == dp_all_targets(coins, 1'000'001)[1'000'001]);
}

TEST_CASE("algo1 harmonic work bound") {
  std::mt19937_64 rng(55);
  for (int round = 0; round < 40; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 60, 200));
    const Value u = coins.u();
    const Value t = static_cast<Value>(rng() % 200'000);
    WorkCounter work;
    (void)algo1_all_targets(coins, t, &work);
    const double bound = 8.0 * (static_cast<double>(u * u) * std::log(u + 1.0) + t);
    CHECK(static_cast<double>(work.ops) <= bound);
  }
}

TEST_CASE("empty coin sets reach only zero") {
  const auto expect = dp_all_targets(CoinSet{}, 5);
  CHECK(tsigma_all_targets(CoinSet{}, 5) == expect);
  CHECK(algo1_all_targets(CoinSet{}, 5) == expect);
}
