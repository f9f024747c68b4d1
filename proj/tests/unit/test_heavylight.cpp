#include <random>

#include "coinkit/heavylight.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coinkit;

namespace {

CoinSet coins_of(std::vector<Value> v) { return CoinSet::from_values(v); }

CostArray costs(std::initializer_list<Value> v) {
  CostArray out;
  for (const Value x : v) out.push_back(x < 0 ? kInf : Cost(x));
  return out;
}

}  // namespace

TEST_CASE("split and groups") {
  const auto split = split_heavy_light(coins_of({1, 2, 3, 5, 9, 17}), 4);
  CHECK(split.light == coins_of({1, 2, 3}));
  CHECK(split.heavy == coins_of({5, 9, 17}));
  const auto groups = light_groups(coins_of({1, 2, 3, 5, 7, 8}), 8);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].ell == 1);
  CHECK(groups[0].members == std::vector<Value>{2});
  CHECK(groups[1].members == std::vector<Value>{3});
  CHECK(groups[2].members == std::vector<Value>{5, 7, 8});
}

TEST_CASE("heavy_min_counts examples") {
  const auto d = heavy_min_counts(coins_of({10, 25}), 30, 3);
  CHECK(d[30] == Cost(3));
  CHECK(d[20] == Cost(2));
  CHECK(d[25] == Cost(1));
  CHECK(d[15] == kInf);
  CHECK(d == dp_all_targets(coins_of({10, 25}), 30));

  const auto empty = heavy_min_counts(CoinSet{}, 5, 5);
  CHECK(empty == costs({0, -1, -1, -1, -1, -1}));

  const auto seven = heavy_min_counts(coins_of({7}), 21, 3);
  for (Value j = 0; j <= 21; ++j) {
    CHECK(seven[static_cast<std::size_t>(j)] == (j % 7 == 0 ? Cost(j / 7) : kInf));
  }
}

TEST_CASE("heavy_min_counts respects kmax") {
  const auto d = heavy_min_counts(coins_of({7}), 21, 2);
  CHECK(d[14] == Cost(2));
  CHECK(d[21] == kInf);
}

TEST_CASE("add_light_group examples") {
  const auto d5 = dp_all_targets(coins_of({5}), 10);
  const auto d = add_light_group(d5, LightGroup{2, {3, 4}}, 10);
  CHECK(d == costs({0, -1, -1, 1, 1, 1, 2, 2, 2, 2, 2}));
  CHECK(d == dp_all_targets(coins_of({3, 4, 5}), 10));

  CHECK(add_light_group(d5, LightGroup{4, {}}, 10) == d5);

  const auto start = dp_all_targets(CoinSet{}, 6);
  const auto even = add_light_group(start, LightGroup{1, {2}}, 6);
  for (Value j = 0; j <= 6; ++j) {
    CHECK(even[static_cast<std::size_t>(j)] == (j % 2 == 0 ? Cost(j / 2) : kInf));
  }
}

TEST_CASE("add_light_group is exact for random supersets") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 150; ++round) {
    const auto base = oracle::random_coins(rng, 5, 60);
    const Value ell = Value{1} << (rng() % 5);
    std::vector<Value> members;
    for (Value v = ell + 1; v <= 2 * ell; ++v) {
      if (rng() % 3 == 0) members.push_back(v);
    }
    const Value t = 1 + static_cast<Value>(rng() % 400);
    auto all = base;
    all.insert(all.end(), members.begin(), members.end());
    const auto got = add_light_group(dp_all_targets(coins_of(base), t), LightGroup{ell, members}, t);
    const auto expect = dp_all_targets(coins_of(all), t);
    REQUIRE(got == expect);

    // Block locality: each entry of block i is recovered from its old value
    // and the finished window [ell(i-2), ell*i - 1] alone.
    const auto before = dp_all_targets(coins_of(base), t);
    for (Value j = 0; j <= t; ++j) {
      const Value i = j / ell;
      const Value lo = std::max<Value>(0, ell * (i - 2));
      Cost best = before[static_cast<std::size_t>(j)];
      for (const Value v : members) {
        if (j - v >= lo && j - v < ell * i) {
          best = std::min(best, expect[static_cast<std::size_t>(j - v)] + Cost(1));
        }
      }
      REQUIRE(best == expect[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("t32 and t43 examples") {
  const auto coins = coins_of({1, 5, 10, 25});
  CHECK(all_targets_t32(coins, 12) == dp_all_targets(coins, 12));
  CHECK(all_targets_t43(coins, 12) == dp_all_targets(coins, 12));
  const auto c35 = coins_of({3, 5});
  CHECK(all_targets_t32(c35, 8) == costs({0, -1, -1, 1, -1, 1, 2, -1, 2}));
  CHECK(all_targets_t43(c35, 8) == costs({0, -1, -1, 1, -1, 1, 2, -1, 2}));
  CHECK(all_targets_t32(c35, 0) == costs({0}));
  CHECK(all_targets_t43(c35, 0) == costs({0}));
  CHECK(all_targets_t43(CoinSet{}, 4) == dp_all_targets(CoinSet{}, 4));
  CHECK(all_targets_t32(CoinSet{}, 4) == dp_all_targets(CoinSet{}, 4));

  const auto small = coins_of({2, 3, 7, 8});
  CHECK(t43_threshold(4096, 8) == 16);
  CHECK(all_targets_t43(small, 4096) == dp_all_targets(small, 4096));
}

TEST_CASE("t43 threshold") {
  CHECK(t43_threshold(1 << 12, 1 << 12) == 256);
  CHECK(t43_threshold(1000, 1000) == 128);
  CHECK(t43_threshold(1000, 7) == 8);
  CHECK(t43_threshold(1, 1) == 1);
  CHECK(next_power_of_two(1) == 1);
  CHECK(next_power_of_two(5) == 8);
  CHECK(next_power_of_two(64) == 64);
}

TEST_CASE("heavy/light pipelines agree with the dp on random instances") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    const Value t = static_cast<Value>(rng() % 3000);
    const Value u_max = 1 + static_cast<Value>(rng() % std::max<Value>(t, 1));
    const auto coins = normalize_coins(oracle::random_coins(rng, 30, u_max), t);
    const auto expect = dp_all_targets(coins, t);
    REQUIRE(all_targets_t32(coins, t) == expect);
    REQUIRE(all_targets_t43(coins, t) == expect);
  }
}

TEST_CASE("forcing the threshold never changes the answer") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 30; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 12, 80));
    const Value t = 700;
    const auto expect = dp_all_targets(coins, t);
    for (Value ell0 = 2; ell0 <= 2 * coins.u(); ell0 *= 2) {
      HeavyLightOptions opt;
      opt.ell0 = ell0;
      CHECK(all_targets_t43(coins, t, opt) == expect);
      CHECK(all_targets_t32(coins, t, opt) == expect);
    }
  }
}

TEST_CASE("transform-only kernel matches the default") {
  std::mt19937_64 rng(44);
  HeavyLightOptions transform;
  transform.kernel = ConvolutionKernel::Transform;
  for (int round = 0; round < 20; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 20, 120));
    const Value t = 1 + static_cast<Value>(rng() % 1500);
    CHECK(all_targets_t43(coins, t, transform) == all_targets_t43(coins, t));
  }
}
