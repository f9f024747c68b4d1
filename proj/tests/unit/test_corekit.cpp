#include <numeric>
#include <random>

#include "coinkit/corekit.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coinkit;

namespace {

const Cost I = kInf;

CostArray costs(std::initializer_list<Value> v) {
  CostArray out;
  for (const Value x : v) out.push_back(x < 0 ? kInf : Cost(x));
  return out;
}

CoinSet coins_of(std::vector<Value> v) { return CoinSet::from_values(v); }

}  // namespace

TEST_CASE("normalize_coins") {
  const std::vector<Value> raw{5, 1, 5, 25, 10};
  CHECK(normalize_coins(raw, 12) == coins_of({1, 5, 10}));
  const std::vector<Value> three{3};
  CHECK(normalize_coins(three, 0).empty());
  const std::vector<Value> pair{2, 3};
  CHECK(normalize_coins(pair, 100) == coins_of({2, 3}));

  const std::vector<Value> zero{0, 2};
  CHECK_THROWS_AS(normalize_coins(zero, 5), ValidationError);
  CHECK_THROWS_AS(normalize_coins(pair, -1), ValidationError);
  CHECK_THROWS_AS(normalize_coins(std::vector<Value>{}, 5), ValidationError);
}

TEST_CASE("CoinSet caches u, sigma and n") {
  const auto c = coins_of({10, 1, 5, 5});
  CHECK(c.u() == 10);
  CHECK(c.sigma() == 16);
  CHECK(c.n() == 3);
  CHECK(c.contains(5));
  CHECK_FALSE(c.contains(4));
  CHECK(c.restrict_to(2, 9) == coins_of({5}));
}

TEST_CASE("dp_all_targets examples") {
  CHECK(dp_all_targets(coins_of({1, 5, 10, 25}), 12) ==
        costs({0, 1, 2, 3, 4, 1, 2, 3, 4, 5, 1, 2, 3}));
  CHECK(dp_all_targets(coins_of({3, 5}), 8) == costs({0, -1, -1, 1, -1, 1, 2, -1, 2}));
  CHECK(dp_all_targets(coins_of({4, 9}), 0) == costs({0}));
  CHECK(dp_all_targets(CoinSet{}, 3) == CostArray{Cost(0), I, I, I});
}

TEST_CASE("dp_all_capacities examples") {
  const std::vector<Item> two{{2, 3}, {3, 5}};
  CHECK(dp_all_capacities(KnapsackInstance::from_items(two), 7) ==
        ProfitArray{0, 0, 3, 5, 6, 8, 10, 11});
  const std::vector<Item> unit{{1, 1}};
  CHECK(dp_all_capacities(KnapsackInstance::from_items(unit), 3) == ProfitArray{0, 1, 2, 3});
  CHECK(dp_all_capacities(KnapsackInstance::from_items(two), 0) == ProfitArray{0});
}

TEST_CASE("knapsack instance keeps the best profit per weight") {
  const std::vector<Item> raw{{3, 1}, {2, 4}, {3, 7}};
  const auto inst = KnapsackInstance::from_items(raw);
  REQUIRE(inst.n() == 2);
  CHECK(inst.items()[0] == Item{2, 4});
  CHECK(inst.items()[1] == Item{3, 7});
  CHECK(inst.sigma() == 5);
  const std::vector<Item> bad{{0, 1}};
  CHECK_THROWS_AS((void)KnapsackInstance::from_items(bad), ValidationError);
  const std::vector<Item> bad_profit{{1, 0}};
  CHECK_THROWS_AS((void)KnapsackInstance::from_items(bad_profit), ValidationError);
}

TEST_CASE("dp_all_capacities detects profit overflow") {
  const std::vector<Item> big{{1, std::numeric_limits<Profit>::max() / 2}};
  CHECK_THROWS_AS(dp_all_capacities(KnapsackInstance::from_items(big), 3), std::overflow_error);
}

TEST_CASE("brute_force_min_coins examples") {
  CHECK(brute_force_min_coins(coins_of({3, 5}), 7) == I);
  CHECK(brute_force_min_coins(coins_of({3, 5}), 8) == Cost(2));
  CHECK(brute_force_min_coins(coins_of({1}), 5) == Cost(5));
  CHECK_THROWS_AS(brute_force_min_coins(coins_of({1}), 10'001), BudgetExceeded);
}

TEST_CASE("dp and breadth-first search agree on random sets") {
  std::mt19937_64 rng(1);
  for (int round = 0; round < 200; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 10, 50));
    const Value t = static_cast<Value>(rng() % 600);
    const auto dp = dp_all_targets(coins, t);
    REQUIRE(brute_force_all_targets(coins, t) == dp);
    const Value j = static_cast<Value>(rng() % (t + 1));
    CHECK(brute_force_min_coins(coins, j) == dp[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("dp_all_targets matches layered enumeration") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto raw = oracle::random_coins(rng, 5, 20);
    const Value t = 150;
    CHECK(dp_all_targets(coins_of(raw), t) == oracle::min_coins_by_layers(raw, t));
  }
}

TEST_CASE("capacity profits are nondecreasing") {
  std::mt19937_64 rng(4);
  for (int round = 0; round < 50; ++round) {
    const auto items = oracle::random_items(rng, 8, 40, 1000);
    const auto d = dp_all_capacities(KnapsackInstance::from_items(items), 500);
    CHECK(std::is_sorted(d.begin(), d.end()));
    if (round < 10) {
      CHECK(dp_all_capacities(KnapsackInstance::from_items(items), 60) ==
            oracle::knapsack_exhaustive(items, 60));
    }
  }
}

TEST_CASE("frobenius_brute examples") {
  CHECK(frobenius_brute(coins_of({3, 5})) == std::optional<Value>(7));
  CHECK(frobenius_brute(coins_of({2, 3})) == std::optional<Value>(1));
  CHECK_FALSE(frobenius_brute(coins_of({1, 7})).has_value());
  CHECK_THROWS_AS(frobenius_brute(coins_of({4, 6})), ValidationError);
  CHECK_THROWS_AS(frobenius_brute(coins_of({201, 202})), BudgetExceeded);
}

TEST_CASE("two-coin Frobenius law") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Value> v(2, 200);
  int checked = 0;
  while (checked < 100) {
    const Value a = v(rng);
    const Value b = v(rng);
    if (a == b || std::gcd(a, b) != 1) continue;
    CHECK(frobenius_brute(coins_of({a, b})) == std::optional<Value>(a * b - a - b));
    ++checked;
  }
}

TEST_CASE("reconstruct_witness") {
  const auto coins = coins_of({1, 5, 10, 25});
  const auto d = dp_all_targets(coins, 30);
  const auto w = reconstruct_witness(d, coins, 30);
  CHECK(w.sum() == 30);
  CHECK(w.size() == 2);
  CHECK(reconstruct_witness(d, coins, 0).coins.empty());

  const auto c35 = coins_of({3, 5});
  const auto d35 = dp_all_targets(c35, 8);
  CHECK(reconstruct_witness(d35, c35, 8).coins == std::vector<Value>{5, 3});
  CHECK_THROWS_AS(reconstruct_witness(d35, c35, 7), ValidationError);

  auto corrupt = d35;
  corrupt[8] = Cost(1);
  CHECK_THROWS_AS(reconstruct_witness(corrupt, c35, 8), std::logic_error);
}

TEST_CASE("witnesses are sound on random sets") {
  std::mt19937_64 rng(12);
  for (int round = 0; round < 100; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 8, 40));
    const Value t = 300;
    const auto d = dp_all_targets(coins, t);
    for (Value j = 0; j <= t; j += 7) {
      if (d[static_cast<std::size_t>(j)].is_inf()) continue;
      const auto w = reconstruct_witness(d, coins, j);
      CHECK(w.sum() == j);
      CHECK(w.size() == d[static_cast<std::size_t>(j)].value());
      for (const Value c : w.coins) CHECK(coins.contains(c));
    }
  }
}

TEST_CASE("implicit_query") {
  const auto coins = coins_of({3, 5});
  const auto d = dp_all_targets(coins, 40);
  const auto ans = make_implicit_answer(d, coins.u());
  CHECK(implicit_query(ans, 32) == Cost(8));
  CHECK(implicit_query(ans, 31) == d[31]);
  CHECK(implicit_query(ans, 31) == Cost(7));
  for (Value j = 0; j < 25; ++j) CHECK(implicit_query(ans, j) == d[static_cast<std::size_t>(j)]);
  CHECK_THROWS_AS(make_implicit_answer(CostArray(10, Cost(0)), 5), ValidationError);
}

TEST_CASE("implicit answers agree with the dp up to 4u^2") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 60; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 6, 30));
    const Value u = coins.u();
    const auto d = dp_all_targets(coins, 4 * u * u);
    const auto ans = make_implicit_answer(d, u);
    for (Value j = 0; j <= 4 * u * u; ++j) {
      REQUIRE(implicit_query(ans, j) == d[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("largest coin law above u^2") {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 60; ++round) {
    const auto coins = coins_of(oracle::random_coins(rng, 6, 30));
    const Value u = coins.u();
    const Value t = 3 * u * u + 10;
    const auto d = dp_all_targets(coins, t);
    for (Value j = u * u; j <= t; ++j) {
      const auto dj = d[static_cast<std::size_t>(j)];
      if (dj.is_finite()) REQUIRE(dj == d[static_cast<std::size_t>(j - u)] + Cost(1));
    }
  }
}

TEST_CASE("signed rendering and checked arithmetic") {
  CHECK(to_signed(kInf) == -1);
  CHECK(to_signed(Cost(4)) == 4);
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Profit>::max(), 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<Profit>::max(), 2), std::overflow_error);
}

TEST_CASE("Cost saturates at INF") {
  CHECK(kInf + Cost(1) == kInf);
  CHECK(Cost(std::numeric_limits<Cost::rep>::max() - 1) + Cost(5) == kInf);
  CHECK(Cost(3) < kInf);
}
