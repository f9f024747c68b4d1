#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coinkit/types.hpp"

namespace coinkit {

/// Distinct positive coin values in ascending order, with u (max) and sigma
/// (sum) cached. A default-constructed set is the empty marker: only the
/// target 0 is reachable.
class CoinSet {
 public:
  CoinSet() = default;

  /// Validates (every value > 0), removes duplicates and sorts.
  [[nodiscard]] static CoinSet from_values(std::span<const Value> raw);

  [[nodiscard]] std::span<const Value> values() const noexcept { return values_; }
  [[nodiscard]] Value u() const noexcept { return values_.empty() ? 0 : values_.back(); }
  [[nodiscard]] Value sigma() const noexcept { return sigma_; }
  [[nodiscard]] Value n() const noexcept { return static_cast<Value>(values_.size()); }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  [[nodiscard]] bool contains(Value v) const;

  /// Coins with value in [lo, hi].
  [[nodiscard]] CoinSet restrict_to(Value lo, Value hi) const;

  friend bool operator==(const CoinSet&, const CoinSet&) = default;

 private:
  std::vector<Value> values_;
  Value sigma_ = 0;
};

/// Deduplicates, drops values above t and sorts. Values above t can never be
/// part of an exact sum <= t, so they are pruned silently.
/// Throws ValidationError on an empty list, a value <= 0, or t < 0.
CoinSet normalize_coins(std::span<const Value> raw, Value t);

struct Item {
  Value weight = 0;
  Profit profit = 0;

  friend bool operator==(const Item&, const Item&) = default;
};

/// Unbounded knapsack items with pairwise distinct weights, sorted by weight.
class KnapsackInstance {
 public:
  KnapsackInstance() = default;

  /// Validates positive weights and profits; among items of equal weight
  /// keeps the most profitable one.
  [[nodiscard]] static KnapsackInstance from_items(std::span<const Item> raw);

  [[nodiscard]] std::span<const Item> items() const noexcept { return items_; }
  [[nodiscard]] Value u() const noexcept { return items_.empty() ? 0 : items_.back().weight; }
  [[nodiscard]] Value sigma() const noexcept { return sigma_; }
  [[nodiscard]] Value n() const noexcept { return static_cast<Value>(items_.size()); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }

  /// Items with weight in [lo, hi].
  [[nodiscard]] KnapsackInstance restrict_to(Value lo, Value hi) const;

 private:
  std::vector<Item> items_;
  Value sigma_ = 0;
};

/// from_items plus pruning of weights above t. Throws ValidationError on an
/// empty list, nonpositive weight/profit, or t < 0.
KnapsackInstance normalize_items(std::span<const Item> raw, Value t);

/// Textbook O(nt) change-making DP over every target 0..t.
CostArray dp_all_targets(const CoinSet& coins, Value t);

/// Textbook O(nt) unbounded knapsack DP: entry j is the best profit with total
/// weight <= j. Throws std::overflow_error if a profit exceeds 64 bits.
ProfitArray dp_all_capacities(const KnapsackInstance& inst, Value t);

inline constexpr Value kDefaultOracleBound = 10'000;

/// Minimum coin count for target j by breadth-first search over exact sums.
/// Shares no code with dp_all_targets. Refuses (BudgetExceeded) j > bound.
Cost brute_force_min_coins(const CoinSet& coins, Value j, Value bound = kDefaultOracleBound);

/// The same breadth-first search, reporting the distance of every sum 0..t.
CostArray brute_force_all_targets(const CoinSet& coins, Value t,
                                  Value bound = kDefaultOracleBound);

inline constexpr Value kDefaultFrobeniusBound = 200;

/// Largest nonnegative integer not representable by the coins, or nullopt
/// when every integer is representable. Throws ValidationError if the gcd of
/// the values is not 1, BudgetExceeded if u > bound.
std::optional<Value> frobenius_brute(const CoinSet& coins,
                                     Value bound = kDefaultFrobeniusBound);

struct Witness {
  std::vector<Value> coins;  // multiset, descending

  [[nodiscard]] Value sum() const;
  [[nodiscard]] Value size() const noexcept { return static_cast<Value>(coins.size()); }
};

/// Walks a correct CostArray back from j, emitting at each step a coin v with
/// d[j - v] = d[j] - 1. Throws ValidationError if d[j] is INF and
/// std::logic_error if no coin decrements the count (corrupt array).
Witness reconstruct_witness(std::span<const Cost> d, const CoinSet& coins, Value j);

/// Change-making answers for every target, stored as the prefix [0, u^2).
/// Any larger target j reduces below u^2 with k = ceil((j - u^2 + 1) / u)
/// copies of the largest coin.
struct ImplicitCostAnswer {
  CostArray prefix;
  Value u = 0;
};

/// Wraps the first u^2 entries of a full CostArray for `u`.
/// Throws ValidationError if d is shorter than u^2.
ImplicitCostAnswer make_implicit_answer(std::span<const Cost> d, Value u);

/// O(1) lookup of the minimum count for any target j >= 0.
Cost implicit_query(const ImplicitCostAnswer& ans, Value j);

/// Infeasible targets render as -1.
[[nodiscard]] inline Value to_signed(Cost c) noexcept { return c.is_inf() ? -1 : c.value(); }

/// Overflow-checked profit arithmetic; throws std::overflow_error.
Profit checked_add(Profit a, Profit b);
Profit checked_mul(Profit a, Profit b);

}  // namespace coinkit
