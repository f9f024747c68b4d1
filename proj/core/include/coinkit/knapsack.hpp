#pragma once

#include <vector>

#include "coinkit/corekit.hpp"
#include "coinkit/types.hpp"

namespace coinkit {

/// Items in decreasing profit-to-weight order. Ratios are compared exactly by
/// cross-multiplication; ties go to the larger profit, then the smaller weight.
struct RatioRankedItems {
  std::vector<Item> items;

  [[nodiscard]] static RatioRankedItems from(const KnapsackInstance& inst);
};

/// min(n, ceil(3u^2 / j)); requires j >= 1.
Value ratio_index_bound(Value u, Value j, Value n);

/// All-capacities unbounded knapsack in O(u^2 log u + t): capacity j only
/// considers the ratio_index_bound(u, j, n) best-ratio items.
ProfitArray algo2_all_capacities(const KnapsackInstance& inst, Value t,
                                 WorkCounter* work = nullptr);

/// As algo2_all_capacities, with the bound computed from bound_u (>= every
/// weight) instead of the largest weight.
ProfitArray algo2_all_capacities_with_bound(const KnapsackInstance& inst, Value t,
                                            Value bound_u, WorkCounter* work = nullptr);

/// Light items (weight <= ceil((t*sigma)^(1/3))) through algo2, then one
/// ascending pass over the heavy items.
ProfitArray tsigma_all_capacities(const KnapsackInstance& inst, Value t,
                                  WorkCounter* work = nullptr);

/// D[lo .. lo + u] for a capacity window.
struct CapacityWindow {
  Value lo = 0;
  ProfitArray values;

  [[nodiscard]] Profit at(Value j) const { return values[static_cast<std::size_t>(j - lo)]; }
};

/// ceil(log2(t + u)) + 1: the shrink factor of the window recursion.
Value window_shrink_factor(Value t, Value u);

/// Next capacity down the recursion: ceil((1 - 1/b) * t) = t - floor(t / b).
Value shrink_capacity(Value t, Value b);

/// D[t .. t + u] by the windowed recursion: window t is built from window
/// shrink_capacity(t, b); capacities j above child.lo + u take, for every
/// item, x = ceil((j - (child.lo + u)) / w) copies at once. Capacities
/// t <= 4b fall back to the textbook DP.
CapacityWindow capacity_window(const KnapsackInstance& inst, Value t, Value b,
                               WorkCounter* work = nullptr);

/// Single-capacity unbounded knapsack in O(nu log^2 u): strip copies of the
/// best-ratio item until the capacity is below 3u^2, then run the window
/// recursion.
Profit single_capacity_nu(const KnapsackInstance& inst, Value t, WorkCounter* work = nullptr);

inline constexpr Value kLogTypesMaxCapacity = 60;
inline constexpr Value kLogTypesMaxItems = 6;

/// Exhaustive check that some optimal solution for capacity j uses at most
/// floor(log2(j + 1)) distinct item types. Throws BudgetExceeded beyond
/// j <= 60 or n <= 6.
bool log_types_check(const KnapsackInstance& inst, Value j);

}  // namespace coinkit
