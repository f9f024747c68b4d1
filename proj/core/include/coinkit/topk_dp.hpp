#pragma once

#include <vector>

#include "coinkit/corekit.hpp"
#include "coinkit/types.hpp"

namespace coinkit {

/// Coin values in strictly decreasing order.
struct RankedCoins {
  std::vector<Value> values_desc;

  [[nodiscard]] static RankedCoins from(const CoinSet& coins);
};

/// min(n, ceil(2u^2 / j)): an optimal solution for target j uses one of this
/// many largest coins. Requires j >= 1.
Value topk_index_bound(Value u, Value j, Value n);

/// All-targets change-making in O(u^2 log u + t) without FFT: the textbook
/// recurrence, but target j only looks at the topk_index_bound(u, j, n)
/// largest coins. `work` counts inner-loop iterations.
CostArray algo1_all_targets(const CoinSet& coins, Value t, WorkCounter* work = nullptr);

/// The same loop with the bound computed from `bound_u` (>= every coin)
/// instead of the largest coin.
CostArray algo1_all_targets_with_bound(const CoinSet& coins, Value t, Value bound_u,
                                       WorkCounter* work = nullptr);

/// ceil((t * sigma)^(1/3)), the light/heavy threshold of tsigma_all_targets.
Value tsigma_threshold(Value t, Value sigma);

/// Light coins (<= tsigma_threshold) through algo1 with bound parameter ell0,
/// then one ascending pass adding every heavy coin.
CostArray tsigma_all_targets(const CoinSet& coins, Value t, WorkCounter* work = nullptr);

/// 2 * floor(v1 / (d * k)) * v2 - v1 over the k largest values, d being their
/// gcd: every multiple of d above it is representable by those k values.
/// Throws ValidationError if k < 2 or k exceeds the number of values.
Value erdos_graham_bound(const RankedCoins& coins, int k);

/// Implicit all-targets answer: algo1 over [0, u^2) plus the largest coin.
ImplicitCostAnswer implicit_all_targets(const CoinSet& coins, WorkCounter* work = nullptr);

}  // namespace coinkit
