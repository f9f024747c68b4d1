#include "coinkit/topk_dp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coinkit/convkit.hpp"

namespace coinkit {

RankedCoins RankedCoins::from(const CoinSet& coins) {
  RankedCoins ranked;
  ranked.values_desc.assign(coins.values().rbegin(), coins.values().rend());
  return ranked;
}

Value topk_index_bound(Value u, Value j, Value n) {
  if (j < 1) throw ValidationError("topk_index_bound needs j >= 1");
  const Value twice_square = 2 * u * u;
  return std::min(n, (twice_square + j - 1) / j);
}

CostArray algo1_all_targets_with_bound(const CoinSet& coins, Value t, Value bound_u,
                                       WorkCounter* work) {
  if (t < 0) throw ValidationError("target must be nonnegative");
  const std::vector<Value> desc(coins.values().rbegin(), coins.values().rend());
  const Value n = static_cast<Value>(desc.size());

  CostArray d(static_cast<std::size_t>(t) + 1, kInf);
  d[0] = Cost(0);
  // first_fit: index of the largest coin <= j; it only moves left as j grows.
  Value first_fit = n;
  std::uint64_t iterations = 0;
  for (Value j = 1; j <= t; ++j) {
    while (first_fit > 0 && desc[first_fit - 1] <= j) --first_fit;
    const Value limit = topk_index_bound(bound_u, j, n);
    Cost best = kInf;
    for (Value i = first_fit; i < limit; ++i) {
      best = std::min(best, d[j - desc[i]] + Cost(1));
    }
    iterations += static_cast<std::uint64_t>(std::max<Value>(limit - first_fit, 0)) + 1;
    d[j] = best;
  }
  count_work(work, iterations);
  return d;
}

CostArray algo1_all_targets(const CoinSet& coins, Value t, WorkCounter* work) {
  return algo1_all_targets_with_bound(coins, t, coins.u(), work);
}

Value tsigma_threshold(Value t, Value sigma) {
  const UWide product = static_cast<UWide>(std::max<Value>(t, 0)) *
                                    static_cast<UWide>(std::max<Value>(sigma, 0));
  return std::max<Value>(static_cast<Value>(ceil_cbrt(product)), 1);
}

CostArray tsigma_all_targets(const CoinSet& coins, Value t, WorkCounter* work) {
  if (t < 0) throw ValidationError("target must be nonnegative");
  const Value ell0 = tsigma_threshold(t, coins.sigma());
  const CoinSet light = coins.restrict_to(1, ell0);
  const CoinSet heavy = coins.restrict_to(ell0 + 1, std::max(coins.u(), ell0 + 1));

  CostArray d = algo1_all_targets_with_bound(light, t, ell0, work);
  if (heavy.empty()) return d;
  for (Value j = 1; j <= t; ++j) {
    Cost best = d[j];
    for (const Value v : heavy.values()) {
      if (v > j) break;
      best = std::min(best, d[j - v] + Cost(1));
    }
    d[j] = best;
    count_work(work, static_cast<std::uint64_t>(heavy.n()));
  }
  return d;
}

Value erdos_graham_bound(const RankedCoins& coins, int k) {
  if (k < 2) throw ValidationError("Erdos-Graham bound needs k >= 2");
  if (static_cast<std::size_t>(k) > coins.values_desc.size()) {
    throw ValidationError("k = " + std::to_string(k) + " exceeds the number of coins");
  }
  Value d = 0;
  for (int i = 0; i < k; ++i) d = std::gcd(d, coins.values_desc[i]);
  const Value v1 = coins.values_desc[0];
  const Value v2 = coins.values_desc[1];
  return 2 * (v1 / (d * k)) * v2 - v1;
}

ImplicitCostAnswer implicit_all_targets(const CoinSet& coins, WorkCounter* work) {
  if (coins.empty()) throw ValidationError("implicit answer needs at least one coin");
  const Value u = coins.u();
  const CostArray d = algo1_all_targets(coins, u * u - 1, work);
  return make_implicit_answer(d, u);
}

}  // namespace coinkit
