#include "coinkit/knapsack.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "coinkit/topk_dp.hpp"

namespace coinkit {

RatioRankedItems RatioRankedItems::from(const KnapsackInstance& inst) {
  RatioRankedItems ranked;
  ranked.items.assign(inst.items().begin(), inst.items().end());
  std::sort(ranked.items.begin(), ranked.items.end(), [](const Item& x, const Item& y) {
    const auto lhs = static_cast<Wide>(x.profit) * y.weight;
    const auto rhs = static_cast<Wide>(y.profit) * x.weight;
    if (lhs != rhs) return lhs > rhs;
    if (x.profit != y.profit) return x.profit > y.profit;
    return x.weight < y.weight;
  });
  return ranked;
}

Value ratio_index_bound(Value u, Value j, Value n) {
  if (j < 1) throw ValidationError("ratio_index_bound needs j >= 1");
  const Value thrice_square = 3 * u * u;
  return std::min(n, (thrice_square + j - 1) / j);
}

ProfitArray algo2_all_capacities_with_bound(const KnapsackInstance& inst, Value t,
                                            Value bound_u, WorkCounter* work) {
  if (t < 0) throw ValidationError("capacity must be nonnegative");
  const RatioRankedItems ranked = RatioRankedItems::from(inst);
  const auto& items = ranked.items;
  const Value n = static_cast<Value>(items.size());

  ProfitArray d(static_cast<std::size_t>(t) + 1, 0);
  std::uint64_t iterations = 0;
  for (Value j = 1; j <= t; ++j) {
    const Value limit = ratio_index_bound(bound_u, j, n);
    Profit best = 0;
    for (Value i = 0; i < limit; ++i) {
      const Item& it = items[static_cast<std::size_t>(i)];
      if (it.weight <= j) best = std::max(best, checked_add(d[j - it.weight], it.profit));
    }
    iterations += static_cast<std::uint64_t>(limit) + 1;
    d[j] = best;
  }
  count_work(work, iterations);
  return d;
}

ProfitArray algo2_all_capacities(const KnapsackInstance& inst, Value t, WorkCounter* work) {
  return algo2_all_capacities_with_bound(inst, t, inst.u(), work);
}

ProfitArray tsigma_all_capacities(const KnapsackInstance& inst, Value t, WorkCounter* work) {
  if (t < 0) throw ValidationError("capacity must be nonnegative");
  const Value ell0 = tsigma_threshold(t, inst.sigma());
  const KnapsackInstance light = inst.restrict_to(1, ell0);
  const KnapsackInstance heavy = inst.restrict_to(ell0 + 1, std::max(inst.u(), ell0 + 1));

  ProfitArray d = algo2_all_capacities_with_bound(light, t, ell0, work);
  if (heavy.empty()) return d;
  for (Value j = 1; j <= t; ++j) {
    Profit best = d[j];
    for (const Item& it : heavy.items()) {
      if (it.weight > j) break;
      best = std::max(best, checked_add(d[j - it.weight], it.profit));
    }
    d[j] = best;
    count_work(work, static_cast<std::uint64_t>(heavy.n()));
  }
  return d;
}

Value window_shrink_factor(Value t, Value u) {
  const auto x = static_cast<std::uint64_t>(std::max<Value>(t + u, 1));
  const Value ceil_log = x <= 1 ? 0 : static_cast<Value>(std::bit_width(x - 1));
  return ceil_log + 1;
}

Value shrink_capacity(Value t, Value b) { return t - t / b; }

namespace {

CapacityWindow base_window(const KnapsackInstance& inst, Value t, WorkCounter* work) {
  const Value u = inst.u();
  ProfitArray full = dp_all_capacities(inst, t + u);
  count_work(work, static_cast<std::uint64_t>((t + u + 1) * std::max<Value>(inst.n(), 1)));
  CapacityWindow w;
  w.lo = t;
  w.values.assign(full.begin() + t, full.end());
  return w;
}

CapacityWindow advance_window(const KnapsackInstance& inst, const CapacityWindow& child,
                              Value t, WorkCounter* work) {
  const Value u = inst.u();
  const Value child_hi = child.lo + u;
  CapacityWindow w;
  w.lo = t;
  w.values.resize(static_cast<std::size_t>(u) + 1);
  for (Value j = t; j <= t + u; ++j) {
    if (j <= child_hi) {
      w.values[static_cast<std::size_t>(j - t)] = child.at(j);
      continue;
    }
    Profit best = 0;
    for (const Item& it : inst.items()) {
      const Value copies = (j - child_hi + it.weight - 1) / it.weight;
      const Value source = j - copies * it.weight;
      if (source < child.lo) continue;
      best = std::max(best, checked_add(child.at(source), checked_mul(it.profit, copies)));
    }
    count_work(work, static_cast<std::uint64_t>(inst.n()));
    w.values[static_cast<std::size_t>(j - t)] = best;
  }
  return w;
}

}  // namespace

CapacityWindow capacity_window(const KnapsackInstance& inst, Value t, Value b,
                               WorkCounter* work) {
  if (t < 0) throw ValidationError("capacity must be nonnegative");
  if (b < 1) throw ValidationError("shrink factor must be positive");
  std::vector<Value> chain{t};
  while (chain.back() > 4 * b) chain.push_back(shrink_capacity(chain.back(), b));

  CapacityWindow w = base_window(inst, chain.back(), work);
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    w = advance_window(inst, w, *it, work);
  }
  return w;
}

Profit single_capacity_nu(const KnapsackInstance& raw, Value t, WorkCounter* work) {
  if (t < 0) throw ValidationError("capacity must be nonnegative");
  const KnapsackInstance inst = raw.restrict_to(1, t);
  if (inst.empty() || t == 0) return 0;

  const Item best = RatioRankedItems::from(inst).items.front();
  const Value u = inst.u();
  const Value threshold = 3 * u * u;
  Value reduced = t;
  Profit stripped = 0;
  if (t >= threshold) {
    const Value copies = (t - threshold + 1 + best.weight - 1) / best.weight;
    reduced = t - copies * best.weight;
    stripped = checked_mul(copies, best.profit);
  }

  const Value b = window_shrink_factor(reduced, u);
  const CapacityWindow w = capacity_window(inst, reduced, b, work);
  return checked_add(w.at(reduced), stripped);
}

bool log_types_check(const KnapsackInstance& inst, Value j) {
  if (j < 0) throw ValidationError("capacity must be nonnegative");
  if (j > kLogTypesMaxCapacity || inst.n() > kLogTypesMaxItems) {
    throw BudgetExceeded("log_types_check is limited to j <= " +
                         std::to_string(kLogTypesMaxCapacity) + " and n <= " +
                         std::to_string(kLogTypesMaxItems));
  }
  const auto items = inst.items();
  Profit best_profit = -1;
  int best_types = 0;
  std::function<void(std::size_t, Value, Profit, int)> search =
      [&](std::size_t i, Value room, Profit profit, int types) {
        if (i == items.size()) {
          if (profit > best_profit || (profit == best_profit && types < best_types)) {
            best_profit = profit;
            best_types = types;
          }
          return;
        }
        search(i + 1, room, profit, types);
        Value used = items[i].weight;
        for (Value m = 1; used <= room; ++m, used += items[i].weight) {
          search(i + 1, room - used, profit + m * items[i].profit, types + 1);
        }
      };
  search(0, j, 0, 0);
  const int allowed = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(j) + 1)) - 1;
  return best_types <= allowed;
}

}  // namespace coinkit
