#include "coinkit/corekit.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace coinkit {

Profit checked_add(Profit a, Profit b) {
  Profit out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("profit overflow");
  return out;
}

Profit checked_mul(Profit a, Profit b) {
  Profit out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("profit overflow");
  return out;
}

CoinSet CoinSet::from_values(std::span<const Value> raw) {
  CoinSet set;
  for (const Value v : raw) {
    if (v <= 0) throw ValidationError("coin value must be positive, got " + std::to_string(v));
  }
  set.values_.assign(raw.begin(), raw.end());
  std::sort(set.values_.begin(), set.values_.end());
  set.values_.erase(std::unique(set.values_.begin(), set.values_.end()), set.values_.end());
  for (const Value v : set.values_) set.sigma_ = checked_add(set.sigma_, v);
  return set;
}

bool CoinSet::contains(Value v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

CoinSet CoinSet::restrict_to(Value lo, Value hi) const {
  std::vector<Value> kept;
  for (const Value v : values_) {
    if (v >= lo && v <= hi) kept.push_back(v);
  }
  return from_values(kept);
}

CoinSet normalize_coins(std::span<const Value> raw, Value t) {
  if (raw.empty()) throw ValidationError("coin list is empty");
  if (t < 0) throw ValidationError("target must be nonnegative, got " + std::to_string(t));
  const CoinSet all = CoinSet::from_values(raw);
  return all.restrict_to(1, t);
}

KnapsackInstance KnapsackInstance::from_items(std::span<const Item> raw) {
  std::vector<Item> items(raw.begin(), raw.end());
  for (const Item& it : items) {
    if (it.weight <= 0) {
      throw ValidationError("item weight must be positive, got " + std::to_string(it.weight));
    }
    if (it.profit <= 0) {
      throw ValidationError("item profit must be positive, got " + std::to_string(it.profit));
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return x.weight != y.weight ? x.weight < y.weight : x.profit > y.profit;
  });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const Item& x, const Item& y) { return x.weight == y.weight; }),
              items.end());
  KnapsackInstance inst;
  inst.items_ = std::move(items);
  for (const Item& it : inst.items_) inst.sigma_ = checked_add(inst.sigma_, it.weight);
  return inst;
}

KnapsackInstance KnapsackInstance::restrict_to(Value lo, Value hi) const {
  std::vector<Item> kept;
  for (const Item& it : items_) {
    if (it.weight >= lo && it.weight <= hi) kept.push_back(it);
  }
  return from_items(kept);
}

KnapsackInstance normalize_items(std::span<const Item> raw, Value t) {
  if (raw.empty()) throw ValidationError("item list is empty");
  if (t < 0) throw ValidationError("capacity must be nonnegative, got " + std::to_string(t));
  return KnapsackInstance::from_items(raw).restrict_to(1, t);
}

CostArray dp_all_targets(const CoinSet& coins, Value t) {
  CostArray d(static_cast<std::size_t>(t) + 1, kInf);
  d[0] = Cost(0);
  for (Value j = 1; j <= t; ++j) {
    Cost best = kInf;
    for (const Value v : coins.values()) {
      if (v > j) break;
      best = std::min(best, d[j - v] + Cost(1));
    }
    d[j] = best;
  }
  return d;
}

ProfitArray dp_all_capacities(const KnapsackInstance& inst, Value t) {
  ProfitArray d(static_cast<std::size_t>(t) + 1, 0);
  for (Value j = 1; j <= t; ++j) {
    Profit best = 0;
    for (const Item& it : inst.items()) {
      if (it.weight > j) break;
      best = std::max(best, checked_add(d[j - it.weight], it.profit));
    }
    d[j] = best;
  }
  return d;
}

CostArray brute_force_all_targets(const CoinSet& coins, Value t, Value bound) {
  if (t > bound) {
    throw BudgetExceeded("oracle target " + std::to_string(t) + " exceeds bound " +
                         std::to_string(bound));
  }
  // Level-synchronous BFS: level k holds the sums first reached with k coins.
  CostArray dist(static_cast<std::size_t>(t) + 1, kInf);
  std::vector<Value> frontier{0};
  dist[0] = Cost(0);
  for (Cost::rep level = 1; !frontier.empty(); ++level) {
    std::vector<Value> next;
    for (const Value s : frontier) {
      for (const Value v : coins.values()) {
        const Value reached = s + v;
        if (reached > t) continue;
        if (dist[reached].is_inf()) {
          dist[reached] = Cost(level);
          next.push_back(reached);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

Cost brute_force_min_coins(const CoinSet& coins, Value j, Value bound) {
  if (j < 0) throw ValidationError("target must be nonnegative");
  return brute_force_all_targets(coins, j, bound)[static_cast<std::size_t>(j)];
}

std::optional<Value> frobenius_brute(const CoinSet& coins, Value bound) {
  if (coins.empty()) throw ValidationError("Frobenius number needs at least one coin");
  if (coins.u() > bound) {
    throw BudgetExceeded("largest coin " + std::to_string(coins.u()) + " exceeds bound " +
                         std::to_string(bound));
  }
  Value g = 0;
  for (const Value v : coins.values()) g = std::gcd(g, v);
  if (g != 1) throw ValidationError("coin values share gcd " + std::to_string(g));

  // Once u consecutive sums are representable, every larger one is too.
  const Value u = coins.u();
  std::vector<std::uint8_t> representable{1};
  std::optional<Value> last_gap;
  Value run = 1;
  for (Value j = 1; run < u; ++j) {
    bool ok = false;
    for (const Value v : coins.values()) {
      if (v > j) break;
      if (representable[static_cast<std::size_t>(j - v)]) {
        ok = true;
        break;
      }
    }
    representable.push_back(ok ? 1 : 0);
    if (ok) {
      ++run;
    } else {
      run = 0;
      last_gap = j;
    }
  }
  return last_gap;
}

Value Witness::sum() const {
  Value s = 0;
  for (const Value v : coins) s += v;
  return s;
}

Witness reconstruct_witness(std::span<const Cost> d, const CoinSet& coins, Value j) {
  if (j < 0 || static_cast<std::size_t>(j) >= d.size()) {
    throw ValidationError("target " + std::to_string(j) + " outside the cost array");
  }
  if (d[j].is_inf()) throw ValidationError("target " + std::to_string(j) + " is infeasible");
  Witness w;
  Value rest = j;
  while (rest > 0) {
    const Cost want = Cost(d[rest].value() - 1);
    bool stepped = false;
    for (auto it = coins.values().rbegin(); it != coins.values().rend(); ++it) {
      const Value v = *it;
      if (v <= rest && d[rest - v] == want) {
        w.coins.push_back(v);
        rest -= v;
        stepped = true;
        break;
      }
    }
    if (!stepped) {
      throw std::logic_error("no coin decrements the count at " + std::to_string(rest) +
                             "; the cost array is corrupt");
    }
  }
  std::sort(w.coins.rbegin(), w.coins.rend());
  return w;
}

ImplicitCostAnswer make_implicit_answer(std::span<const Cost> d, Value u) {
  if (u <= 0) throw ValidationError("largest coin must be positive");
  const auto need = static_cast<std::size_t>(u * u);
  if (d.size() < need) {
    throw ValidationError("cost array shorter than u^2 = " + std::to_string(need));
  }
  return ImplicitCostAnswer{CostArray(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(need)),
                            u};
}

Cost implicit_query(const ImplicitCostAnswer& ans, Value j) {
  const Value square = ans.u * ans.u;
  if (j < square) return ans.prefix[static_cast<std::size_t>(j)];
  const Value k = (j - square + 1 + ans.u - 1) / ans.u;
  return ans.prefix[static_cast<std::size_t>(j - k * ans.u)] + Cost(k);
}

}  // namespace coinkit
