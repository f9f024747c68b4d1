#pragma once

// Test-only reference implementations. Each is quadratic or exhaustive and
// shares no code with the library kernels it checks.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "coinkit/convkit.hpp"
#include "coinkit/corekit.hpp"
#include "coinkit/types.hpp"

namespace oracle {

using coinkit::BoolArray;
using coinkit::Cost;
using coinkit::CostArray;
using coinkit::Item;
using coinkit::kInf;
using coinkit::Profit;
using coinkit::Value;

inline BoolArray boolean_convolve(const BoolArray& a, const BoolArray& b, std::size_t len) {
  BoolArray out(len, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      if (b[j]) out[i + j] = 1;
    }
  }
  return out;
}

/// Full (min,+)-convolution with a {1, INF} array given as a mask.
inline CostArray minplus(const CostArray& a, const BoolArray& b_mask) {
  CostArray out(a.size() + b_mask.size() - 1, kInf);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_inf()) continue;
    for (std::size_t j = 0; j < b_mask.size(); ++j) {
      if (b_mask[j]) out[i + j] = std::min(out[i + j], Cost(a[i].value() + 1));
    }
  }
  return out;
}

/// Minimum coin counts for every target by enumerating multisets layer by
/// layer: layer k holds the sums reachable with exactly k coins.
inline CostArray min_coins_by_layers(const std::vector<Value>& coins, Value t) {
  CostArray best(static_cast<std::size_t>(t) + 1, kInf);
  std::set<Value> layer{0};
  best[0] = Cost(0);
  for (Value k = 1; !layer.empty(); ++k) {
    std::set<Value> next;
    for (const Value s : layer) {
      for (const Value v : coins) {
        const Value x = s + v;
        if (x <= t && best[static_cast<std::size_t>(x)].is_inf()) next.insert(x);
      }
    }
    for (const Value x : next) best[static_cast<std::size_t>(x)] = Cost(k);
    layer = std::move(next);
  }
  return best;
}

/// Sums of exactly m values from coins ∪ {0}, over [0, hi].
inline BoolArray exact_count_sums(const std::vector<Value>& coins, Value m, Value hi) {
  BoolArray cur(static_cast<std::size_t>(hi) + 1, 0);
  cur[0] = 1;
  for (Value k = 0; k < m; ++k) {
    BoolArray next = cur;  // the zero coin
    for (Value s = 0; s <= hi; ++s) {
      if (!cur[static_cast<std::size_t>(s)]) continue;
      for (const Value v : coins) {
        if (s + v <= hi) next[static_cast<std::size_t>(s + v)] = 1;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

/// Best profit at every capacity 0..t by exhaustive recursion over item
/// multiplicities. Tiny instances only.
inline std::vector<Profit> knapsack_exhaustive(const std::vector<Item>& items, Value t) {
  std::vector<Profit> best(static_cast<std::size_t>(t) + 1, 0);
  std::function<void(std::size_t, Value, Profit)> go = [&](std::size_t k, Value w, Profit p) {
    if (k == items.size()) {
      for (Value c = w; c <= t; ++c) {
        best[static_cast<std::size_t>(c)] = std::max(best[static_cast<std::size_t>(c)], p);
      }
      return;
    }
    for (Value copies = 0; w + copies * items[k].weight <= t; ++copies) {
      go(k + 1, w + copies * items[k].weight, p + copies * items[k].profit);
    }
  };
  go(0, 0, 0);
  return best;
}

/// Minimum words per text prefix by direct substring lookups in a hash set.
inline CostArray word_break(const std::string& text, const std::vector<std::string>& words) {
  const std::unordered_set<std::string> dict(words.begin(), words.end());
  std::size_t longest = 0;
  for (const auto& w : words) longest = std::max(longest, w.size());
  CostArray s(text.size() + 1, kInf);
  s[0] = Cost(0);
  for (std::size_t i = 1; i <= text.size(); ++i) {
    for (std::size_t len = 1; len <= std::min(i, longest); ++len) {
      if (s[i - len].is_inf()) continue;
      if (dict.count(text.substr(i - len, len)) != 0) {
        s[i] = std::min(s[i], Cost(s[i - len].value() + 1));
      }
    }
  }
  return s;
}

/// Searches for S1, S2 inside the multiset with |S1| = |S2| = k and both
/// sums at most total / 2, where k = (m - 1) / 2 for odd m and m / 2 - 1 for
/// even m. Given S1, the k smallest remaining values are the best S2.
inline bool balanced_partition_exists(std::vector<Value> multiset) {
  const auto m = static_cast<Value>(multiset.size());
  if (m == 0) return true;
  const Value k = (m % 2 == 1) ? (m - 1) / 2 : m / 2 - 1;
  const Value total = std::accumulate(multiset.begin(), multiset.end(), Value{0});
  std::sort(multiset.begin(), multiset.end());
  std::vector<bool> used(multiset.size(), false);

  auto rest_ok = [&] {
    Value sum = 0;
    Value taken = 0;
    for (std::size_t i = 0; i < multiset.size() && taken < k; ++i) {
      if (used[i]) continue;
      sum += multiset[i];
      ++taken;
    }
    return 2 * sum <= total;
  };
  std::function<bool(std::size_t, Value, Value)> pick = [&](std::size_t from, Value chosen,
                                                            Value sum) -> bool {
    if (2 * sum > total) return false;
    if (chosen == k) return rest_ok();
    for (std::size_t i = from; i < multiset.size(); ++i) {
      if (i > from && multiset[i] == multiset[i - 1] && !used[i - 1]) continue;
      used[i] = true;
      const bool ok = pick(i + 1, chosen + 1, sum + multiset[i]);
      used[i] = false;
      if (ok) return true;
    }
    return false;
  };
  return pick(0, 0, 0);
}

/// Largest non-representable integer for a coprime pair, or -1 if every
/// integer is representable. Scans representability directly.
inline Value frobenius_scan(const std::vector<Value>& coins, Value limit) {
  std::vector<bool> rep(static_cast<std::size_t>(limit) + 1, false);
  rep[0] = true;
  Value last_gap = -1;
  for (Value j = 1; j <= limit; ++j) {
    for (const Value v : coins) {
      if (v <= j && rep[static_cast<std::size_t>(j - v)]) {
        rep[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
    if (!rep[static_cast<std::size_t>(j)]) last_gap = j;
  }
  return last_gap;
}

// Random instance helpers.

inline std::vector<Value> random_coins(std::mt19937_64& rng, Value n_max, Value u_max) {
  std::uniform_int_distribution<Value> count(1, n_max);
  std::uniform_int_distribution<Value> value(1, u_max);
  const Value n = std::min(count(rng), u_max);
  std::set<Value> picked;
  while (static_cast<Value>(picked.size()) < n) picked.insert(value(rng));
  return {picked.begin(), picked.end()};
}

inline std::vector<Item> random_items(std::mt19937_64& rng, Value n_max, Value u_max,
                                      Profit p_max) {
  const auto weights = random_coins(rng, n_max, u_max);
  std::uniform_int_distribution<Profit> profit(1, p_max);
  std::vector<Item> items;
  for (const Value w : weights) items.push_back({w, profit(rng)});
  return items;
}

inline std::string random_text(std::mt19937_64& rng, std::size_t n, int alphabet) {
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::string s(n, 'a');
  for (auto& c : s) c = static_cast<char>('a' + letter(rng));
  return s;
}

/// Dictionary mixing random words and substrings of the text, so that both
/// coverable and uncoverable prefixes occur.
inline std::vector<std::string> random_dictionary(std::mt19937_64& rng, const std::string& text,
                                                  int alphabet, std::size_t words,
                                                  std::size_t max_len) {
  std::vector<std::string> dict;
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::bernoulli_distribution from_text(0.7);
  for (std::size_t k = 0; k < words; ++k) {
    const std::size_t l = len(rng);
    if (from_text(rng) && text.size() >= l) {
      std::uniform_int_distribution<std::size_t> start(0, text.size() - l);
      dict.push_back(text.substr(start(rng), l));
    } else {
      dict.push_back(random_text(rng, l, alphabet));
    }
  }
  return dict;
}

}  // namespace oracle
