#include "coinkit/heavylight.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "coinkit/convkit.hpp"

namespace coinkit {

Value next_power_of_two(Value x) {
  if (x <= 1) return 1;
  return static_cast<Value>(std::bit_ceil(static_cast<std::uint64_t>(x)));
}

Value t43_threshold(Value t, Value u) {
  // 2^e with e the least integer satisfying 8^e >= t^2, i.e. e >= (2/3) log2 t.
  Value from_t = 1;
  if (t > 1) {
    const UWide square = static_cast<UWide>(t) * t;
    UWide eight_pow = 1;
    int e = 0;
    while (eight_pow < square) {
      eight_pow *= 8;
      ++e;
    }
    from_t = Value{1} << e;
  }
  return std::min(from_t, next_power_of_two(u + 1));
}

HeavyLightSplit split_heavy_light(const CoinSet& coins, Value ell0) {
  if (ell0 < 1) throw ValidationError("heavy/light threshold must be positive");
  HeavyLightSplit split;
  split.ell0 = ell0;
  split.light = coins.restrict_to(1, ell0);
  split.heavy = coins.restrict_to(ell0 + 1, coins.u());
  return split;
}

std::vector<LightGroup> light_groups(const CoinSet& light, Value ell0) {
  std::vector<LightGroup> groups;
  for (Value ell = 1; ell < ell0; ell *= 2) {
    LightGroup g;
    g.ell = ell;
    for (const Value v : light.values()) {
      if (v > ell && v <= 2 * ell) g.members.push_back(v);
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

CostArray heavy_min_counts(const CoinSet& heavy, Value t, Value kmax, WorkCounter* work,
                           ConvolutionKernel kernel) {
  if (t < 0 || kmax < 0) throw ValidationError("heavy_min_counts: negative t or kmax");
  const auto len = static_cast<std::size_t>(t) + 1;
  CostArray d(len, kInf);
  d[0] = Cost(0);

  BoolArray single(len, 0);
  bool any = false;
  for (const Value v : heavy.values()) {
    if (v <= t) {
      single[static_cast<std::size_t>(v)] = 1;
      any = true;
    }
  }
  if (!any || kmax == 0) return d;

  BoolArray exactly_k = single;
  for (Value k = 1;; ++k) {
    bool alive = false;
    for (std::size_t j = 0; j < len; ++j) {
      if (!exactly_k[j]) continue;
      alive = true;
      if (d[j].is_inf()) d[j] = Cost(k);
    }
    count_work(work, len);
    if (!alive || k == kmax) break;
    exactly_k = boolean_convolve(exactly_k, single, len, work, kernel);
  }
  return d;
}

CostArray add_light_group(CostArray d, const LightGroup& group, Value t, WorkCounter* work,
                          ConvolutionKernel kernel) {
  if (group.members.empty() || t < 0) return d;
  const Value ell = group.ell;
  if (static_cast<Value>(d.size()) != t + 1) {
    throw ValidationError("add_light_group: cost array length must be t + 1");
  }

  // B covers values ell+1 .. 2*ell; raw index k is value ell + 1 + k.
  BoolArray mask(static_cast<std::size_t>(ell), 0);
  for (const Value v : group.members) {
    if (v <= ell || v > 2 * ell) {
      throw ValidationError("light group member outside (ell, 2*ell]");
    }
    mask[static_cast<std::size_t>(v - ell - 1)] = 1;
  }
  const BinaryCostArray b = BinaryCostArray::from_mask(std::move(mask), ell + 1);

  std::vector<std::size_t> wanted;
  std::vector<Value> targets;
  for (Value i = 1; ell * i <= t; ++i) {
    const Value block_lo = ell * i;
    const Value block_hi = std::min(ell * (i + 1) - 1, t);
    const Value window_lo = std::max<Value>(0, ell * (i - 2));
    const Value window_hi = ell * i - 1;

    wanted.clear();
    targets.clear();
    for (Value j = block_lo; j <= block_hi; ++j) {
      const Value raw = j - window_lo - b.offset();
      if (raw < 0) continue;
      wanted.push_back(static_cast<std::size_t>(raw));
      targets.push_back(j);
    }
    if (wanted.empty()) continue;

    const std::span<const Cost> window(d.data() + window_lo,
                                       static_cast<std::size_t>(window_hi - window_lo + 1));
    const CostArray via_group = minplus_binary_convolve_selected(window, b, wanted, work, kernel);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      Cost& slot = d[static_cast<std::size_t>(targets[k])];
      slot = std::min(slot, via_group[k]);
    }
  }
  return d;
}

namespace {

Value resolve_ell0(const HeavyLightOptions& options, Value fallback) {
  if (options.ell0) {
    if (*options.ell0 < 1) throw ValidationError("forced ell0 must be positive");
    return next_power_of_two(*options.ell0);
  }
  return fallback;
}

}  // namespace

CostArray all_targets_t32(const CoinSet& coins, Value t, const HeavyLightOptions& options,
                          WorkCounter* work) {
  if (t < 0) throw ValidationError("target must be nonnegative");
  if (t == 0) return CostArray{Cost(0)};
  const Value ell0 =
      resolve_ell0(options, next_power_of_two(static_cast<Value>(ceil_sqrt(static_cast<std::uint64_t>(t)))));
  const HeavyLightSplit split = split_heavy_light(coins, ell0);

  CostArray d = heavy_min_counts(split.heavy, t, t / ell0, work, options.kernel);
  const auto light = split.light.values();
  for (Value j = 1; j <= t; ++j) {
    Cost best = d[j];
    for (const Value v : light) {
      if (v > j) break;
      best = std::min(best, d[j - v] + Cost(1));
    }
    d[j] = best;
    count_work(work, light.size());
  }
  return d;
}

CostArray all_targets_t43(const CoinSet& coins, Value t, const HeavyLightOptions& options,
                          WorkCounter* work) {
  if (t < 0) throw ValidationError("target must be nonnegative");
  if (t == 0) return CostArray{Cost(0)};
  const Value ell0 = resolve_ell0(options, t43_threshold(t, coins.u()));
  const HeavyLightSplit split = split_heavy_light(coins, ell0);

  CostArray d = heavy_min_counts(split.heavy, t, t / ell0, work, options.kernel);
  if (split.light.contains(1)) {
    for (Value j = 1; j <= t; ++j) d[j] = std::min(d[j], d[j - 1] + Cost(1));
    count_work(work, static_cast<std::uint64_t>(t));
  }
  for (const LightGroup& group : light_groups(split.light, ell0)) {
    d = add_light_group(std::move(d), group, t, work, options.kernel);
  }
  return d;
}

}  // namespace coinkit
