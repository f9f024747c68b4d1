#include "coinkit/fastsingle.hpp"

#include <algorithm>

#include "coinkit/convkit.hpp"

namespace coinkit {
namespace {

// bits[k] stands for position lo + k.
struct Shifted {
  Value lo = 0;
  BoolArray bits;
};

// a ∘ b, keeping positions <= keep_hi.
Shifted convolve_upto(const Shifted& a, const Shifted& b, Value keep_hi, WorkCounter* work) {
  Shifted out;
  out.lo = a.lo + b.lo;
  if (a.bits.empty() || b.bits.empty() || keep_hi < out.lo) return out;
  const Value full = static_cast<Value>(a.bits.size() + b.bits.size()) - 1;
  const Value keep = std::min(full, keep_hi - out.lo + 1);
  out.bits = boolean_convolve(a.bits, b.bits, static_cast<std::size_t>(keep), work);
  return out;
}

BoolArray crop(const Shifted& s, Value lo, Value hi) {
  BoolArray out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < s.bits.size(); ++k) {
    const Value pos = s.lo + static_cast<Value>(k);
    if (pos >= lo && pos <= hi && s.bits[k]) out[static_cast<std::size_t>(pos - lo)] = 1;
  }
  return out;
}

CountWindow count_window_impl(const CoinSet& coins, const Shifted& single, Value m,
                              Value t_param, WorkCounter* work) {
  const Value width = count_window_width(coins.u());
  CountWindow w;
  w.m = m;
  w.t_param = t_param;
  w.lo = std::max<Value>(0, t_param - width);

  if (m <= 1) {
    w.bits.assign(static_cast<std::size_t>(t_param - w.lo + 1), 0);
    if (w.lo == 0) w.bits[0] = 1;
    if (m == 1) {
      for (const Value v : coins.values()) {
        if (v >= w.lo && v <= t_param) w.bits[static_cast<std::size_t>(v - w.lo)] = 1;
      }
    }
    return w;
  }

  const bool odd = (m % 2) == 1;
  const Value half = odd ? (m - 1) / 2 : m / 2 - 1;
  const Value half_target = (t_param + 1) / 2;
  const CountWindow child = count_window_impl(coins, single, half, half_target, work);

  const Shifted child_bits{child.lo, child.bits};
  Shifted acc = convolve_upto(child_bits, child_bits, t_param, work);
  for (int leftover = odd ? 1 : 2; leftover > 0; --leftover) {
    acc = convolve_upto(acc, single, t_param, work);
  }
  w.bits = crop(acc, w.lo, t_param);
  return w;
}

}  // namespace

CountWindow count_window(const CoinSet& coins, Value m, Value t_param, WorkCounter* work) {
  if (m < 0) throw ValidationError("coin count must be nonnegative");
  if (t_param < 0) throw ValidationError("target must be nonnegative");
  Shifted single;
  single.bits.assign(static_cast<std::size_t>(coins.u()) + 1, 0);
  single.bits[0] = 1;
  for (const Value v : coins.values()) single.bits[static_cast<std::size_t>(v)] = 1;
  return count_window_impl(coins, single, m, t_param, work);
}

bool decide(const CoinSet& coins, Value t, Value m, WorkCounter* work) {
  if (t < 0) throw ValidationError("target must be nonnegative");
  if (m < 0) throw ValidationError("coin count must be nonnegative");
  return count_window(coins, m, t, work).test(t);
}

Cost min_coins_single(const CoinSet& all_coins, Value t, WorkCounter* work) {
  if (t < 0) throw ValidationError("target must be nonnegative");
  if (t == 0) return Cost(0);
  const CoinSet coins = all_coins.restrict_to(1, t);
  if (coins.empty()) return kInf;

  const Value u = coins.u();
  const Value square = u * u;
  const Value copies = t >= square ? (t - square + 1 + u - 1) / u : 0;
  const Value reduced = t - copies * u;
  if (reduced == 0) return Cost(copies);

  const CoinSet usable = coins.restrict_to(1, reduced);
  if (usable.empty() || !decide(usable, reduced, reduced, work)) return kInf;
  Value lo = 0;
  Value hi = reduced;
  while (lo < hi) {
    const Value mid = lo + (hi - lo) / 2;
    if (decide(usable, reduced, mid, work)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return Cost(lo + copies);
}

}  // namespace coinkit
