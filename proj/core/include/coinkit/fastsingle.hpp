#pragma once

#include "coinkit/corekit.hpp"
#include "coinkit/types.hpp"

namespace coinkit {

/// Window [lo, t_param] of C^{(m)} over V ∪ {0}: bits[j - lo] = 1 iff some
/// multiset of exactly m values from V ∪ {0} sums to j.
struct CountWindow {
  Value m = 0;
  Value t_param = 0;
  Value lo = 0;
  BoolArray bits;

  [[nodiscard]] bool test(Value j) const {
    return j >= lo && j <= t_param && bits[static_cast<std::size_t>(j - lo)] != 0;
  }
};

/// Window width below t_param: 4u + 2. Two wider than what exact halving
/// needs, to absorb the rounding of ceil(t/2) at every level.
[[nodiscard]] inline Value count_window_width(Value u) noexcept { return 4 * u + 2; }

/// C^{(m)} over V ∪ {0} restricted to [max(0, t_param - W), t_param].
///
/// Splits m coins into two halves of floor((m-1)/2) (m odd) or m/2 - 1
/// (m even) coins whose sums are at most t/2 and at least t/2 - 2u, plus one
/// or two leftover coins; the half window is computed once by recursion at
/// ceil(t_param / 2), squared, and convolved with C^{(1)}[0..u] once or twice.
/// Zero is adjoined internally. Throws ValidationError if m < 0.
CountWindow count_window(const CoinSet& coins, Value m, Value t_param,
                         WorkCounter* work = nullptr);

/// Whether at most m coins sum to exactly t.
bool decide(const CoinSet& coins, Value t, Value m, WorkCounter* work = nullptr);

/// Single-target change-making in O(u log^3 u): reduce t below u^2 with
/// copies of the largest coin, then binary-search the smallest m that decide
/// accepts. INF when no multiset sums to t.
Cost min_coins_single(const CoinSet& coins, Value t, WorkCounter* work = nullptr);

}  // namespace coinkit
