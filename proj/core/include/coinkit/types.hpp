#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace coinkit {

/// Coin values, targets, capacities and weights.
using Value = std::int64_t;

/// Knapsack profits. Arithmetic on profits is overflow-checked.
using Profit = std::int64_t;

/// A nonnegative count-or-cost, or the sentinel INF.
///
/// INF sits at the top of the representable range: it compares greater than
/// every finite value and absorbs addition (INF + x = INF). Finite sums that
/// would reach the sentinel also saturate to INF.
class Cost {
 public:
  using rep = std::int64_t;

  constexpr Cost() noexcept = default;
  constexpr explicit Cost(rep v) noexcept : v_(v) {}

  [[nodiscard]] static constexpr Cost inf() noexcept { return Cost(kInfRep); }

  [[nodiscard]] constexpr bool is_inf() const noexcept { return v_ == kInfRep; }
  [[nodiscard]] constexpr bool is_finite() const noexcept { return v_ != kInfRep; }
  [[nodiscard]] constexpr rep value() const noexcept { return v_; }

  friend constexpr Cost operator+(Cost a, Cost b) noexcept {
    if (a.is_inf() || b.is_inf() || a.v_ >= kInfRep - b.v_) return inf();
    return Cost(a.v_ + b.v_);
  }

  friend constexpr auto operator<=>(Cost, Cost) noexcept = default;

 private:
  static constexpr rep kInfRep = std::numeric_limits<rep>::max();
  rep v_ = 0;
};

inline constexpr Cost kInf = Cost::inf();

/// Per-target minimum counts, indexed from 0.
using CostArray = std::vector<Cost>;

/// Per-capacity maximum profits, indexed from 0.
using ProfitArray = std::vector<Profit>;

/// Boolean array stored one entry per byte; entries are exactly 0 or 1.
using BoolArray = std::vector<std::uint8_t>;

/// 128-bit integers for overflow-free products of two Values.
__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

/// Instrumentation counter for elementary operations (inner-loop iterations,
/// butterfly operations, bitset words). Optional everywhere; pass nullptr to
/// skip counting.
struct WorkCounter {
  std::uint64_t ops = 0;

  void add(std::uint64_t n) noexcept { ops += n; }
};

inline void count_work(WorkCounter* work, std::uint64_t n) noexcept {
  if (work != nullptr) work->add(n);
}

/// Malformed or out-of-domain input.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle was asked for more than its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coinkit
