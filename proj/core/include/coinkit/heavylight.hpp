#pragma once

#include <optional>
#include <vector>

#include "coinkit/convkit.hpp"
#include "coinkit/corekit.hpp"
#include "coinkit/types.hpp"

namespace coinkit {

/// Coins split at a threshold: heavy > ell0 >= light.
struct HeavyLightSplit {
  Value ell0 = 1;
  CoinSet heavy;
  CoinSet light;
};

HeavyLightSplit split_heavy_light(const CoinSet& coins, Value ell0);

/// Light coins with value in (ell, 2*ell], ell a power of two.
struct LightGroup {
  Value ell = 1;
  std::vector<Value> members;
};

/// One group per power of two ell < ell0 (possibly with no members). The
/// coin 1 belongs to no group.
std::vector<LightGroup> light_groups(const CoinSet& light, Value ell0);

/// D_H over 0..t using at most kmax heavy coins: entry j is the first k with
/// C_H^{(k)}[j] = 1, found by iterated boolean convolution with C_H^{(1)}.
CostArray heavy_min_counts(const CoinSet& heavy, Value t, Value kmax,
                           WorkCounter* work = nullptr,
                           ConvolutionKernel kernel = ConvolutionKernel::Auto);

/// Adds one light group to D_S block by block. Block i covers [ell*i,
/// ell*(i+1) - 1]; its new values are the minimum of the old ones and the
/// selected entries of the binary (min,+)-convolution of the finished window
/// [ell*(i-2), ell*i - 1] with the group indicator.
CostArray add_light_group(CostArray d, const LightGroup& group, Value t,
                          WorkCounter* work = nullptr,
                          ConvolutionKernel kernel = ConvolutionKernel::Auto);

struct HeavyLightOptions {
  /// Forces the heavy/light threshold (rounded up to a power of two).
  std::optional<Value> ell0;
  /// Kernel for every boolean convolution issued by the solver.
  ConvolutionKernel kernel = ConvolutionKernel::Auto;
};

/// Heavy coins by iterated boolean convolution, light coins by the textbook
/// recurrence; ell0 defaults to the power of two nearest above sqrt(t).
CostArray all_targets_t32(const CoinSet& coins, Value t, const HeavyLightOptions& options = {},
                          WorkCounter* work = nullptr);

/// Heavy coins by iterated boolean convolution, light coins group by group
/// through add_light_group. ell0 defaults to t43_threshold(t, u).
CostArray all_targets_t43(const CoinSet& coins, Value t, const HeavyLightOptions& options = {},
                          WorkCounter* work = nullptr);

/// min(2^ceil(2/3 * log2 t), 2^ceil(log2(u + 1))); exact integer arithmetic.
Value t43_threshold(Value t, Value u);

/// Smallest power of two >= x (x >= 1).
Value next_power_of_two(Value x);

}  // namespace coinkit
