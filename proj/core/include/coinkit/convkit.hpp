#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coinkit/types.hpp"

namespace coinkit {

/// Second operand of a binary (min,+)-convolution: every entry is 1 or INF.
///
/// Entry k stands for absolute position offset() + k. The convolution kernels
/// below work on raw indices (a-index + b-index); callers add offset() to map
/// a raw output index back to an absolute position.
class BinaryCostArray {
 public:
  BinaryCostArray() = default;

  /// Throws ValidationError if some entry is neither 1 nor INF.
  explicit BinaryCostArray(std::span<const Cost> entries, Value offset = 0);

  /// Builds from a 0/1 mask: mask[k] != 0 means entry k is 1.
  [[nodiscard]] static BinaryCostArray from_mask(BoolArray mask, Value offset = 0);

  [[nodiscard]] std::size_t size() const noexcept { return finite_.size(); }
  [[nodiscard]] bool empty() const noexcept { return finite_.empty(); }
  [[nodiscard]] Value offset() const noexcept { return offset_; }
  [[nodiscard]] bool is_finite(std::size_t k) const { return finite_[k] != 0; }
  [[nodiscard]] Cost operator[](std::size_t k) const { return finite_[k] ? Cost(1) : kInf; }
  [[nodiscard]] const BoolArray& mask() const noexcept { return finite_; }

 private:
  BoolArray finite_;
  Value offset_ = 0;
};

/// Kernel choice for boolean convolution. Auto takes the cheapest exact
/// kernel for the input; Transform always uses the number-theoretic transform.
enum class ConvolutionKernel { Auto, Transform };

/// First truncate_len entries of the boolean convolution of a and b.
///
/// Exact: dense inputs go through the number-theoretic transform (integer
/// convolution thresholded at > 0); sparse or tiny inputs are evaluated
/// directly, whichever costs fewer operations. Requires nonempty 0/1 inputs
/// and 1 <= truncate_len <= len(a) + len(b) - 1.
BoolArray boolean_convolve(std::span<const std::uint8_t> a,
                           std::span<const std::uint8_t> b,
                           std::size_t truncate_len,
                           WorkCounter* work = nullptr,
                           ConvolutionKernel kernel = ConvolutionKernel::Auto);

/// Full (min,+)-convolution of a with a binary array, length len(a)+len(b)-1.
///
/// Finite entries of a are ranked by (value, index) and split into
/// ceil(sqrt(output length)) rank buckets; one boolean convolution per bucket
/// locates, for every output index, the first bucket holding a minimizer,
/// which is then searched directly.
CostArray minplus_binary_convolve(std::span<const Cost> a,
                                  const BinaryCostArray& b,
                                  WorkCounter* work = nullptr);

/// Selected entries of the same convolution, returned in the order of
/// `wanted` (duplicates allowed). Uses ceil(sqrt(|wanted|)) rank buckets.
/// Throws std::out_of_range naming the first index outside the output.
CostArray minplus_binary_convolve_selected(std::span<const Cost> a,
                                           const BinaryCostArray& b,
                                           std::span<const std::size_t> wanted,
                                           WorkCounter* work = nullptr,
                                           ConvolutionKernel kernel = ConvolutionKernel::Auto);

/// Smallest s with s * s >= x.
[[nodiscard]] std::uint64_t ceil_sqrt(std::uint64_t x) noexcept;

/// Smallest s with s * s * s >= x.
[[nodiscard]] std::uint64_t ceil_cbrt(UWide x) noexcept;

}  // namespace coinkit
