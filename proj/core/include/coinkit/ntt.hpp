#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coinkit/types.hpp"

// Number-theoretic transform over Z/pZ with p = 119 * 2^23 + 1.
//
// The transform is exact: a product computed here equals the true integer
// convolution whenever every true output coefficient is below kModulus. For
// 0/1 inputs a coefficient is at most min(len(a), len(b)), so any pair of
// boolean arrays whose padded length fits kMaxLength convolves exactly.
namespace coinkit::ntt {

inline constexpr std::uint32_t kModulus = 998244353;
inline constexpr std::uint32_t kPrimitiveRoot = 3;
inline constexpr int kMaxLog = 23;
inline constexpr std::size_t kMaxLength = std::size_t{1} << kMaxLog;

/// In-place transform; a.size() must be a power of two not above kMaxLength.
void transform(std::vector<std::uint32_t>& a, bool inverse);

/// Cyclic-free product of two residue sequences, length len(a)+len(b)-1.
/// Throws std::length_error if the padded length exceeds kMaxLength.
std::vector<std::uint32_t> multiply(std::span<const std::uint32_t> a,
                                    std::span<const std::uint32_t> b,
                                    WorkCounter* work = nullptr);

}  // namespace coinkit::ntt
