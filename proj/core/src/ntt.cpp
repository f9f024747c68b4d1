#include "coinkit/ntt.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

namespace coinkit::ntt {
namespace {

constexpr std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kModulus);
}

constexpr std::uint32_t power(std::uint32_t base, std::uint64_t e) {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

// roots[k] is a primitive 2^k-th root of unity; inv_roots[k] its inverse.
struct RootTable {
  std::array<std::uint32_t, kMaxLog + 1> roots{};
  std::array<std::uint32_t, kMaxLog + 1> inv_roots{};

  constexpr RootTable() {
    for (int k = 0; k <= kMaxLog; ++k) {
      roots[k] = power(kPrimitiveRoot, (kModulus - 1) >> k);
      inv_roots[k] = power(roots[k], kModulus - 2);
    }
  }
};

constexpr RootTable kRoots{};

}  // namespace

void transform(std::vector<std::uint32_t>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || !std::has_single_bit(n) || n > kMaxLength) {
    throw std::length_error("ntt::transform: length must be a power of two <= 2^23");
  }

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  for (std::size_t len = 2, level = 1; len <= n; len <<= 1, ++level) {
    const std::uint32_t step = inverse ? kRoots.inv_roots[level] : kRoots.roots[level];
    const std::size_t half = len >> 1;
    for (std::size_t start = 0; start < n; start += len) {
      std::uint32_t w = 1;
      for (std::size_t k = 0; k < half; ++k) {
        const std::uint32_t x = a[start + k];
        const std::uint32_t y = mul(a[start + k + half], w);
        const std::uint32_t sum = x + y;
        a[start + k] = sum >= kModulus ? sum - kModulus : sum;
        a[start + k + half] = x >= y ? x - y : x + kModulus - y;
        w = mul(w, step);
      }
    }
  }

  if (inverse) {
    const std::uint32_t n_inv = power(static_cast<std::uint32_t>(n % kModulus), kModulus - 2);
    for (auto& x : a) x = mul(x, n_inv);
  }
}

std::vector<std::uint32_t> multiply(std::span<const std::uint32_t> a,
                                    std::span<const std::uint32_t> b,
                                    WorkCounter* work) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(out_len);
  if (n > kMaxLength) {
    throw std::length_error("ntt::multiply: product longer than 2^23");
  }

  std::vector<std::uint32_t> fa(a.begin(), a.end());
  std::vector<std::uint32_t> fb(b.begin(), b.end());
  fa.resize(n, 0);
  fb.resize(n, 0);
  transform(fa, false);
  transform(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] = mul(fa[i], fb[i]);
  transform(fa, true);
  fa.resize(out_len);

  const auto log_n = static_cast<std::uint64_t>(std::bit_width(n) - 1);
  count_work(work, 3 * n * std::max<std::uint64_t>(log_n, 1) + n);
  return fa;
}

}  // namespace coinkit::ntt
