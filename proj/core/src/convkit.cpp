#include "coinkit/convkit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "coinkit/ntt.hpp"

namespace coinkit {
namespace {

std::vector<std::size_t> set_positions(std::span<const std::uint8_t> bits, std::size_t limit) {
  std::vector<std::size_t> out;
  const std::size_t n = std::min(bits.size(), limit);
  for (std::size_t i = 0; i < n; ++i) {
    if (bits[i] > 1) throw ValidationError("boolean array entry is not 0 or 1");
    if (bits[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t ntt_cost(std::size_t la, std::size_t lb) {
  const std::size_t n = std::bit_ceil(la + lb - 1);
  const auto log_n = static_cast<std::uint64_t>(std::bit_width(n) - 1);
  return 3 * n * std::max<std::uint64_t>(log_n, 1) + n;
}

// out |= dense << shift, restricted to the first out.size() words.
void shift_or(std::vector<std::uint64_t>& out, const std::vector<std::uint64_t>& dense,
              std::size_t shift) {
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = static_cast<unsigned>(shift % 64);
  for (std::size_t w = 0; w < dense.size() && w + word_shift < out.size(); ++w) {
    const std::uint64_t x = dense[w];
    if (x == 0) continue;
    out[w + word_shift] |= x << bit_shift;
    if (bit_shift != 0 && w + word_shift + 1 < out.size()) {
      out[w + word_shift + 1] |= x >> (64 - bit_shift);
    }
  }
}

BoolArray convolve_by_shifts(std::span<const std::uint8_t> dense,
                             std::span<const std::size_t> sparse_positions,
                             std::size_t truncate_len) {
  const std::size_t words = (truncate_len + 63) / 64;
  std::vector<std::uint64_t> packed(words, 0);
  for (std::size_t i = 0; i < std::min(dense.size(), truncate_len); ++i) {
    if (dense[i]) packed[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  std::vector<std::uint64_t> acc(words, 0);
  for (const std::size_t p : sparse_positions) {
    if (p >= truncate_len) break;
    shift_or(acc, packed, p);
  }
  BoolArray out(truncate_len, 0);
  for (std::size_t i = 0; i < truncate_len; ++i) {
    out[i] = static_cast<std::uint8_t>((acc[i / 64] >> (i % 64)) & 1U);
  }
  return out;
}

BoolArray convolve_by_ntt(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                          std::size_t truncate_len, WorkCounter* work) {
  const std::size_t la = std::min(a.size(), truncate_len);
  const std::size_t lb = std::min(b.size(), truncate_len);
  std::vector<std::uint32_t> ra(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(la));
  std::vector<std::uint32_t> rb(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(lb));
  const auto product = ntt::multiply(ra, rb, work);
  BoolArray out(truncate_len, 0);
  for (std::size_t i = 0; i < truncate_len && i < product.size(); ++i) {
    out[i] = product[i] > 0 ? 1 : 0;
  }
  return out;
}

}  // namespace

std::uint64_t ceil_sqrt(std::uint64_t x) noexcept {
  if (x == 0) return 0;
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (s * s < x) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= x) --s;
  return s;
}

std::uint64_t ceil_cbrt(UWide x) noexcept {
  auto s = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(x)));
  auto cube = [](std::uint64_t y) { return static_cast<UWide>(y) * y * y; };
  while (cube(s) < x) ++s;
  while (s > 0 && cube(s - 1) >= x) --s;
  return s;
}

BinaryCostArray::BinaryCostArray(std::span<const Cost> entries, Value offset)
    : finite_(entries.size(), 0), offset_(offset) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].is_inf()) continue;
    if (entries[k] != Cost(1)) {
      throw ValidationError("binary cost array entry " + std::to_string(k) +
                            " is neither 1 nor INF");
    }
    finite_[k] = 1;
  }
}

BinaryCostArray BinaryCostArray::from_mask(BoolArray mask, Value offset) {
  BinaryCostArray b;
  for (auto& m : mask) m = m ? 1 : 0;
  b.finite_ = std::move(mask);
  b.offset_ = offset;
  return b;
}

BoolArray boolean_convolve(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b,
                           std::size_t truncate_len, WorkCounter* work,
                           ConvolutionKernel kernel) {
  if (a.empty() || b.empty()) throw ValidationError("boolean_convolve: empty input");
  if (truncate_len == 0) throw ValidationError("boolean_convolve: truncate_len must be positive");
  if (truncate_len > a.size() + b.size() - 1) {
    throw ValidationError("boolean_convolve: truncate_len exceeds len(a)+len(b)-1");
  }

  const auto pa = set_positions(a, truncate_len);
  const auto pb = set_positions(b, truncate_len);
  if (pa.empty() || pb.empty()) return BoolArray(truncate_len, 0);
  if (kernel == ConvolutionKernel::Transform) return convolve_by_ntt(a, b, truncate_len, work);

  const std::uint64_t words = (truncate_len + 63) / 64;
  const std::uint64_t pair_cost = static_cast<std::uint64_t>(pa.size()) * pb.size();
  const std::uint64_t shift_cost = std::min(pa.size(), pb.size()) * words;
  const std::uint64_t transform_cost =
      ntt_cost(std::min(a.size(), truncate_len), std::min(b.size(), truncate_len));

  if (pair_cost <= shift_cost && pair_cost <= transform_cost) {
    BoolArray out(truncate_len, 0);
    for (const std::size_t i : pa) {
      for (const std::size_t j : pb) {
        if (i + j >= truncate_len) break;
        out[i + j] = 1;
      }
    }
    count_work(work, pair_cost);
    return out;
  }
  if (shift_cost <= transform_cost) {
    count_work(work, shift_cost);
    return pa.size() <= pb.size() ? convolve_by_shifts(b, pa, truncate_len)
                                  : convolve_by_shifts(a, pb, truncate_len);
  }
  return convolve_by_ntt(a, b, truncate_len, work);
}

CostArray minplus_binary_convolve(std::span<const Cost> a, const BinaryCostArray& b,
                                  WorkCounter* work) {
  if (a.empty() || b.empty()) throw ValidationError("minplus_binary_convolve: empty input");
  std::vector<std::size_t> all(a.size() + b.size() - 1);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return minplus_binary_convolve_selected(a, b, all, work);
}

CostArray minplus_binary_convolve_selected(std::span<const Cost> a, const BinaryCostArray& b,
                                           std::span<const std::size_t> wanted,
                                           WorkCounter* work, ConvolutionKernel kernel) {
  if (a.empty() || b.empty()) throw ValidationError("minplus_binary_convolve: empty input");
  const std::size_t out_len = a.size() + b.size() - 1;
  std::size_t max_wanted = 0;
  for (const std::size_t w : wanted) {
    if (w >= out_len) {
      throw std::out_of_range("requested output index " + std::to_string(w) +
                              " outside [0, " + std::to_string(out_len - 1) + "]");
    }
    max_wanted = std::max(max_wanted, w);
  }

  CostArray result(wanted.size(), kInf);
  if (wanted.empty()) return result;

  // Ranks: finite entries of a ordered by (value, index); INF never competes.
  std::vector<std::size_t> ranked;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_finite()) ranked.push_back(i);
  }
  if (ranked.empty()) return result;
  const BoolArray& b_mask = b.mask();
  if (std::none_of(b_mask.begin(), b_mask.end(), [](std::uint8_t x) { return x != 0; })) {
    return result;
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });

  const std::size_t r = ranked.size();
  const std::size_t buckets_wanted = static_cast<std::size_t>(ceil_sqrt(wanted.size()));
  const std::size_t bucket_size = (r + buckets_wanted - 1) / buckets_wanted;
  const std::size_t truncate_len = std::min(out_len, max_wanted + 1);

  std::vector<std::size_t> pending(wanted.size());
  std::iota(pending.begin(), pending.end(), std::size_t{0});

  BoolArray bucket_mask(a.size(), 0);
  for (std::size_t lo = 0; lo < r && !pending.empty(); lo += bucket_size) {
    const std::size_t hi = std::min(r, lo + bucket_size);
    std::fill(bucket_mask.begin(), bucket_mask.end(), 0);
    for (std::size_t k = lo; k < hi; ++k) bucket_mask[ranked[k]] = 1;
    const BoolArray hit = boolean_convolve(bucket_mask, b_mask, truncate_len, work, kernel);

    std::size_t kept = 0;
    for (const std::size_t slot : pending) {
      const std::size_t out_index = wanted[slot];
      count_work(work, 1);
      if (!hit[out_index]) {
        pending[kept++] = slot;
        continue;
      }
      // The first bucket with a hit holds the minimizer; scan it in rank order.
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t ai = ranked[k];
        count_work(work, 1);
        if (ai > out_index) continue;
        const std::size_t bi = out_index - ai;
        if (bi < b_mask.size() && b_mask[bi]) {
          result[slot] = a[ai] + Cost(1);
          break;
        }
      }
    }
    pending.resize(kept);
  }
  return result;
}

}  // namespace coinkit
