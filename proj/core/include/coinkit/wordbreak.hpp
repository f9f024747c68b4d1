#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coinkit/convkit.hpp"
#include "coinkit/types.hpp"

namespace coinkit {

/// Byte text plus a dictionary of distinct nonempty byte strings.
struct WordBreakInstance {
  std::string text;
  std::vector<std::string> dictionary;
  Value total_length = 0;

  /// Deduplicates words; throws ValidationError on an empty word or an empty
  /// dictionary.
  [[nodiscard]] static WordBreakInstance from(std::string text, std::vector<std::string> words);
};

/// Trie over the reversed words whose length lies in [q, 2q - 1], with a
/// maximal family of node-disjoint downward paths each holding exactly
/// lambda marked nodes.
///
/// A node at depth d spells the reversal of a d-byte string; it is marked
/// when that string is a dictionary word. Walking from any node through its
/// lowest marked ancestors meets the top of some path, or runs out of marked
/// ancestors, within 2 * lambda steps.
class ScaleTrie {
 public:
  static constexpr int kNone = -1;

  struct Node {
    int parent = kNone;
    Value depth = 0;
    bool marked = false;
    int lowest_marked = kNone;  // deepest marked node on the root path, self included
    int path = kNone;           // index into paths(), if the node lies on one
    bool path_top = false;
    std::vector<std::pair<unsigned char, int>> children;
  };

  struct Path {
    int top = kNone;
    std::vector<int> nodes;  // top first, each the parent of the next
    Value marked_count = 0;
    /// Marked indicator of the root-to-top path over depths [q, 2q - 1]
    /// (offset q): the second operand of the jump-query convolution.
    BinaryCostArray depth_indicator;
  };

  ScaleTrie(std::span<const std::string> dictionary, Value q, Value lambda);

  [[nodiscard]] Value q() const noexcept { return q_; }
  [[nodiscard]] Value lambda() const noexcept { return lambda_; }
  [[nodiscard]] bool empty() const noexcept { return marked_count_ == 0; }
  [[nodiscard]] Value marked_count() const noexcept { return marked_count_; }
  [[nodiscard]] const std::vector<Node>& nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<Path>& paths() const noexcept { return paths_; }

  [[nodiscard]] int child(int node, unsigned char byte) const;

  /// Deepest node spelling a prefix of reverse(text[0, i)), descending at
  /// most 2q - 1 bytes.
  [[nodiscard]] int deepest_match(std::string_view text, Value i) const;

  /// Marked-node steps from `node` until a path top or the root.
  [[nodiscard]] Value marked_steps_from(int node) const;

  /// Post-build audit: marked depths in [q, 2q - 1]; paths disjoint,
  /// contiguous, topped by a marked node and holding exactly lambda marked
  /// nodes; every ancestor walk ends within 2 * lambda marked steps.
  [[nodiscard]] bool audit() const;

 private:
  void build_paths();

  Value q_;
  Value lambda_;
  Value marked_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<Path> paths_;
};

ScaleTrie build_scale_trie(std::span<const std::string> dictionary, Value q, Value lambda);

struct JumpStats {
  std::uint64_t queries = 0;
  Value max_marked_steps = 0;
  bool walk_bound_held = true;
};

/// Extends prefix costs across [x + 1, min(x + q, n)] using words of length
/// [q, 2q - 1]. `window` holds the final costs of prefixes
/// [max(0, x - 2q + 1), x]. Requires x % q == 0.
CostArray jump_query(const ScaleTrie& trie, std::string_view text, Value x,
                     std::span<const Cost> window, JumpStats* stats = nullptr,
                     WorkCounter* work = nullptr);

struct WordBreakOptions {
  /// Throw std::logic_error if a query would update a prefix the sweep has
  /// already passed.
  bool check_finality = false;
};

/// Minimum number of dictionary words covering every text prefix, sweeping
/// x = 0 .. n - 1 and running a jump query for every scale q dividing x.
/// lambda_q = ceil(m^(1/3)) for every scale.
CostArray min_word_break(const WordBreakInstance& inst, const WordBreakOptions& options = {},
                         JumpStats* stats = nullptr, WorkCounter* work = nullptr);

inline constexpr Value kDefaultWordBreakBudget = 10'000'000;

/// Direct DP comparing every word against every text position. Throws
/// BudgetExceeded when n * m exceeds the budget.
CostArray naive_word_break(const WordBreakInstance& inst,
                           Value budget = kDefaultWordBreakBudget);

}  // namespace coinkit
