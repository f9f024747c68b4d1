#include "coinkit/wordbreak.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coinkit {

WordBreakInstance WordBreakInstance::from(std::string text, std::vector<std::string> words) {
  if (words.empty()) throw ValidationError("dictionary is empty");
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (words[k].empty()) {
      throw ValidationError("dictionary word " + std::to_string(k + 1) + " is empty");
    }
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  WordBreakInstance inst;
  inst.text = std::move(text);
  inst.dictionary = std::move(words);
  for (const auto& w : inst.dictionary) inst.total_length += static_cast<Value>(w.size());
  return inst;
}

ScaleTrie::ScaleTrie(std::span<const std::string> dictionary, Value q, Value lambda)
    : q_(q), lambda_(lambda) {
  if (q < 1) throw ValidationError("trie scale must be positive");
  if (lambda < 1) throw ValidationError("path marked count must be positive");
  nodes_.emplace_back();

  for (const std::string& word : dictionary) {
    const auto len = static_cast<Value>(word.size());
    if (len < q || len > 2 * q - 1) continue;
    int node = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      const auto byte = static_cast<unsigned char>(*it);
      int next = child(node, byte);
      if (next == kNone) {
        next = static_cast<int>(nodes_.size());
        Node fresh;
        fresh.parent = node;
        fresh.depth = nodes_[node].depth + 1;
        nodes_.push_back(std::move(fresh));
        nodes_[node].children.emplace_back(byte, next);
      }
      node = next;
    }
    if (!nodes_[node].marked) {
      nodes_[node].marked = true;
      ++marked_count_;
    }
  }

  // Parents precede children in nodes_, so index order is top-down.
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    Node& n = nodes_[v];
    if (n.marked) {
      n.lowest_marked = static_cast<int>(v);
    } else if (n.parent != kNone) {
      n.lowest_marked = nodes_[n.parent].lowest_marked;
    }
  }
  build_paths();
}

void ScaleTrie::build_paths() {
  // Bottom-up: chain[v] is the largest number of unassigned marked nodes on a
  // downward chain of unassigned nodes starting at v. A chain reaching lambda
  // becomes a path (trimmed to end at its last marked node).
  const std::size_t count = nodes_.size();
  std::vector<Value> chain(count, 0);
  std::vector<int> chain_next(count, kNone);
  std::vector<bool> available(count, false);

  for (std::size_t idx = count; idx-- > 0;) {
    const Node& n = nodes_[idx];
    Value best = -1;
    int best_child = kNone;
    for (const auto& [byte, c] : n.children) {
      if (available[c] && chain[c] > best) {
        best = chain[c];
        best_child = c;
      }
    }
    const Value here = std::max<Value>(best, 0) + (n.marked ? 1 : 0);
    chain_next[idx] = best_child;
    if (n.marked && here == lambda_) {
      Path path;
      path.top = static_cast<int>(idx);
      const int id = static_cast<int>(paths_.size());
      for (int v = static_cast<int>(idx); v != kNone && path.marked_count < lambda_;
           v = chain_next[v]) {
        path.nodes.push_back(v);
        nodes_[v].path = id;
        available[v] = false;
        if (nodes_[v].marked) ++path.marked_count;
      }
      nodes_[idx].path_top = true;

      BoolArray mask(static_cast<std::size_t>(q_), 0);
      for (int v = static_cast<int>(idx); v != kNone; v = nodes_[v].parent) {
        const Value d = nodes_[v].depth;
        if (nodes_[v].marked && d >= q_ && d <= 2 * q_ - 1) {
          mask[static_cast<std::size_t>(d - q_)] = 1;
        }
      }
      path.depth_indicator = BinaryCostArray::from_mask(std::move(mask), q_);
      paths_.push_back(std::move(path));
    } else {
      chain[idx] = here;
      available[idx] = true;
    }
  }
}

int ScaleTrie::child(int node, unsigned char byte) const {
  for (const auto& [b, c] : nodes_[node].children) {
    if (b == byte) return c;
  }
  return kNone;
}

int ScaleTrie::deepest_match(std::string_view text, Value i) const {
  int node = 0;
  const Value limit = std::min<Value>(i, 2 * q_ - 1);
  for (Value d = 0; d < limit; ++d) {
    const int next = child(node, static_cast<unsigned char>(text[static_cast<std::size_t>(i - 1 - d)]));
    if (next == kNone) break;
    node = next;
  }
  return node;
}

Value ScaleTrie::marked_steps_from(int node) const {
  Value steps = 0;
  for (int w = nodes_[node].lowest_marked; w != kNone;) {
    ++steps;
    if (nodes_[w].path_top) break;
    const int parent = nodes_[w].parent;
    w = parent == kNone ? kNone : nodes_[parent].lowest_marked;
  }
  return steps;
}

bool ScaleTrie::audit() const {
  for (const Node& n : nodes_) {
    if (n.marked && (n.depth < q_ || n.depth > 2 * q_ - 1)) return false;
  }
  std::vector<int> owner(nodes_.size(), kNone);
  Value marked_on_paths = 0;
  for (std::size_t id = 0; id < paths_.size(); ++id) {
    const Path& p = paths_[id];
    if (p.nodes.empty() || p.nodes.front() != p.top || !nodes_[p.top].marked) return false;
    if (!nodes_[p.top].path_top) return false;
    Value marked = 0;
    for (std::size_t k = 0; k < p.nodes.size(); ++k) {
      const int v = p.nodes[k];
      if (owner[v] != kNone) return false;
      owner[v] = static_cast<int>(id);
      if (k > 0 && nodes_[v].parent != p.nodes[k - 1]) return false;
      if (nodes_[v].marked) ++marked;
    }
    if (marked != lambda_ || marked != p.marked_count) return false;
    marked_on_paths += marked;
  }
  if (marked_on_paths > marked_count_) return false;
  for (std::size_t v = 0; v < nodes_.size(); ++v) {
    if (marked_steps_from(static_cast<int>(v)) > 2 * lambda_) return false;
  }
  return true;
}

ScaleTrie build_scale_trie(std::span<const std::string> dictionary, Value q, Value lambda) {
  return ScaleTrie(dictionary, q, lambda);
}

CostArray jump_query(const ScaleTrie& trie, std::string_view text, Value x,
                     std::span<const Cost> window, JumpStats* stats, WorkCounter* work) {
  const Value q = trie.q();
  const auto n = static_cast<Value>(text.size());
  if (x < 0 || x % q != 0) throw ValidationError("jump query position must be a multiple of q");
  const Value lo = std::max<Value>(0, x - 2 * q + 1);
  if (static_cast<Value>(window.size()) != x - lo + 1) {
    throw ValidationError("jump query window must cover [max(0, x - 2q + 1), x]");
  }
  const Value hi = std::min(x + q, n);
  CostArray out(static_cast<std::size_t>(std::max<Value>(hi - x, 0)), kInf);
  if (trie.empty() || hi <= x) return out;
  if (stats != nullptr) ++stats->queries;

  const auto& nodes = trie.nodes();
  // Positions whose walk stopped at a path top, grouped by path.
  std::vector<std::vector<Value>> requests(trie.paths().size());
  std::vector<int> touched;

  for (Value i = x + 1; i <= hi; ++i) {
    const int v = trie.deepest_match(text, i);
    count_work(work, static_cast<std::uint64_t>(std::min<Value>(i, 2 * q - 1)));
    Cost best = kInf;
    Value steps = 0;
    for (int w = nodes[v].lowest_marked; w != ScaleTrie::kNone;) {
      ++steps;
      if (nodes[w].path_top) {
        const int id = nodes[w].path;
        if (requests[id].empty()) touched.push_back(id);
        requests[id].push_back(i);
        break;
      }
      const Value start = i - nodes[w].depth;
      best = std::min(best, window[static_cast<std::size_t>(start - lo)] + Cost(1));
      const int parent = nodes[w].parent;
      w = parent == ScaleTrie::kNone ? ScaleTrie::kNone : nodes[parent].lowest_marked;
    }
    count_work(work, static_cast<std::uint64_t>(steps));
    if (stats != nullptr) {
      stats->max_marked_steps = std::max(stats->max_marked_steps, steps);
      if (steps > 2 * trie.lambda()) stats->walk_bound_held = false;
    }
    out[static_cast<std::size_t>(i - x - 1)] = best;
  }

  // Candidates at or above a path top come from one selected-entry binary
  // (min,+)-convolution per path: raw index i - lo - q pairs window entry
  // i - d with marked depth d.
  std::sort(touched.begin(), touched.end());
  std::vector<std::size_t> wanted;
  for (const int id : touched) {
    const auto& positions = requests[id];
    wanted.assign(positions.size(), 0);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      wanted[k] = static_cast<std::size_t>(positions[k] - lo - q);
    }
    const CostArray via_path = minplus_binary_convolve_selected(
        window, trie.paths()[id].depth_indicator, wanted, work);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      Cost& slot = out[static_cast<std::size_t>(positions[k] - x - 1)];
      slot = std::min(slot, via_path[k]);
    }
  }
  return out;
}

CostArray min_word_break(const WordBreakInstance& inst, const WordBreakOptions& options,
                         JumpStats* stats, WorkCounter* work) {
  const std::string_view text = inst.text;
  const auto n = static_cast<Value>(text.size());
  CostArray s(static_cast<std::size_t>(n) + 1, kInf);
  s[0] = Cost(0);
  if (n == 0) return s;

  const auto lambda =
      std::max<Value>(1, static_cast<Value>(ceil_cbrt(static_cast<std::uint64_t>(inst.total_length))));
  std::vector<ScaleTrie> tries;
  for (Value q = 1; q <= n; q *= 2) {
    ScaleTrie trie(inst.dictionary, q, lambda);
    if (!trie.empty()) tries.push_back(std::move(trie));
  }

  for (Value x = 0; x < n; ++x) {
    for (const ScaleTrie& trie : tries) {
      const Value q = trie.q();
      if (x % q != 0) continue;
      const Value lo = std::max<Value>(0, x - 2 * q + 1);
      const std::span<const Cost> window(s.data() + lo, static_cast<std::size_t>(x - lo + 1));
      const CostArray update = jump_query(trie, text, x, window, stats, work);
      for (std::size_t k = 0; k < update.size(); ++k) {
        const Value target = x + 1 + static_cast<Value>(k);
        if (options.check_finality && target <= x) {
          throw std::logic_error("prefix " + std::to_string(target) +
                                 " updated after the sweep passed it");
        }
        Cost& slot = s[static_cast<std::size_t>(target)];
        slot = std::min(slot, update[k]);
      }
    }
  }
  return s;
}

CostArray naive_word_break(const WordBreakInstance& inst, Value budget) {
  const auto n = static_cast<Value>(inst.text.size());
  if (n * inst.total_length > budget) {
    throw BudgetExceeded("naive word break needs n*m = " + std::to_string(n * inst.total_length) +
                         " > budget " + std::to_string(budget));
  }
  CostArray s(static_cast<std::size_t>(n) + 1, kInf);
  s[0] = Cost(0);
  for (Value i = 1; i <= n; ++i) {
    for (const std::string& w : inst.dictionary) {
      const auto len = static_cast<Value>(w.size());
      if (len > i) continue;
      if (inst.text.compare(static_cast<std::size_t>(i - len), w.size(), w) == 0) {
        s[i] = std::min(s[i], s[i - len] + Cost(1));
      }
    }
  }
  return s;
}

}  // namespace coinkit
