#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "coinkit/fastsingle.hpp"
#include "coinkit/heavylight.hpp"
#include "coinkit/knapsack.hpp"
#include "coinkit/topk_dp.hpp"
#include "input.hpp"
#include "json.hpp"

namespace coinkit::cli {
namespace {

using Json = nlohmann::ordered_json;

std::optional<std::size_t> g_verify_fault;

struct Options {
  std::string algo;
  std::string coins_file;
  std::string inline_coins;
  std::string items_file;
  std::string text_file;
  std::string dict_file;
  Value target = -1;
  std::string format = "text";
  std::uint64_t seed = 1;
  Value oracle_budget = kDefaultWordBreakBudget;
  std::string problem;
  std::string sizes;
  Value u = 0;
  Value n = 16;
};

struct Row {
  Value j;
  std::optional<Value> value;  // nullopt: infeasible
};

std::optional<Value> from_cost(Cost c) {
  if (c.is_inf()) return std::nullopt;
  return c.value();
}

// --- input loading ---------------------------------------------------------

Value require_target(const Options& o) {
  if (o.target < 0) throw ValidationError("--target N (N >= 0) is required");
  return o.target;
}

std::vector<Value> raw_coins(const Options& o) {
  if (!o.coins_file.empty()) return parse_coin_values(read_file(o.coins_file), o.coins_file);
  if (!o.inline_coins.empty()) return parse_coin_values(o.inline_coins, "--inline");
  throw ValidationError("coin values are required: pass --coins FILE or --inline \"...\"");
}

KnapsackInstance load_items(const Options& o, Value t) {
  if (o.items_file.empty()) throw ValidationError("--items FILE is required");
  return normalize_items(parse_items(read_file(o.items_file), o.items_file), t);
}

WordBreakInstance load_word_break(const Options& o) {
  if (o.text_file.empty() || o.dict_file.empty()) {
    throw ValidationError("--text FILE and --dict FILE are required");
  }
  return WordBreakInstance::from(read_file(o.text_file),
                                 parse_dictionary(read_file(o.dict_file), o.dict_file));
}

Json coin_params(const CoinSet& c, Value t) {
  return Json{{"t", t}, {"n", c.n()}, {"u", c.u()}, {"sigma", c.sigma()}};
}

Json item_params(const KnapsackInstance& k, Value t) {
  return Json{{"t", t}, {"n", k.n()}, {"u", k.u()}, {"sigma", k.sigma()}};
}

Json word_params(const WordBreakInstance& w) {
  return Json{{"n", static_cast<Value>(w.text.size())},
              {"words", static_cast<Value>(w.dictionary.size())},
              {"m", w.total_length}};
}

// --- output ----------------------------------------------------------------

void emit(std::ostream& out, const Options& o, const std::vector<Row>& rows, bool single,
          const Json& params) {
  if (o.format == "json") {
    Json targets = Json::array();
    for (const Row& r : rows) {
      targets.push_back(Json{{"j", r.j}, {"count", r.value ? Json(*r.value) : Json(nullptr)}});
    }
    out << Json{{"targets", targets}, {"algo", o.algo}, {"params", params}}.dump() << '\n';
    return;
  }
  for (const Row& r : rows) {
    if (!single) out << r.j << ' ';
    out << r.value.value_or(-1) << '\n';
  }
}

// --- commands --------------------------------------------------------------

int cmd_coins_all(const Options& o, std::ostream& out) {
  const Value t = require_target(o);
  const CoinSet coins = normalize_coins(raw_coins(o), t);
  const CostArray d = solve_coins_all(coins, t, o.algo, nullptr);
  std::vector<Row> rows;
  for (Value j = 0; j <= t; ++j) rows.push_back({j, from_cost(d[static_cast<std::size_t>(j)])});
  emit(out, o, rows, false, coin_params(coins, t));
  return kExitOk;
}

int cmd_coins_single(const Options& o, std::ostream& out) {
  const Value t = require_target(o);
  const CoinSet coins = normalize_coins(raw_coins(o), t);
  const Cost c = solve_coins_single(coins, t, o.algo, nullptr);
  emit(out, o, {{t, from_cost(c)}}, true, coin_params(coins, t));
  return c.is_inf() ? kExitInfeasible : kExitOk;
}

int cmd_knapsack_all(const Options& o, std::ostream& out) {
  const Value t = require_target(o);
  const KnapsackInstance inst = load_items(o, t);
  const ProfitArray d = solve_knapsack_all(inst, t, o.algo, nullptr);
  std::vector<Row> rows;
  for (Value j = 0; j <= t; ++j) rows.push_back({j, d[static_cast<std::size_t>(j)]});
  emit(out, o, rows, false, item_params(inst, t));
  return kExitOk;
}

int cmd_knapsack_single(const Options& o, std::ostream& out) {
  const Value t = require_target(o);
  const KnapsackInstance inst = load_items(o, t);
  emit(out, o, {{t, solve_knapsack_single(inst, t, o.algo, nullptr)}}, true, item_params(inst, t));
  return kExitOk;
}

int cmd_word_break(const Options& o, std::ostream& out) {
  const WordBreakInstance inst = load_word_break(o);
  const CostArray s = solve_word_break(inst, o.algo, o.oracle_budget, nullptr);
  const auto n = static_cast<Value>(inst.text.size());
  const Cost last = s.back();
  emit(out, o, {{n, from_cost(last)}}, true, word_params(inst));
  return last.is_inf() ? kExitInfeasible : kExitOk;
}

// Fast and reference answers as signed values (-1 = infeasible), indexed by
// target, capacity or prefix length starting at `first`.
struct Comparison {
  Value first = 0;
  std::vector<Value> fast;
  std::vector<Value> reference;
};

std::vector<Value> signed_costs(const CostArray& d) {
  std::vector<Value> out;
  out.reserve(d.size());
  for (const Cost c : d) out.push_back(to_signed(c));
  return out;
}

void check_budget(Value work, Value budget, std::string_view what) {
  if (work > budget) {
    throw BudgetExceeded(std::string(what) + " needs about " + std::to_string(work) +
                         " steps, over the oracle budget " + std::to_string(budget));
  }
}

Comparison compare_for(Problem p, const Options& o) {
  Comparison c;
  switch (p) {
    case Problem::CoinsAll:
    case Problem::CoinsSingle: {
      const Value t = require_target(o);
      const CoinSet coins = normalize_coins(raw_coins(o), t);
      check_budget(std::max<Value>(coins.n(), 1) * (t + 1), o.oracle_budget, "breadth-first oracle");
      if (p == Problem::CoinsAll) {
        c.fast = signed_costs(solve_coins_all(coins, t, o.algo, nullptr));
        c.reference = signed_costs(brute_force_all_targets(coins, t, t));
      } else {
        c.first = t;
        c.fast = {to_signed(solve_coins_single(coins, t, o.algo, nullptr))};
        c.reference = {to_signed(brute_force_min_coins(coins, t, t))};
      }
      break;
    }
    case Problem::KnapsackAll:
    case Problem::KnapsackSingle: {
      const Value t = require_target(o);
      const KnapsackInstance inst = load_items(o, t);
      check_budget(std::max<Value>(inst.n(), 1) * (t + 1), o.oracle_budget, "knapsack oracle");
      const ProfitArray ref = dp_all_capacities(inst, t);
      if (p == Problem::KnapsackAll) {
        c.fast = solve_knapsack_all(inst, t, o.algo, nullptr);
        c.reference = ref;
      } else {
        c.first = t;
        c.fast = {solve_knapsack_single(inst, t, o.algo, nullptr)};
        c.reference = {ref.back()};
      }
      break;
    }
    case Problem::WordBreak: {
      const WordBreakInstance inst = load_word_break(o);
      c.reference = signed_costs(naive_word_break(inst, o.oracle_budget));
      c.fast = signed_costs(solve_word_break(inst, o.algo, o.oracle_budget, nullptr));
      break;
    }
  }
  return c;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Problem p = parse_problem(o.problem);
  Options opts = o;
  if (opts.algo.empty()) opts.algo = algorithms_for(p).front();
  check_algorithm(p, opts.algo);
  Comparison c = compare_for(p, opts);

  if (g_verify_fault.has_value()) {
    const auto at = static_cast<Value>(*g_verify_fault) - c.first;
    if (at >= 0 && at < static_cast<Value>(c.fast.size())) {
      Value& v = c.fast[static_cast<std::size_t>(at)];
      v = v < 0 ? 0 : v + 1;
    }
  }

  for (std::size_t k = 0; k < c.fast.size(); ++k) {
    if (c.fast[k] != c.reference[k]) {
      out << "MISMATCH at index " << c.first + static_cast<Value>(k) << ": " << opts.algo << '='
          << c.fast[k] << " oracle=" << c.reference[k] << '\n';
      return kExitInfeasible;
    }
  }
  out << "OK\n";
  return kExitOk;
}

// --- bench -----------------------------------------------------------------

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(',', start), s.size());
    std::string piece(s.substr(start, end - start));
    piece.erase(std::remove_if(piece.begin(), piece.end(), [](char ch) { return ch == ' '; }),
                piece.end());
    if (!piece.empty()) out.push_back(piece);
    start = end + 1;
  }
  return out;
}

std::vector<Value> parse_sizes(std::string_view s) {
  std::vector<Value> sizes;
  for (const std::string& piece : split_list(s)) {
    sizes.push_back(parse_coin_values(piece, "--sizes").front());
  }
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw ValidationError("--sizes must be ascending");
  }
  return sizes;
}

std::vector<Value> distinct_values(std::mt19937_64& rng, Value count, Value u) {
  count = std::clamp<Value>(count, 1, u);
  std::set<Value> picked{u};
  std::uniform_int_distribution<Value> dist(1, u);
  while (static_cast<Value>(picked.size()) < count) picked.insert(dist(rng));
  return {picked.begin(), picked.end()};
}

struct BenchInstance {
  Value t = 0;
  CoinSet coins;
  KnapsackInstance items;
  std::optional<WordBreakInstance> words;
};

BenchInstance make_bench_instance(Problem p, const Options& o, Value size) {
  std::mt19937_64 rng(o.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(size));
  BenchInstance b;
  b.t = size;
  const bool single = p == Problem::CoinsSingle || p == Problem::KnapsackSingle;
  if (p == Problem::WordBreak) {
    const Value max_len = o.u > 0 ? o.u : 16;
    std::uniform_int_distribution<int> letter(0, 1);
    std::string text(static_cast<std::size_t>(size), 'a');
    for (auto& ch : text) ch = static_cast<char>('a' + letter(rng));
    std::vector<std::string> dict;
    std::uniform_int_distribution<Value> len(1, max_len);
    for (Value k = 0; k < std::max<Value>(o.n, 1); ++k) {
      const Value l = std::min(len(rng), size);
      if (l <= 0) {
        dict.emplace_back("a");
        continue;
      }
      std::uniform_int_distribution<Value> start(0, size - l);
      dict.push_back(text.substr(static_cast<std::size_t>(start(rng)), static_cast<std::size_t>(l)));
    }
    b.words = WordBreakInstance::from(std::move(text), std::move(dict));
    return b;
  }
  const Value u = std::max<Value>(1, o.u > 0 ? (single ? o.u : std::min(o.u, size))
                                             : (single ? std::min<Value>(size, 300) : size));
  const auto values = distinct_values(rng, o.n, u);
  if (p == Problem::CoinsAll || p == Problem::CoinsSingle) {
    b.coins = normalize_coins(values, size);
  } else {
    std::uniform_int_distribution<Profit> profit(1, 1'000'000);
    std::vector<Item> items;
    for (const Value w : values) items.push_back({w, profit(rng)});
    b.items = normalize_items(items, size);
  }
  return b;
}

struct BenchCell {
  std::string algo;
  std::size_t instance = 0;
  std::string row;
};

std::string run_cell(Problem p, const std::string& algo, const BenchInstance& b, Value budget) {
  WorkCounter work;
  Value n = 0, t = b.t, u = 0, sigma = 0;
  const auto start = std::chrono::steady_clock::now();
  switch (p) {
    case Problem::CoinsAll:
      (void)solve_coins_all(b.coins, t, algo, &work);
      break;
    case Problem::CoinsSingle:
      (void)solve_coins_single(b.coins, t, algo, &work);
      break;
    case Problem::KnapsackAll:
      (void)solve_knapsack_all(b.items, t, algo, &work);
      break;
    case Problem::KnapsackSingle:
      (void)solve_knapsack_single(b.items, t, algo, &work);
      break;
    case Problem::WordBreak:
      (void)solve_word_break(*b.words, algo, budget, &work);
      break;
  }
  const auto nanos =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)
          .count();
  if (p == Problem::WordBreak) {
    n = static_cast<Value>(b.words->dictionary.size());
    t = static_cast<Value>(b.words->text.size());
    for (const auto& w : b.words->dictionary) u = std::max(u, static_cast<Value>(w.size()));
    sigma = b.words->total_length;
  } else if (p == Problem::KnapsackAll || p == Problem::KnapsackSingle) {
    n = b.items.n();
    u = b.items.u();
    sigma = b.items.sigma();
  } else {
    n = b.coins.n();
    u = b.coins.u();
    sigma = b.coins.sigma();
  }
  std::ostringstream row;
  row << algo << ',' << n << ',' << t << ',' << u << ',' << sigma << ',' << nanos << ','
      << work.ops << '\n';
  return row.str();
}

unsigned bench_threads(std::size_t cells) {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("COINKIT_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) threads = static_cast<unsigned>(parsed);
  }
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells, 1)));
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Problem p = parse_problem(o.problem.empty() ? "coins-all" : o.problem);
  std::vector<std::string> algos = split_list(o.algo);
  if (algos.empty()) algos.push_back(algorithms_for(p).front());
  for (const auto& a : algos) check_algorithm(p, a);
  const std::vector<Value> sizes = parse_sizes(o.sizes);

  std::vector<BenchInstance> instances;
  for (const Value s : sizes) instances.push_back(make_bench_instance(p, o, s));

  std::vector<BenchCell> cells;
  for (const auto& a : algos) {
    for (std::size_t k = 0; k < instances.size(); ++k) cells.push_back({a, k, {}});
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(cells.size());
  auto worker = [&] {
    for (std::size_t k = next++; k < cells.size(); k = next++) {
      try {
        cells[k].row = run_cell(p, cells[k].algo, instances[cells[k].instance], o.oracle_budget);
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned threads = bench_threads(cells.size());
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  out << "algo,n,t,u,sigma,wall_nanos,work_counter\n";
  for (const auto& c : cells) out << c.row;
  return kExitOk;
}

// --- argument wiring -------------------------------------------------------

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_coin_inputs(CLI::App* sub, Options& o) {
  auto* file = sub->add_option("--coins", o.coins_file, "File of whitespace-separated coin values");
  auto* inl = sub->add_option("--inline", o.inline_coins, "Coin values given inline");
  file->excludes(inl);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--algo", o.algo, "Algorithm identifier");
  sub->add_option("--target", o.target, "Target (or capacity)");
  sub->add_option("--seed", o.seed, "Seed for generated instances");
  sub->add_option("--oracle-budget", o.oracle_budget, "Work budget for reference oracles");
}

}  // namespace

Problem parse_problem(std::string_view name) {
  if (name == "coins-all") return Problem::CoinsAll;
  if (name == "coins-single") return Problem::CoinsSingle;
  if (name == "knapsack-all") return Problem::KnapsackAll;
  if (name == "knapsack-single") return Problem::KnapsackSingle;
  if (name == "wordbreak") return Problem::WordBreak;
  throw ValidationError("unknown problem '" + std::string(name) +
                        "' (expected coins-all, coins-single, knapsack-all, knapsack-single or "
                        "wordbreak)");
}

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::CoinsAll: return "coins-all";
    case Problem::CoinsSingle: return "coins-single";
    case Problem::KnapsackAll: return "knapsack-all";
    case Problem::KnapsackSingle: return "knapsack-single";
    case Problem::WordBreak: return "wordbreak";
  }
  return "";
}

const std::vector<std::string>& algorithms_for(Problem p) {
  static const std::vector<std::string> coins_all{"t43", "t32", "algo1", "tsigma", "dp"};
  static const std::vector<std::string> coins_single{"fftu", "implicit", "dp"};
  static const std::vector<std::string> knapsack_all{"algo2", "tsigma", "dp"};
  static const std::vector<std::string> knapsack_single{"nu", "algo2", "dp"};
  static const std::vector<std::string> word_break{"fast", "naive"};
  switch (p) {
    case Problem::CoinsAll: return coins_all;
    case Problem::CoinsSingle: return coins_single;
    case Problem::KnapsackAll: return knapsack_all;
    case Problem::KnapsackSingle: return knapsack_single;
    case Problem::WordBreak: return word_break;
  }
  return coins_all;
}

void check_algorithm(Problem p, std::string_view algo) {
  const auto& ok = algorithms_for(p);
  if (std::find(ok.begin(), ok.end(), algo) != ok.end()) return;
  std::string list;
  for (const auto& a : ok) list += (list.empty() ? "" : ", ") + a;
  throw ValidationError("unknown --algo '" + std::string(algo) + "' for " +
                        std::string(problem_name(p)) + " (expected one of: " + list + ")");
}

CostArray solve_coins_all(const CoinSet& coins, Value t, std::string_view algo, WorkCounter* work) {
  if (algo == "t43") return all_targets_t43(coins, t, {}, work);
  if (algo == "t32") return all_targets_t32(coins, t, {}, work);
  if (algo == "algo1") return algo1_all_targets(coins, t, work);
  if (algo == "tsigma") return tsigma_all_targets(coins, t, work);
  if (algo == "dp") {
    count_work(work, static_cast<std::uint64_t>(coins.n() * (t + 1)));
    return dp_all_targets(coins, t);
  }
  check_algorithm(Problem::CoinsAll, algo);
  return {};
}

Cost solve_coins_single(const CoinSet& coins, Value t, std::string_view algo, WorkCounter* work) {
  if (algo == "fftu") return min_coins_single(coins, t, work);
  if (algo == "implicit") {
    if (t == 0) return Cost(0);
    if (coins.empty()) return kInf;
    return implicit_query(implicit_all_targets(coins, work), t);
  }
  if (algo == "dp") {
    count_work(work, static_cast<std::uint64_t>(coins.n() * (t + 1)));
    return dp_all_targets(coins, t).back();
  }
  check_algorithm(Problem::CoinsSingle, algo);
  return kInf;
}

ProfitArray solve_knapsack_all(const KnapsackInstance& inst, Value t, std::string_view algo,
                               WorkCounter* work) {
  if (algo == "algo2") return algo2_all_capacities(inst, t, work);
  if (algo == "tsigma") return tsigma_all_capacities(inst, t, work);
  if (algo == "dp") {
    count_work(work, static_cast<std::uint64_t>(inst.n() * (t + 1)));
    return dp_all_capacities(inst, t);
  }
  check_algorithm(Problem::KnapsackAll, algo);
  return {};
}

Profit solve_knapsack_single(const KnapsackInstance& inst, Value t, std::string_view algo,
                             WorkCounter* work) {
  if (algo == "nu") return single_capacity_nu(inst, t, work);
  if (algo == "algo2") return algo2_all_capacities(inst, t, work).back();
  if (algo == "dp") {
    count_work(work, static_cast<std::uint64_t>(inst.n() * (t + 1)));
    return dp_all_capacities(inst, t).back();
  }
  check_algorithm(Problem::KnapsackSingle, algo);
  return 0;
}

CostArray solve_word_break(const WordBreakInstance& inst, std::string_view algo, Value budget,
                           WorkCounter* work) {
  if (algo == "fast") return min_word_break(inst, {}, nullptr, work);
  if (algo == "naive") {
    count_work(work, static_cast<std::uint64_t>(static_cast<Value>(inst.text.size()) * inst.total_length));
    return naive_word_break(inst, budget);
  }
  check_algorithm(Problem::WordBreak, algo);
  return {};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact change-making, unbounded knapsack and word-break solvers", "coinkit"};
  app.require_subcommand(1);
  Options o;

  auto* coins_all = app.add_subcommand("coins-all", "Minimum coin counts for every target 0..t");
  auto* coins_single = app.add_subcommand("coins-single", "Minimum coin count for one target");
  auto* knap_all = app.add_subcommand("knapsack-all", "Best unbounded-knapsack profit for every capacity");
  auto* knap_single = app.add_subcommand("knapsack-single", "Best unbounded-knapsack profit for one capacity");
  auto* word = app.add_subcommand("wordbreak", "Fewest dictionary words covering the text");
  auto* verify = app.add_subcommand("verify", "Compare an algorithm with its reference oracle");
  auto* bench = app.add_subcommand("bench", "Time algorithms over generated instances (CSV)");

  for (auto* sub : {coins_all, coins_single, knap_all, knap_single, word, verify, bench}) {
    add_common(sub, o);
  }
  for (auto* sub : {coins_all, coins_single, knap_all, knap_single, word}) add_format(sub, o);
  for (auto* sub : {coins_all, coins_single, verify}) add_coin_inputs(sub, o);
  for (auto* sub : {knap_all, knap_single, verify}) {
    sub->add_option("--items", o.items_file, "File of 'weight profit' lines");
  }
  for (auto* sub : {word, verify}) {
    sub->add_option("--text", o.text_file, "Text file (raw bytes)");
    sub->add_option("--dict", o.dict_file, "Dictionary file, one word per line");
  }
  verify->add_option("--problem", o.problem, "Problem to verify")->required();
  bench->add_option("--problem", o.problem, "Problem to benchmark (default coins-all)");
  bench->add_option("--sizes", o.sizes, "Ascending comma-separated sizes (t, or text length)");
  bench->add_option("--u", o.u, "Largest coin, weight or word length");
  bench->add_option("--n", o.n, "Number of coins, items or words");

  std::vector<const char*> argv{"coinkit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    auto with_default = [&](Problem p) {
      if (o.algo.empty()) o.algo = algorithms_for(p).front();
      check_algorithm(p, o.algo);
    };
    if (coins_all->parsed()) {
      with_default(Problem::CoinsAll);
      return cmd_coins_all(o, out);
    }
    if (coins_single->parsed()) {
      with_default(Problem::CoinsSingle);
      return cmd_coins_single(o, out);
    }
    if (knap_all->parsed()) {
      with_default(Problem::KnapsackAll);
      return cmd_knapsack_all(o, out);
    }
    if (knap_single->parsed()) {
      with_default(Problem::KnapsackSingle);
      return cmd_knapsack_single(o, out);
    }
    if (word->parsed()) {
      with_default(Problem::WordBreak);
      return cmd_word_break(o, out);
    }
    if (verify->parsed()) return cmd_verify(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

namespace testing {

void inject_verify_fault(std::optional<std::size_t> index) { g_verify_fault = index; }

}  // namespace testing

}  // namespace coinkit::cli
