#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coinkit/corekit.hpp"
#include "coinkit/types.hpp"
#include "coinkit/wordbreak.hpp"

namespace coinkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInvalid = 2;

enum class Problem { CoinsAll, CoinsSingle, KnapsackAll, KnapsackSingle, WordBreak };

Problem parse_problem(std::string_view name);
std::string_view problem_name(Problem p);

/// Algorithm identifiers accepted for a problem; the first is the default.
const std::vector<std::string>& algorithms_for(Problem p);

/// Throws ValidationError naming the accepted identifiers.
void check_algorithm(Problem p, std::string_view algo);

// Solver dispatch shared by run, verify and bench.
CostArray solve_coins_all(const CoinSet& coins, Value t, std::string_view algo, WorkCounter* work);
Cost solve_coins_single(const CoinSet& coins, Value t, std::string_view algo, WorkCounter* work);
ProfitArray solve_knapsack_all(const KnapsackInstance& inst, Value t, std::string_view algo,
                               WorkCounter* work);
Profit solve_knapsack_single(const KnapsackInstance& inst, Value t, std::string_view algo,
                             WorkCounter* work);
CostArray solve_word_break(const WordBreakInstance& inst, std::string_view algo, Value budget,
                           WorkCounter* work);

/// Entry point: `args` excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

namespace testing {

/// When set, verify perturbs the fast result at this index before comparing.
void inject_verify_fault(std::optional<std::size_t> index);

}  // namespace testing

}  // namespace coinkit::cli
