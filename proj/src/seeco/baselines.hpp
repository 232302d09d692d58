#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seeco/ga.hpp"

namespace seeco {

enum class Strategy { kLocal, kMaxLevel, kMinLevel, kConfiOnly, kIntegOnly, kSeeco };

// CLI spellings: local, max, min, confi, integ, seeco.
std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
const std::vector<Strategy>& all_strategies();

struct Solution {
  Strategy strategy = Strategy::kSeeco;
  Individual best;
  std::vector<GenerationStats> history;  // empty for Local
};

// How each strategy applies security during evaluation.
EvalOptions strategy_options(Strategy s, bool literal_core_ratio = true);
// Level genes the GA may explore for a strategy.
GeneDomain strategy_domain(Strategy s, const SecurityCatalog& cat);

// Everything on the device in canonical order, strongest levels.
Chromosome local_chromosome(const Workflow& w, const SecurityCatalog& cat);

Solution solve(Strategy s, const Workflow& w, const Platform& p, const SecurityCatalog& cat,
               const RiskModel& risk, const GaParams& params, bool literal_core_ratio = true);

}  // namespace seeco
