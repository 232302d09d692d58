#include "seeco/baselines.hpp"

#include <array>

namespace seeco {

namespace {

constexpr std::array<std::pair<Strategy, std::string_view>, 6> kNames{{
    {Strategy::kLocal, "local"},
    {Strategy::kMaxLevel, "max"},
    {Strategy::kMinLevel, "min"},
    {Strategy::kConfiOnly, "confi"},
    {Strategy::kIntegOnly, "integ"},
    {Strategy::kSeeco, "seeco"},
}};

}  // namespace

std::string_view to_string(Strategy s) {
  for (const auto& [k, name] : kNames) {
    if (k == s) return name;
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

const std::vector<Strategy>& all_strategies() {
  static const std::vector<Strategy> all = [] {
    std::vector<Strategy> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return all;
}

EvalOptions strategy_options(Strategy s, bool literal_core_ratio) {
  EvalOptions o;
  o.literal_core_ratio = literal_core_ratio;
  switch (s) {
    case Strategy::kMinLevel:
      // No protection at all; the cap cannot be met, so only the deadline binds.
      o.cf = ServiceMode::kUnprotected;
      o.ig = ServiceMode::kUnprotected;
      o.enforce_risk_cap = false;
      break;
    case Strategy::kConfiOnly:
      o.ig = ServiceMode::kOmitted;
      break;
    case Strategy::kIntegOnly:
      o.cf = ServiceMode::kOmitted;
      break;
    case Strategy::kLocal:
    case Strategy::kMaxLevel:
    case Strategy::kSeeco:
      break;
  }
  return o;
}

GeneDomain strategy_domain(Strategy s, const SecurityCatalog& cat) {
  GeneDomain d = GeneDomain::full(cat);
  const std::vector<int> strongest_cf{cat.strongest_id(Service::kConfidentiality)};
  const std::vector<int> strongest_ig{cat.strongest_id(Service::kIntegrity)};
  switch (s) {
    case Strategy::kLocal:
    case Strategy::kMaxLevel:
    case Strategy::kMinLevel:
      d.cf_levels = strongest_cf;
      d.ig_levels = strongest_ig;
      break;
    case Strategy::kConfiOnly:
      d.ig_levels = strongest_ig;
      break;
    case Strategy::kIntegOnly:
      d.cf_levels = strongest_cf;
      break;
    case Strategy::kSeeco:
      break;
  }
  return d;
}

Chromosome local_chromosome(const Workflow& w, const SecurityCatalog& cat) {
  Chromosome c;
  c.order = w.canonical_order();
  c.loc.assign(w.size(), kDeviceLocation);
  c.lev_cf.assign(w.size(), cat.strongest_id(Service::kConfidentiality));
  c.lev_ig.assign(w.size(), cat.strongest_id(Service::kIntegrity));
  return c;
}

Solution solve(Strategy s, const Workflow& w, const Platform& p, const SecurityCatalog& cat,
               const RiskModel& risk, const GaParams& params, bool literal_core_ratio) {
  const Evaluator eval(w, p, cat, risk, strategy_options(s, literal_core_ratio));
  Solution out;
  out.strategy = s;
  if (s == Strategy::kLocal) {
    Chromosome c = local_chromosome(w, cat);
    auto r = eval(c);
    out.best = {std::move(c), std::move(r)};
    return out;
  }
  const GeneDomain domain = strategy_domain(s, cat);
  GaRun run = run_ga(eval, params, domain);
  out.best = std::move(run.best);
  out.history = std::move(run.history);
  return out;
}

}  // namespace seeco
