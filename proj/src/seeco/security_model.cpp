#include "seeco/security_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "seeco/error.hpp"

namespace seeco {

const char* to_string(Service s) {
  return s == Service::kConfidentiality ? "confidentiality" : "integrity";
}

namespace {

void validate_service_list(const std::vector<CryptoAlgorithm>& algs, Service service) {
  const std::string label = to_string(service);
  if (algs.size() != SecurityCatalog::kAlgorithmsPerService) {
    throw ValidationError(label + " catalog must list exactly 5 algorithms, got " +
                          std::to_string(algs.size()));
  }
  std::set<int> ids;
  int full_strength = 0;
  for (const auto& a : algs) {
    if (a.service != service) throw ValidationError(a.name + " listed under the wrong service");
    if (a.id < 1 || a.id > static_cast<int>(algs.size()) || !ids.insert(a.id).second) {
      throw ValidationError(label + " ids must be unique in 1..5 (offending: " + a.name + ")");
    }
    if (!(a.level > 0.0 && a.level <= 1.0)) {
      throw ValidationError(a.name + ": security level must lie in (0, 1]");
    }
    if (!(a.ref_speed > 0.0) || !std::isfinite(a.ref_speed)) {
      throw ValidationError(a.name + ": reference speed must be positive");
    }
    if (a.level == 1.0) ++full_strength;
  }
  if (full_strength != 1) {
    throw ValidationError(label + " catalog needs exactly one algorithm at level 1.0");
  }
  // Faster algorithms are weaker.
  for (const auto& a : algs) {
    for (const auto& b : algs) {
      if (a.ref_speed < b.ref_speed && !(a.level > b.level)) {
        throw ValidationError(label + ": level of " + a.name + " must exceed that of faster " +
                              b.name);
      }
    }
  }
}

}  // namespace

SecurityCatalog::SecurityCatalog(std::vector<CryptoAlgorithm> confidentiality,
                                 std::vector<CryptoAlgorithm> integrity)
    : confidentiality_(std::move(confidentiality)), integrity_(std::move(integrity)) {
  validate_service_list(confidentiality_, Service::kConfidentiality);
  validate_service_list(integrity_, Service::kIntegrity);
  auto by_id = [](const CryptoAlgorithm& a, const CryptoAlgorithm& b) { return a.id < b.id; };
  std::sort(confidentiality_.begin(), confidentiality_.end(), by_id);
  std::sort(integrity_.begin(), integrity_.end(), by_id);
}

SecurityCatalog SecurityCatalog::standard() {
  constexpr auto cf = Service::kConfidentiality;
  constexpr auto ig = Service::kIntegrity;
  // Levels are kept at their published two-decimal values; costs derive from speeds.
  return SecurityCatalog(
      {
          {1, cf, "IDEA", 1.00, 11.76},
          {2, cf, "DES", 0.85, 13.83},
          {3, cf, "AES", 0.53, 22.03},
          {4, cf, "Blowfish", 0.56, 20.87},
          {5, cf, "RC4", 0.32, 37.17},
      },
      {
          {1, ig, "TIGER", 1.00, 75.76},
          {2, ig, "RipeMD160", 0.75, 101.01},
          {3, ig, "SHA-1", 0.69, 109.89},
          {4, ig, "RipeMD128", 0.63, 119.05},
          {5, ig, "MD5", 0.44, 172.41},
      });
}

const std::vector<CryptoAlgorithm>& SecurityCatalog::algorithms(Service s) const {
  return s == Service::kConfidentiality ? confidentiality_ : integrity_;
}

const CryptoAlgorithm& SecurityCatalog::get(Service s, int id) const {
  const auto& algs = algorithms(s);
  if (id < 1 || id > static_cast<int>(algs.size())) {
    throw DomainError(std::string(to_string(s)) + " level id out of range: " + std::to_string(id));
  }
  return algs[static_cast<std::size_t>(id - 1)];
}

int SecurityCatalog::strongest_id(Service s) const {
  const auto& algs = algorithms(s);
  return std::max_element(algs.begin(), algs.end(),
                          [](const auto& a, const auto& b) { return a.level < b.level; })
      ->id;
}

int SecurityCatalog::weakest_id(Service s) const {
  const auto& algs = algorithms(s);
  return std::min_element(algs.begin(), algs.end(),
                          [](const auto& a, const auto& b) { return a.level < b.level; })
      ->id;
}

void RiskModel::validate() const {
  if (!(lambda_cf >= 0.0) || !(lambda_ig >= 0.0) || !(lambda_au >= 0.0)) {
    throw DomainError("risk coefficients must be non-negative");
  }
  if (!(level_au >= 0.0 && level_au <= 1.0)) {
    throw DomainError("authentication level must lie in [0, 1]");
  }
}

double speed_from_cost(double cost_s, double data_mb) {
  if (!(cost_s > 0.0) || !(data_mb > 0.0)) {
    throw DomainError("speed_from_cost requires positive cost and data size");
  }
  return data_mb / cost_s;
}

double level_from_cost(double cost_s, double slowest_cost_s) {
  if (!(cost_s > 0.0) || !(slowest_cost_s > 0.0)) {
    throw DomainError("level_from_cost requires positive costs");
  }
  if (cost_s > slowest_cost_s) {
    throw DomainError("cost exceeds the slowest algorithm's cost");
  }
  return cost_s / slowest_cost_s;
}

double overhead(const CryptoAlgorithm& alg, int cores, double freq_ghz, double data_mb) {
  if (cores < 1) throw DomainError("overhead requires at least one core");
  if (!(freq_ghz > 0.0)) throw DomainError("overhead requires a positive frequency");
  if (!(data_mb >= 0.0)) throw DomainError("overhead requires a non-negative data size");
  if (!(alg.ref_speed > 0.0)) throw DomainError(alg.name + " has no positive speed");
  return (data_mb * kRefFrequencyGhz) / (alg.ref_speed * freq_ghz * static_cast<double>(cores));
}

double task_service_risk(double level, double lambda) {
  if (!(level >= 0.0 && level <= 1.0)) throw DomainError("security level must lie in [0, 1]");
  if (!(lambda >= 0.0)) throw DomainError("risk coefficient must be non-negative");
  return 1.0 - std::exp(-lambda * (1.0 - level));
}

double task_risk(double level_cf, double level_ig, const RiskModel& model) {
  double survive = (1.0 - task_service_risk(level_cf, model.lambda_cf)) *
                   (1.0 - task_service_risk(level_ig, model.lambda_ig));
  if (model.include_authentication) {
    survive *= 1.0 - task_service_risk(model.level_au, model.lambda_au);
  }
  return 1.0 - survive;
}

double workflow_risk(std::span<const double> task_risks) {
  double survive = 1.0;
  for (double p : task_risks) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("task risk must lie in [0, 1]");
    survive *= 1.0 - p;
  }
  return 1.0 - survive;
}

}  // namespace seeco
