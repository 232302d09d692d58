#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "seeco/platform.hpp"
#include "seeco/security_model.hpp"
#include "seeco/workflow.hpp"

namespace seeco {

// Solution encoding. `order` is an execution sequence; the other three genes
// are indexed by task id.
struct Chromosome {
  std::vector<int> order;
  std::vector<std::uint8_t> loc;
  std::vector<int> lev_cf;
  std::vector<int> lev_ig;

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

// How one security service is applied to data leaving an access point.
enum class ServiceMode {
  kSelected,     // algorithm chosen by the level gene
  kUnprotected,  // no algorithm: zero cost, level 0 in the risk model
  kOmitted,      // service not considered: zero cost, no risk contribution
};

struct EvalOptions {
  ServiceMode cf = ServiceMode::kSelected;
  ServiceMode ig = ServiceMode::kSelected;
  // Keep the producer/consumer core-count ratio in the decryption cost.
  bool literal_core_ratio = true;
  // When false the risk cap is reported but not part of the violation.
  bool enforce_risk_cap = true;
};

struct TaskTiming {
  double start = 0.0;
  double end = 0.0;
  double exec = 0.0;
  double transfer = 0.0;
  double encrypt = 0.0;
  double decrypt = 0.0;
  double risk = 0.0;
};

struct EvaluationResult {
  std::vector<TaskTiming> timings;  // by task id
  std::vector<VmRef> placement;     // by task id
  double makespan = 0.0;
  double energy = 0.0;
  double risk = 0.0;
  double violation = 0.0;
  bool feasible = false;
};

// Seconds to move `beta_mb` from the producer's VM to the consumer's VM.
double transfer_time(VmRef producer, VmRef consumer, double beta_mb, const Platform& p);

// Seconds the producer spends encrypting and hashing its output.
double encrypt_cost(double beta_mb, const VmSpec& vm, int lev_cf, int lev_ig,
                    const SecurityCatalog& cat);

struct IncomingData {
  double beta_mb = 0.0;
  VmSpec producer;
  int lev_cf = 1;
  int lev_ig = 1;
};

// Seconds the consumer spends decrypting and verifying data received from
// predecessors on other access points.
double decrypt_cost(std::span<const IncomingData> incoming, const VmSpec& consumer,
                    const SecurityCatalog& cat, bool literal_core_ratio = true);

double exec_time(double workload_gcycles, const VmSpec& vm);

double violation(double makespan, double risk, double deadline, double risk_cap);

// True when `a` wins the feasibility-first comparison (ties go to `a`).
bool better(const EvaluationResult& a, const EvaluationResult& b);

// Throws ValidationError naming the first broken chromosome invariant.
void validate_chromosome(const Chromosome& c, const Workflow& w, const SecurityCatalog& cat);

// Binds one problem instance and decodes chromosomes against it. The bound
// objects must outlive the evaluator.
class Evaluator {
 public:
  Evaluator(const Workflow& w, const Platform& p, const SecurityCatalog& cat,
            const RiskModel& risk, const EvalOptions& opts = {});

  EvaluationResult operator()(const Chromosome& c) const;

  // Risk that one protected output leaving its access point is compromised.
  double output_risk(int lev_cf, int lev_ig) const;

  const Workflow& workflow() const { return w_; }
  const Platform& platform() const { return p_; }
  const SecurityCatalog& catalog() const { return cat_; }
  const RiskModel& risk_model() const { return risk_; }
  const EvalOptions& options() const { return opts_; }

 private:
  double service_seconds(Service s, int level_id, double beta_mb, const VmSpec& vm) const;

  const Workflow& w_;
  const Platform& p_;
  const SecurityCatalog& cat_;
  RiskModel risk_;
  EvalOptions opts_;
  std::array<VmRef, 256> decoded_{};
  std::size_t vm_total_ = 0;
};

EvaluationResult evaluate(const Chromosome& c, const Workflow& w, const Platform& p,
                          const SecurityCatalog& cat, const RiskModel& risk,
                          const EvalOptions& opts = {});

// Greedy list schedule at the strongest levels: tasks in canonical order, each
// placed on the VM where it finishes first. Endpoints stay on the device.
Chromosome earliest_finish_schedule(const Workflow& w, const Platform& p,
                                    const SecurityCatalog& cat, bool literal_core_ratio = true);

}  // namespace seeco
