#include "seeco/evaluator.hpp"

#include <algorithm>
#include <string>

#include "seeco/error.hpp"

namespace seeco {

double transfer_time(VmRef producer, VmRef consumer, double beta_mb, const Platform& p) {
  if (!(beta_mb >= 0.0)) throw DomainError("transfer size must be non-negative");
  if (producer.ap == consumer.ap) return 0.0;
  if (producer.on_device()) return beta_mb / p.uplink(consumer.ap);
  if (consumer.on_device()) return beta_mb / p.downlink(producer.ap);
  return beta_mb / p.inter_ap_bandwidth();
}

double encrypt_cost(double beta_mb, const VmSpec& vm, int lev_cf, int lev_ig,
                    const SecurityCatalog& cat) {
  return overhead(cat.get(Service::kConfidentiality, lev_cf), vm.cores, vm.frequency_ghz,
                  beta_mb) +
         overhead(cat.get(Service::kIntegrity, lev_ig), vm.cores, vm.frequency_ghz, beta_mb);
}

double decrypt_cost(std::span<const IncomingData> incoming, const VmSpec& consumer,
                    const SecurityCatalog& cat, bool literal_core_ratio) {
  double total = 0.0;
  for (const auto& in : incoming) {
    const double ratio = literal_core_ratio ? static_cast<double>(in.producer.cores) /
                                            static_cast<double>(consumer.cores)
                                      : 1.0;
    total += ratio * encrypt_cost(in.beta_mb, consumer, in.lev_cf, in.lev_ig, cat);
  }
  return total;
}

double exec_time(double workload_gcycles, const VmSpec& vm) {
  if (!(vm.capability_ghz > 0.0)) throw DomainError("VM capability must be positive");
  return workload_gcycles / vm.capability_ghz;
}

double violation(double makespan, double risk, double deadline, double risk_cap) {
  return std::max(0.0, makespan - deadline) + std::max(0.0, risk - risk_cap);
}

bool better(const EvaluationResult& a, const EvaluationResult& b) {
  if (a.feasible && b.feasible) return a.energy <= b.energy;
  if (a.feasible != b.feasible) return a.feasible;
  return a.violation <= b.violation;
}

void validate_chromosome(const Chromosome& c, const Workflow& w, const SecurityCatalog& cat) {
  const std::size_t n = w.size();
  if (c.order.size() != n || c.loc.size() != n || c.lev_cf.size() != n || c.lev_ig.size() != n) {
    throw ValidationError("chromosome: every gene vector must have one entry per task");
  }
  bool valid_order = false;
  try {
    valid_order = is_valid_order(w, c.order);
  } catch (const DomainError&) {
    throw ValidationError("chromosome: order is not a permutation of the tasks");
  }
  if (!valid_order) throw ValidationError("chromosome: order violates a precedence edge");
  for (std::size_t i = 0; i < n; ++i) {
    if (c.loc[i] == 0) {
      throw ValidationError("chromosome: location of task " + std::to_string(i) + " is 0x00");
    }
  }
  if (c.loc[static_cast<std::size_t>(w.entry())] != kDeviceLocation ||
      c.loc[static_cast<std::size_t>(w.exit())] != kDeviceLocation) {
    throw ValidationError("chromosome: entry and exit tasks must be pinned to the device (0x01)");
  }
  const int ncf = static_cast<int>(cat.size(Service::kConfidentiality));
  const int nig = static_cast<int>(cat.size(Service::kIntegrity));
  for (std::size_t i = 0; i < n; ++i) {
    if (c.lev_cf[i] < 1 || c.lev_cf[i] > ncf || c.lev_ig[i] < 1 || c.lev_ig[i] > nig) {
      throw ValidationError("chromosome: level id of task " + std::to_string(i) +
                            " outside the catalog");
    }
  }
}

Evaluator::Evaluator(const Workflow& w, const Platform& p, const SecurityCatalog& cat,
                     const RiskModel& risk, const EvalOptions& opts)
    : w_(w), p_(p), cat_(cat), risk_(risk), opts_(opts) {
  risk_.validate();
  vm_total_ = p_.all_vms().size();
  decoded_[0] = VmRef{0, 1};
  for (int b = 1; b < 256; ++b) {
    decoded_[static_cast<std::size_t>(b)] = decode_location(static_cast<std::uint8_t>(b), p_);
  }
}

double Evaluator::service_seconds(Service s, int level_id, double beta_mb,
                                  const VmSpec& vm) const {
  const ServiceMode mode = s == Service::kConfidentiality ? opts_.cf : opts_.ig;
  if (mode != ServiceMode::kSelected) return 0.0;
  return overhead(cat_.get(s, level_id), vm.cores, vm.frequency_ghz, beta_mb);
}

double Evaluator::output_risk(int lev_cf, int lev_ig) const {
  auto keep = [&](Service s, int level_id) {
    const ServiceMode mode = s == Service::kConfidentiality ? opts_.cf : opts_.ig;
    if (mode == ServiceMode::kOmitted) return 1.0;
    const double level = mode == ServiceMode::kSelected ? cat_.get(s, level_id).level : 0.0;
    return 1.0 - task_service_risk(level, risk_.lambda(s));
  };
  double k = keep(Service::kConfidentiality, lev_cf) * keep(Service::kIntegrity, lev_ig);
  if (risk_.include_authentication) k *= 1.0 - task_service_risk(risk_.level_au, risk_.lambda_au);
  return 1.0 - k;
}

EvaluationResult Evaluator::operator()(const Chromosome& c) const {
  validate_chromosome(c, w_, cat_);
  const std::size_t n = w_.size();
  EvaluationResult r;
  r.timings.resize(n);
  r.placement.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.placement[i] = decoded_[c.loc[i]];

  const auto& md = p_.device();
  std::vector<double> vm_free(vm_total_, 0.0);
  std::vector<int> destinations;
  double survive = 1.0;

  for (const int t : c.order) {
    const auto ti = static_cast<std::size_t>(t);
    const VmRef here = r.placement[ti];
    const VmSpec& vm = p_.vm(here);
    const Task& task = w_.task(t);
    TaskTiming& tm = r.timings[ti];

    double ready = vm_free[static_cast<std::size_t>(p_.vm_slot(here))];
    for (const int pr : w_.predecessors(t)) {
      const auto pi = static_cast<std::size_t>(pr);
      ready = std::max(ready, r.timings[pi].end);
      const VmRef there = r.placement[pi];
      if (there.ap == here.ap) continue;
      const double ratio = opts_.literal_core_ratio ? static_cast<double>(p_.vm(there).cores) /
                                                    static_cast<double>(vm.cores)
                                              : 1.0;
      const double beta = w_.task(pr).beta_mb;
      tm.decrypt += ratio * (service_seconds(Service::kConfidentiality, c.lev_cf[pi], beta, vm) +
                             service_seconds(Service::kIntegrity, c.lev_ig[pi], beta, vm));
    }

    // Output leaves once per distinct foreign access point; co-located
    // successors read it unencrypted.
    destinations.clear();
    for (const int s : w_.successors(t)) {
      const int ap = r.placement[static_cast<std::size_t>(s)].ap;
      if (ap != here.ap &&
          std::find(destinations.begin(), destinations.end(), ap) == destinations.end()) {
        destinations.push_back(ap);
      }
    }
    if (!destinations.empty()) {
      tm.encrypt = service_seconds(Service::kConfidentiality, c.lev_cf[ti], task.beta_mb, vm) +
                   service_seconds(Service::kIntegrity, c.lev_ig[ti], task.beta_mb, vm);
      tm.risk = output_risk(c.lev_cf[ti], c.lev_ig[ti]);
      survive *= 1.0 - tm.risk;
      for (const int ap : destinations) {
        const double seconds = transfer_time(here, VmRef{ap, 1}, task.beta_mb, p_);
        tm.transfer += seconds;
        if (here.on_device()) {
          r.energy += md.p_ul_w * seconds;
        } else if (ap == 0) {
          r.energy += md.p_dl_w * seconds;
        }
      }
    }

    tm.exec = exec_time(task.workload_gcycles, vm);
    if (here.on_device()) r.energy += md.p_comp_w * tm.exec;
    tm.start = ready;
    tm.end = tm.start + tm.decrypt + tm.exec + tm.transfer + tm.encrypt;
    vm_free[static_cast<std::size_t>(p_.vm_slot(here))] = tm.end;
    r.makespan = std::max(r.makespan, tm.end);
  }

  r.risk = 1.0 - survive;
  r.violation = std::max(0.0, r.makespan - w_.deadline());
  if (opts_.enforce_risk_cap) r.violation += std::max(0.0, r.risk - w_.risk_cap());
  r.feasible = r.violation == 0.0;
  return r;
}

EvaluationResult evaluate(const Chromosome& c, const Workflow& w, const Platform& p,
                          const SecurityCatalog& cat, const RiskModel& risk,
                          const EvalOptions& opts) {
  return Evaluator(w, p, cat, risk, opts)(c);
}

}  // namespace seeco
