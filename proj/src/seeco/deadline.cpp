#include <algorithm>

#include "seeco/error.hpp"
#include "seeco/evaluator.hpp"
#include "seeco/workflow.hpp"

namespace seeco {

Chromosome earliest_finish_schedule(const Workflow& w, const Platform& p,
                                    const SecurityCatalog& cat, bool literal_core_ratio) {
  const std::size_t n = w.size();
  Chromosome c;
  c.order = w.canonical_order();
  c.loc.assign(n, kDeviceLocation);
  c.lev_cf.assign(n, cat.strongest_id(Service::kConfidentiality));
  c.lev_ig.assign(n, cat.strongest_id(Service::kIntegrity));

  EvalOptions opts;
  opts.literal_core_ratio = literal_core_ratio;
  const Evaluator eval(w, p, cat, RiskModel{}, opts);
  const auto vms = p.all_vms();

  // Greedy earliest finish: place tasks in canonical order, each on the VM
  // where it ends first given the placements so far (the rest stay local).
  for (const int t : c.order) {
    if (t == w.entry() || t == w.exit()) continue;
    const auto ti = static_cast<std::size_t>(t);
    std::uint8_t best_loc = kDeviceLocation;
    double best_end = 0.0;
    bool first = true;
    for (const VmRef vm : vms) {
      c.loc[ti] = encode_location(vm);
      const double end = eval(c).timings[ti].end;
      if (first || end < best_end) {
        best_end = end;
        best_loc = c.loc[ti];
        first = false;
      }
    }
    c.loc[ti] = best_loc;
  }
  return c;
}

MakespanBounds makespan_bounds(const Workflow& w, const Platform& p, const SecurityCatalog& cat,
                               bool literal_core_ratio) {
  MakespanBounds bounds;
  const VmSpec& device = p.device().vm;
  for (const auto& t : w.tasks()) bounds.max_s += exec_time(t.workload_gcycles, device);

  EvalOptions opts;
  opts.literal_core_ratio = literal_core_ratio;
  const Evaluator eval(w, p, cat, RiskModel{}, opts);
  const Chromosome c = earliest_finish_schedule(w, p, cat, literal_core_ratio);
  bounds.min_s = std::min(eval(c).makespan, bounds.max_s);
  return bounds;
}

double compute_deadline(const Workflow& w, const Platform& p, const SecurityCatalog& cat,
                        bool literal_core_ratio) {
  const MakespanBounds b = makespan_bounds(w, p, cat, literal_core_ratio);
  return 0.5 * (b.min_s + b.max_s);
}

}  // namespace seeco
