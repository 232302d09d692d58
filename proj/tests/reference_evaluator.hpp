#pragma once

// Straight-line re-derivation of the schedule semantics used to cross-check
// the library evaluator. Shares only plain data types with the library.

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "seeco/evaluator.hpp"

namespace ref {

struct Result {
  double makespan = 0.0;
  double energy = 0.0;
  double risk = 0.0;
};

struct Where {
  int ap;
  int vm;
};

inline Where decode(std::uint8_t b, const seeco::Platform& p) {
  int ap = (b >> 4) % (p.ap_count() + 1);
  if (ap == 0) return {0, 0};
  int k = static_cast<int>(p.access_points()[ap - 1].vms.size());
  int low = b & 0x0F;
  int vm = ((low - 1) % k + k) % k;
  return {ap, vm};
}

inline seeco::VmSpec spec(Where w, const seeco::Platform& p) {
  if (w.ap == 0) return p.device().vm;
  return p.access_points()[w.ap - 1].vms[w.vm];
}

inline double shannon(double mhz, double power, double gain, double noise) {
  return mhz * 1e6 * std::log2(1.0 + power * gain / noise) / 8e6;
}

inline double protect_seconds(double mb, double speed, const seeco::VmSpec& vm) {
  return mb * 2.2 / (speed * vm.frequency_ghz * vm.cores);
}

inline Result evaluate(const seeco::Chromosome& c, const seeco::Workflow& w,
                       const seeco::Platform& p, const seeco::SecurityCatalog& cat,
                       double lambda_cf, double lambda_ig, bool literal) {
  using seeco::Service;
  const int n = static_cast<int>(w.size());
  std::vector<Where> at(n);
  for (int i = 0; i < n; ++i) at[i] = decode(c.loc[i], p);

  auto cf = [&](int id) { return cat.algorithms(Service::kConfidentiality)[id - 1]; };
  auto ig = [&](int id) { return cat.algorithms(Service::kIntegrity)[id - 1]; };

  std::vector<double> end(n, 0.0);
  std::vector<std::vector<double>> busy(p.ap_count() + 1);
  busy[0].assign(1, 0.0);
  for (int j = 1; j <= p.ap_count(); ++j) busy[j].assign(p.access_points()[j - 1].vms.size(), 0.0);

  Result out;
  double keep = 1.0;
  const auto& md = p.device();
  for (int t : c.order) {
    const Where h = at[t];
    const seeco::VmSpec vm = spec(h, p);
    double start = busy[h.ap][h.vm];
    double dec = 0.0;
    for (int q : w.predecessors(t)) {
      if (end[q] > start) start = end[q];
      if (at[q].ap == h.ap) continue;
      double beta = w.task(q).beta_mb;
      double scale = literal ? double(spec(at[q], p).cores) / vm.cores : 1.0;
      dec += scale * (protect_seconds(beta, cf(c.lev_cf[q]).ref_speed, vm) +
                      protect_seconds(beta, ig(c.lev_ig[q]).ref_speed, vm));
    }
    std::set<int> foreign;
    for (int s : w.successors(t)) {
      if (at[s].ap != h.ap) foreign.insert(at[s].ap);
    }
    double enc = 0.0, xfer = 0.0;
    double beta = w.task(t).beta_mb;
    if (!foreign.empty()) {
      enc = protect_seconds(beta, cf(c.lev_cf[t]).ref_speed, vm) +
            protect_seconds(beta, ig(c.lev_ig[t]).ref_speed, vm);
      double pc = 1.0 - std::exp(-lambda_cf * (1.0 - cf(c.lev_cf[t]).level));
      double pi = 1.0 - std::exp(-lambda_ig * (1.0 - ig(c.lev_ig[t]).level));
      keep *= (1.0 - pc) * (1.0 - pi);
      for (int dst : foreign) {
        double secs;
        if (h.ap == 0) {
          const auto& r = p.access_points()[dst - 1].radio;
          secs = beta / shannon(r.b_ul_mhz, r.p_tx_w, r.h_ul, r.noise_w);
          out.energy += md.p_ul_w * secs;
        } else if (dst == 0) {
          const auto& r = p.access_points()[h.ap - 1].radio;
          secs = beta / shannon(r.b_dl_mhz, r.p_ap_w, r.h_dl, r.noise_w);
          out.energy += md.p_dl_w * secs;
        } else {
          secs = beta / p.inter_ap_bandwidth();
        }
        xfer += secs;
      }
    }
    double exec = w.task(t).workload_gcycles / vm.capability_ghz;
    if (h.ap == 0) out.energy += md.p_comp_w * exec;
    end[t] = start + dec + exec + xfer + enc;
    busy[h.ap][h.vm] = end[t];
    if (end[t] > out.makespan) out.makespan = end[t];
  }
  out.risk = 1.0 - keep;
  return out;
}

}  // namespace ref
