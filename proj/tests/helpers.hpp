#pragma once

#include <cstdint>
#include <vector>

#include "seeco/ga.hpp"
#include "seeco/platform.hpp"
#include "seeco/rng.hpp"
#include "seeco/workflow.hpp"

namespace testing {

inline seeco::Workflow chain(int n, double omega = 2.36, double beta = 1.0) {
  std::vector<seeco::Task> tasks(static_cast<std::size_t>(n), seeco::Task{beta, beta, omega});
  std::vector<seeco::Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return seeco::Workflow(tasks, edges);
}

inline seeco::Workflow diamond() {
  std::vector<seeco::Task> tasks(4, seeco::Task{1.0, 1.0, 1.0});
  return seeco::Workflow(tasks, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

inline seeco::Workflow random_dag(int n, seeco::Rng& rng, double density = -1.0) {
  seeco::GeneratorConfig g;
  if (density < 0.0) density = rng.uniform_real(0.05, 0.8);
  return seeco::random_workflow(n, density, g, rng.next());
}

// 1..max_aps access points with 1..3 VMs of random shape and radio.
inline seeco::Platform random_platform(seeco::Rng& rng, int max_aps = 3) {
  std::vector<seeco::AccessPoint> aps(static_cast<std::size_t>(rng.uniform_int(1, max_aps)));
  for (auto& ap : aps) {
    const auto k = rng.uniform_int(1, 3);
    for (int v = 0; v < k; ++v) {
      const double f = rng.uniform_real(1.5, 3.5);
      ap.vms.push_back({f, static_cast<int>(rng.uniform_int(1, 16)), f});
    }
    ap.radio.b_ul_mhz = rng.uniform_real(5.0, 40.0);
    ap.radio.b_dl_mhz = rng.uniform_real(5.0, 40.0);
  }
  return seeco::Platform(seeco::MobileDevice{}, std::move(aps), rng.uniform_real(5.0, 20.0));
}

inline seeco::Chromosome random_chromosome(const seeco::Workflow& w, seeco::Rng& rng,
                                           const seeco::GeneDomain& d) {
  seeco::Chromosome c;
  c.order = seeco::init_order(w, rng);
  seeco::init_vectors(c, w, d, rng);
  return c;
}

}  // namespace testing
