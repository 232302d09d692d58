#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "seeco/evaluator.hpp"
#include "seeco/rng.hpp"

namespace seeco {

struct GaParams {
  int pop_size = 40;
  int iterations = 150;
  double p_c = 0.5;
  double p_m = 0.3;
  std::uint64_t seed = 1;
  int elitism = 1;
  // Raise the levels of the most exposed outputs of every new individual until
  // the risk cap holds (or nothing is left to raise).
  bool repair_risk = true;

  void validate() const;
};

// Level ids each service gene may take. A single entry freezes the gene.
struct GeneDomain {
  std::vector<int> cf_levels;
  std::vector<int> ig_levels;

  static GeneDomain full(const SecurityCatalog& cat);
  void validate(const SecurityCatalog& cat) const;
};

struct GenerationStats {
  double best_energy = 0.0;
  double best_violation = 0.0;
  bool best_feasible = false;
  int feasible_count = 0;
};

struct Individual {
  Chromosome chromosome;
  EvaluationResult result;
};

struct GaRun {
  Individual best;
  std::vector<GenerationStats> history;  // one entry per iteration
};

// Random topological order built from the sortable (ready) set; task 0 first.
std::vector<int> init_order(const Workflow& w, Rng& rng);

// Uniform placement and level genes; entry and exit pinned to the device.
void init_vectors(Chromosome& c, const Workflow& w, const GeneDomain& domain, Rng& rng);

// Prefix of one parent up to `cut` (inclusive), then the other parent's
// order with those tasks removed.
std::pair<std::vector<int>, std::vector<int>> crossover_order_at(std::span<const int> o1,
                                                                 std::span<const int> o2,
                                                                 std::size_t cut);
std::pair<std::vector<int>, std::vector<int>> crossover_order(std::span<const int> o1,
                                                              std::span<const int> o2, Rng& rng);

// Single-point crossover of loc, lev_cf and lev_ig with independent cuts.
// Orders are copied unchanged from the respective parent.
std::pair<Chromosome, Chromosome> crossover_vectors_at(const Chromosome& a, const Chromosome& b,
                                                       std::size_t cut_loc, std::size_t cut_cf,
                                                       std::size_t cut_ig);
std::pair<Chromosome, Chromosome> crossover_vectors(const Chromosome& a, const Chromosome& b,
                                                    Rng& rng);

// Moves the task at position `pos` to another slot between its last
// predecessor and first successor. Identity when no other slot exists.
std::vector<int> mutate_order_at(std::span<const int> order, const Workflow& w, std::size_t pos,
                                 Rng& rng);
std::vector<int> mutate_order(std::span<const int> order, const Workflow& w, Rng& rng);

// Redraws one loc gene and one gene of each level vector (interior tasks only).
void mutate_vectors(Chromosome& c, const GeneDomain& domain, Rng& rng);

// Binary tournament between two distinct individuals; returns the winner's index.
std::size_t select(std::span<const Individual> pop, Rng& rng);

// Entry and exit back on the device.
void pin_endpoints(Chromosome& c);

// Sets the outputs with the highest risk to the strongest levels of `domain`,
// most exposed first, until P(W) fits the cap. `r` must be eval(c) on entry and
// is refreshed on exit. No-op when the cap is met or not enforced.
void repair_risk(Chromosome& c, EvaluationResult& r, const Evaluator& eval,
                 const GeneDomain& domain);

GaRun run_ga(const Evaluator& eval, const GaParams& params, const GeneDomain& domain);

}  // namespace seeco
