#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace seeco {

class Platform;
class SecurityCatalog;

struct Task {
  double alpha_mb = 0.0;          // input size
  double beta_mb = 0.0;           // output size
  double workload_gcycles = 0.0;  // giga-cycles
};

using Edge = std::pair<int, int>;

// Precedence DAG with a single entry (task 0) and a single exit (task n-1).
// Immutable once constructed except for its two constraint values.
class Workflow {
 public:
  // Throws ValidationError on bad indices, cycles, duplicate edges, or when
  // task 0 / task n-1 are not the unique entry / exit.
  Workflow(std::vector<Task> tasks, std::vector<Edge> edges, double deadline_s = 0.0,
           double risk_cap = 1.0);

  std::size_t size() const { return tasks_.size(); }
  const std::vector<Task>& tasks() const { return tasks_; }
  const Task& task(int i) const { return tasks_[static_cast<std::size_t>(i)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<int>& predecessors(int i) const;
  const std::vector<int>& successors(int i) const;

  int entry() const { return 0; }
  int exit() const { return static_cast<int>(tasks_.size()) - 1; }

  double deadline() const { return deadline_; }
  double risk_cap() const { return risk_cap_; }
  void set_deadline(double seconds);
  void set_risk_cap(double p);

  // Kahn's algorithm, smallest ready index first.
  std::vector<int> canonical_order() const;

  friend bool operator==(const Workflow& a, const Workflow& b);

 private:
  void check_index(int i) const;

  std::vector<Task> tasks_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> preds_;
  std::vector<std::vector<int>> succs_;
  double deadline_;
  double risk_cap_;
};

// True iff every task appears after all of its predecessors.
// Throws DomainError when `order` is not a permutation of 0..n-1.
bool is_valid_order(const Workflow& w, std::span<const int> order);

struct GeneratorConfig {
  double data_min_mb = 5.0;
  double data_max_mb = 50.0;
  double workload_min_gcycles = 1.0;
  double workload_max_gcycles = 10.0;
  double risk_cap = 0.5;
};

// Random forward-edge DAG; sources are wired to task 0 and sinks to task n-1.
Workflow random_workflow(int n, double density, const GeneratorConfig& cfg, std::uint64_t seed);

struct MakespanBounds {
  double min_s = 0.0;  // greedy earliest-finish list schedule
  double max_s = 0.0;  // everything serialized on the device
};

// Both bounds use the strongest algorithm of each service.
MakespanBounds makespan_bounds(const Workflow& w, const Platform& p, const SecurityCatalog& cat,
                               bool literal_core_ratio = true);

// Midpoint of makespan_bounds().
double compute_deadline(const Workflow& w, const Platform& p, const SecurityCatalog& cat,
                        bool literal_core_ratio = true);

}  // namespace seeco
