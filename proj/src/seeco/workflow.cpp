#include "seeco/workflow.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "seeco/error.hpp"
#include "seeco/rng.hpp"

namespace seeco {

Workflow::Workflow(std::vector<Task> tasks, std::vector<Edge> edges, double deadline_s,
                   double risk_cap)
    : tasks_(std::move(tasks)), edges_(std::move(edges)), deadline_(0.0), risk_cap_(1.0) {
  const int n = static_cast<int>(tasks_.size());
  if (n == 0) throw ValidationError("workflow has no tasks");
  for (std::size_t i = 0; i < tasks_.size(); ++i) {
    const auto& t = tasks_[i];
    if (!(t.alpha_mb >= 0.0 && t.beta_mb >= 0.0 && t.workload_gcycles >= 0.0) ||
        !std::isfinite(t.alpha_mb) || !std::isfinite(t.beta_mb) ||
        !std::isfinite(t.workload_gcycles)) {
      throw ValidationError("task " + std::to_string(i) + " has a negative or non-finite size");
    }
  }
  preds_.resize(tasks_.size());
  succs_.resize(tasks_.size());
  std::set<Edge> seen;
  for (const auto& [from, to] : edges_) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw ValidationError("edge (" + std::to_string(from) + ", " + std::to_string(to) +
                            ") references a missing task");
    }
    if (from == to) throw ValidationError("self-loop on task " + std::to_string(from));
    if (!seen.insert({from, to}).second) {
      throw ValidationError("duplicate edge (" + std::to_string(from) + ", " +
                            std::to_string(to) + ")");
    }
    succs_[static_cast<std::size_t>(from)].push_back(to);
    preds_[static_cast<std::size_t>(to)].push_back(from);
  }
  for (auto& v : preds_) std::sort(v.begin(), v.end());
  for (auto& v : succs_) std::sort(v.begin(), v.end());

  if (canonical_order().size() != tasks_.size()) throw ValidationError("workflow contains a cycle");

  std::vector<int> entries, exits;
  for (int i = 0; i < n; ++i) {
    if (preds_[static_cast<std::size_t>(i)].empty()) entries.push_back(i);
    if (succs_[static_cast<std::size_t>(i)].empty()) exits.push_back(i);
  }
  if (entries.size() != 1 || entries.front() != 0) {
    throw ValidationError("workflow must have exactly one entry task, task 0 (found " +
                          std::to_string(entries.size()) + ")");
  }
  if (exits.size() != 1 || exits.front() != n - 1) {
    throw ValidationError("workflow must have exactly one exit task, task n-1 (found " +
                          std::to_string(exits.size()) + ")");
  }
  set_deadline(deadline_s);
  set_risk_cap(risk_cap);
}

void Workflow::check_index(int i) const {
  if (i < 0 || i >= static_cast<int>(tasks_.size())) {
    throw DomainError("task index out of range: " + std::to_string(i));
  }
}

const std::vector<int>& Workflow::predecessors(int i) const {
  check_index(i);
  return preds_[static_cast<std::size_t>(i)];
}

const std::vector<int>& Workflow::successors(int i) const {
  check_index(i);
  return succs_[static_cast<std::size_t>(i)];
}

void Workflow::set_deadline(double seconds) {
  if (!(seconds >= 0.0) || !std::isfinite(seconds)) {
    throw ValidationError("deadline must be finite and non-negative");
  }
  deadline_ = seconds;
}

void Workflow::set_risk_cap(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("risk cap must lie in [0, 1]");
  risk_cap_ = p;
}

std::vector<int> Workflow::canonical_order() const {
  const std::size_t n = tasks_.size();
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i) indegree[i] = preds_[i].size();
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(static_cast<int>(i));
  }
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int t = ready.top();
    ready.pop();
    order.push_back(t);
    for (int s : succs_[static_cast<std::size_t>(t)]) {
      if (--indegree[static_cast<std::size_t>(s)] == 0) ready.push(s);
    }
  }
  return order;
}

bool operator==(const Workflow& a, const Workflow& b) {
  if (a.tasks_.size() != b.tasks_.size() || a.deadline_ != b.deadline_ ||
      a.risk_cap_ != b.risk_cap_ || a.succs_ != b.succs_) {
    return false;
  }
  for (std::size_t i = 0; i < a.tasks_.size(); ++i) {
    const auto& x = a.tasks_[i];
    const auto& y = b.tasks_[i];
    if (x.alpha_mb != y.alpha_mb || x.beta_mb != y.beta_mb ||
        x.workload_gcycles != y.workload_gcycles) {
      return false;
    }
  }
  return true;
}

bool is_valid_order(const Workflow& w, std::span<const int> order) {
  const std::size_t n = w.size();
  if (order.size() != n) throw DomainError("order length does not match the task count");
  std::vector<int> position(n, -1);
  for (std::size_t p = 0; p < n; ++p) {
    const int t = order[p];
    if (t < 0 || t >= static_cast<int>(n) || position[static_cast<std::size_t>(t)] != -1) {
      throw DomainError("order is not a permutation of the task indices");
    }
    position[static_cast<std::size_t>(t)] = static_cast<int>(p);
  }
  for (const auto& [from, to] : w.edges()) {
    if (position[static_cast<std::size_t>(from)] > position[static_cast<std::size_t>(to)]) {
      return false;
    }
  }
  return true;
}

Workflow random_workflow(int n, double density, const GeneratorConfig& cfg, std::uint64_t seed) {
  if (n < 2) throw DomainError("a generated workflow needs at least two tasks");
  if (!(density >= 0.0 && density <= 1.0)) throw DomainError("edge density must lie in [0, 1]");
  if (!(cfg.data_min_mb >= 0.0 && cfg.data_min_mb <= cfg.data_max_mb) ||
      !(cfg.workload_min_gcycles >= 0.0 && cfg.workload_min_gcycles <= cfg.workload_max_gcycles) ||
      !std::isfinite(cfg.data_max_mb) || !std::isfinite(cfg.workload_max_gcycles)) {
    throw DomainError("generator ranges must be ordered and non-negative");
  }
  Rng rng(seed);
  std::vector<Task> tasks(static_cast<std::size_t>(n));
  for (auto& t : tasks) {
    t.alpha_mb = rng.uniform_real(cfg.data_min_mb, cfg.data_max_mb);
    t.beta_mb = rng.uniform_real(cfg.data_min_mb, cfg.data_max_mb);
    t.workload_gcycles = rng.uniform_real(cfg.workload_min_gcycles, cfg.workload_max_gcycles);
  }
  std::vector<Edge> edges;
  std::vector<bool> has_pred(static_cast<std::size_t>(n), false);
  std::vector<bool> has_succ(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(density)) {
        edges.emplace_back(i, j);
        has_succ[static_cast<std::size_t>(i)] = true;
        has_pred[static_cast<std::size_t>(j)] = true;
      }
    }
  }
  for (int j = 1; j < n; ++j) {
    if (!has_pred[static_cast<std::size_t>(j)]) {
      edges.emplace_back(0, j);
      has_succ[0] = true;
    }
  }
  for (int i = 0; i < n - 1; ++i) {
    if (!has_succ[static_cast<std::size_t>(i)]) edges.emplace_back(i, n - 1);
  }
  std::sort(edges.begin(), edges.end());
  return Workflow(std::move(tasks), std::move(edges), 0.0, cfg.risk_cap);
}

}  // namespace seeco
