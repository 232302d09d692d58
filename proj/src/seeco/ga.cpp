#include "seeco/ga.hpp"

#include <algorithm>
#include <numeric>

#include "seeco/error.hpp"

namespace seeco {

void GaParams::validate() const {
  if (pop_size < 2) throw DomainError("population size must be at least 2");
  if (iterations < 1) throw DomainError("iterations must be at least 1");
  if (!(p_c >= 0.0 && p_c <= 1.0) || !(p_m >= 0.0 && p_m <= 1.0)) {
    throw DomainError("crossover and mutation probabilities must lie in [0, 1]");
  }
  if (elitism < 0 || elitism >= pop_size) {
    throw DomainError("elitism must be non-negative and below the population size");
  }
}

GeneDomain GeneDomain::full(const SecurityCatalog& cat) {
  GeneDomain d;
  d.cf_levels.resize(cat.size(Service::kConfidentiality));
  d.ig_levels.resize(cat.size(Service::kIntegrity));
  std::iota(d.cf_levels.begin(), d.cf_levels.end(), 1);
  std::iota(d.ig_levels.begin(), d.ig_levels.end(), 1);
  return d;
}

void GeneDomain::validate(const SecurityCatalog& cat) const {
  auto check = [&](const std::vector<int>& ids, Service s) {
    if (ids.empty()) throw DomainError(std::string(to_string(s)) + " gene domain is empty");
    for (int id : ids) cat.get(s, id);
  };
  check(cf_levels, Service::kConfidentiality);
  check(ig_levels, Service::kIntegrity);
}

namespace {

std::uint8_t random_location(Rng& rng) {
  return static_cast<std::uint8_t>(rng.uniform_int(0x01, 0xFF));
}

int random_level(const std::vector<int>& ids, Rng& rng) { return ids[rng.index(ids.size())]; }

int strongest_level(const std::vector<int>& ids, Service s, const SecurityCatalog& cat) {
  return *std::max_element(ids.begin(), ids.end(), [&](int a, int b) {
    return cat.get(s, a).level < cat.get(s, b).level;
  });
}

// Feasible before infeasible; then lower energy or lower violation.
bool ranks_before(const EvaluationResult& a, const EvaluationResult& b) {
  if (a.feasible != b.feasible) return a.feasible;
  return a.feasible ? a.energy < b.energy : a.violation < b.violation;
}

}  // namespace

std::vector<int> init_order(const Workflow& w, Rng& rng) {
  const std::size_t n = w.size();
  std::vector<std::size_t> waiting(n);
  for (std::size_t i = 0; i < n; ++i) waiting[i] = w.predecessors(static_cast<int>(i)).size();

  std::vector<int> order{w.entry()};
  order.reserve(n);
  std::vector<int> sortable;
  auto release = [&](int t) {
    for (int s : w.successors(t)) {
      if (--waiting[static_cast<std::size_t>(s)] == 0) sortable.push_back(s);
    }
  };
  release(w.entry());
  while (!sortable.empty()) {
    const std::size_t pick = rng.index(sortable.size());
    const int t = sortable[pick];
    sortable.erase(sortable.begin() + static_cast<std::ptrdiff_t>(pick));
    order.push_back(t);
    release(t);
  }
  return order;
}

void pin_endpoints(Chromosome& c) {
  if (c.loc.empty()) return;
  c.loc.front() = kDeviceLocation;
  c.loc.back() = kDeviceLocation;
}

void init_vectors(Chromosome& c, const Workflow& w, const GeneDomain& domain, Rng& rng) {
  const std::size_t n = w.size();
  c.loc.assign(n, kDeviceLocation);
  c.lev_cf.assign(n, domain.cf_levels.front());
  c.lev_ig.assign(n, domain.ig_levels.front());
  for (std::size_t i = 0; i < n; ++i) {
    if (i != 0 && i + 1 != n) c.loc[i] = random_location(rng);
    c.lev_cf[i] = random_level(domain.cf_levels, rng);
    c.lev_ig[i] = random_level(domain.ig_levels, rng);
  }
}

std::pair<std::vector<int>, std::vector<int>> crossover_order_at(std::span<const int> o1,
                                                                 std::span<const int> o2,
                                                                 std::size_t cut) {
  const std::size_t n = o1.size();
  if (o2.size() != n) throw DomainError("parent orders differ in length");
  if (n == 0) return {};
  cut = std::min(cut, n - 1);

  auto splice = [&](std::span<const int> head, std::span<const int> tail) {
    std::vector<bool> taken(n, false);
    std::vector<int> child;
    child.reserve(n);
    for (std::size_t l = 0; l <= cut; ++l) {
      child.push_back(head[l]);
      taken[static_cast<std::size_t>(head[l])] = true;
    }
    for (int t : tail) {
      if (!taken[static_cast<std::size_t>(t)]) child.push_back(t);
    }
    return child;
  };
  return {splice(o1, o2), splice(o2, o1)};
}

std::pair<std::vector<int>, std::vector<int>> crossover_order(std::span<const int> o1,
                                                              std::span<const int> o2, Rng& rng) {
  if (o1.empty()) return {};
  return crossover_order_at(o1, o2, rng.index(o1.size()));
}

std::pair<Chromosome, Chromosome> crossover_vectors_at(const Chromosome& a, const Chromosome& b,
                                                       std::size_t cut_loc, std::size_t cut_cf,
                                                       std::size_t cut_ig) {
  const std::size_t n = a.loc.size();
  if (b.loc.size() != n || a.lev_cf.size() != n || b.lev_cf.size() != n ||
      a.lev_ig.size() != n || b.lev_ig.size() != n) {
    throw DomainError("parent gene vectors differ in length");
  }
  Chromosome c1 = a;
  Chromosome c2 = b;
  auto swap_tail = [](auto& x, auto& y, std::size_t cut) {
    for (std::size_t i = cut + 1; i < x.size(); ++i) std::swap(x[i], y[i]);
  };
  swap_tail(c1.loc, c2.loc, cut_loc);
  swap_tail(c1.lev_cf, c2.lev_cf, cut_cf);
  swap_tail(c1.lev_ig, c2.lev_ig, cut_ig);
  pin_endpoints(c1);
  pin_endpoints(c2);
  return {std::move(c1), std::move(c2)};
}

std::pair<Chromosome, Chromosome> crossover_vectors(const Chromosome& a, const Chromosome& b,
                                                    Rng& rng) {
  const std::size_t n = a.loc.size();
  if (n == 0) return {a, b};
  const std::size_t r1 = rng.index(n);
  const std::size_t r2 = rng.index(n);
  const std::size_t r3 = rng.index(n);
  return crossover_vectors_at(a, b, r1, r2, r3);
}

std::vector<int> mutate_order_at(std::span<const int> order, const Workflow& w, std::size_t pos,
                                 Rng& rng) {
  std::vector<int> out(order.begin(), order.end());
  const std::size_t n = out.size();
  if (n < 3 || pos == 0 || pos >= n - 1) return out;
  const int task = out[pos];
  const auto& preds = w.predecessors(task);
  const auto& succs = w.successors(task);

  std::size_t a = 0;  // last predecessor position before pos
  for (std::size_t i = 0; i < pos; ++i) {
    if (std::binary_search(preds.begin(), preds.end(), out[i])) a = i;
  }
  std::size_t b = n - 1;  // first successor position after pos
  for (std::size_t i = n - 1; i > pos; --i) {
    if (std::binary_search(succs.begin(), succs.end(), out[i])) b = i;
  }
  // Legal final positions are a+1 .. b-1, excluding the current one.
  const std::size_t slots = b - a - 1;
  if (slots <= 1) return out;
  std::size_t target = a + 1 + rng.index(slots - 1);
  if (target >= pos) ++target;

  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(target), task);
  return out;
}

std::vector<int> mutate_order(std::span<const int> order, const Workflow& w, Rng& rng) {
  if (order.size() < 3) return {order.begin(), order.end()};
  const auto pos = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(order.size()) - 2));
  return mutate_order_at(order, w, pos, rng);
}

void mutate_vectors(Chromosome& c, const GeneDomain& domain, Rng& rng) {
  const std::size_t n = c.loc.size();
  if (n < 3) return;
  const auto hi = static_cast<std::int64_t>(n) - 2;
  const auto l1 = static_cast<std::size_t>(rng.uniform_int(1, hi));
  const auto l2 = static_cast<std::size_t>(rng.uniform_int(1, hi));
  const auto l3 = static_cast<std::size_t>(rng.uniform_int(1, hi));
  c.loc[l1] = random_location(rng);
  c.lev_cf[l2] = random_level(domain.cf_levels, rng);
  c.lev_ig[l3] = random_level(domain.ig_levels, rng);
}

std::size_t select(std::span<const Individual> pop, Rng& rng) {
  if (pop.empty()) throw DomainError("cannot select from an empty population");
  if (pop.size() == 1) return 0;
  const std::size_t i = rng.index(pop.size());
  std::size_t j = rng.index(pop.size() - 1);
  if (j >= i) ++j;
  return better(pop[i].result, pop[j].result) ? i : j;
}

void repair_risk(Chromosome& c, EvaluationResult& r, const Evaluator& eval,
                 const GeneDomain& domain) {
  const double cap = eval.workflow().risk_cap();
  if (!eval.options().enforce_risk_cap || r.risk <= cap) return;
  const auto& cat = eval.catalog();
  const int top_cf = strongest_level(domain.cf_levels, Service::kConfidentiality, cat);
  const int top_ig = strongest_level(domain.ig_levels, Service::kIntegrity, cat);
  const double floor = eval.output_risk(top_cf, top_ig);

  const std::size_t n = r.timings.size();
  std::vector<double> risk(n);
  std::vector<std::size_t> exposed;
  for (std::size_t i = 0; i < n; ++i) {
    risk[i] = r.timings[i].risk;
    if (risk[i] > floor) exposed.push_back(i);
  }
  std::stable_sort(exposed.begin(), exposed.end(),
                   [&](std::size_t a, std::size_t b) { return risk[a] > risk[b]; });
  auto total = [&] {
    double keep = 1.0;
    for (double p : risk) keep *= 1.0 - p;
    return 1.0 - keep;
  };
  bool changed = false;
  for (const std::size_t i : exposed) {
    c.lev_cf[i] = top_cf;
    c.lev_ig[i] = top_ig;
    risk[i] = floor;
    changed = true;
    if (total() <= cap) break;
  }
  if (changed) r = eval(c);
}

GaRun run_ga(const Evaluator& eval, const GaParams& params, const GeneDomain& domain) {
  params.validate();
  domain.validate(eval.catalog());
  const Workflow& w = eval.workflow();
  Rng rng(params.seed);
  const auto pop_size = static_cast<std::size_t>(params.pop_size);

  std::vector<Individual> pop;
  pop.reserve(pop_size);
  for (std::size_t i = 0; i < pop_size; ++i) {
    Chromosome c;
    c.order = init_order(w, rng);
    init_vectors(c, w, domain, rng);
    auto r = eval(c);
    if (params.repair_risk) repair_risk(c, r, eval, domain);
    pop.push_back({std::move(c), std::move(r)});
  }

  GaRun run;
  run.best = pop.front();
  auto offer = [&run](const Individual& ind) {
    if (!better(run.best.result, ind.result)) run.best = ind;
  };
  for (const auto& ind : pop) offer(ind);
  run.history.reserve(static_cast<std::size_t>(params.iterations));

  std::vector<std::size_t> rank(pop_size);
  std::vector<Individual> next;
  next.reserve(pop_size);
  for (int g = 0; g < params.iterations; ++g) {
    next.clear();
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t x, std::size_t y) {
      return ranks_before(pop[x].result, pop[y].result);
    });
    for (int e = 0; e < params.elitism; ++e) next.push_back(pop[rank[static_cast<std::size_t>(e)]]);

    while (next.size() < pop_size) {
      Chromosome c1 = pop[select(pop, rng)].chromosome;
      Chromosome c2 = pop[select(pop, rng)].chromosome;
      if (rng.bernoulli(params.p_c)) {
        auto [o1, o2] = crossover_order(c1.order, c2.order, rng);
        auto [v1, v2] = crossover_vectors(c1, c2, rng);
        c1 = std::move(v1);
        c2 = std::move(v2);
        c1.order = std::move(o1);
        c2.order = std::move(o2);
      }
      for (Chromosome* c : {&c1, &c2}) {
        if (next.size() >= pop_size) break;
        if (rng.bernoulli(params.p_m)) {
          c->order = mutate_order(c->order, w, rng);
          mutate_vectors(*c, domain, rng);
        }
        pin_endpoints(*c);
        auto r = eval(*c);
        if (params.repair_risk) repair_risk(*c, r, eval, domain);
        next.push_back({std::move(*c), std::move(r)});
      }
    }
    pop.swap(next);

    GenerationStats stats;
    const Individual* gen_best = &pop.front();
    for (const auto& ind : pop) {
      offer(ind);
      if (ind.result.feasible) ++stats.feasible_count;
      if (!better(gen_best->result, ind.result)) gen_best = &ind;
    }
    stats.best_energy = gen_best->result.energy;
    stats.best_violation = gen_best->result.violation;
    stats.best_feasible = gen_best->result.feasible;
    run.history.push_back(stats);
  }
  return run;
}

}  // namespace seeco
