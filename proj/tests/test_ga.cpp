#include <doctest.h>

#include <array>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "seeco/baselines.hpp"
#include "seeco/error.hpp"
#include "seeco/ga.hpp"

using namespace seeco;

namespace {

const SecurityCatalog kCat = SecurityCatalog::standard();

void check_valid(const Chromosome& c, const Workflow& w) {
  CHECK_NOTHROW(validate_chromosome(c, w, kCat));
}

}  // namespace

TEST_CASE("initial orders are random topological sorts") {
  Rng rng(1);
  CHECK(init_order(testing::chain(6), rng) == std::vector<int>{0, 1, 2, 3, 4, 5});
  const auto d = testing::diamond();
  int first = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const auto o = init_order(d, rng);
    CHECK(is_valid_order(d, o));
    if (o[1] == 1) ++first;
  }
  CHECK(std::abs(first / double(draws) - 0.5) < 0.05);
  for (int i = 0; i < 200; ++i) {
    const auto w = testing::random_dag(static_cast<int>(rng.uniform_int(2, 30)), rng);
    CHECK(is_valid_order(w, init_order(w, rng)));
  }
}

TEST_CASE("initial vectors cover the byte range and pin the endpoints") {
  Rng rng(2);
  const auto w = testing::chain(5);
  const auto d = GeneDomain::full(kCat);
  std::set<int> seen;
  for (int i = 0; i < 10000; ++i) {
    Chromosome c;
    c.order = w.canonical_order();
    init_vectors(c, w, d, rng);
    CHECK(c.loc[0] == kDeviceLocation);
    CHECK(c.loc[4] == kDeviceLocation);
    seen.insert(c.loc[2]);
  }
  CHECK(seen.size() == 255);
  CHECK(seen.count(0) == 0);
}

TEST_CASE("order crossover keeps the prefix and the other parent's relative order") {
  const std::vector<int> o1{0, 1, 2, 3, 4, 5};
  const std::vector<int> o2{0, 2, 1, 4, 3, 5};
  const auto [c1, c2] = crossover_order_at(o1, o2, 1);
  CHECK(c1 == std::vector<int>{0, 1, 2, 4, 3, 5});
  CHECK(c2 == std::vector<int>{0, 2, 1, 3, 4, 5});
  const auto [s1, s2] = crossover_order_at(o1, o1, 3);
  CHECK(s1 == o1);
  CHECK(s2 == o1);
  CHECK_THROWS_AS(crossover_order_at(o1, std::vector<int>{0, 1}, 0), DomainError);
}

TEST_CASE("vector crossover swaps tails after independent cuts") {
  Chromosome a{{0, 1, 2, 3}, {1, 0x11, 0x12, 1}, {1, 1, 1, 1}, {2, 2, 2, 2}};
  Chromosome b{{0, 2, 1, 3}, {1, 0x21, 0x22, 1}, {3, 3, 3, 3}, {4, 4, 4, 4}};
  const auto [x, y] = crossover_vectors_at(a, b, 1, 0, 3);
  CHECK(x.loc == std::vector<std::uint8_t>{1, 0x11, 0x22, 1});
  CHECK(y.loc == std::vector<std::uint8_t>{1, 0x21, 0x12, 1});
  CHECK(x.lev_cf == std::vector<int>{1, 3, 3, 3});
  CHECK(x.lev_ig == std::vector<int>{2, 2, 2, 2});
  CHECK(x.order == a.order);
  CHECK(y.order == b.order);
  const auto [p, q] = crossover_vectors_at(a, a, 0, 1, 2);
  CHECK(p == a);
  CHECK(q == a);
}

TEST_CASE("order mutation moves a task within its precedence window") {
  Rng rng(3);
  const auto c = testing::chain(6);
  for (int i = 0; i < 100; ++i) {
    CHECK(mutate_order(c.canonical_order(), c, rng) == c.canonical_order());
  }
  const auto d = testing::diamond();
  CHECK(mutate_order_at(std::vector<int>{0, 1, 2, 3}, d, 1, rng) == std::vector<int>{0, 2, 1, 3});
  CHECK(mutate_order(std::vector<int>{0, 1}, testing::chain(2), rng) == std::vector<int>{0, 1});
}

TEST_CASE("vector mutation touches only interior genes within the domain") {
  Rng rng(4);
  const auto w = testing::chain(7);
  const auto d = GeneDomain::full(kCat);
  for (int i = 0; i < 10000; ++i) {
    auto c = testing::random_chromosome(w, rng, d);
    const auto before = c;
    mutate_vectors(c, d, rng);
    CHECK(c.loc[0] == before.loc[0]);
    CHECK(c.loc[6] == before.loc[6]);
    CHECK(c.lev_cf[0] == before.lev_cf[0]);
    CHECK(c.lev_ig[6] == before.lev_ig[6]);
    check_valid(c, w);
  }
  // Freshly drawn level ids should be uniform on 1..5.
  std::array<int, 6> fresh{};
  for (int i = 0; i < 10000; ++i) {
    Chromosome c{w.canonical_order(), std::vector<std::uint8_t>(7, 1), std::vector<int>(7, 0),
                 std::vector<int>(7, 1)};
    mutate_vectors(c, d, rng);
    for (int v : c.lev_cf) {
      if (v != 0) ++fresh[static_cast<std::size_t>(v)];
    }
  }
  double chi2 = 0.0;
  for (int v = 1; v <= 5; ++v) {
    const double e = 10000.0 / 5.0;
    chi2 += (fresh[static_cast<std::size_t>(v)] - e) * (fresh[static_cast<std::size_t>(v)] - e) / e;
  }
  CHECK(chi2 < 9.488);  // 4 degrees of freedom, 5%
}

TEST_CASE("operators never produce invalid chromosomes") {
  Rng rng(5);
  const auto d = GeneDomain::full(kCat);
  for (int i = 0; i < 2000; ++i) {
    const auto w = testing::random_dag(static_cast<int>(rng.uniform_int(4, 30)), rng);
    auto a = testing::random_chromosome(w, rng, d);
    auto b = testing::random_chromosome(w, rng, d);
    auto [o1, o2] = crossover_order(a.order, b.order, rng);
    CHECK(is_valid_order(w, o1));
    CHECK(is_valid_order(w, o2));
    auto [v1, v2] = crossover_vectors(a, b, rng);
    check_valid(v1, w);
    check_valid(v2, w);
    a.order = mutate_order(a.order, w, rng);
    mutate_vectors(a, d, rng);
    check_valid(a, w);
  }
}

TEST_CASE("binary tournament follows the feasibility-first rules") {
  Rng rng(6);
  Individual feas, infeas, cheap, dear;
  feas.result.feasible = true;
  feas.result.energy = 100;
  infeas.result.violation = 1;
  cheap.result.feasible = dear.result.feasible = true;
  cheap.result.energy = 3;
  dear.result.energy = 9;
  const std::vector<Individual> mixed{infeas, feas};
  const std::vector<Individual> pair{dear, cheap};
  for (int i = 0; i < 100; ++i) {
    CHECK(select(mixed, rng) == 1);
    CHECK(select(pair, rng) == 1);
  }
  const std::vector<Individual> same(5, cheap);
  CHECK(select(same, rng) < 5);
  CHECK_THROWS_AS(select(std::vector<Individual>{}, rng), DomainError);
}

TEST_CASE("risk repair raises the most exposed outputs until the cap holds") {
  const auto p = Platform::standard(3);
  const auto w0 = testing::chain(5, 2.36, 5.0);
  Workflow w = w0;
  w.set_deadline(1e6);
  w.set_risk_cap(0.35);
  const Evaluator eval(w, p, kCat, RiskModel{});
  const auto d = GeneDomain::full(kCat);
  Chromosome c{w.canonical_order(), {1, 0x11, 0x21, 0x31, 1}, {5, 5, 2, 5, 1}, {5, 5, 1, 5, 1}};
  auto r = eval(c);
  REQUIRE(r.risk > 0.35);
  repair_risk(c, r, eval, d);
  CHECK(r.risk <= 0.35);
  CHECK(r.feasible);
  CHECK(c.lev_cf[2] == 2);  // DES alone (risk ~0.31) fits, so it is left alone
  CHECK(c.lev_cf[0] == 1);
  CHECK(c.lev_ig[3] == 1);
  CHECK(r.risk == doctest::Approx(eval(c).risk));

  // Nothing to raise: the frozen domain is already at its strongest.
  GeneDomain weak;
  weak.cf_levels = {5};
  weak.ig_levels = {5};
  Chromosome z{w.canonical_order(), {1, 0x11, 0x21, 0x31, 1}, {5, 5, 5, 5, 5}, {5, 5, 5, 5, 5}};
  auto rz = eval(z);
  const auto before = z;
  repair_risk(z, rz, eval, weak);
  CHECK(z == before);

  // Cap not enforced: untouched.
  EvalOptions lax;
  lax.enforce_risk_cap = false;
  const Evaluator lax_eval(w, p, kCat, RiskModel{}, lax);
  Chromosome u{w.canonical_order(), {1, 0x11, 0x21, 0x31, 1}, {5, 5, 5, 5, 1}, {5, 5, 5, 5, 1}};
  auto ru = lax_eval(u);
  const auto ub = u;
  repair_risk(u, ru, lax_eval, d);
  CHECK(u == ub);
}

TEST_CASE("GA runs are deterministic and elitist") {
  const auto p = Platform::standard(3);
  const GeneratorConfig g;
  Workflow w = random_workflow(12, 0.3, g, 8);
  w.set_deadline(compute_deadline(w, p, kCat));
  const Evaluator eval(w, p, kCat, RiskModel{});
  GaParams params;
  params.pop_size = 20;
  params.iterations = 30;
  params.seed = 99;
  const auto d = GeneDomain::full(kCat);
  const auto a = run_ga(eval, params, d);
  const auto b = run_ga(eval, params, d);
  CHECK(a.best.chromosome == b.best.chromosome);
  CHECK(a.history.size() == 30);
  REQUIRE(b.history.size() == 30);
  for (std::size_t i = 0; i < a.history.size(); ++i) {
    CHECK(a.history[i].best_energy == b.history[i].best_energy);
  }
  for (std::size_t i = 1; i < a.history.size(); ++i) {
    EvaluationResult prev, cur;
    prev.feasible = a.history[i - 1].best_feasible;
    prev.energy = a.history[i - 1].best_energy;
    prev.violation = a.history[i - 1].best_violation;
    cur.feasible = a.history[i].best_feasible;
    cur.energy = a.history[i].best_energy;
    cur.violation = a.history[i].best_violation;
    CHECK(better(cur, prev));
  }
  check_valid(a.best.chromosome, w);

  params.iterations = 1;
  params.pop_size = 2;
  CHECK(run_ga(eval, params, d).history.size() == 1);

  GaParams bad;
  bad.pop_size = 1;
  CHECK_THROWS_AS(run_ga(eval, bad, d), DomainError);
  bad = GaParams{};
  bad.p_m = 1.5;
  CHECK_THROWS_AS(run_ga(eval, bad, d), DomainError);
  bad = GaParams{};
  bad.elitism = 40;
  CHECK_THROWS_AS(run_ga(eval, bad, d), DomainError);
  GeneDomain empty;
  CHECK_THROWS_AS(run_ga(eval, GaParams{}, empty), DomainError);
}
