#include <doctest.h>

#include <filesystem>
#include <vector>

#include "helpers.hpp"
#include "seeco/error.hpp"
#include "seeco/io.hpp"
#include "seeco/platform.hpp"
#include "seeco/security_model.hpp"
#include "seeco/workflow.hpp"

using namespace seeco;

TEST_CASE("predecessors and successors") {
  const auto c = testing::chain(3);
  CHECK(c.predecessors(0).empty());
  CHECK(c.predecessors(2) == std::vector<int>{1});
  const auto d = testing::diamond();
  CHECK(d.predecessors(3) == std::vector<int>{1, 2});
  CHECK(d.successors(0) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(d.predecessors(4), DomainError);
}

TEST_CASE("order validity") {
  const auto c = testing::chain(3);
  CHECK(is_valid_order(c, std::vector<int>{0, 1, 2}));
  CHECK_FALSE(is_valid_order(c, std::vector<int>{0, 2, 1}));
  const auto d = testing::diamond();
  CHECK(is_valid_order(d, std::vector<int>{0, 2, 1, 3}));
  CHECK(is_valid_order(d, std::vector<int>{0, 1, 2, 3}));
  CHECK_THROWS_AS(is_valid_order(d, std::vector<int>{0, 1, 1, 3}), DomainError);
  CHECK_THROWS_AS(is_valid_order(d, std::vector<int>{0, 1, 2}), DomainError);
  CHECK(d.canonical_order() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("construction rejects malformed graphs") {
  const std::vector<Task> three(3, Task{1, 1, 1});
  CHECK_THROWS_AS(Workflow({}, {}), ValidationError);
  CHECK_THROWS_AS(Workflow(three, {{0, 1}, {1, 2}, {2, 1}}), ValidationError);  // cycle
  CHECK_THROWS_AS(Workflow(three, {{0, 2}, {1, 2}}), ValidationError);          // two entries
  CHECK_THROWS_AS(Workflow(three, {{0, 1}, {0, 2}}), ValidationError);          // two exits
  CHECK_THROWS_AS(Workflow(three, {{0, 1}, {1, 2}, {0, 1}}), ValidationError);  // duplicate
  CHECK_THROWS_AS(Workflow(three, {{0, 1}, {1, 3}}), ValidationError);
  CHECK_THROWS_AS(Workflow(three, {{0, 0}, {0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(Workflow({{-1, 1, 1}, {1, 1, 1}}, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(Workflow(three, {{0, 1}, {1, 2}}, -1.0), ValidationError);
  CHECK_THROWS_AS(Workflow(three, {{0, 1}, {1, 2}}, 1.0, 1.5), ValidationError);
  CHECK_NOTHROW(Workflow({Task{1, 1, 1}}, {}));
}

TEST_CASE("random workflows keep the structural invariants") {
  const GeneratorConfig g;
  const auto two = random_workflow(2, 0.7, g, 9);
  CHECK(two.edges() == std::vector<Edge>{{0, 1}});

  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto w = random_workflow(10, 0.3, g, seed);
    CHECK(w.size() == 10);
    CHECK(w.canonical_order().size() == 10);
    for (int i = 1; i < 10; ++i) CHECK_FALSE(w.predecessors(i).empty());
    for (int i = 0; i < 9; ++i) CHECK_FALSE(w.successors(i).empty());
    for (const auto& t : w.tasks()) {
      CHECK(t.alpha_mb >= g.data_min_mb);
      CHECK(t.beta_mb <= g.data_max_mb);
      CHECK(t.workload_gcycles >= g.workload_min_gcycles);
      CHECK(t.workload_gcycles <= g.workload_max_gcycles);
    }
  }
  CHECK(random_workflow(10, 0.3, g, 42) == random_workflow(10, 0.3, g, 42));
  CHECK_FALSE(random_workflow(10, 0.3, g, 42) == random_workflow(10, 0.3, g, 43));
  CHECK_THROWS_AS(random_workflow(1, 0.3, g, 1), DomainError);
  CHECK_THROWS_AS(random_workflow(5, 1.3, g, 1), DomainError);
  GeneratorConfig bad;
  bad.data_min_mb = 60.0;
  CHECK_THROWS_AS(random_workflow(5, 0.3, bad, 1), DomainError);
}

TEST_CASE("deadline is the midpoint of the greedy and serial makespans") {
  const auto cat = SecurityCatalog::standard();
  const Workflow one({Task{1.0, 1.0, 2.36}}, {});
  const auto b = makespan_bounds(one, Platform::standard(3), cat);
  CHECK(b.min_s == doctest::Approx(1.0));
  CHECK(b.max_s == doctest::Approx(1.0));
  CHECK(compute_deadline(one, Platform::standard(3), cat) == doctest::Approx(1.0));

  const auto k = testing::chain(6, 4.72);
  CHECK(compute_deadline(k, Platform::standard(0), cat) == doctest::Approx(6 * 2.0));

  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto w = testing::random_dag(12, rng);
    const auto bb = makespan_bounds(w, Platform::standard(3), cat);
    CHECK(bb.min_s <= bb.max_s);
    CHECK(compute_deadline(w, Platform::standard(3), cat) ==
          doctest::Approx(0.5 * (bb.min_s + bb.max_s)));
  }
}

TEST_CASE("workflow files round-trip and reject bad graphs") {
  const auto dir = std::filesystem::temp_directory_path() / "seeco_workflow_test";
  std::filesystem::create_directories(dir);
  auto w = random_workflow(12, 0.4, GeneratorConfig{}, 5);
  w.set_deadline(123.456789012345);
  save_workflow(w, dir / "w.json");
  CHECK(load_workflow(dir / "w.json") == w);

  CHECK_THROWS_AS(parse_workflow(R"({"tasks":[{"id":0,"alpha_mb":1,"beta_mb":1,"workload_gcycles":1},
      {"id":1,"alpha_mb":1,"beta_mb":1,"workload_gcycles":1},
      {"id":2,"alpha_mb":1,"beta_mb":1,"workload_gcycles":1}],
      "edges":[[0,1],[1,2],[2,1]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_workflow(R"({"tasks":[{"id":0,"alpha_mb":1,"beta_mb":1,"workload_gcycles":1},
      {"id":1,"alpha_mb":1,"beta_mb":1,"workload_gcycles":1},
      {"id":2,"alpha_mb":1,"beta_mb":1,"workload_gcycles":1}],
      "edges":[[0,2],[1,2]]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_workflow("{not json"), ParseError);
  CHECK_THROWS_AS(load_workflow(dir / "missing.json"), IoError);
  std::filesystem::remove_all(dir);
}
