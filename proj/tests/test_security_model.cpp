#include <doctest.h>

#include <cmath>
#include <vector>

#include "seeco/error.hpp"
#include "seeco/rng.hpp"
#include "seeco/security_model.hpp"

using namespace seeco;

TEST_CASE("speed_from_cost inverts the reference cost") {
  CHECK(speed_from_cost(8.50, 100.0) == doctest::Approx(11.76).epsilon(0.001));
  CHECK(speed_from_cost(1.32, 100.0) == doctest::Approx(75.76).epsilon(0.001));
  CHECK(speed_from_cost(100.0, 100.0) == 1.0);
  CHECK_THROWS_AS(speed_from_cost(0.0, 100.0), DomainError);
  CHECK_THROWS_AS(speed_from_cost(1.0, -1.0), DomainError);
}

TEST_CASE("level_from_cost is relative to the slowest algorithm") {
  CHECK(std::abs(level_from_cost(7.23, 8.50) - 0.85) <= 0.01);
  CHECK(level_from_cost(8.50, 8.50) == 1.0);
  CHECK(std::abs(level_from_cost(0.58, 1.32) - 0.44) <= 0.01);
  CHECK_THROWS_AS(level_from_cost(9.0, 8.5), DomainError);
  CHECK_THROWS_AS(level_from_cost(0.0, 8.5), DomainError);
}

TEST_CASE("overhead at the reference machine and under scaling") {
  const auto cat = SecurityCatalog::standard();
  const auto& rc4 = cat.get(Service::kConfidentiality, 5);
  const auto& idea = cat.get(Service::kConfidentiality, 1);
  CHECK(overhead(rc4, 1, 2.2, 100.0) == doctest::Approx(2.69).epsilon(0.005));
  // Oracle: 100 * 2.2 / (11.76 * 2.2 * 2)
  CHECK(overhead(idea, 2, 2.2, 100.0) == doctest::Approx(100.0 / 11.76 / 2.0).epsilon(1e-12));
  CHECK(std::abs(overhead(idea, 2, 2.2, 100.0) - 4.25) < 0.01);
  CHECK(overhead(idea, 7, 3.1, 0.0) == 0.0);
  CHECK_THROWS_AS(overhead(idea, 0, 2.2, 1.0), DomainError);
  CHECK_THROWS_AS(overhead(idea, 1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(overhead(idea, 1, 2.2, -1.0), DomainError);
}

TEST_CASE("overhead scales linearly in data and inversely in cores and frequency") {
  const auto cat = SecurityCatalog::standard();
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto s = rng.bernoulli(0.5) ? Service::kConfidentiality : Service::kIntegrity;
    const auto& a = cat.get(s, static_cast<int>(rng.uniform_int(1, 5)));
    const int c = static_cast<int>(rng.uniform_int(1, 16));
    const double f = rng.uniform_real(0.5, 4.0);
    const double d = rng.uniform_real(0.1, 500.0);
    const double k = rng.uniform_real(0.1, 10.0);
    const double base = overhead(a, c, f, d);
    CHECK(overhead(a, c, f, k * d) == doctest::Approx(k * base).epsilon(1e-12));
    CHECK(overhead(a, 3 * c, f, d) == doctest::Approx(base / 3.0).epsilon(1e-12));
    CHECK(overhead(a, c, k * f, d) == doctest::Approx(base / k).epsilon(1e-12));
  }
}

TEST_CASE("standard catalog levels follow cost order within each service") {
  const auto cat = SecurityCatalog::standard();
  for (auto s : {Service::kConfidentiality, Service::kIntegrity}) {
    const auto& algs = cat.algorithms(s);
    REQUIRE(algs.size() == 5);
    for (const auto& a : algs) {
      for (const auto& b : algs) {
        if (a.ref_cost() > b.ref_cost()) CHECK(a.level > b.level);
      }
    }
    CHECK(cat.get(s, cat.strongest_id(s)).level == 1.0);
  }
  CHECK(cat.get(Service::kConfidentiality, cat.weakest_id(Service::kConfidentiality)).name == "RC4");
  CHECK(cat.get(Service::kIntegrity, cat.weakest_id(Service::kIntegrity)).name == "MD5");
  CHECK_THROWS_AS(cat.get(Service::kIntegrity, 6), DomainError);
}

TEST_CASE("catalog rejects broken lists") {
  auto cf = SecurityCatalog::standard().algorithms(Service::kConfidentiality);
  auto ig = SecurityCatalog::standard().algorithms(Service::kIntegrity);
  auto short_cf = cf;
  short_cf.pop_back();
  CHECK_THROWS_AS(SecurityCatalog(short_cf, ig), ValidationError);
  auto dup = cf;
  dup[1].id = 1;
  CHECK_THROWS_AS(SecurityCatalog(dup, ig), ValidationError);
  auto no_top = cf;
  no_top[0].level = 0.99;
  CHECK_THROWS_AS(SecurityCatalog(no_top, ig), ValidationError);
  auto inverted = cf;
  inverted[4].level = 0.9;  // RC4 faster than DES but stronger
  CHECK_THROWS_AS(SecurityCatalog(inverted, ig), ValidationError);
  CHECK_THROWS_AS(SecurityCatalog(ig, cf), ValidationError);
}

TEST_CASE("per-service Poisson risk") {
  CHECK(task_service_risk(1.0, 2.5) == 0.0);
  CHECK(task_service_risk(0.0, 2.5) == doctest::Approx(0.917915).epsilon(1e-6));
  CHECK(task_service_risk(0.5, 0.0) == 0.0);
  CHECK_THROWS_AS(task_service_risk(1.1, 2.5), DomainError);
  CHECK_THROWS_AS(task_service_risk(-0.1, 2.5), DomainError);
  CHECK_THROWS_AS(task_service_risk(0.5, -1.0), DomainError);
  for (int i = 0; i < 10; ++i) {
    const double sl = 0.1 * i;
    CHECK(task_service_risk(sl, 2.5) > task_service_risk(sl + 0.05, 2.5));
    CHECK(task_service_risk(sl, 2.5) > task_service_risk(sl, 1.8));
  }
}

TEST_CASE("task and workflow risk aggregate survivals") {
  const RiskModel m;
  CHECK(task_risk(1.0, 1.0, m) == 0.0);
  CHECK(task_risk(1.0, 0.0, m) == doctest::Approx(0.834701).epsilon(1e-6));
  CHECK(task_risk(0.0, 0.0, m) == doctest::Approx(0.986431).epsilon(1e-6));

  RiskModel with_au = m;
  with_au.include_authentication = true;
  with_au.lambda_au = 1.0;
  with_au.level_au = 0.5;
  CHECK(task_risk(1.0, 1.0, with_au) == doctest::Approx(1.0 - std::exp(-0.5)));

  const std::vector<double> one{0.3};
  CHECK(workflow_risk(one) == doctest::Approx(0.3));
  CHECK(workflow_risk(std::vector<double>{}) == 0.0);
  CHECK(workflow_risk(std::vector<double>{0.5, 0.5}) == doctest::Approx(0.75));
  CHECK(workflow_risk(std::vector<double>{0.1, 0.2, 0.3}) ==
        doctest::Approx(workflow_risk(std::vector<double>{0.3, 0.1, 0.2})));
  CHECK(workflow_risk(std::vector<double>{0.1, 0.3}) > workflow_risk(std::vector<double>{0.1, 0.2}));
  CHECK_THROWS_AS(workflow_risk(std::vector<double>{1.5}), DomainError);
}
