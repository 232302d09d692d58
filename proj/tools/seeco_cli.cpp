// seeco command-line front end. Talks to the library only through seeco.h.
//
//   seeco generate --tasks 30 --seed 7 --out wf.json
//   seeco solve --workflow wf.json --strategy seeco --seed 1 --schedule sched.csv
//   seeco sweep --sweep risk_cap --range 0.1:1.0:0.1 --strategy seeco,local --out rows.csv

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seeco/seeco.h"

namespace {

struct CatalogDeleter {
  void operator()(seeco_catalog* p) const { seeco_catalog_free(p); }
};
struct PlatformDeleter {
  void operator()(seeco_platform* p) const { seeco_platform_free(p); }
};
struct WorkflowDeleter {
  void operator()(seeco_workflow* p) const { seeco_workflow_free(p); }
};
struct SolutionDeleter {
  void operator()(seeco_solution* p) const { seeco_solution_free(p); }
};
using CatalogPtr = std::unique_ptr<seeco_catalog, CatalogDeleter>;
using PlatformPtr = std::unique_ptr<seeco_platform, PlatformDeleter>;
using WorkflowPtr = std::unique_ptr<seeco_workflow, WorkflowDeleter>;
using SolutionPtr = std::unique_ptr<seeco_solution, SolutionDeleter>;

class CliFailure : public std::runtime_error {
 public:
  CliFailure(seeco_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
  seeco_status status;
};

void check(seeco_status s, const char* context) {
  if (s != SEECO_OK) {
    throw CliFailure(s, std::string(context) + ": " + seeco_status_string(s) + ": " +
                            seeco_last_error());
  }
}

CatalogPtr open_catalog(const std::string& path) {
  seeco_catalog* raw = nullptr;
  check(path.empty() ? seeco_catalog_standard(&raw) : seeco_catalog_load(path.c_str(), &raw),
        "catalog");
  return CatalogPtr(raw);
}

PlatformPtr open_platform(const std::string& path, int servers) {
  seeco_platform* raw = nullptr;
  check(path.empty() ? seeco_platform_standard(servers, &raw)
                     : seeco_platform_load(path.c_str(), &raw),
        "platform");
  return PlatformPtr(raw);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "1,2,5" or "1:10" (inclusive).
std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> out;
  if (const auto colon = s.find(':'); colon != std::string::npos) {
    const auto a = std::stoull(s.substr(0, colon));
    const auto b = std::stoull(s.substr(colon + 1));
    for (auto v = a; v <= b; ++v) out.push_back(v);
  } else {
    for (const auto& item : split_list(s)) out.push_back(std::stoull(item));
  }
  if (out.empty()) throw CLI::ValidationError("--seeds", "no seeds given");
  return out;
}

struct GenerateArgs {
  int tasks = 0;
  double density = 0.3;
  std::uint64_t seed = 1;
  seeco_generator_options gen{};
  std::vector<double> data_range;
  std::vector<double> workload_range;
  std::string platform;
  int servers = 3;
  std::string catalog;
  bool literal_core_ratio = true;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  seeco_generator_options opts = a.gen;
  if (a.data_range.size() == 2) {
    opts.data_min_mb = a.data_range[0];
    opts.data_max_mb = a.data_range[1];
  }
  if (a.workload_range.size() == 2) {
    opts.workload_min_gcycles = a.workload_range[0];
    opts.workload_max_gcycles = a.workload_range[1];
  }
  seeco_workflow* raw = nullptr;
  check(seeco_workflow_generate_with(a.tasks, a.density, a.seed, &opts, &raw), "generate");
  WorkflowPtr wf(raw);
  const auto platform = open_platform(a.platform, a.servers);
  const auto catalog = open_catalog(a.catalog);
  double deadline = 0.0;
  check(seeco_workflow_compute_deadline(wf.get(), platform.get(), catalog.get(),
                                        a.literal_core_ratio ? 1 : 0, &deadline),
        "deadline");
  check(seeco_workflow_set_deadline(wf.get(), deadline), "deadline");
  check(seeco_workflow_save(wf.get(), a.out.c_str()), "save");
  std::printf("tasks=%zu edges=%zu deadline_s=%.6f risk_cap=%.3f -> %s\n",
              seeco_workflow_task_count(wf.get()), seeco_workflow_edge_count(wf.get()), deadline,
              opts.risk_cap, a.out.c_str());
  return 0;
}

struct SolveArgs {
  std::string workflow;
  std::string platform;
  int servers = 3;
  std::string catalog;
  std::string strategy = "seeco";
  seeco_ga_params ga{};
  seeco_solve_options opts{};
  bool literal_core_ratio = true;
  double risk_cap = -1.0;
  double deadline = -1.0;
  std::string out;
  std::string schedule;
  std::string history;
};

int run_solve(SolveArgs a) {
  seeco_workflow* raw = nullptr;
  check(seeco_workflow_load(a.workflow.c_str(), &raw), "workflow");
  WorkflowPtr wf(raw);
  const auto platform = open_platform(a.platform, a.servers);
  const auto catalog = open_catalog(a.catalog);
  if (a.risk_cap >= 0.0) check(seeco_workflow_set_risk_cap(wf.get(), a.risk_cap), "risk cap");
  if (a.deadline >= 0.0) {
    check(seeco_workflow_set_deadline(wf.get(), a.deadline), "deadline");
  } else if (seeco_workflow_deadline(wf.get()) <= 0.0) {
    double d = 0.0;
    check(seeco_workflow_compute_deadline(wf.get(), platform.get(), catalog.get(),
                                          a.literal_core_ratio ? 1 : 0, &d),
          "deadline");
    check(seeco_workflow_set_deadline(wf.get(), d), "deadline");
  }
  seeco_strategy strategy{};
  check(seeco_strategy_parse(a.strategy.c_str(), &strategy), "strategy");
  a.opts.literal_core_ratio = a.literal_core_ratio ? 1 : 0;

  seeco_solution* sraw = nullptr;
  check(seeco_solve(wf.get(), platform.get(), catalog.get(), strategy, &a.ga, &a.opts, &sraw),
        "solve");
  SolutionPtr sol(sraw);
  seeco_summary s{};
  check(seeco_solution_summary(sol.get(), &s), "summary");
  std::printf("strategy=%s energy_j=%.6f makespan_s=%.6f risk=%.6f violation=%.6f feasible=%s\n",
              a.strategy.c_str(), s.energy_j, s.makespan_s, s.risk, s.violation,
              s.feasible ? "true" : "false");
  if (!a.out.empty()) check(seeco_solution_write_summary_csv(sol.get(), a.out.c_str()), "out");
  if (!a.schedule.empty()) {
    check(seeco_solution_write_schedule_csv(sol.get(), a.schedule.c_str()), "schedule");
  }
  if (!a.history.empty()) {
    check(seeco_solution_write_history_csv(sol.get(), a.history.c_str()), "history");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security- and energy-aware workflow offloading for mobile edge computing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(seeco_version()));

  GenerateArgs gen;
  seeco_generator_options_default(&gen.gen);
  auto* g = app.add_subcommand("generate", "Generate a random workflow with its deadline");
  g->add_option("-n,--tasks", gen.tasks, "Number of tasks (>= 2)")->required();
  g->add_option("--density", gen.density, "Forward edge probability")->capture_default_str();
  g->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  g->add_option("--risk-cap", gen.gen.risk_cap, "Workflow risk cap")->capture_default_str();
  g->add_option("--data-range", gen.data_range, "Input/output size range in MB: lo hi")
      ->expected(2);
  g->add_option("--workload-range", gen.workload_range, "Workload range in giga-cycles: lo hi")
      ->expected(2);
  g->add_option("--platform", gen.platform, "Platform JSON used for the deadline");
  g->add_option("--servers", gen.servers, "Edge servers of the built-in platform")
      ->capture_default_str();
  g->add_option("--catalog", gen.catalog, "Cipher catalog JSON");
  g->add_option("--literal-core-ratio", gen.literal_core_ratio, "Core ratio in decryption cost {true,false}")
      ->capture_default_str();
  g->add_option("-o,--out", gen.out, "Output workflow JSON")->required();

  SolveArgs sol;
  seeco_ga_params_default(&sol.ga);
  seeco_solve_options_default(&sol.opts);
  auto* s = app.add_subcommand("solve", "Solve one workflow with one strategy");
  s->add_option("--workflow", sol.workflow, "Workflow JSON")->required();
  s->add_option("--platform", sol.platform, "Platform JSON (default: built-in)");
  s->add_option("--servers", sol.servers, "Edge servers of the built-in platform")
      ->capture_default_str();
  s->add_option("--catalog", sol.catalog, "Cipher catalog JSON");
  s->add_option("--strategy", sol.strategy, "local|max|min|confi|integ|seeco")
      ->capture_default_str();
  s->add_option("--pop", sol.ga.pop_size, "Population size")->capture_default_str();
  s->add_option("--iters", sol.ga.iterations, "Generations")->capture_default_str();
  s->add_option("--pc", sol.ga.p_c, "Crossover probability")->capture_default_str();
  s->add_option("--pm", sol.ga.p_m, "Mutation probability")->capture_default_str();
  s->add_option("--elitism", sol.ga.elitism, "Elite individuals kept")->capture_default_str();
  s->add_option("--repair-risk", sol.ga.repair_risk, "Raise exposed levels to meet the cap {1,0}")
      ->capture_default_str();
  s->add_option("--seed", sol.ga.seed, "GA seed")->capture_default_str();
  s->add_option("--lambda-cf", sol.opts.lambda_cf, "Confidentiality risk coefficient")
      ->capture_default_str();
  s->add_option("--lambda-ig", sol.opts.lambda_ig, "Integrity risk coefficient")
      ->capture_default_str();
  s->add_option("--risk-cap", sol.risk_cap, "Override the workflow risk cap");
  s->add_option("--deadline", sol.deadline, "Override the workflow deadline (s)");
  s->add_option("--literal-core-ratio", sol.literal_core_ratio, "Core ratio in decryption cost {true,false}")
      ->capture_default_str();
  s->add_option("-o,--out", sol.out, "Summary CSV");
  s->add_option("--schedule", sol.schedule, "Per-task timeline CSV");
  s->add_option("--history", sol.history, "Per-generation history CSV");

  std::string config_path, sweep_var, range, strategies, seeds, workflow, platform, catalog, out,
      summary;
  int repair = 1;
  int tasks = 0, servers = 0, pop = 0, iters = 0, threads = 0, elitism = 0;
  double density = 0, pc = 0, pm = 0, risk_cap = 0, lambda_cf = 0, lambda_ig = 0;
  std::uint64_t workflow_seed = 0;
  bool literal = true;
  auto* w = app.add_subcommand("sweep", "Parameter sweep over seeds and strategies");
  auto* o_config = w->add_option("--config", config_path, "JSON config mirroring these flags");
  auto* o_sweep = w->add_option("--sweep", sweep_var,
                                "pop|iters|pc|pm|risk_cap|lambda|servers|tasks");
  auto* o_range = w->add_option("--range", range, "a:b:step");
  auto* o_strategy = w->add_option("--strategy", strategies, "Comma-separated strategies");
  auto* o_seeds = w->add_option("--seeds,--seed", seeds, "GA seeds: 1,2,3 or 1:10");
  auto* o_workflow = w->add_option("--workflow", workflow, "Workflow JSON (else generated)");
  auto* o_tasks = w->add_option("--tasks", tasks, "Generated workflow size");
  auto* o_density = w->add_option("--density", density, "Generated workflow edge density");
  auto* o_wseed = w->add_option("--workflow-seed", workflow_seed, "Generator seed");
  auto* o_platform = w->add_option("--platform", platform, "Platform JSON (else built-in)");
  auto* o_servers = w->add_option("--servers", servers, "Edge servers of the built-in platform");
  auto* o_catalog = w->add_option("--catalog", catalog, "Cipher catalog JSON");
  auto* o_pop = w->add_option("--pop", pop, "Population size");
  auto* o_iters = w->add_option("--iters", iters, "Generations");
  auto* o_pc = w->add_option("--pc", pc, "Crossover probability");
  auto* o_pm = w->add_option("--pm", pm, "Mutation probability");
  auto* o_elitism = w->add_option("--elitism", elitism, "Elite individuals kept");
  auto* o_repair = w->add_option("--repair-risk", repair, "Raise exposed levels to meet the cap {1,0}");
  auto* o_cap = w->add_option("--risk-cap", risk_cap, "Risk cap for every run");
  auto* o_lcf = w->add_option("--lambda-cf", lambda_cf, "Confidentiality risk coefficient");
  auto* o_lig = w->add_option("--lambda-ig", lambda_ig, "Integrity risk coefficient");
  auto* o_literal = w->add_option("--literal-core-ratio", literal, "{true,false}");
  auto* o_threads = w->add_option("--threads", threads, "Worker threads (default SEECO_THREADS)");
  auto* o_out = w->add_option("-o,--out", out, "Long-format rows CSV");
  w->add_option("--summary", summary, "Mean-over-seeds CSV (default <out>_summary.csv)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return run_generate(gen);
    if (s->parsed()) return run_solve(sol);

    nlohmann::json cfg = nlohmann::json::object();
    if (*o_config) {
      std::ifstream in(config_path);
      if (!in) {
        std::cerr << "sweep: cannot open " << config_path << "\n";
        return SEECO_ERR_IO;
      }
      try {
        cfg = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        std::cerr << "sweep: " << config_path << ": " << e.what() << "\n";
        return SEECO_ERR_PARSE;
      }
    }
    if (*o_sweep) cfg["sweep"] = sweep_var;
    if (*o_range) cfg["range"] = range;
    if (*o_strategy) cfg["strategy"] = split_list(strategies);
    if (*o_seeds) cfg["seeds"] = parse_seeds(seeds);
    if (*o_workflow) cfg["workflow"] = workflow;
    if (*o_tasks || *o_density || *o_wseed) {
      if (!cfg.contains("workflow") || !cfg["workflow"].is_object()) {
        cfg["workflow"] = nlohmann::json::object();
      }
      if (*o_tasks) cfg["workflow"]["tasks"] = tasks;
      if (*o_density) cfg["workflow"]["density"] = density;
      if (*o_wseed) cfg["workflow"]["seed"] = workflow_seed;
    }
    if (*o_platform) cfg["platform"] = platform;
    if (*o_servers) cfg["platform"] = {{"servers", servers}};
    if (*o_catalog) cfg["catalog"] = catalog;
    if (*o_pop) cfg["pop"] = pop;
    if (*o_iters) cfg["iters"] = iters;
    if (*o_pc) cfg["pc"] = pc;
    if (*o_pm) cfg["pm"] = pm;
    if (*o_elitism) cfg["elitism"] = elitism;
    if (*o_repair) cfg["repair_risk"] = repair != 0;
    if (*o_cap) cfg["risk_cap"] = risk_cap;
    if (*o_lcf) cfg["lambda_cf"] = lambda_cf;
    if (*o_lig) cfg["lambda_ig"] = lambda_ig;
    if (*o_literal) cfg["literal_core_ratio"] = literal;
    if (*o_threads) cfg["threads"] = threads;
    if (*o_out) cfg["out"] = out;
    check(seeco_sweep_run(cfg.dump().c_str(), nullptr, summary.empty() ? nullptr : summary.c_str()),
          "sweep");
    std::printf("sweep %s done -> %s\n", cfg.value("sweep", std::string("risk_cap")).c_str(),
                cfg.value("out", std::string("")).c_str());
    return 0;
  } catch (const CliFailure& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return SEECO_ERR_INTERNAL;
  }
}
