#include "seeco/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "seeco/error.hpp"
#include "seeco/io.hpp"

namespace seeco {

using nlohmann::json;

namespace {

constexpr std::pair<SweepVariable, std::string_view> kVariables[] = {
    {SweepVariable::kPop, "pop"},         {SweepVariable::kIters, "iters"},
    {SweepVariable::kPc, "pc"},           {SweepVariable::kPm, "pm"},
    {SweepVariable::kRiskCap, "risk_cap"}, {SweepVariable::kLambda, "lambda"},
    {SweepVariable::kServers, "servers"}, {SweepVariable::kTasks, "tasks"},
};

int as_count(double v, const char* what) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9) {
    throw DomainError(std::string(what) + " sweep values must be integers");
  }
  return static_cast<int>(r);
}

struct Instance {
  Workflow workflow;
  Platform platform;
  RiskModel risk;
  GaParams ga;
};

}  // namespace

std::string_view to_string(SweepVariable v) {
  for (const auto& [k, name] : kVariables) {
    if (k == v) return name;
  }
  return "unknown";
}

std::optional<SweepVariable> parse_sweep_variable(std::string_view name) {
  for (const auto& [k, n] : kVariables) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<double> parse_range(std::string_view spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw ParseError("range must look like a:b:step");
  double a = 0, b = 0, step = 0;
  try {
    a = std::stod(std::string(spec.substr(0, c1)));
    b = std::stod(std::string(spec.substr(c1 + 1, c2 - c1 - 1)));
    step = std::stod(std::string(spec.substr(c2 + 1)));
  } catch (const std::exception&) {
    throw ParseError("range must look like a:b:step, got '" + std::string(spec) + "'");
  }
  if (!(step > 0.0) || b < a) throw ParseError("range needs a <= b and a positive step");
  const auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 12 decimals so 0.1:1.0:0.1 yields 0.3, not 0.30000000000000004.
    out.push_back(std::round((a + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

std::vector<double> default_sweep_values(SweepVariable v) {
  switch (v) {
    case SweepVariable::kPop: return parse_range("10:100:10");
    case SweepVariable::kIters: return parse_range("50:500:50");
    case SweepVariable::kPc:
    case SweepVariable::kPm: return parse_range("0.1:0.9:0.1");
    case SweepVariable::kRiskCap: return parse_range("0.1:1.0:0.1");
    case SweepVariable::kLambda: return parse_range("0.3:3.0:0.3");
    case SweepVariable::kServers: return parse_range("0:10:1");
    case SweepVariable::kTasks: return {10, 30, 50};
  }
  return {};
}

GaParams sweep_base_params(SweepVariable v) {
  GaParams p;
  switch (v) {
    case SweepVariable::kPop: p.iterations = 50; p.p_c = 0.2; p.p_m = 0.6; break;
    case SweepVariable::kIters: p.pop_size = 30; p.p_c = 0.2; p.p_m = 0.6; break;
    case SweepVariable::kPc: p.pop_size = 30; p.iterations = 100; p.p_m = 0.6; break;
    case SweepVariable::kPm: p.pop_size = 30; p.iterations = 100; p.p_c = 0.2; break;
    default: break;
  }
  return p;
}

void ExperimentConfig::validate() const {
  if (values.empty()) throw DomainError("sweep needs at least one value");
  if (seeds.empty()) throw DomainError("sweep needs at least one seed");
  if (strategies.empty()) throw DomainError("sweep needs at least one strategy");
  ga.validate();
  risk.validate();
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
  try {
    ExperimentConfig cfg;
    const std::string var = j.value("sweep", std::string("risk_cap"));
    const auto parsed = parse_sweep_variable(var);
    if (!parsed) throw DomainError("unknown sweep variable '" + var + "'");
    cfg.variable = *parsed;
    cfg.ga = sweep_base_params(cfg.variable);

    if (j.contains("values")) {
      cfg.values = j.at("values").get<std::vector<double>>();
    } else if (j.contains("range")) {
      cfg.values = parse_range(j.at("range").get<std::string>());
    } else {
      cfg.values = default_sweep_values(cfg.variable);
    }

    if (j.contains("workflow")) {
      const auto& w = j.at("workflow");
      if (w.is_string()) {
        cfg.workflow.path = w.get<std::string>();
      } else {
        cfg.workflow.tasks = w.value("tasks", cfg.workflow.tasks);
        cfg.workflow.density = w.value("density", cfg.workflow.density);
        cfg.workflow.seed = w.value("seed", cfg.workflow.seed);
        auto& g = cfg.workflow.generator;
        if (w.contains("data_range")) {
          g.data_min_mb = w.at("data_range").at(0).get<double>();
          g.data_max_mb = w.at("data_range").at(1).get<double>();
        }
        if (w.contains("workload_range")) {
          g.workload_min_gcycles = w.at("workload_range").at(0).get<double>();
          g.workload_max_gcycles = w.at("workload_range").at(1).get<double>();
        }
      }
    }
    if (j.contains("platform")) {
      const auto& p = j.at("platform");
      if (p.is_string()) {
        cfg.platform.path = p.get<std::string>();
      } else {
        cfg.platform.servers = p.value("servers", cfg.platform.servers);
      }
    }
    if (j.contains("catalog")) cfg.catalog = j.at("catalog").get<std::string>();

    if (j.contains("strategy")) {
      const auto& s = j.at("strategy");
      std::vector<std::string> names =
          s.is_array() ? s.get<std::vector<std::string>>() : std::vector{s.get<std::string>()};
      cfg.strategies.clear();
      for (const auto& name : names) {
        const auto st = parse_strategy(name);
        if (!st) throw DomainError("unknown strategy '" + name + "'");
        cfg.strategies.push_back(*st);
      }
    }
    cfg.ga.pop_size = j.value("pop", cfg.ga.pop_size);
    cfg.ga.iterations = j.value("iters", cfg.ga.iterations);
    cfg.ga.p_c = j.value("pc", cfg.ga.p_c);
    cfg.ga.p_m = j.value("pm", cfg.ga.p_m);
    cfg.ga.elitism = j.value("elitism", cfg.ga.elitism);
    cfg.ga.repair_risk = j.value("repair_risk", cfg.ga.repair_risk);
    if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("seed")) cfg.seeds = {j.at("seed").get<std::uint64_t>()};
    if (j.contains("risk_cap")) cfg.risk_cap = j.at("risk_cap").get<double>();
    cfg.risk.lambda_cf = j.value("lambda_cf", cfg.risk.lambda_cf);
    cfg.risk.lambda_ig = j.value("lambda_ig", cfg.risk.lambda_ig);
    cfg.literal_core_ratio = j.value("literal_core_ratio", cfg.literal_core_ratio);
    cfg.threads = j.value("threads", cfg.threads);
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("summary")) cfg.summary_out = j.at("summary").get<std::string>();
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw ParseError(std::string("experiment config: ") + e.what());
  }
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SEECO_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const SecurityCatalog cat = cfg.catalog ? load_catalog(*cfg.catalog) : SecurityCatalog::standard();
  const Platform base_platform =
      cfg.platform.path ? load_platform(*cfg.platform.path) : Platform::standard(cfg.platform.servers);

  auto make_workflow = [&](int tasks) {
    Workflow w = cfg.workflow.path ? load_workflow(*cfg.workflow.path)
                                   : random_workflow(tasks, cfg.workflow.density,
                                                     cfg.workflow.generator, cfg.workflow.seed);
    if (!cfg.workflow.path || w.deadline() <= 0.0) {
      w.set_deadline(compute_deadline(w, base_platform, cat, cfg.literal_core_ratio));
    }
    if (cfg.risk_cap) w.set_risk_cap(*cfg.risk_cap);
    return w;
  };
  const Workflow base_workflow = make_workflow(cfg.workflow.tasks);

  std::vector<Instance> instances;
  for (const double v : cfg.values) {
    Instance inst{base_workflow, base_platform, cfg.risk, cfg.ga};
    switch (cfg.variable) {
      case SweepVariable::kPop: inst.ga.pop_size = as_count(v, "pop"); break;
      case SweepVariable::kIters: inst.ga.iterations = as_count(v, "iters"); break;
      case SweepVariable::kPc: inst.ga.p_c = v; break;
      case SweepVariable::kPm: inst.ga.p_m = v; break;
      case SweepVariable::kRiskCap: inst.workflow.set_risk_cap(v); break;
      case SweepVariable::kLambda:
        inst.risk.lambda_cf = v;
        inst.risk.lambda_ig = v;
        break;
      case SweepVariable::kServers: {
        const int m = as_count(v, "servers");
        if (cfg.platform.path) {
          if (m < 0 || m > base_platform.ap_count()) {
            throw DomainError("server sweep exceeds the access points in the platform file");
          }
          std::vector<AccessPoint> aps(base_platform.access_points().begin(),
                                       base_platform.access_points().begin() + m);
          inst.platform = Platform(base_platform.device(), std::move(aps),
                                   base_platform.inter_ap_bandwidth());
        } else {
          inst.platform = Platform::standard(m);
        }
        break;
      }
      case SweepVariable::kTasks:
        if (cfg.workflow.path) throw DomainError("task-count sweeps need a generated workflow");
        inst.workflow = make_workflow(as_count(v, "tasks"));
        break;
    }
    inst.ga.validate();
    instances.push_back(std::move(inst));
  }

  const std::size_t ns = cfg.strategies.size();
  const std::size_t nseed = cfg.seeds.size();
  const std::size_t jobs = instances.size() * ns * nseed;
  std::vector<SweepRow> rows(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t vi = job / (ns * nseed);
      const std::size_t si = (job / nseed) % ns;
      const std::size_t ki = job % nseed;
      try {
        const Instance& inst = instances[vi];
        GaParams ga = inst.ga;
        ga.seed = cfg.seeds[ki];
        const Solution sol = solve(cfg.strategies[si], inst.workflow, inst.platform, cat,
                                   inst.risk, ga, cfg.literal_core_ratio);
        const auto& r = sol.best.result;
        rows[job] = SweepRow{cfg.values[vi], ga.seed,       cfg.strategies[si], r.energy,
                             r.makespan,     r.risk,        r.violation,        r.feasible};
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(resolve_thread_count(cfg.threads), static_cast<int>(jobs));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SweepSummary> summarize(const std::vector<SweepRow>& rows) {
  std::vector<SweepSummary> out;
  for (const auto& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SweepSummary& s) {
      return s.value == r.value && s.strategy == r.strategy;
    });
    if (it == out.end()) {
      out.push_back(SweepSummary{r.value, r.strategy});
      it = std::prev(out.end());
    }
    it->runs += 1;
    it->mean_energy += r.energy;
    it->mean_makespan += r.makespan;
    it->mean_risk += r.risk;
    it->mean_violation += r.violation;
    it->feasible_rate += r.feasible ? 1.0 : 0.0;
  }
  for (auto& s : out) {
    const double n = s.runs;
    s.mean_energy /= n;
    s.mean_makespan /= n;
    s.mean_risk /= n;
    s.mean_violation /= n;
    s.feasible_rate /= n;
  }
  return out;
}

void write_sweep_csv(std::ostream& os, SweepVariable v, const std::vector<SweepRow>& rows) {
  os << "variable,value,seed,strategy,energy,makespan,risk,violation,feasible\n";
  for (const auto& r : rows) {
    os << to_string(v) << ',' << format_number(r.value) << ',' << r.seed << ','
       << to_string(r.strategy) << ',' << format_number(r.energy) << ','
       << format_number(r.makespan) << ',' << format_number(r.risk) << ','
       << format_number(r.violation) << ',' << (r.feasible ? "true" : "false") << '\n';
  }
}

void write_sweep_summary_csv(std::ostream& os, SweepVariable v,
                             const std::vector<SweepSummary>& rows) {
  os << "variable,value,strategy,runs,mean_energy,mean_makespan,mean_risk,mean_violation,"
        "feasible_rate\n";
  for (const auto& s : rows) {
    os << to_string(v) << ',' << format_number(s.value) << ',' << to_string(s.strategy) << ','
       << s.runs << ',' << format_number(s.mean_energy) << ',' << format_number(s.mean_makespan)
       << ',' << format_number(s.mean_risk) << ',' << format_number(s.mean_violation) << ','
       << format_number(s.feasible_rate) << '\n';
  }
}

}  // namespace seeco
