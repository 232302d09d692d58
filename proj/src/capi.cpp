#include "seeco/seeco.h"

#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "seeco/baselines.hpp"
#include "seeco/error.hpp"
#include "seeco/experiment.hpp"
#include "seeco/io.hpp"

struct seeco_catalog {
  seeco::SecurityCatalog value;
};

struct seeco_platform {
  seeco::Platform value;
};

struct seeco_workflow {
  seeco::Workflow value;
};

struct seeco_solution {
  seeco::Solution value;
  seeco::Workflow workflow;  // deadline and cap the solution was judged against
};

namespace {

thread_local std::string g_last_error;

seeco_status fail(seeco_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class F>
seeco_status guarded(F&& f) {
  try {
    f();
    return SEECO_OK;
  } catch (const seeco::Error& e) {
    return fail(static_cast<seeco_status>(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SEECO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SEECO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SEECO_ERR_INTERNAL, "unknown error");
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw seeco::Error(seeco::ErrorKind::kInvalidArgument, what);
}

seeco::GaParams to_params(const seeco_ga_params* p) {
  seeco::GaParams out;
  if (p) {
    out.pop_size = p->pop_size;
    out.iterations = p->iterations;
    out.p_c = p->p_c;
    out.p_m = p->p_m;
    out.seed = p->seed;
    out.elitism = p->elitism;
    out.repair_risk = p->repair_risk != 0;
  }
  return out;
}

template <class Write>
void write_file(const char* path, Write&& write) {
  require(path != nullptr, "path is null");
  std::ostringstream os;
  write(os);
  seeco::write_text_file(path, os.str());
}

}  // namespace

extern "C" {

const char* seeco_version(void) { return "1.0.0"; }

const char* seeco_last_error(void) { return g_last_error.c_str(); }

const char* seeco_status_string(seeco_status status) {
  switch (status) {
    case SEECO_OK: return "ok";
    case SEECO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SEECO_ERR_DOMAIN: return "domain error";
    case SEECO_ERR_IO: return "i/o error";
    case SEECO_ERR_PARSE: return "parse error";
    case SEECO_ERR_VALIDATION: return "validation error";
    case SEECO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

seeco_status seeco_strategy_parse(const char* name, seeco_strategy* out) {
  return guarded([&] {
    require(name && out, "null argument");
    const auto s = seeco::parse_strategy(name);
    if (!s) throw seeco::DomainError(std::string("unknown strategy '") + name + "'");
    *out = static_cast<seeco_strategy>(*s);
  });
}

void seeco_ga_params_default(seeco_ga_params* out) {
  if (!out) return;
  const seeco::GaParams d;
  *out = {d.pop_size, d.iterations, d.p_c, d.p_m, d.seed, d.elitism, d.repair_risk ? 1 : 0};
}

void seeco_solve_options_default(seeco_solve_options* out) {
  if (!out) return;
  const seeco::RiskModel d;
  *out = {d.lambda_cf, d.lambda_ig, 1};
}

seeco_status seeco_catalog_standard(seeco_catalog** out) {
  return guarded([&] {
    require(out, "null output handle");
    *out = new seeco_catalog{seeco::SecurityCatalog::standard()};
  });
}

seeco_status seeco_catalog_load(const char* path, seeco_catalog** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new seeco_catalog{seeco::load_catalog(path)};
  });
}

void seeco_catalog_free(seeco_catalog* cat) { delete cat; }

seeco_status seeco_catalog_overhead(const seeco_catalog* cat, int service, int level_id,
                                    int cores, double freq_ghz, double data_mb,
                                    double* out_seconds) {
  return guarded([&] {
    require(cat && out_seconds, "null argument");
    require(service == 0 || service == 1, "service must be 0 or 1");
    const auto s = service == 0 ? seeco::Service::kConfidentiality : seeco::Service::kIntegrity;
    *out_seconds = seeco::overhead(cat->value.get(s, level_id), cores, freq_ghz, data_mb);
  });
}

seeco_status seeco_platform_standard(int servers, seeco_platform** out) {
  return guarded([&] {
    require(out, "null output handle");
    *out = new seeco_platform{seeco::Platform::standard(servers)};
  });
}

seeco_status seeco_platform_load(const char* path, seeco_platform** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new seeco_platform{seeco::load_platform(path)};
  });
}

seeco_status seeco_platform_save(const seeco_platform* p, const char* path) {
  return guarded([&] {
    require(p && path, "null argument");
    seeco::save_platform(p->value, path);
  });
}

int seeco_platform_ap_count(const seeco_platform* p) { return p ? p->value.ap_count() : 0; }

void seeco_platform_free(seeco_platform* p) { delete p; }

void seeco_generator_options_default(seeco_generator_options* out) {
  if (!out) return;
  const seeco::GeneratorConfig d;
  *out = {d.data_min_mb, d.data_max_mb, d.workload_min_gcycles, d.workload_max_gcycles, d.risk_cap};
}

seeco_status seeco_workflow_generate(int tasks, double density, uint64_t seed,
                                     seeco_workflow** out) {
  return seeco_workflow_generate_with(tasks, density, seed, nullptr, out);
}

seeco_status seeco_workflow_generate_with(int tasks, double density, uint64_t seed,
                                          const seeco_generator_options* options,
                                          seeco_workflow** out) {
  return guarded([&] {
    require(out, "null output handle");
    seeco::GeneratorConfig cfg;
    if (options) {
      cfg.data_min_mb = options->data_min_mb;
      cfg.data_max_mb = options->data_max_mb;
      cfg.workload_min_gcycles = options->workload_min_gcycles;
      cfg.workload_max_gcycles = options->workload_max_gcycles;
      cfg.risk_cap = options->risk_cap;
    }
    *out = new seeco_workflow{seeco::random_workflow(tasks, density, cfg, seed)};
  });
}

seeco_status seeco_workflow_load(const char* path, seeco_workflow** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new seeco_workflow{seeco::load_workflow(path)};
  });
}

seeco_status seeco_workflow_save(const seeco_workflow* w, const char* path) {
  return guarded([&] {
    require(w && path, "null argument");
    seeco::save_workflow(w->value, path);
  });
}

size_t seeco_workflow_task_count(const seeco_workflow* w) { return w ? w->value.size() : 0; }

size_t seeco_workflow_edge_count(const seeco_workflow* w) {
  return w ? w->value.edges().size() : 0;
}

double seeco_workflow_deadline(const seeco_workflow* w) { return w ? w->value.deadline() : 0.0; }

double seeco_workflow_risk_cap(const seeco_workflow* w) { return w ? w->value.risk_cap() : 0.0; }

seeco_status seeco_workflow_set_deadline(seeco_workflow* w, double seconds) {
  return guarded([&] {
    require(w, "null workflow");
    w->value.set_deadline(seconds);
  });
}

seeco_status seeco_workflow_set_risk_cap(seeco_workflow* w, double cap) {
  return guarded([&] {
    require(w, "null workflow");
    w->value.set_risk_cap(cap);
  });
}

seeco_status seeco_workflow_compute_deadline(const seeco_workflow* w, const seeco_platform* p,
                                             const seeco_catalog* cat, int literal_core_ratio,
                                             double* out_seconds) {
  return guarded([&] {
    require(w && p && cat && out_seconds, "null argument");
    *out_seconds = seeco::compute_deadline(w->value, p->value, cat->value, literal_core_ratio != 0);
  });
}

void seeco_workflow_free(seeco_workflow* w) { delete w; }

seeco_status seeco_solve(const seeco_workflow* w, const seeco_platform* p,
                         const seeco_catalog* cat, seeco_strategy strategy,
                         const seeco_ga_params* params, const seeco_solve_options* options,
                         seeco_solution** out) {
  return guarded([&] {
    require(w && p && cat && out, "null argument");
    require(strategy >= SEECO_STRATEGY_LOCAL && strategy <= SEECO_STRATEGY_SEECO,
            "unknown strategy");
    seeco_solve_options opts;
    seeco_solve_options_default(&opts);
    if (options) opts = *options;
    seeco::RiskModel risk;
    risk.lambda_cf = opts.lambda_cf;
    risk.lambda_ig = opts.lambda_ig;
    auto sol = seeco::solve(static_cast<seeco::Strategy>(strategy), w->value, p->value,
                            cat->value, risk, to_params(params), opts.literal_core_ratio != 0);
    *out = new seeco_solution{std::move(sol), w->value};
  });
}

seeco_status seeco_solution_summary(const seeco_solution* s, seeco_summary* out) {
  return guarded([&] {
    require(s && out, "null argument");
    const auto& r = s->value.best.result;
    *out = {r.energy, r.makespan, r.risk, r.violation, r.feasible ? 1 : 0};
  });
}

seeco_status seeco_solution_write_summary_csv(const seeco_solution* s, const char* path) {
  return guarded([&] {
    require(s, "null solution");
    write_file(path, [&](std::ostream& os) { seeco::write_summary_csv(os, s->value, s->workflow); });
  });
}

seeco_status seeco_solution_write_schedule_csv(const seeco_solution* s, const char* path) {
  return guarded([&] {
    require(s, "null solution");
    write_file(path, [&](std::ostream& os) { seeco::write_schedule_csv(os, s->value.best.result); });
  });
}

seeco_status seeco_solution_write_history_csv(const seeco_solution* s, const char* path) {
  return guarded([&] {
    require(s, "null solution");
    write_file(path, [&](std::ostream& os) { seeco::write_history_csv(os, s->value.history); });
  });
}

void seeco_solution_free(seeco_solution* s) { delete s; }

seeco_status seeco_sweep_run(const char* config_json, const char* out_path,
                             const char* summary_path) {
  return guarded([&] {
    require(config_json, "null config");
    seeco::ExperimentConfig cfg = seeco::parse_experiment_config(config_json);
    if (out_path) cfg.out = out_path;
    if (summary_path) cfg.summary_out = summary_path;
    if (!cfg.out) throw seeco::Error(seeco::ErrorKind::kInvalidArgument, "no output path for sweep rows");
    if (!cfg.summary_out) {
      auto p = *cfg.out;
      const auto ext = p.extension().string();
      p.replace_extension();
      p += "_summary" + (ext.empty() ? std::string(".csv") : ext);
      cfg.summary_out = p;
    }
    const auto rows = seeco::run_sweep(cfg);
    write_file(cfg.out->c_str(),
               [&](std::ostream& os) { seeco::write_sweep_csv(os, cfg.variable, rows); });
    write_file(cfg.summary_out->c_str(), [&](std::ostream& os) {
      seeco::write_sweep_summary_csv(os, cfg.variable, seeco::summarize(rows));
    });
  });
}

}  // extern "C"
