/*
 * seeco: security- and energy-aware offloading of workflow DAGs from a
 * mobile device to edge servers.
 *
 * C interface. Every object is an opaque handle owned by the caller and
 * released with the matching *_free function. Functions return a
 * seeco_status; on failure seeco_last_error() describes the problem
 * (thread-local, valid until the next failing call on the same thread).
 */
#ifndef SEECO_SEECO_H
#define SEECO_SEECO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SEECO_BUILDING_LIBRARY)
#    define SEECO_API __declspec(dllexport)
#  else
#    define SEECO_API __declspec(dllimport)
#  endif
#else
#  define SEECO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum seeco_status {
  SEECO_OK = 0,
  SEECO_ERR_INVALID_ARGUMENT = 1,
  SEECO_ERR_DOMAIN = 2,
  SEECO_ERR_IO = 3,
  SEECO_ERR_PARSE = 4,
  SEECO_ERR_VALIDATION = 5,
  SEECO_ERR_INTERNAL = 6
} seeco_status;

typedef enum seeco_strategy {
  SEECO_STRATEGY_LOCAL = 0,
  SEECO_STRATEGY_MAX_LEVEL = 1,
  SEECO_STRATEGY_MIN_LEVEL = 2,
  SEECO_STRATEGY_CONFI_ONLY = 3,
  SEECO_STRATEGY_INTEG_ONLY = 4,
  SEECO_STRATEGY_SEECO = 5
} seeco_strategy;

typedef struct seeco_catalog seeco_catalog;
typedef struct seeco_platform seeco_platform;
typedef struct seeco_workflow seeco_workflow;
typedef struct seeco_solution seeco_solution;

typedef struct seeco_ga_params {
  int pop_size;
  int iterations;
  double p_c;
  double p_m;
  uint64_t seed;
  int elitism;
  int repair_risk; /* nonzero: raise exposed levels of new individuals to meet the risk cap */
} seeco_ga_params;

typedef struct seeco_solve_options {
  double lambda_cf;
  double lambda_ig;
  int literal_core_ratio; /* nonzero: keep the core-count ratio in decryption cost */
} seeco_solve_options;

typedef struct seeco_summary {
  double energy_j;
  double makespan_s;
  double risk;
  double violation;
  int feasible;
} seeco_summary;

SEECO_API const char* seeco_version(void);
SEECO_API const char* seeco_last_error(void);
SEECO_API const char* seeco_status_string(seeco_status status);

/* Strategy names: local, max, min, confi, integ, seeco. */
SEECO_API seeco_status seeco_strategy_parse(const char* name, seeco_strategy* out);

SEECO_API void seeco_ga_params_default(seeco_ga_params* out);
SEECO_API void seeco_solve_options_default(seeco_solve_options* out);

/* Security catalog */
SEECO_API seeco_status seeco_catalog_standard(seeco_catalog** out);
SEECO_API seeco_status seeco_catalog_load(const char* path, seeco_catalog** out);
SEECO_API void seeco_catalog_free(seeco_catalog* cat);

/* Overhead in seconds of protecting data_mb with algorithm `level_id`
 * (1-based) of service 0 = confidentiality, 1 = integrity. */
SEECO_API seeco_status seeco_catalog_overhead(const seeco_catalog* cat, int service, int level_id,
                                              int cores, double freq_ghz, double data_mb,
                                              double* out_seconds);

/* Platform */
SEECO_API seeco_status seeco_platform_standard(int servers, seeco_platform** out);
SEECO_API seeco_status seeco_platform_load(const char* path, seeco_platform** out);
SEECO_API seeco_status seeco_platform_save(const seeco_platform* p, const char* path);
SEECO_API int seeco_platform_ap_count(const seeco_platform* p);
SEECO_API void seeco_platform_free(seeco_platform* p);

/* Workflow */
typedef struct seeco_generator_options {
  double data_min_mb; /* alpha and beta are uniform on [data_min_mb, data_max_mb] */
  double data_max_mb;
  double workload_min_gcycles;
  double workload_max_gcycles;
  double risk_cap;
} seeco_generator_options;

SEECO_API void seeco_generator_options_default(seeco_generator_options* out);
SEECO_API seeco_status seeco_workflow_generate(int tasks, double density, uint64_t seed,
                                               seeco_workflow** out);
/* options may be NULL for the defaults. */
SEECO_API seeco_status seeco_workflow_generate_with(int tasks, double density, uint64_t seed,
                                                    const seeco_generator_options* options,
                                                    seeco_workflow** out);
SEECO_API seeco_status seeco_workflow_load(const char* path, seeco_workflow** out);
SEECO_API seeco_status seeco_workflow_save(const seeco_workflow* w, const char* path);
SEECO_API size_t seeco_workflow_task_count(const seeco_workflow* w);
SEECO_API size_t seeco_workflow_edge_count(const seeco_workflow* w);
SEECO_API double seeco_workflow_deadline(const seeco_workflow* w);
SEECO_API double seeco_workflow_risk_cap(const seeco_workflow* w);
SEECO_API seeco_status seeco_workflow_set_deadline(seeco_workflow* w, double seconds);
SEECO_API seeco_status seeco_workflow_set_risk_cap(seeco_workflow* w, double cap);
/* Midpoint of the greedy and all-local makespans at the strongest levels. */
SEECO_API seeco_status seeco_workflow_compute_deadline(const seeco_workflow* w,
                                                       const seeco_platform* p,
                                                       const seeco_catalog* cat,
                                                       int literal_core_ratio, double* out_seconds);
SEECO_API void seeco_workflow_free(seeco_workflow* w);

/* Solving. `params` and `options` may be NULL for defaults. */
SEECO_API seeco_status seeco_solve(const seeco_workflow* w, const seeco_platform* p,
                                   const seeco_catalog* cat, seeco_strategy strategy,
                                   const seeco_ga_params* params,
                                   const seeco_solve_options* options, seeco_solution** out);
SEECO_API seeco_status seeco_solution_summary(const seeco_solution* s, seeco_summary* out);
/* Result CSVs: one summary row, the per-task timeline, the per-generation history. */
SEECO_API seeco_status seeco_solution_write_summary_csv(const seeco_solution* s, const char* path);
SEECO_API seeco_status seeco_solution_write_schedule_csv(const seeco_solution* s,
                                                         const char* path);
SEECO_API seeco_status seeco_solution_write_history_csv(const seeco_solution* s,
                                                        const char* path);
SEECO_API void seeco_solution_free(seeco_solution* s);

/* Runs a sweep described by a JSON config (same keys as the CLI flags) and
 * writes the long-format rows to `out_path` and the mean-over-seeds summary
 * to `summary_path`. Either path may be NULL to use the config's "out" /
 * "summary" keys. */
SEECO_API seeco_status seeco_sweep_run(const char* config_json, const char* out_path,
                                       const char* summary_path);

#ifdef __cplusplus
}
#endif

#endif /* SEECO_SEECO_H */
