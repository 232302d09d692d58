#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "seeco/baselines.hpp"

namespace seeco {

// Catalog file: {"confidentiality": [{id, name, level, speed_mb_s}], "integrity": [...]}.
SecurityCatalog load_catalog(const std::filesystem::path& path);
SecurityCatalog parse_catalog(const std::string& json_text);
void save_catalog(const SecurityCatalog& cat, const std::filesystem::path& path);

// Workflow file: {"tasks": [{id, alpha_mb, beta_mb, workload_gcycles}],
//                 "edges": [[i, j], ...], "deadline_s", "risk_cap"}.
Workflow load_workflow(const std::filesystem::path& path);
Workflow parse_workflow(const std::string& json_text);
std::string workflow_to_json(const Workflow& w);
void save_workflow(const Workflow& w, const std::filesystem::path& path);

// Platform file: {"md": {...}, "aps": [{"vms": [...], "radio": {...}}],
//                 "inter_ap_bandwidth_mb_s"}.
Platform load_platform(const std::filesystem::path& path);
Platform parse_platform(const std::string& json_text);
std::string platform_to_json(const Platform& p);
void save_platform(const Platform& p, const std::filesystem::path& path);

// Locale-independent shortest round-trip formatting.
std::string format_number(double v);

// id,ap,vm,start,end,exec,transfer,ecost,decost,risk
void write_schedule_csv(std::ostream& os, const EvaluationResult& r);
// generation,best_energy,best_violation,feasible_count
void write_history_csv(std::ostream& os, const std::vector<GenerationStats>& history);
// strategy,energy,makespan,risk,violation,feasible,deadline,risk_cap
void write_summary_csv(std::ostream& os, const Solution& s, const Workflow& w);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace seeco
