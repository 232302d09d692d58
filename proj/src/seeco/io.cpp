#include "seeco/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "seeco/error.hpp"

namespace seeco {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

// Re-raise nlohmann type/lookup errors as ParseError with context.
template <class F>
auto with_context(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::vector<CryptoAlgorithm> algorithms_from(const json& arr, Service s) {
  std::vector<CryptoAlgorithm> out;
  for (const auto& e : arr) {
    CryptoAlgorithm a;
    a.id = e.at("id").get<int>();
    a.service = s;
    a.name = e.at("name").get<std::string>();
    a.level = e.at("level").get<double>();
    a.ref_speed = e.at("speed_mb_s").get<double>();
    out.push_back(std::move(a));
  }
  return out;
}

json vm_to_json(const VmSpec& vm) {
  return {{"frequency_ghz", vm.frequency_ghz},
          {"cores", vm.cores},
          {"capability_ghz", vm.capability_ghz}};
}

VmSpec vm_from_json(const json& j) {
  VmSpec vm;
  vm.frequency_ghz = j.at("frequency_ghz").get<double>();
  vm.cores = j.at("cores").get<int>();
  vm.capability_ghz = j.at("capability_ghz").get<double>();
  return vm;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

SecurityCatalog parse_catalog(const std::string& json_text) {
  const json j = parse_json(json_text, "catalog");
  return with_context("catalog", [&] {
    return SecurityCatalog(algorithms_from(j.at("confidentiality"), Service::kConfidentiality),
                           algorithms_from(j.at("integrity"), Service::kIntegrity));
  });
}

SecurityCatalog load_catalog(const std::filesystem::path& path) {
  return parse_catalog(read_text_file(path));
}

void save_catalog(const SecurityCatalog& cat, const std::filesystem::path& path) {
  json j;
  for (Service s : {Service::kConfidentiality, Service::kIntegrity}) {
    json arr = json::array();
    for (const auto& a : cat.algorithms(s)) {
      arr.push_back({{"id", a.id}, {"name", a.name}, {"level", a.level}, {"speed_mb_s", a.ref_speed}});
    }
    j[to_string(s)] = std::move(arr);
  }
  write_text_file(path, j.dump(2) + "\n");
}

Workflow parse_workflow(const std::string& json_text) {
  const json j = parse_json(json_text, "workflow");
  return with_context("workflow", [&] {
    const auto& arr = j.at("tasks");
    std::vector<Task> tasks(arr.size());
    std::vector<bool> seen(arr.size(), false);
    for (const auto& e : arr) {
      const int id = e.at("id").get<int>();
      if (id < 0 || id >= static_cast<int>(arr.size()) || seen[static_cast<std::size_t>(id)]) {
        throw ValidationError("task ids must be unique and cover 0..n-1");
      }
      seen[static_cast<std::size_t>(id)] = true;
      auto& t = tasks[static_cast<std::size_t>(id)];
      t.alpha_mb = e.at("alpha_mb").get<double>();
      t.beta_mb = e.at("beta_mb").get<double>();
      t.workload_gcycles = e.at("workload_gcycles").get<double>();
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("workflow: edges must be [from, to] pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Workflow(std::move(tasks), std::move(edges), j.value("deadline_s", 0.0),
                    j.value("risk_cap", 1.0));
  });
}

Workflow load_workflow(const std::filesystem::path& path) {
  return parse_workflow(read_text_file(path));
}

std::string workflow_to_json(const Workflow& w) {
  json tasks = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& t = w.tasks()[i];
    tasks.push_back({{"id", i},
                     {"alpha_mb", t.alpha_mb},
                     {"beta_mb", t.beta_mb},
                     {"workload_gcycles", t.workload_gcycles}});
  }
  json edges = json::array();
  for (const auto& [a, b] : w.edges()) edges.push_back({a, b});
  json j{{"tasks", std::move(tasks)},
         {"edges", std::move(edges)},
         {"deadline_s", w.deadline()},
         {"risk_cap", w.risk_cap()}};
  return j.dump(2) + "\n";
}

void save_workflow(const Workflow& w, const std::filesystem::path& path) {
  write_text_file(path, workflow_to_json(w));
}

Platform parse_platform(const std::string& json_text) {
  const json j = parse_json(json_text, "platform");
  return with_context("platform", [&] {
    MobileDevice md;
    if (j.contains("md")) {
      const auto& m = j.at("md");
      md.vm = vm_from_json(m);
      md.p_comp_w = m.at("p_comp_w").get<double>();
      md.p_ul_w = m.at("p_ul_w").get<double>();
      md.p_dl_w = m.at("p_dl_w").get<double>();
    }
    std::vector<AccessPoint> aps;
    for (const auto& a : j.value("aps", json::array())) {
      AccessPoint ap;
      for (const auto& v : a.at("vms")) ap.vms.push_back(vm_from_json(v));
      if (a.contains("radio")) {
        const auto& r = a.at("radio");
        const RadioParams d;
        ap.radio.b_ul_mhz = r.value("b_ul_mhz", d.b_ul_mhz);
        ap.radio.b_dl_mhz = r.value("b_dl_mhz", d.b_dl_mhz);
        ap.radio.p_tx_w = r.value("p_tx_w", d.p_tx_w);
        ap.radio.p_ap_w = r.value("p_ap_w", d.p_ap_w);
        ap.radio.h_ul = r.value("h_ul", d.h_ul);
        ap.radio.h_dl = r.value("h_dl", ap.radio.h_ul);
        ap.radio.noise_w = r.value("noise_w", d.noise_w);
      }
      aps.push_back(std::move(ap));
    }
    return Platform(md, std::move(aps), j.value("inter_ap_bandwidth_mb_s", 10.0));
  });
}

Platform load_platform(const std::filesystem::path& path) {
  return parse_platform(read_text_file(path));
}

std::string platform_to_json(const Platform& p) {
  const auto& md = p.device();
  json m = vm_to_json(md.vm);
  m["p_comp_w"] = md.p_comp_w;
  m["p_ul_w"] = md.p_ul_w;
  m["p_dl_w"] = md.p_dl_w;
  json aps = json::array();
  for (const auto& ap : p.access_points()) {
    json vms = json::array();
    for (const auto& vm : ap.vms) vms.push_back(vm_to_json(vm));
    const auto& r = ap.radio;
    aps.push_back({{"vms", std::move(vms)},
                   {"radio",
                    {{"b_ul_mhz", r.b_ul_mhz},
                     {"b_dl_mhz", r.b_dl_mhz},
                     {"p_tx_w", r.p_tx_w},
                     {"p_ap_w", r.p_ap_w},
                     {"h_ul", r.h_ul},
                     {"h_dl", r.h_dl},
                     {"noise_w", r.noise_w}}}});
  }
  json j{{"md", std::move(m)},
         {"aps", std::move(aps)},
         {"inter_ap_bandwidth_mb_s", p.inter_ap_bandwidth()}};
  return j.dump(2) + "\n";
}

void save_platform(const Platform& p, const std::filesystem::path& path) {
  write_text_file(path, platform_to_json(p));
}

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

void write_schedule_csv(std::ostream& os, const EvaluationResult& r) {
  os << "id,ap,vm,start,end,exec,transfer,ecost,decost,risk\n";
  for (std::size_t i = 0; i < r.timings.size(); ++i) {
    const auto& t = r.timings[i];
    const auto& at = r.placement[i];
    os << i << ',' << at.ap << ',' << at.vm << ',' << format_number(t.start) << ','
       << format_number(t.end) << ',' << format_number(t.exec) << ','
       << format_number(t.transfer) << ',' << format_number(t.encrypt) << ','
       << format_number(t.decrypt) << ',' << format_number(t.risk) << '\n';
  }
}

void write_history_csv(std::ostream& os, const std::vector<GenerationStats>& history) {
  os << "generation,best_energy,best_violation,feasible_count\n";
  for (std::size_t g = 0; g < history.size(); ++g) {
    const auto& h = history[g];
    os << g + 1 << ',' << format_number(h.best_energy) << ',' << format_number(h.best_violation)
       << ',' << h.feasible_count << '\n';
  }
}

void write_summary_csv(std::ostream& os, const Solution& s, const Workflow& w) {
  const auto& r = s.best.result;
  os << "strategy,energy,makespan,risk,violation,feasible,deadline,risk_cap\n";
  os << to_string(s.strategy) << ',' << format_number(r.energy) << ','
     << format_number(r.makespan) << ',' << format_number(r.risk) << ','
     << format_number(r.violation) << ',' << (r.feasible ? "true" : "false") << ','
     << format_number(w.deadline()) << ',' << format_number(w.risk_cap()) << '\n';
}

}  // namespace seeco
