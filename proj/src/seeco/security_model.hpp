#pragma once

#include <span>
#include <string>
#include <vector>

namespace seeco {

enum class Service { kConfidentiality, kIntegrity };

const char* to_string(Service s);

// Reference machine the catalog speeds were measured on.
inline constexpr double kRefFrequencyGhz = 2.2;
inline constexpr int kRefCores = 1;
inline constexpr double kRefDataMb = 100.0;

struct CryptoAlgorithm {
  int id = 0;  // 1-based within its service
  Service service = Service::kConfidentiality;
  std::string name;
  double level = 0.0;      // normalized security level, (0, 1]
  double ref_speed = 0.0;  // MB/s on the reference machine

  // Seconds to process kRefDataMb on the reference machine.
  double ref_cost() const { return kRefDataMb / ref_speed; }
};

class SecurityCatalog {
 public:
  static constexpr std::size_t kAlgorithmsPerService = 5;

  // Throws ValidationError when a list breaks the catalog invariants.
  SecurityCatalog(std::vector<CryptoAlgorithm> confidentiality,
                  std::vector<CryptoAlgorithm> integrity);

  // IDEA/DES/AES/Blowfish/RC4 and TIGER/RipeMD160/SHA-1/RipeMD128/MD5.
  static SecurityCatalog standard();

  const std::vector<CryptoAlgorithm>& algorithms(Service s) const;
  const CryptoAlgorithm& get(Service s, int id) const;
  std::size_t size(Service s) const { return algorithms(s).size(); }

  // Id of the level-1.0 (slowest) algorithm of a service.
  int strongest_id(Service s) const;
  // Id of the lowest-level algorithm of a service.
  int weakest_id(Service s) const;

 private:
  std::vector<CryptoAlgorithm> confidentiality_;
  std::vector<CryptoAlgorithm> integrity_;
};

struct RiskModel {
  double lambda_cf = 2.5;
  double lambda_ig = 1.8;
  // Authentication has no catalog; when enabled it contributes one extra
  // Poisson factor at a fixed level.
  bool include_authentication = false;
  double lambda_au = 0.0;
  double level_au = 1.0;

  double lambda(Service s) const { return s == Service::kConfidentiality ? lambda_cf : lambda_ig; }
  void validate() const;
};

// Throughput of an algorithm that protects `data_mb` in `cost_s` seconds.
double speed_from_cost(double cost_s, double data_mb);

// Level relative to the slowest algorithm of the same service.
double level_from_cost(double cost_s, double slowest_cost_s);

// Seconds to protect `data_mb` with `alg` on a VM with `cores` cores at `freq_ghz`.
double overhead(const CryptoAlgorithm& alg, int cores, double freq_ghz, double data_mb);

// Poisson compromise probability of one service at level `level`.
double task_service_risk(double level, double lambda);

double task_risk(double level_cf, double level_ig, const RiskModel& model);

double workflow_risk(std::span<const double> task_risks);

}  // namespace seeco
