#pragma once

#include <cstdint>
#include <vector>

namespace seeco {

struct VmSpec {
  double frequency_ghz = 2.2;
  int cores = 1;
  double capability_ghz = 2.2;  // effective compute rate; giga-cycles per second

  void validate() const;
};

// Radio link between the mobile device and one access point.
struct RadioParams {
  double b_ul_mhz = 20.0;
  double b_dl_mhz = 20.0;
  double p_tx_w = 0.1;  // mobile device transmit power
  double p_ap_w = 1.0;  // access point transmit power
  double h_ul = 1.0;
  double h_dl = 1.0;
  double noise_w = 0.1 / 7.0;  // uplink SNR 7 at the defaults

  void validate() const;
};

struct MobileDevice {
  VmSpec vm{2.36, 1, 2.36};
  double p_comp_w = 0.5;
  double p_ul_w = 0.1;
  double p_dl_w = 0.05;
};

struct AccessPoint {
  std::vector<VmSpec> vms;
  RadioParams radio;
};

// Decoded location: ap 0 is the mobile device, vm is 1-based within the ap.
struct VmRef {
  int ap = 0;
  int vm = 1;

  bool on_device() const { return ap == 0; }
  friend bool operator==(const VmRef&, const VmRef&) = default;
};

inline constexpr std::uint8_t kDeviceLocation = 0x01;
// Nibble encoding caps both the access point count and VMs per access point.
inline constexpr int kMaxAccessPoints = 15;
inline constexpr int kMaxVmsPerAccessPoint = 15;

class Platform {
 public:
  Platform(MobileDevice md, std::vector<AccessPoint> aps, double inter_ap_bandwidth_mb_s);

  // Device 2.36 GHz / 0.5, 0.1, 0.05 W; servers cycle through
  // (2.3 GHz, 4 cores), (3.1 GHz, 8 cores), (2.2 GHz, 16 cores), one VM each.
  static Platform standard(int servers = 3);

  const MobileDevice& device() const { return md_; }
  // Access points 1..M; index 0 of this vector is AP 1.
  const std::vector<AccessPoint>& access_points() const { return aps_; }
  int ap_count() const { return static_cast<int>(aps_.size()); }
  int vm_count(int ap) const;
  double inter_ap_bandwidth() const { return inter_ap_bandwidth_; }

  const VmSpec& vm(VmRef ref) const;
  const AccessPoint& access_point(int ap) const;
  // Every VM as a flat list, device first.
  std::vector<VmRef> all_vms() const;
  int vm_slot(VmRef ref) const;  // position of ref within all_vms()

  // MB/s between the device and access point `ap` (1..M).
  double uplink(int ap) const;
  double downlink(int ap) const;

 private:
  MobileDevice md_;
  std::vector<AccessPoint> aps_;
  double inter_ap_bandwidth_;
  std::vector<double> uplink_;
  std::vector<double> downlink_;
  std::vector<int> slot_offset_;
};

// Shannon rates in MB/s (1 MB = 8e6 bits).
double uplink_rate(const RadioParams& r);
double downlink_rate(const RadioParams& r);

// High nibble selects the access point (mod M+1), low nibble the VM (mod K_j).
VmRef decode_location(std::uint8_t location, const Platform& p);

// Canonical byte that decodes to ref.
std::uint8_t encode_location(VmRef ref);

}  // namespace seeco
