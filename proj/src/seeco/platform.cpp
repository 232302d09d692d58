#include "seeco/platform.hpp"

#include <cmath>
#include <string>

#include "seeco/error.hpp"

namespace seeco {

namespace {

constexpr double kBitsPerMegabyte = 8e6;

double shannon_mb_s(double bandwidth_mhz, double power_w, double gain, double noise_w) {
  return bandwidth_mhz * 1e6 * std::log2(1.0 + power_w * gain / noise_w) / kBitsPerMegabyte;
}

}  // namespace

void VmSpec::validate() const {
  if (!(frequency_ghz > 0.0)) throw ValidationError("VM frequency must be positive");
  if (cores < 1) throw ValidationError("VM needs at least one core");
  if (!(capability_ghz > 0.0)) throw ValidationError("VM capability must be positive");
}

void RadioParams::validate() const {
  if (!(b_ul_mhz > 0.0 && b_dl_mhz > 0.0 && p_tx_w > 0.0 && p_ap_w > 0.0 && h_ul > 0.0 &&
        h_dl > 0.0 && noise_w > 0.0)) {
    throw ValidationError("radio parameters must all be strictly positive");
  }
}

double uplink_rate(const RadioParams& r) {
  r.validate();
  return shannon_mb_s(r.b_ul_mhz, r.p_tx_w, r.h_ul, r.noise_w);
}

double downlink_rate(const RadioParams& r) {
  r.validate();
  return shannon_mb_s(r.b_dl_mhz, r.p_ap_w, r.h_dl, r.noise_w);
}

Platform::Platform(MobileDevice md, std::vector<AccessPoint> aps, double inter_ap_bandwidth_mb_s)
    : md_(std::move(md)), aps_(std::move(aps)), inter_ap_bandwidth_(inter_ap_bandwidth_mb_s) {
  md_.vm.validate();
  if (!(md_.p_comp_w >= 0.0 && md_.p_ul_w >= 0.0 && md_.p_dl_w >= 0.0)) {
    throw ValidationError("device powers must be non-negative");
  }
  if (static_cast<int>(aps_.size()) > kMaxAccessPoints) {
    throw ValidationError("at most 15 access points are addressable");
  }
  if (!aps_.empty() && !(inter_ap_bandwidth_ > 0.0)) {
    throw ValidationError("inter-AP bandwidth must be positive");
  }
  slot_offset_.push_back(1);  // device occupies slot 0
  for (std::size_t j = 0; j < aps_.size(); ++j) {
    const auto& ap = aps_[j];
    if (ap.vms.empty() || static_cast<int>(ap.vms.size()) > kMaxVmsPerAccessPoint) {
      throw ValidationError("access point " + std::to_string(j + 1) + " must host 1..15 VMs");
    }
    for (const auto& vm : ap.vms) vm.validate();
    uplink_.push_back(uplink_rate(ap.radio));
    downlink_.push_back(downlink_rate(ap.radio));
    slot_offset_.push_back(slot_offset_.back() + static_cast<int>(ap.vms.size()));
  }
}

Platform Platform::standard(int servers) {
  if (servers < 0 || servers > kMaxAccessPoints) {
    throw DomainError("server count must lie in [0, 15]");
  }
  static constexpr VmSpec kServerKinds[] = {{2.3, 4, 2.3}, {3.1, 8, 3.1}, {2.2, 16, 2.2}};
  std::vector<AccessPoint> aps;
  for (int j = 0; j < servers; ++j) {
    aps.push_back(AccessPoint{{kServerKinds[j % 3]}, RadioParams{}});
  }
  return Platform(MobileDevice{}, std::move(aps), 10.0);
}

int Platform::vm_count(int ap) const {
  return ap == 0 ? 1 : static_cast<int>(access_point(ap).vms.size());
}

const AccessPoint& Platform::access_point(int ap) const {
  if (ap < 1 || ap > ap_count()) throw DomainError("no access point " + std::to_string(ap));
  return aps_[static_cast<std::size_t>(ap - 1)];
}

const VmSpec& Platform::vm(VmRef ref) const {
  if (ref.ap == 0) {
    if (ref.vm != 1) throw DomainError("the device has a single VM");
    return md_.vm;
  }
  const auto& ap = access_point(ref.ap);
  if (ref.vm < 1 || ref.vm > static_cast<int>(ap.vms.size())) {
    throw DomainError("no VM " + std::to_string(ref.vm) + " on access point " +
                      std::to_string(ref.ap));
  }
  return ap.vms[static_cast<std::size_t>(ref.vm - 1)];
}

std::vector<VmRef> Platform::all_vms() const {
  std::vector<VmRef> out{{0, 1}};
  for (int j = 1; j <= ap_count(); ++j) {
    for (int k = 1; k <= vm_count(j); ++k) out.push_back({j, k});
  }
  return out;
}

int Platform::vm_slot(VmRef ref) const {
  return ref.ap == 0 ? 0 : slot_offset_[static_cast<std::size_t>(ref.ap - 1)] + ref.vm - 1;
}

double Platform::uplink(int ap) const {
  access_point(ap);
  return uplink_[static_cast<std::size_t>(ap - 1)];
}

double Platform::downlink(int ap) const {
  access_point(ap);
  return downlink_[static_cast<std::size_t>(ap - 1)];
}

VmRef decode_location(std::uint8_t location, const Platform& p) {
  if (location == 0) throw DomainError("location byte 0x00 is not a valid placement");
  const int high = location >> 4;
  const int low = location & 0x0F;
  const int ap = high % (p.ap_count() + 1);
  if (ap == 0) return {0, 1};
  const int k = p.vm_count(ap);
  return {ap, 1 + ((low - 1) % k + k) % k};
}

std::uint8_t encode_location(VmRef ref) {
  return static_cast<std::uint8_t>((ref.ap << 4) | (ref.ap == 0 ? 1 : ref.vm));
}

}  // namespace seeco
