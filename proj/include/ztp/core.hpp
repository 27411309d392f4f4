#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ztp/result.hpp"

namespace ztp {

// A WiFi network visible to (or joinable by) the device under provisioning.
struct WifiNetwork {
  std::string ssid;
  std::string passphrase;  // empty for open networks
  bool hidden = false;
  double band_ghz = 2.4;  // 2.4 or 5
};

inline Result<void> validate_network(const WifiNetwork& n) {
  if (n.ssid.empty()) return Result<void>::failure("ssid empty");
  if (n.ssid.size() > 32) return Result<void>::failure("ssid longer than 32 bytes");
  if (!n.passphrase.empty() &&
      (n.passphrase.size() < 8 || n.passphrase.size() > 63)) {
    return Result<void>::failure("passphrase length outside 8-63");
  }
  return {};
}

struct Credentials {
  std::string ssid;
  std::string passphrase;

  bool operator==(const Credentials&) const = default;
};

// 48-bit MAC-style peer identity.
struct DeviceIdentity {
  uint64_t device_id = 0;  // lower 48 bits significant
  std::string friendly_name;

  bool operator==(const DeviceIdentity& o) const { return device_id == o.device_id; }
};

inline std::string format_device_id(uint64_t id) {
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(17);
  for (int shift = 40; shift >= 0; shift -= 8) {
    const uint8_t octet = static_cast<uint8_t>((id >> shift) & 0xFF);
    if (!out.empty()) out.push_back(':');
    out.push_back(hex[octet >> 4]);
    out.push_back(hex[octet & 0x0F]);
  }
  return out;
}

inline Result<uint64_t> parse_device_id(std::string_view text) {
  if (text.size() != 17) return Result<uint64_t>::failure("device id must be six colon-separated hex octets");
  uint64_t id = 0;
  for (size_t i = 0; i < 17; ++i) {
    if (i % 3 == 2) {
      if (text[i] != ':') return Result<uint64_t>::failure("expected ':' separator");
      continue;
    }
    const char c = text[i];
    uint64_t nibble;
    if (c >= '0' && c <= '9') nibble = static_cast<uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = static_cast<uint64_t>(c - 'a' + 10);
    else return Result<uint64_t>::failure("invalid hex digit in device id");
    id = (id << 4) | nibble;
  }
  return id;
}

// The eight evaluation scenarios, one per results-table column.
enum class ScenarioId {
  ManualExpert,
  ManualNonExpert,
  LosAp,
  NlosAp,
  LosBl,
  NlosBl,
  LosSBl,
  LosBl4,
};

inline constexpr std::array<ScenarioId, 8> kAllScenarios = {
    ScenarioId::ManualExpert, ScenarioId::ManualNonExpert,
    ScenarioId::LosAp,        ScenarioId::NlosAp,
    ScenarioId::LosBl,        ScenarioId::NlosBl,
    ScenarioId::LosSBl,       ScenarioId::LosBl4,
};

inline std::string_view scenario_name(ScenarioId id) {
  switch (id) {
    case ScenarioId::ManualExpert: return "manual-expert";
    case ScenarioId::ManualNonExpert: return "manual-nonexpert";
    case ScenarioId::LosAp: return "los-ap";
    case ScenarioId::NlosAp: return "nlos-ap";
    case ScenarioId::LosBl: return "los-bl";
    case ScenarioId::NlosBl: return "nlos-bl";
    case ScenarioId::LosSBl: return "los-s-bl";
    case ScenarioId::LosBl4: return "los-bl4";
  }
  return "unknown";
}

// Column header used when mirroring the results table.
inline std::string_view scenario_label(ScenarioId id) {
  switch (id) {
    case ScenarioId::ManualExpert: return "Manual-Expert";
    case ScenarioId::ManualNonExpert: return "Manual-Non-expert";
    case ScenarioId::LosAp: return "LOS-AP";
    case ScenarioId::NlosAp: return "NLOS-AP";
    case ScenarioId::LosBl: return "LOS-BL";
    case ScenarioId::NlosBl: return "NLOS-BL";
    case ScenarioId::LosSBl: return "LOS-S-BL";
    case ScenarioId::LosBl4: return "LOS-BL4";
  }
  return "unknown";
}

inline std::optional<ScenarioId> scenario_from_name(std::string_view name) {
  for (ScenarioId id : kAllScenarios) {
    if (scenario_name(id) == name) return id;
  }
  return std::nullopt;
}

// One provisioning trial. Durations are integer milliseconds so that event
// arithmetic is exact and the sample is reproducible bit for bit.
struct TtpSample {
  ScenarioId scenario = ScenarioId::LosBl;
  int trial_index = 0;
  uint64_t seed = 0;
  int64_t ttp_ms = 0;
  std::vector<std::pair<std::string, int64_t>> phase_breakdown;

  bool operator==(const TtpSample&) const = default;
};

struct TtpStats {
  double mean_s = 0.0;
  double best_s = 0.0;   // minimum over the trial set
  double worst_s = 0.0;  // maximum over the trial set
  int n = 0;
};

inline Result<TtpStats> summarize(const std::vector<TtpSample>& samples) {
  if (samples.empty()) return Result<TtpStats>::failure("no samples");
  int64_t sum = 0;
  int64_t best = samples.front().ttp_ms;
  int64_t worst = samples.front().ttp_ms;
  for (const TtpSample& s : samples) {
    sum += s.ttp_ms;
    best = std::min(best, s.ttp_ms);
    worst = std::max(worst, s.ttp_ms);
  }
  TtpStats stats;
  stats.n = static_cast<int>(samples.size());
  stats.mean_s = static_cast<double>(sum) / static_cast<double>(samples.size()) / 1000.0;
  stats.best_s = static_cast<double>(best) / 1000.0;
  stats.worst_s = static_cast<double>(worst) / 1000.0;
  return stats;
}

// baseline/candidate as a percentage: 154 means the baseline takes 1.54x as
// long as the candidate.
inline Result<double> ratio_percent(double baseline_s, double candidate_s) {
  if (candidate_s <= 0.0) return Result<double>::failure("non-positive divisor");
  return baseline_s / candidate_s * 100.0;
}

// How much faster `fast` is than `slow`, e.g. 44 means 44% less time.
inline Result<double> improvement_percent(double slow_s, double fast_s) {
  Result<double> r = ratio_percent(slow_s, fast_s);
  if (!r.ok()) return r;
  return r.value() - 100.0;
}

// Share of `slow` lost relative to `fast`: (slow - fast) / slow.
inline Result<double> degradation_percent(double slow_s, double fast_s) {
  if (slow_s <= 0.0) return Result<double>::failure("non-positive divisor");
  return (slow_s - fast_s) / slow_s * 100.0;
}

}  // namespace ztp
