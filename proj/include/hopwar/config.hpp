#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hopwar/attacker.hpp"
#include "hopwar/defender.hpp"
#include "hopwar/metrics.hpp"
#include "hopwar/phy.hpp"

namespace hopwar {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view to_string(HopStrategy s) noexcept;
std::optional<HopStrategy> parse_hop_strategy(std::string_view name) noexcept;

struct ScenarioConfig {
    std::size_t num_channels = 12;
    double sim_duration_s = 1790.0;
    double slot_s = 0.1;
    double attack_start_s = 10.0;
    double hop_enable_s = 1.0;
    double detection_threshold = 0.80;
    std::size_t detection_window = 100;
    bool reset_window_on_detect = false;
    HopStrategy defender_strategy = HopStrategy::RandomHop;
    AttackStrategy attacker_strategy = AttackStrategy::Folpetti;
    RadioProfile radio;
    PowerProfile power;
    TimingProfile timing;
    AttackerKnobs attacker_knobs;
    std::uint64_t seed = 1;
    /// Metadata only; the abstract PHY never reads it.
    std::uint32_t packet_size_octets = 1000;

    [[nodiscard]] std::uint64_t num_slots() const;
    /// First slot index whose start time is at or after `t` seconds.
    [[nodiscard]] std::uint64_t slot_at(double t) const;
};

/// Throws ConfigError describing the first violated constraint.
void validate(const ScenarioConfig& config);

/// Parses a flat JSON object whose keys are ScenarioConfig field names
/// (profile members are flattened: "rssi_clean", "p_tx", "t_rx_ack",
/// "idle_trigger", ...). Unknown keys and ill-typed values are ConfigErrors.
/// Keys not present keep their defaults.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical flat JSON rendering, the inverse of parse_config.
std::string dump_config(const ScenarioConfig& config);

/// 16-hex-digit FNV-1a digest of the canonical rendering.
std::string fingerprint(const ScenarioConfig& config);

}  // namespace hopwar
