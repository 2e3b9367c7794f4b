#pragma once

#include <cstddef>
#include <optional>

namespace hopwar {

using ChannelId = std::size_t;

/// Constant received-signal levels of the abstract radio, in dBm.
struct RadioProfile {
    double rssi_clean = -40.0;     // receiver, no jamming
    double rssi_jammed = -120.0;   // receiver, jammed slot
    double rssi_idle = -95.0;      // jammer-side level on an unoccupied channel
    double rssi_occupied = -55.0;  // jammer-side level on an occupied channel
    double occupancy_threshold = -80.0;

    /// rssi_occupied > occupancy_threshold > rssi_idle.
    [[nodiscard]] bool is_well_posed() const noexcept {
        return rssi_occupied > occupancy_threshold && occupancy_threshold > rssi_idle;
    }
};

enum class SlotResult { Delivered, Jammed, Idle };

struct SlotOutcome {
    bool delivered = false;
    bool jammed = false;
    ChannelId tx_channel = 0;
    std::optional<ChannelId> jam_channel;
    double rssi_receiver = 0.0;
    double rssi_jammer = 0.0;

    [[nodiscard]] bool transmitted() const noexcept { return delivered || jammed; }
    [[nodiscard]] SlotResult result() const noexcept {
        if (jammed) return SlotResult::Jammed;
        if (delivered) return SlotResult::Delivered;
        return SlotResult::Idle;
    }
};

/// Resolves one slot of the access-point to node link. Noiseless: a
/// transmission is lost exactly when the jammer sits on its channel.
SlotOutcome resolve_slot(ChannelId tx_channel, bool tx_active, std::optional<ChannelId> jam_channel,
                         const RadioProfile& profile);

/// Level sensed on `channel` by a passive listener when the only emitter of
/// interest is on `emitter` (or nobody emits).
double sense_channel(ChannelId channel, std::optional<ChannelId> emitter,
                     const RadioProfile& profile) noexcept;

/// 1 iff the jammer sensed the victim on the channel it jammed.
int jammer_reward(const SlotOutcome& outcome, const RadioProfile& profile) noexcept;

}  // namespace hopwar
