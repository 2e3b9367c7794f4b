#include "hopwar/phy.hpp"

namespace hopwar {

SlotOutcome resolve_slot(ChannelId tx_channel, bool tx_active, std::optional<ChannelId> jam_channel,
                         const RadioProfile& profile) {
    SlotOutcome out;
    out.tx_channel = tx_channel;
    out.jam_channel = jam_channel;
    if (!tx_active) {
        out.rssi_receiver = profile.rssi_idle;
        out.rssi_jammer = profile.rssi_idle;
        return out;
    }
    if (jam_channel && *jam_channel == tx_channel) {
        out.jammed = true;
        out.rssi_receiver = profile.rssi_jammed;
        out.rssi_jammer = profile.rssi_occupied;
    } else {
        out.delivered = true;
        out.rssi_receiver = profile.rssi_clean;
        out.rssi_jammer = profile.rssi_idle;
    }
    return out;
}

double sense_channel(ChannelId channel, std::optional<ChannelId> emitter,
                     const RadioProfile& profile) noexcept {
    return (emitter && *emitter == channel) ? profile.rssi_occupied : profile.rssi_idle;
}

int jammer_reward(const SlotOutcome& outcome, const RadioProfile& profile) noexcept {
    if (!outcome.jam_channel) {
        return 0;
    }
    return outcome.rssi_jammer > profile.occupancy_threshold ? 1 : 0;
}

}  // namespace hopwar
