#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "hopwar/bandit.hpp"
#include "hopwar/phy.hpp"
#include "hopwar/rng.hpp"

namespace hopwar {

enum class AttackStrategy { Random, Reactive, Folpetti, Phased, Optimal };
enum class AttackPhase { Attacking, Listening, Scanning };

std::string_view to_string(AttackStrategy s) noexcept;
std::optional<AttackStrategy> parse_attack_strategy(std::string_view name) noexcept;

struct AttackerKnobs {
    std::uint32_t idle_trigger = 10;    // silent slots before a reactive re-scan
    std::uint32_t listen_len = 1000;    // phased listening window, slots
    std::uint32_t eval_len = 200;       // phased success-rate window, slots
    double retrain_trigger = 0.3;       // phased success rate that forces a retrain
};

/// Jammer state for all strategies. Fields that a strategy does not use stay
/// at their defaults.
struct AttackerState {
    AttackStrategy strategy = AttackStrategy::Random;
    AttackerKnobs knobs;
    std::size_t num_channels = 0;
    double active_since = 0.0;

    AttackPhase phase = AttackPhase::Attacking;
    std::uint64_t phase_remaining = 0;
    std::optional<ChannelId> jam_channel;   // none while listening or scanning
    ChannelId focus_channel = 0;            // reactive target / scan cursor, phased sweep cursor
    std::optional<BanditState> bandit;      // Folpetti only
    std::vector<std::uint64_t> occupancy_counts;

    // Feedback from the previous slot.
    std::optional<bool> last_activity;
    int last_reward = 0;
    std::optional<ChannelId> last_arm;
    std::optional<ChannelId> genie_view;

    std::uint32_t idle_run = 0;
    std::deque<bool> eval_window;
    std::size_t eval_hits = 0;

    std::uint64_t active_slots = 0;
    std::uint64_t emitting_slots = 0;
    std::uint64_t retrains = 0;
    std::uint64_t scans = 0;

    [[nodiscard]] double duty_cycle() const noexcept {
        return active_slots == 0 ? 0.0
                                 : static_cast<double>(emitting_slots) /
                                       static_cast<double>(active_slots);
    }
};

AttackerState make_attacker(AttackStrategy strategy, std::size_t num_channels,
                            AttackerKnobs knobs = {}, double active_since = 0.0);

/// What the jammer does in one slot: emit on `jam`, or listen on `listen`.
struct AttackerAction {
    std::optional<ChannelId> jam;
    std::optional<ChannelId> listen;
};

// Per-strategy steps. Each consumes the feedback stored by attacker_observe()
// for the previous slot and returns this slot's jam channel.

ChannelId step_random(AttackerState& state, RandomStream& rng);

/// Jams its channel while activity keeps being sensed; after idle_trigger
/// silent slots it scans round-robin, one channel per slot, and resumes
/// jamming on the first channel where activity shows up.
std::optional<ChannelId> step_reactive(AttackerState& state, std::optional<bool> activity);

/// Records the previous selection's reward, then draws this slot's channel.
ChannelId step_folpetti(AttackerState& state, int last_reward, RandomStream& rng);

/// Listen/attack alternation with a tabular occupancy estimate.
std::optional<ChannelId> step_phased(AttackerState& state, std::optional<bool> activity);

/// Genie: jams the channel it was told the victim is on.
ChannelId step_optimal(AttackerState& state, ChannelId victim_channel);

/// Dispatches to the strategy step. `victim_now` is the victim's channel in
/// the current slot; only the genie reads it, and only as a fallback before
/// its first observation.
AttackerAction attacker_act(AttackerState& state, ChannelId victim_now, RandomStream& rng);

/// Stores the jammer-side observation of a resolved slot for the next step.
void attacker_observe(AttackerState& state, const AttackerAction& action,
                      const SlotOutcome& outcome, const RadioProfile& profile);

}  // namespace hopwar
