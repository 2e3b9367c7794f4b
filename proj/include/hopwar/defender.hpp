#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "hopwar/bandit.hpp"
#include "hopwar/phy.hpp"
#include "hopwar/rng.hpp"

namespace hopwar {

/// Sliding record of per-slot delivery booleans and the PDR threshold.
struct DetectorState {
    std::deque<bool> window;
    std::size_t window_len = 100;
    double threshold = 0.80;
    std::size_t delivered_in_window = 0;
    /// Clear the window after each detection. Off by default: the victim
    /// keeps re-evaluating the same evidence after a hop.
    bool reset_on_detect = false;

    DetectorState() = default;
    DetectorState(std::size_t len, double delta, bool reset = false);

    /// Pushes one delivery boolean, evicting the oldest beyond window_len.
    void push(bool delivered);
    void clear() noexcept;
};

/// PDR of the window; 1.0 when the window is empty.
double pdr(const DetectorState& detector) noexcept;

enum class HopStrategy { RandomHop, SmartHop };

struct DefenderState {
    std::size_t num_channels = 0;
    ChannelId current_channel = 0;
    DetectorState detector;
    HopStrategy strategy = HopStrategy::RandomHop;
    std::optional<BanditState> hop_bandit;  // present iff SmartHop
    std::uint64_t detections = 0;
    std::uint64_t retransmit_queue = 0;
    std::uint64_t hop_failures = 0;
};

DefenderState make_defender(std::size_t num_channels, HopStrategy strategy,
                            DetectorState detector, ChannelId start_channel = 0);

/// Records the slot's outcome and evaluates the detector. Detection needs a
/// strict `pdr < threshold` and at least ceil(window_len / 2) samples. A
/// jammed slot queues one retransmission. An idle slot records nothing.
bool record_and_detect(DefenderState& state, const SlotOutcome& outcome);

/// Rejection-samples a channel uniformly over all channels until an
/// available one is drawn. The current channel counts as unavailable unless
/// it is the only available channel. Returns nullopt and leaves the state
/// untouched when no channel is available.
std::optional<ChannelId> hop_random(DefenderState& state, const std::vector<bool>& availability,
                                    RandomStream& rng);

/// Thompson selection over the hop bandit restricted to available channels
/// other than the current one (the current channel is kept only if it is
/// the sole candidate). Returns nullopt when no channel is available.
std::optional<ChannelId> hop_smart(DefenderState& state, const std::vector<bool>& availability,
                                   RandomStream& rng);

/// Unrestricted Thompson selection over the hop bandit.
ChannelId hop_smart(DefenderState& state, RandomStream& rng);

/// Feeds one slot's delivery result to the smart-hop learner (no-op for
/// RandomHop): reward 1 for a delivered packet, 0 for a jammed one.
void feed_hop_reward(DefenderState& state, const SlotOutcome& outcome);

/// Takes one packet off the retransmission queue if any is pending.
bool pop_retransmission(DefenderState& state) noexcept;

}  // namespace hopwar
