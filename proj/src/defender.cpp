#include "hopwar/defender.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopwar {

DetectorState::DetectorState(std::size_t len, double delta, bool reset)
    : window_len(len), threshold(delta), reset_on_detect(reset) {
    if (len == 0) {
        throw std::invalid_argument("detector window must hold at least one slot");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("detection threshold must lie in (0, 1)");
    }
}

void DetectorState::push(bool delivered) {
    window.push_back(delivered);
    if (delivered) ++delivered_in_window;
    while (window.size() > window_len) {
        if (window.front()) --delivered_in_window;
        window.pop_front();
    }
}

void DetectorState::clear() noexcept {
    window.clear();
    delivered_in_window = 0;
}

double pdr(const DetectorState& detector) noexcept {
    if (detector.window.empty()) {
        return 1.0;
    }
    return static_cast<double>(detector.delivered_in_window) /
           static_cast<double>(detector.window.size());
}

DefenderState make_defender(std::size_t num_channels, HopStrategy strategy,
                            DetectorState detector, ChannelId start_channel) {
    if (num_channels == 0) {
        throw std::invalid_argument("defender needs at least one channel");
    }
    if (start_channel >= num_channels) {
        throw std::out_of_range("defender start channel out of range");
    }
    DefenderState state;
    state.num_channels = num_channels;
    state.current_channel = start_channel;
    state.detector = std::move(detector);
    state.strategy = strategy;
    if (strategy == HopStrategy::SmartHop) {
        state.hop_bandit = new_bandit(num_channels);
    }
    return state;
}

bool record_and_detect(DefenderState& state, const SlotOutcome& outcome) {
    if (!outcome.transmitted()) {
        return false;
    }
    DetectorState& det = state.detector;
    det.push(outcome.delivered);
    if (outcome.jammed) {
        ++state.retransmit_queue;
    }
    const std::size_t warmup = (det.window_len + 1) / 2;
    const bool detected = det.window.size() >= warmup && pdr(det) < det.threshold;
    if (detected) {
        ++state.detections;
        if (det.reset_on_detect) {
            det.clear();
        }
    }
    return detected;
}

namespace {

void check_mask(const DefenderState& state, const std::vector<bool>& availability) {
    if (availability.size() != state.num_channels) {
        throw std::invalid_argument("availability mask size does not match channel count");
    }
}

// Available channels other than the current one; the current channel alone
// if nothing else is available.
std::vector<bool> hop_candidates(const DefenderState& state,
                                 const std::vector<bool>& availability) {
    std::vector<bool> candidates = availability;
    candidates[state.current_channel] = false;
    if (std::none_of(candidates.begin(), candidates.end(), [](bool b) { return b; })) {
        candidates[state.current_channel] = availability[state.current_channel];
    }
    return candidates;
}

}  // namespace

std::optional<ChannelId> hop_random(DefenderState& state, const std::vector<bool>& availability,
                                    RandomStream& rng) {
    check_mask(state, availability);
    const std::vector<bool> candidates = hop_candidates(state, availability);
    if (std::none_of(candidates.begin(), candidates.end(), [](bool b) { return b; })) {
        ++state.hop_failures;
        return std::nullopt;
    }
    ChannelId pick = rng.uniform_index(state.num_channels);
    while (!candidates[pick]) {
        pick = rng.uniform_index(state.num_channels);
    }
    state.current_channel = pick;
    return pick;
}

std::optional<ChannelId> hop_smart(DefenderState& state, const std::vector<bool>& availability,
                                   RandomStream& rng) {
    if (!state.hop_bandit) {
        throw std::logic_error("hop_smart requires the SmartHop strategy");
    }
    check_mask(state, availability);
    const std::vector<bool> candidates = hop_candidates(state, availability);
    const std::size_t pick = select_arm_among(*state.hop_bandit, candidates, rng);
    if (pick >= state.num_channels) {
        ++state.hop_failures;
        return std::nullopt;
    }
    state.current_channel = pick;
    return pick;
}

ChannelId hop_smart(DefenderState& state, RandomStream& rng) {
    if (!state.hop_bandit) {
        throw std::logic_error("hop_smart requires the SmartHop strategy");
    }
    state.current_channel = select_arm(*state.hop_bandit, rng);
    return state.current_channel;
}

void feed_hop_reward(DefenderState& state, const SlotOutcome& outcome) {
    if (!state.hop_bandit || !outcome.transmitted()) {
        return;
    }
    update(*state.hop_bandit, outcome.tx_channel, outcome.delivered ? 1 : 0);
}

bool pop_retransmission(DefenderState& state) noexcept {
    if (state.retransmit_queue == 0) {
        return false;
    }
    --state.retransmit_queue;
    return true;
}

}  // namespace hopwar
