#include "hopwar/attacker.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopwar {

std::string_view to_string(AttackStrategy s) noexcept {
    switch (s) {
        case AttackStrategy::Random: return "random";
        case AttackStrategy::Reactive: return "reactive";
        case AttackStrategy::Folpetti: return "folpetti";
        case AttackStrategy::Phased: return "phased";
        case AttackStrategy::Optimal: return "optimal";
    }
    return "unknown";
}

std::optional<AttackStrategy> parse_attack_strategy(std::string_view name) noexcept {
    for (auto s : {AttackStrategy::Random, AttackStrategy::Reactive, AttackStrategy::Folpetti,
                   AttackStrategy::Phased, AttackStrategy::Optimal}) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

AttackerState make_attacker(AttackStrategy strategy, std::size_t num_channels,
                            AttackerKnobs knobs, double active_since) {
    if (num_channels == 0) {
        throw std::invalid_argument("attacker needs at least one channel");
    }
    if (knobs.idle_trigger == 0 || knobs.listen_len == 0 || knobs.eval_len == 0) {
        throw std::invalid_argument("attacker phase lengths must be positive");
    }
    if (!(knobs.retrain_trigger >= 0.0 && knobs.retrain_trigger <= 1.0)) {
        throw std::invalid_argument("retrain_trigger must lie in [0, 1]");
    }
    AttackerState state;
    state.strategy = strategy;
    state.knobs = knobs;
    state.num_channels = num_channels;
    state.active_since = active_since;
    switch (strategy) {
        case AttackStrategy::Folpetti:
            state.bandit = new_bandit(num_channels);
            break;
        case AttackStrategy::Reactive:
            state.phase = AttackPhase::Scanning;
            break;
        case AttackStrategy::Phased:
            state.phase = AttackPhase::Listening;
            state.phase_remaining = knobs.listen_len;
            state.occupancy_counts.assign(num_channels, 0);
            break;
        default:
            break;
    }
    return state;
}

ChannelId step_random(AttackerState& state, RandomStream& rng) {
    state.jam_channel = rng.uniform_index(state.num_channels);
    return *state.jam_channel;
}

std::optional<ChannelId> step_reactive(AttackerState& state, std::optional<bool> activity) {
    const std::size_t m = state.num_channels;
    if (activity) {
        if (state.phase == AttackPhase::Attacking) {
            state.idle_run = *activity ? 0 : state.idle_run + 1;
            if (state.idle_run >= state.knobs.idle_trigger) {
                state.phase = AttackPhase::Scanning;
                state.focus_channel = (state.focus_channel + 1) % m;
                state.idle_run = 0;
                ++state.scans;
            }
        } else if (*activity) {
            state.phase = AttackPhase::Attacking;
            state.idle_run = 0;
        } else {
            state.focus_channel = (state.focus_channel + 1) % m;
        }
    }
    if (state.phase == AttackPhase::Attacking) {
        state.jam_channel = state.focus_channel;
    } else {
        state.jam_channel.reset();
    }
    return state.jam_channel;
}

ChannelId step_folpetti(AttackerState& state, int last_reward, RandomStream& rng) {
    if (!state.bandit) {
        throw std::logic_error("step_folpetti requires a Folpetti attacker");
    }
    if (state.last_arm) {
        update(*state.bandit, *state.last_arm, last_reward);
    }
    const ChannelId arm = select_arm(*state.bandit, rng);
    state.last_arm = arm;
    state.jam_channel = arm;
    return arm;
}

namespace {

ChannelId argmax_lowest(const std::vector<std::uint64_t>& counts) {
    return static_cast<ChannelId>(std::max_element(counts.begin(), counts.end()) - counts.begin());
}

}  // namespace

std::optional<ChannelId> step_phased(AttackerState& state, std::optional<bool> activity) {
    const std::size_t m = state.num_channels;
    const AttackerKnobs& k = state.knobs;
    if (activity) {
        if (state.phase == AttackPhase::Listening) {
            if (*activity) ++state.occupancy_counts[state.focus_channel];
            state.focus_channel = (state.focus_channel + 1) % m;
            if (--state.phase_remaining == 0) {
                state.phase = AttackPhase::Attacking;
                state.eval_window.clear();
                state.eval_hits = 0;
            }
        } else {
            state.eval_window.push_back(*activity);
            if (*activity) ++state.eval_hits;
            if (state.eval_window.size() > k.eval_len) {
                if (state.eval_window.front()) --state.eval_hits;
                state.eval_window.pop_front();
            }
            const double rate = static_cast<double>(state.eval_hits) /
                                static_cast<double>(state.eval_window.size());
            if (state.eval_window.size() == k.eval_len && rate < k.retrain_trigger) {
                state.phase = AttackPhase::Listening;
                state.phase_remaining = k.listen_len;
                std::fill(state.occupancy_counts.begin(), state.occupancy_counts.end(), 0);
                ++state.retrains;
            }
        }
    }
    if (state.phase == AttackPhase::Attacking) {
        state.jam_channel = argmax_lowest(state.occupancy_counts);
    } else {
        state.jam_channel.reset();
    }
    return state.jam_channel;
}

ChannelId step_optimal(AttackerState& state, ChannelId victim_channel) {
    if (victim_channel >= state.num_channels) {
        throw std::out_of_range("step_optimal: victim channel out of range");
    }
    state.jam_channel = victim_channel;
    return victim_channel;
}

AttackerAction attacker_act(AttackerState& state, ChannelId victim_now, RandomStream& rng) {
    AttackerAction action;
    switch (state.strategy) {
        case AttackStrategy::Random:
            action.jam = step_random(state, rng);
            break;
        case AttackStrategy::Reactive:
            action.jam = step_reactive(state, state.last_activity);
            break;
        case AttackStrategy::Folpetti:
            action.jam = step_folpetti(state, state.last_reward, rng);
            break;
        case AttackStrategy::Phased:
            action.jam = step_phased(state, state.last_activity);
            break;
        case AttackStrategy::Optimal:
            action.jam = step_optimal(state, state.genie_view.value_or(victim_now));
            break;
    }
    if (!action.jam) {
        action.listen = state.focus_channel;
    }
    ++state.active_slots;
    if (action.jam) ++state.emitting_slots;
    return action;
}

void attacker_observe(AttackerState& state, const AttackerAction& action,
                      const SlotOutcome& outcome, const RadioProfile& profile) {
    // The genie sees where the victim transmitted once the slot is over.
    if (state.strategy == AttackStrategy::Optimal && outcome.transmitted()) {
        state.genie_view = outcome.tx_channel;
    }
    if (action.jam) {
        state.last_reward = jammer_reward(outcome, profile);
        state.last_activity = state.last_reward == 1;
    } else if (action.listen) {
        const std::optional<ChannelId> emitter =
            outcome.transmitted() ? std::optional<ChannelId>(outcome.tx_channel) : std::nullopt;
        state.last_activity =
            sense_channel(*action.listen, emitter, profile) > profile.occupancy_threshold;
        state.last_reward = 0;
    }
}

}  // namespace hopwar
