#include "hopwar/bandit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hopwar {

BanditState new_bandit(std::size_t num_arms) {
    if (num_arms == 0) {
        throw std::invalid_argument("new_bandit: at least one arm is required");
    }
    BanditState state;
    state.arms.assign(num_arms, BetaArm{});
    return state;
}

double sample_gamma(double shape, RandomStream& rng) {
    if (!(shape > 0.0) || !std::isfinite(shape)) {
        throw std::invalid_argument("sample_gamma: shape must be positive and finite");
    }
    if (shape < 1.0) {
        const double boosted = sample_gamma(shape + 1.0, rng);
        return boosted * std::pow(rng.uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

double sample_beta(double alpha, double beta, RandomStream& rng) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("sample_beta: shape parameters must be positive");
    }
    const double x = sample_gamma(alpha, rng);
    const double y = sample_gamma(beta, rng);
    return x / (x + y);
}

std::size_t select_arm(const BanditState& state, RandomStream& rng) {
    std::size_t best = 0;
    double best_draw = -1.0;
    for (std::size_t i = 0; i < state.arms.size(); ++i) {
        const double draw = sample_beta(state.arms[i].alpha, state.arms[i].beta, rng);
        if (draw > best_draw) {
            best_draw = draw;
            best = i;
        }
    }
    return best;
}

std::size_t select_arm_among(const BanditState& state, const std::vector<bool>& eligible,
                             RandomStream& rng) {
    if (eligible.size() != state.arms.size()) {
        throw std::invalid_argument("select_arm_among: mask size does not match arm count");
    }
    std::size_t best = state.arms.size();
    double best_draw = -1.0;
    for (std::size_t i = 0; i < state.arms.size(); ++i) {
        const double draw = sample_beta(state.arms[i].alpha, state.arms[i].beta, rng);
        if (eligible[i] && draw > best_draw) {
            best_draw = draw;
            best = i;
        }
    }
    return best;
}

void update(BanditState& state, std::size_t arm, int reward) {
    if (arm >= state.arms.size()) {
        throw std::out_of_range("bandit update: arm " + std::to_string(arm) + " out of range");
    }
    if (reward != 0 && reward != 1) {
        throw std::invalid_argument("bandit update: reward must be 0 or 1");
    }
    BetaArm& a = state.arms[arm];
    a.alpha += reward;
    a.beta += 1 - reward;
    a.pulls += 1;
    a.successes += static_cast<std::uint64_t>(reward);
    state.total_selections += 1;
}

double posterior_mean(const BetaArm& arm) noexcept {
    return arm.alpha / (arm.alpha + arm.beta);
}

}  // namespace hopwar
