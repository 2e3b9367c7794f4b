#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hopwar/rng.hpp"

namespace hopwar {

/// Beta-Bernoulli posterior for one arm, starting from the uniform Beta(1,1)
/// prior. alpha = 1 + successes and beta = 1 + pulls - successes always hold.
struct BetaArm {
    double alpha = 1.0;
    double beta = 1.0;
    std::uint64_t pulls = 0;
    std::uint64_t successes = 0;
};

/// One Thompson-sampling learner: a fixed set of arms plus the total number
/// of resolved selections.
struct BanditState {
    std::vector<BetaArm> arms;
    std::uint64_t total_selections = 0;

    [[nodiscard]] std::size_t num_arms() const noexcept { return arms.size(); }
};

/// Fresh learner with `num_arms` Beta(1,1) arms. Throws std::invalid_argument
/// for zero arms.
BanditState new_bandit(std::size_t num_arms);

/// Gamma(shape, 1) variate via the Marsaglia-Tsang squeeze method. Shapes
/// below one are boosted through Gamma(shape + 1) * U^(1/shape).
double sample_gamma(double shape, RandomStream& rng);

/// Beta(alpha, beta) variate as X / (X + Y) with independent Gamma variates.
/// Throws std::invalid_argument for nonpositive shapes.
double sample_beta(double alpha, double beta, RandomStream& rng);

/// Thompson selection: one posterior draw per arm, argmax wins, lowest index
/// on ties. Does not touch any counter; the selection is recorded by update()
/// once its reward is known.
std::size_t select_arm(const BanditState& state, RandomStream& rng);

/// Thompson selection restricted to arms with `eligible[i] == true`. Returns
/// num_arms() when nothing is eligible. Draws a sample for every arm, eligible
/// or not, so stream consumption does not depend on the mask.
std::size_t select_arm_among(const BanditState& state, const std::vector<bool>& eligible,
                             RandomStream& rng);

/// Conjugate posterior update for one resolved selection: the chosen arm
/// moves to (alpha + reward, beta + 1 - reward); every other arm is left as
/// is. Throws std::out_of_range for a bad arm and std::invalid_argument for a
/// reward outside {0, 1}.
void update(BanditState& state, std::size_t arm, int reward);

/// alpha / (alpha + beta).
double posterior_mean(const BetaArm& arm) noexcept;

}  // namespace hopwar
