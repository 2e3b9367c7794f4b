#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hopwar/phy.hpp"

namespace hopwar {

/// Radio power draw per state, watts (2.4 GHz figures of the reference NIC).
struct PowerProfile {
    double p_tx = 0.67;
    double p_rx = 0.34;
    double p_idle = 0.30;
    double p_sleep = 0.001;
};

/// Airtime of one data frame and one ACK, seconds.
struct TimingProfile {
    double t_tx_data = 0.00397;
    double t_rx_data = 0.00695;
    double t_tx_ack = 0.00002;
    double t_rx_ack = 0.00003;
};

/// Reference per-retransmission energy. Direct substitution of the default
/// profiles gives 0.0050465 J; the two differ by about 3.4e-6 J.
inline constexpr double kReferenceRetxEnergyJ = 0.0050431;

/// Energy of one retransmission carrying `r_data` data frames and `r_ack`
/// acknowledgements.
double retx_energy(const TimingProfile& timing, const PowerProfile& power, std::uint64_t r_data,
                   std::uint64_t r_ack) noexcept;

/// Seconds spent per radio state plus the power ratings to price them.
struct EnergyLedger {
    double time_tx = 0.0;
    double time_rx = 0.0;
    double time_idle = 0.0;
    double time_sleep = 0.0;
    PowerProfile power;

    /// Books the airtime of one retransmission (one data frame, one ACK).
    void add_retransmission(const TimingProfile& timing) noexcept;
};

double total_energy(const EnergyLedger& ledger) noexcept;

/// jammed / transmitted, 0 when nothing was transmitted. Throws
/// std::logic_error when jammed exceeds transmitted.
double success_rate(std::uint64_t jammed, std::uint64_t transmitted);

/// One point of a run's time series.
struct PdrSample {
    double t_s = 0.0;
    double pdr = 1.0;
    ChannelId tx_channel = 0;
    std::optional<ChannelId> jam_channel;
    SlotResult outcome = SlotResult::Idle;
};

struct RunMetrics {
    std::uint64_t seed = 0;
    std::vector<PdrSample> pdr_series;
    std::uint64_t transmitted = 0;
    std::uint64_t delivered = 0;
    std::uint64_t jammed = 0;
    double success_rate = 0.0;
    std::uint64_t retransmissions = 0;
    std::uint64_t detections = 0;
    std::uint64_t hops = 0;
    double extra_energy_j = 0.0;
    EnergyLedger energy;
    /// Cumulative delivered / transmitted over the whole run.
    double final_pdr = 1.0;
    /// Mean of the windowed PDR samples taken after the attack started; the
    /// whole series when the attack never starts.
    double mean_pdr = 1.0;
    /// Fraction of post-attack-start slots in which the jammer emitted.
    double attacker_duty_cycle = 0.0;
};

}  // namespace hopwar
