#include "hopwar/metrics.hpp"

#include <stdexcept>

namespace hopwar {

double retx_energy(const TimingProfile& timing, const PowerProfile& power, std::uint64_t r_data,
                   std::uint64_t r_ack) noexcept {
    const double data = timing.t_tx_data * power.p_tx + timing.t_rx_data * power.p_rx;
    const double ack = timing.t_tx_ack * power.p_tx + timing.t_rx_ack * power.p_rx;
    return static_cast<double>(r_data) * data + static_cast<double>(r_ack) * ack;
}

void EnergyLedger::add_retransmission(const TimingProfile& timing) noexcept {
    time_tx += timing.t_tx_data + timing.t_tx_ack;
    time_rx += timing.t_rx_data + timing.t_rx_ack;
}

double total_energy(const EnergyLedger& ledger) noexcept {
    const PowerProfile& p = ledger.power;
    return p.p_tx * ledger.time_tx + p.p_rx * ledger.time_rx + p.p_idle * ledger.time_idle +
           p.p_sleep * ledger.time_sleep;
}

double success_rate(std::uint64_t jammed, std::uint64_t transmitted) {
    if (jammed > transmitted) {
        throw std::logic_error("success_rate: more jammed packets than transmitted ones");
    }
    if (transmitted == 0) {
        return 0.0;
    }
    return static_cast<double>(jammed) / static_cast<double>(transmitted);
}

}  // namespace hopwar
