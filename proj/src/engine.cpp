#include "hopwar/engine.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "hopwar/attacker.hpp"
#include "hopwar/defender.hpp"
#include "hopwar/phy.hpp"
#include "hopwar/rng.hpp"

namespace hopwar {

namespace {

std::vector<bool> sense_availability(std::size_t num_channels,
                                     std::optional<ChannelId> jammer_channel,
                                     const RadioProfile& radio) {
    std::vector<bool> available(num_channels);
    for (ChannelId c = 0; c < num_channels; ++c) {
        available[c] = sense_channel(c, jammer_channel, radio) <= radio.occupancy_threshold;
    }
    return available;
}

}  // namespace

RunMetrics run_scenario(const ScenarioConfig& config) {
    validate(config);

    const std::uint64_t num_slots = config.num_slots();
    const std::uint64_t attack_slot = config.slot_at(config.attack_start_s);
    const std::uint64_t hop_slot = config.slot_at(config.hop_enable_s);
    const std::uint64_t sample_every =
        std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(1.0 / config.slot_s)));
    const double sample_period = static_cast<double>(sample_every) * config.slot_s;

    RandomStream defender_rng(derive_seed(config.seed, StreamKey::Defender));
    RandomStream attacker_rng(derive_seed(config.seed, StreamKey::Attacker));

    DefenderState defender = make_defender(
        config.num_channels, config.defender_strategy,
        DetectorState(config.detection_window, config.detection_threshold,
                      config.reset_window_on_detect));
    AttackerState attacker = make_attacker(config.attacker_strategy, config.num_channels,
                                           config.attacker_knobs, config.attack_start_s);

    RunMetrics m;
    m.seed = config.seed;
    m.energy.power = config.power;
    m.pdr_series.reserve(num_slots / sample_every + 1);

    bool hop_pending = false;
    std::optional<ChannelId> last_jam;
    std::uint64_t retransmissions_sent = 0;

    for (std::uint64_t k = 0; k < num_slots; ++k) {
        // (1) defender channel for this slot
        if (hop_pending && k >= hop_slot) {
            const auto available =
                sense_availability(config.num_channels, last_jam, config.radio);
            const auto hopped = defender.strategy == HopStrategy::SmartHop
                                    ? hop_smart(defender, available, defender_rng)
                                    : hop_random(defender, available, defender_rng);
            if (hopped) ++m.hops;
        }
        hop_pending = false;

        // (2) attacker action
        AttackerAction action;
        if (k >= attack_slot) {
            action = attacker_act(attacker, defender.current_channel, attacker_rng);
        }

        // (3) one packet per slot; a pending retransmission takes the slot
        if (pop_retransmission(defender)) ++retransmissions_sent;
        const SlotOutcome outcome =
            resolve_slot(defender.current_channel, true, action.jam, config.radio);

        // (4) defender bookkeeping
        hop_pending = record_and_detect(defender, outcome);
        feed_hop_reward(defender, outcome);
        if (outcome.jammed) m.energy.add_retransmission(config.timing);

        // (5) attacker feedback
        attacker_observe(attacker, action, outcome, config.radio);
        last_jam = action.jam;

        // (6) metrics
        if (outcome.transmitted()) ++m.transmitted;
        if (outcome.delivered) ++m.delivered;
        if (outcome.jammed) ++m.jammed;
        if ((k + 1) % sample_every == 0) {
            PdrSample s;
            s.t_s = static_cast<double>((k + 1) / sample_every) * sample_period;
            s.pdr = pdr(defender.detector);
            s.tx_channel = outcome.tx_channel;
            s.jam_channel = action.jam;
            s.outcome = outcome.result();
            m.pdr_series.push_back(s);
        }
    }

    m.retransmissions = retransmissions_sent + defender.retransmit_queue;
    m.detections = defender.detections;
    m.success_rate = success_rate(m.jammed, m.transmitted);
    m.final_pdr = m.transmitted == 0 ? 1.0
                                     : static_cast<double>(m.delivered) /
                                           static_cast<double>(m.transmitted);
    m.extra_energy_j = static_cast<double>(m.retransmissions) *
                       retx_energy(config.timing, config.power, 1, 1);
    m.attacker_duty_cycle = attacker.duty_cycle();

    double sum = 0.0;
    std::size_t count = 0;
    for (const PdrSample& s : m.pdr_series) {
        if (s.t_s > config.attack_start_s + 1e-9) {
            sum += s.pdr;
            ++count;
        }
    }
    if (count == 0) {
        for (const PdrSample& s : m.pdr_series) sum += s.pdr;
        count = m.pdr_series.size();
    }
    m.mean_pdr = count == 0 ? 1.0 : sum / static_cast<double>(count);
    return m;
}

namespace {

template <typename Getter>
MetricSummary summarize(const std::vector<RunMetrics>& runs, Getter get) {
    MetricSummary s;
    if (runs.empty()) return s;
    double sum = 0.0;
    for (const auto& r : runs) sum += get(r);
    s.mean = sum / static_cast<double>(runs.size());
    if (runs.size() > 1) {
        double sq = 0.0;
        for (const auto& r : runs) {
            const double d = get(r) - s.mean;
            sq += d * d;
        }
        s.stddev = std::sqrt(sq / static_cast<double>(runs.size() - 1));
    }
    return s;
}

}  // namespace

void aggregate(BatchResult& b) {
    const auto& r = b.per_run;
    b.mean_pdr = summarize(r, [](const RunMetrics& m) { return m.mean_pdr; });
    b.final_pdr = summarize(r, [](const RunMetrics& m) { return m.final_pdr; });
    b.success_rate = summarize(r, [](const RunMetrics& m) { return m.success_rate; });
    b.retransmissions = summarize(
        r, [](const RunMetrics& m) { return static_cast<double>(m.retransmissions); });
    b.detections =
        summarize(r, [](const RunMetrics& m) { return static_cast<double>(m.detections); });
    b.extra_energy_j = summarize(r, [](const RunMetrics& m) { return m.extra_energy_j; });
}

BatchResult run_batch(const ScenarioConfig& config, std::uint64_t runs, std::uint64_t base_seed,
                      unsigned threads) {
    if (runs == 0) {
        throw ConfigError("run count must be at least 1");
    }
    validate(config);

    BatchResult batch;
    batch.config = config;
    batch.config.seed = base_seed;
    batch.config_fingerprint = fingerprint(batch.config);
    batch.per_run.resize(runs);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, runs));

    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> abort{false};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::uint64_t error_seed = 0;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= runs || abort.load()) return;
            ScenarioConfig c = config;
            c.seed = base_seed + i;
            try {
                batch.per_run[i] = run_scenario(c);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error || c.seed < error_seed) {
                    error = std::current_exception();
                    error_seed = c.seed;
                }
                abort.store(true);
                return;
            }
        }
    };

    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("run with seed " + std::to_string(error_seed) +
                                     " failed: " + e.what());
        }
    }
    aggregate(batch);
    return batch;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    std::string out(buf, res.ptr);
    if (out.find_first_of(".eEn") == std::string::npos) {
        out += ".0";
    }
    return out;
}

namespace {

std::string_view outcome_name(SlotResult r) {
    switch (r) {
        case SlotResult::Delivered: return "delivered";
        case SlotResult::Jammed: return "jammed";
        case SlotResult::Idle: return "idle";
    }
    return "idle";
}

void check_sink(const std::ostream& sink) {
    if (!sink) throw IoError("failed to write CSV output");
}

}  // namespace

void emit_timeseries(const RunMetrics& metrics, std::ostream& sink) {
    sink << "t_s,pdr,tx_channel,jam_channel,outcome\n";
    for (const PdrSample& s : metrics.pdr_series) {
        sink << format_double(s.t_s) << ',' << format_double(s.pdr) << ',' << s.tx_channel << ',';
        if (s.jam_channel) sink << *s.jam_channel;
        sink << ',' << outcome_name(s.outcome) << '\n';
    }
    sink.flush();
    check_sink(sink);
}

void emit_summary(const BatchResult& batch, std::ostream& sink, bool header) {
    if (batch.per_run.empty()) {
        throw ConfigError("cannot summarize an empty batch");
    }
    if (header) {
        sink << "attacker,defender,runs,mean_pdr,mean_success_rate,mean_retransmissions,"
                "mean_detections,mean_extra_energy_j,std_pdr\n";
    }
    sink << to_string(batch.config.attacker_strategy) << ','
         << to_string(batch.config.defender_strategy) << ',' << batch.per_run.size() << ','
         << format_double(batch.mean_pdr.mean) << ',' << format_double(batch.success_rate.mean)
         << ',' << format_double(batch.retransmissions.mean) << ','
         << format_double(batch.detections.mean) << ',' << format_double(batch.extra_energy_j.mean)
         << ',' << format_double(batch.mean_pdr.stddev) << '\n';
    sink.flush();
    check_sink(sink);
}

}  // namespace hopwar
