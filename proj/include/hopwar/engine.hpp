#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopwar/config.hpp"
#include "hopwar/metrics.hpp"

namespace hopwar {

/// Runs one seeded scenario slot by slot. Per slot: the defender hops if
/// the previous slot raised a detection (and hopping is armed), the attacker
/// acts, the PHY resolves, the defender records and detects, the attacker
/// takes its feedback, and metrics accumulate. Identical configs produce
/// identical metrics. Throws ConfigError before simulating anything.
RunMetrics run_scenario(const ScenarioConfig& config);

struct MetricSummary {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for a single run
};

struct BatchResult {
    ScenarioConfig config;
    std::string config_fingerprint;
    std::vector<RunMetrics> per_run;  // ordered by seed
    MetricSummary mean_pdr;
    MetricSummary final_pdr;
    MetricSummary success_rate;
    MetricSummary retransmissions;
    MetricSummary detections;
    MetricSummary extra_energy_j;
};

/// `runs` scenarios with seeds base_seed, base_seed + 1, ... executed on up
/// to `threads` workers (0 = hardware concurrency). A failing run aborts the
/// batch with a std::runtime_error naming its seed.
BatchResult run_batch(const ScenarioConfig& config, std::uint64_t runs, std::uint64_t base_seed,
                      unsigned threads = 0);

/// Recomputes the aggregate fields of `batch` from its per-run metrics.
void aggregate(BatchResult& batch);

/// Shortest round-trip decimal, always with a fractional part or exponent.
std::string format_double(double value);

/// `t_s,pdr,tx_channel,jam_channel,outcome`, one row per sampling point.
void emit_timeseries(const RunMetrics& metrics, std::ostream& sink);

/// `attacker,defender,runs,mean_pdr,mean_success_rate,mean_retransmissions,
/// mean_detections,mean_extra_energy_j,std_pdr` plus one row.
void emit_summary(const BatchResult& batch, std::ostream& sink, bool header = true);

}  // namespace hopwar
