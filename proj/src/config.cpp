#include "hopwar/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "json.hpp"

namespace hopwar {

using nlohmann::json;

std::string_view to_string(HopStrategy s) noexcept {
    return s == HopStrategy::SmartHop ? "smart_hop" : "random_hop";
}

std::optional<HopStrategy> parse_hop_strategy(std::string_view name) noexcept {
    if (name == "random_hop") return HopStrategy::RandomHop;
    if (name == "smart_hop") return HopStrategy::SmartHop;
    return std::nullopt;
}

namespace {

constexpr double kTimeEps = 1e-9;

}  // namespace

std::uint64_t ScenarioConfig::num_slots() const {
    return static_cast<std::uint64_t>(std::ceil(sim_duration_s / slot_s - kTimeEps));
}

std::uint64_t ScenarioConfig::slot_at(double t) const {
    if (t <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::ceil(t / slot_s - kTimeEps));
}

void validate(const ScenarioConfig& c) {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (c.num_channels == 0) fail("num_channels must be positive");
    if (!(c.slot_s > 0.0) || !std::isfinite(c.slot_s)) fail("slot_s must be positive");
    if (!(c.sim_duration_s > 0.0) || !std::isfinite(c.sim_duration_s)) {
        fail("sim_duration_s must be positive");
    }
    const double ratio = c.sim_duration_s / c.slot_s;
    if (std::abs(ratio - std::round(ratio)) > 1e-6 * std::max(1.0, ratio)) {
        fail("slot_s must divide sim_duration_s evenly");
    }
    if (!(c.attack_start_s >= 0.0)) fail("attack_start_s must be nonnegative");
    if (!(c.hop_enable_s >= 0.0)) fail("hop_enable_s must be nonnegative");
    if (!(c.detection_threshold > 0.0 && c.detection_threshold < 1.0)) {
        fail("detection_threshold must lie in (0, 1)");
    }
    if (c.detection_window == 0) fail("detection_window must be positive");
    if (!c.radio.is_well_posed()) {
        fail("radio profile must satisfy rssi_occupied > occupancy_threshold > rssi_idle");
    }
    const PowerProfile& p = c.power;
    if (p.p_tx < 0 || p.p_rx < 0 || p.p_idle < 0 || p.p_sleep < 0) fail("powers must be nonnegative");
    const TimingProfile& t = c.timing;
    if (!(t.t_tx_data > 0 && t.t_rx_data > 0 && t.t_tx_ack > 0 && t.t_rx_ack > 0)) {
        fail("timing profile entries must be positive");
    }
    const AttackerKnobs& k = c.attacker_knobs;
    if (k.idle_trigger == 0 || k.listen_len == 0 || k.eval_len == 0) {
        fail("idle_trigger, listen_len and eval_len must be positive");
    }
    if (!(k.retrain_trigger >= 0.0 && k.retrain_trigger <= 1.0)) {
        fail("retrain_trigger must lie in [0, 1]");
    }
}

namespace {

// One accessor pair per config key, shared by the parser and the dumper.
struct Field {
    std::function<void(ScenarioConfig&, const json&)> read;
    std::function<json(const ScenarioConfig&)> write;
};

template <typename T>
T as(const json& v, const std::string& key) {
    try {
        if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) throw ConfigError(key + ": expected true or false");
            return v.get<bool>();
        } else if constexpr (std::is_integral_v<T>) {
            // nlohmann stores nonnegative integer literals as unsigned.
            if (!v.is_number_unsigned()) {
                throw ConfigError(key + ": expected a nonnegative integer");
            }
            return static_cast<T>(v.get<std::uint64_t>());
        } else {
            if (!v.is_number()) throw ConfigError(key + ": expected a number");
            return v.get<T>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

#define HOPWAR_FIELD(name, member, type)                                              \
    {                                                                                 \
        name, Field {                                                                 \
            [](ScenarioConfig& c, const json& v) { c.member = as<type>(v, name); },   \
                [](const ScenarioConfig& c) { return json(c.member); }                \
        }                                                                             \
    }

const std::map<std::string, Field>& fields() {
    static const std::map<std::string, Field> table = {
        HOPWAR_FIELD("num_channels", num_channels, std::size_t),
        HOPWAR_FIELD("sim_duration_s", sim_duration_s, double),
        HOPWAR_FIELD("slot_s", slot_s, double),
        HOPWAR_FIELD("attack_start_s", attack_start_s, double),
        HOPWAR_FIELD("hop_enable_s", hop_enable_s, double),
        HOPWAR_FIELD("detection_threshold", detection_threshold, double),
        HOPWAR_FIELD("detection_window", detection_window, std::size_t),
        HOPWAR_FIELD("reset_window_on_detect", reset_window_on_detect, bool),
        HOPWAR_FIELD("rssi_clean", radio.rssi_clean, double),
        HOPWAR_FIELD("rssi_jammed", radio.rssi_jammed, double),
        HOPWAR_FIELD("rssi_idle", radio.rssi_idle, double),
        HOPWAR_FIELD("rssi_occupied", radio.rssi_occupied, double),
        HOPWAR_FIELD("occupancy_threshold", radio.occupancy_threshold, double),
        HOPWAR_FIELD("p_tx", power.p_tx, double),
        HOPWAR_FIELD("p_rx", power.p_rx, double),
        HOPWAR_FIELD("p_idle", power.p_idle, double),
        HOPWAR_FIELD("p_sleep", power.p_sleep, double),
        HOPWAR_FIELD("t_tx_data", timing.t_tx_data, double),
        HOPWAR_FIELD("t_rx_data", timing.t_rx_data, double),
        HOPWAR_FIELD("t_tx_ack", timing.t_tx_ack, double),
        HOPWAR_FIELD("t_rx_ack", timing.t_rx_ack, double),
        HOPWAR_FIELD("idle_trigger", attacker_knobs.idle_trigger, std::uint32_t),
        HOPWAR_FIELD("listen_len", attacker_knobs.listen_len, std::uint32_t),
        HOPWAR_FIELD("eval_len", attacker_knobs.eval_len, std::uint32_t),
        HOPWAR_FIELD("retrain_trigger", attacker_knobs.retrain_trigger, double),
        HOPWAR_FIELD("seed", seed, std::uint64_t),
        HOPWAR_FIELD("packet_size_octets", packet_size_octets, std::uint32_t),
        {"defender_strategy",
         Field{[](ScenarioConfig& c, const json& v) {
                   if (!v.is_string()) throw ConfigError("defender_strategy: expected a string");
                   auto s = parse_hop_strategy(v.get<std::string>());
                   if (!s) {
                       throw ConfigError("defender_strategy: unknown strategy '" +
                                         v.get<std::string>() + "'");
                   }
                   c.defender_strategy = *s;
               },
               [](const ScenarioConfig& c) {
                   return json(std::string(to_string(c.defender_strategy)));
               }}},
        {"attacker_strategy",
         Field{[](ScenarioConfig& c, const json& v) {
                   if (!v.is_string()) throw ConfigError("attacker_strategy: expected a string");
                   auto s = parse_attack_strategy(v.get<std::string>());
                   if (!s) {
                       throw ConfigError("attacker_strategy: unknown strategy '" +
                                         v.get<std::string>() + "'");
                   }
                   c.attacker_strategy = *s;
               },
               [](const ScenarioConfig& c) {
                   return json(std::string(to_string(c.attacker_strategy)));
               }}},
    };
    return table;
}

#undef HOPWAR_FIELD

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a flat JSON object");
    }
    ScenarioConfig config;
    const auto& table = fields();
    for (const auto& [key, value] : doc.items()) {
        auto it = table.find(key);
        if (it == table.end()) {
            throw ConfigError("unknown config key '" + key + "'");
        }
        it->second.read(config, value);
    }
    validate(config);
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string dump_config(const ScenarioConfig& config) {
    json doc = json::object();
    for (const auto& [key, field] : fields()) {
        doc[key] = field.write(config);
    }
    return doc.dump(2);
}

std::string fingerprint(const ScenarioConfig& config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : dump_config(config)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

}  // namespace hopwar
