#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hopwar/config.hpp"

using namespace hopwar;

TEST_CASE("defaults are valid and reproduce the reference setup") {
    const ScenarioConfig c;
    CHECK_NOTHROW(validate(c));
    CHECK(c.num_channels == 12);
    CHECK(c.num_slots() == 17900);
    CHECK(c.slot_at(10.0) == 100);
    CHECK(c.slot_at(1.0) == 10);
    CHECK(c.slot_at(0.0) == 0);
    CHECK(c.detection_threshold == 0.8);
}

TEST_CASE("empty object keeps every default") {
    const ScenarioConfig c = parse_config("{}");
    CHECK(dump_config(c) == dump_config(ScenarioConfig{}));
}

TEST_CASE("keys override defaults") {
    const ScenarioConfig c = parse_config(R"({
        "num_channels": 8, "attacker_strategy": "phased", "defender_strategy": "smart_hop",
        "detection_window": 250, "reset_window_on_detect": true, "p_tx": 0.5,
        "listen_len": 400, "seed": 18446744073709551615
    })");
    CHECK(c.num_channels == 8);
    CHECK(c.attacker_strategy == AttackStrategy::Phased);
    CHECK(c.defender_strategy == HopStrategy::SmartHop);
    CHECK(c.detection_window == 250);
    CHECK(c.reset_window_on_detect);
    CHECK(c.power.p_tx == 0.5);
    CHECK(c.attacker_knobs.listen_len == 400);
    CHECK(c.seed == 18446744073709551615ULL);
}

TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parse_config(R"({"detection_windw": 100})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"radio": {"rssi_clean": -40}})"), ConfigError);
}

TEST_CASE("ill-typed values are rejected") {
    CHECK_THROWS_AS(parse_config(R"({"num_channels": "12"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"num_channels": -3})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"num_channels": 2.5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"slot_s": "fast"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"reset_window_on_detect": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"attacker_strategy": "smart"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"defender_strategy": 1})"), ConfigError);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(parse_config("num_channels = 12"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
    CHECK_THROWS_AS(parse_config(""), ConfigError);
}

TEST_CASE("validation catches inconsistent values") {
    CHECK_THROWS_AS(parse_config(R"({"num_channels": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"slot_s": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"slot_s": 0.3, "sim_duration_s": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"detection_threshold": 1.0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"detection_window": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"occupancy_threshold": -30})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"p_rx": -0.1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"t_tx_ack": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"idle_trigger": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"retrain_trigger": 1.2})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"attack_start_s": -1})"), ConfigError);
}

TEST_CASE("dump and parse round-trip") {
    ScenarioConfig c;
    c.num_channels = 5;
    c.attacker_strategy = AttackStrategy::Reactive;
    c.defender_strategy = HopStrategy::SmartHop;
    c.radio.rssi_idle = -97.25;
    c.attacker_knobs.retrain_trigger = 0.125;
    c.seed = 123456789;
    const ScenarioConfig back = parse_config(dump_config(c));
    CHECK(dump_config(back) == dump_config(c));
    CHECK(fingerprint(back) == fingerprint(c));
}

TEST_CASE("fingerprint is stable and sensitive") {
    const ScenarioConfig a;
    ScenarioConfig b;
    b.seed = 2;
    CHECK(fingerprint(a).size() == 16);
    CHECK(fingerprint(a) == fingerprint(ScenarioConfig{}));
    CHECK(fingerprint(a) != fingerprint(b));
}

TEST_CASE("loading files") {
    namespace fs = std::filesystem;
    const fs::path p = fs::temp_directory_path() / "hopwar_config_test.json";
    {
        std::ofstream out(p);
        out << R"({"num_channels": 6})";
    }
    CHECK(load_config(p).num_channels == 6);
    fs::remove(p);
    CHECK_THROWS_AS(load_config(p), IoError);
}

TEST_CASE("hop strategy names round-trip") {
    CHECK(parse_hop_strategy("random_hop") == HopStrategy::RandomHop);
    CHECK(parse_hop_strategy("smart_hop") == HopStrategy::SmartHop);
    CHECK(to_string(HopStrategy::SmartHop) == "smart_hop");
    CHECK_FALSE(parse_hop_strategy("smart").has_value());
}
