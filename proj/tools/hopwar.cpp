#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hopwar/config.hpp"
#include "hopwar/engine.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct RunArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::uint64_t runs = 1;
    std::optional<std::string> attacker;
    std::optional<std::string> defender;
    std::string out_dir = ".";
    bool timeseries = false;
    unsigned threads = 0;
};

void write_file(const fs::path& path, const auto& emit) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw hopwar::IoError("cannot open " + path.string() + " for writing");
    emit(out);
    out.close();
    if (!out) throw hopwar::IoError("failed writing " + path.string());
}

int run_command(const RunArgs& args) {
    hopwar::ScenarioConfig config = hopwar::load_config(args.config_path);
    if (args.seed) config.seed = *args.seed;
    if (args.attacker) {
        auto s = hopwar::parse_attack_strategy(*args.attacker);
        if (!s) throw hopwar::ConfigError("unknown attacker strategy '" + *args.attacker + "'");
        config.attacker_strategy = *s;
    }
    if (args.defender) {
        auto s = hopwar::parse_hop_strategy(*args.defender);
        if (!s) throw hopwar::ConfigError("unknown defender strategy '" + *args.defender + "'");
        config.defender_strategy = *s;
    }
    hopwar::validate(config);

    const fs::path out_dir(args.out_dir);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw hopwar::IoError("cannot create " + out_dir.string() + ": " + ec.message());

    const hopwar::BatchResult batch =
        hopwar::run_batch(config, args.runs, config.seed, args.threads);

    write_file(out_dir / "summary.csv",
               [&](std::ostream& os) { hopwar::emit_summary(batch, os); });
    if (args.timeseries) {
        for (const auto& run : batch.per_run) {
            write_file(out_dir / ("run_" + std::to_string(run.seed) + ".csv"),
                       [&](std::ostream& os) { hopwar::emit_timeseries(run, os); });
        }
    }
    std::cout << "config " << batch.config_fingerprint << ", " << batch.per_run.size()
              << " run(s), mean_pdr " << hopwar::format_double(batch.mean_pdr.mean)
              << ", success_rate " << hopwar::format_double(batch.success_rate.mean) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopwar: slot-level jamming and channel hopping simulator"};
    app.require_subcommand(1);

    RunArgs args;
    CLI::App* run = app.add_subcommand("run", "simulate a scenario and write CSV results");
    run->add_option("--config", args.config_path, "flat JSON scenario file")->required();
    run->add_option("--seed", args.seed, "master seed (overrides the config)");
    run->add_option("--runs", args.runs, "number of runs, seeds seed..seed+runs-1")
        ->check(CLI::PositiveNumber);
    run->add_option("--attacker", args.attacker,
                    "random | reactive | folpetti | phased | optimal");
    run->add_option("--defender", args.defender, "random_hop | smart_hop");
    run->add_option("--out-dir", args.out_dir, "output directory");
    run->add_flag("--timeseries", args.timeseries, "also write run_<seed>.csv per run");
    run->add_option("--threads", args.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        return run_command(args);
    } catch (const hopwar::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const hopwar::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
