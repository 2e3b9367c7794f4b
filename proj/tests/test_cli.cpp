#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + HOPWAR_EXE + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hopwar_cli_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    fs::path write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return path / name;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("cli: successful run writes the summary and optional time series") {
    TempDir t;
    const fs::path cfg = t.write("c.json", R"({"sim_duration_s": 30})");
    const fs::path out = t.path / "out";
    CHECK(run("run --config \"" + cfg.string() + "\" --seed 5 --runs 2 --attacker optimal "
              "--defender smart_hop --timeseries --out-dir \"" + out.string() + "\"") == 0);
    CHECK(fs::exists(out / "summary.csv"));
    CHECK(fs::exists(out / "run_5.csv"));
    CHECK(fs::exists(out / "run_6.csv"));
    CHECK(slurp(out / "summary.csv").find("\noptimal,smart_hop,2,") != std::string::npos);
}

TEST_CASE("cli: flags override the file") {
    TempDir t;
    const fs::path cfg =
        t.write("c.json", R"({"sim_duration_s": 20, "attacker_strategy": "random", "seed": 9})");
    const fs::path out = t.path / "out";
    CHECK(run("run --config \"" + cfg.string() + "\" --attacker phased --timeseries --out-dir \"" +
              out.string() + "\"") == 0);
    CHECK(fs::exists(out / "run_9.csv"));
    CHECK(slurp(out / "summary.csv").find("\nphased,random_hop,1,") != std::string::npos);
}

TEST_CASE("cli: configuration errors exit with 1") {
    TempDir t;
    const fs::path good = t.write("good.json", R"({"sim_duration_s": 10})");
    const fs::path unknown = t.write("bad.json", R"({"sim_duration": 10})");
    const std::string out = " --out-dir \"" + (t.path / "o").string() + "\"";
    CHECK(run("run --config \"" + unknown.string() + "\"" + out) == 1);
    CHECK(run("run --config \"" + good.string() + "\" --attacker nobody" + out) == 1);
    CHECK(run("run --config \"" + good.string() + "\" --defender nobody" + out) == 1);
    CHECK(run("run --config \"" + good.string() + "\" --runs 0" + out) == 1);
    CHECK(run("run" + out) == 1);
    CHECK(run("") == 1);
}

TEST_CASE("cli: I/O errors exit with 2") {
    TempDir t;
    const fs::path good = t.write("good.json", R"({"sim_duration_s": 10})");
    CHECK(run("run --config \"" + (t.path / "missing.json").string() + "\"") == 2);
    const fs::path blocker = t.write("file", "x");
    CHECK(run("run --config \"" + good.string() + "\" --out-dir \"" + (blocker / "sub").string() +
              "\"") == 2);
}
