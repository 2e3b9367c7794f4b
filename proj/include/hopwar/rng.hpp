#pragma once

#include <cstdint>
#include <random>

namespace hopwar {

/// SplitMix64 finalizer. Used to derive independent sub-stream seeds from a
/// master seed so that each simulation component owns its own generator.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stream keys for the per-component generators of one run.
enum class StreamKey : std::uint64_t {
    Defender = 0x6465666eULL,
    Attacker = 0x6174746bULL,
    Phy = 0x70687900ULL,
};

constexpr std::uint64_t derive_seed(std::uint64_t master, StreamKey key) noexcept {
    return splitmix64(splitmix64(master) ^ static_cast<std::uint64_t>(key));
}

/// Seeded random stream with platform-independent derived variates.
///
/// The standard library's distribution objects are implementation-defined, so
/// every variate used by the simulator is derived here from raw mt19937_64
/// output. Identical seeds give identical sequences on every toolchain.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on the open interval (0, 1).
    double uniform_open() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal variate (Marsaglia polar method, spare value cached).
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace hopwar
