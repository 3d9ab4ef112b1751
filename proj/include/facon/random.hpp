#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "facon/algebra.hpp"

namespace facon {

/// Sample points use numerators in [-50, 50] and denominators in [1, 20].
inline constexpr std::int64_t kSampleNumeratorBound = 50;
inline constexpr std::int64_t kSampleDenominatorBound = 20;

/// Deterministic generator derived from a run seed and a task key, so results
/// do not depend on the order in which tasks are evaluated.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::string_view task) : engine_(mix(seed, task)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi]. Modulo reduction keeps the sequence
    /// identical across standard library implementations.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    BigRational rational() {
        const std::int64_t num = uniform(-kSampleNumeratorBound, kSampleNumeratorBound);
        const std::int64_t den = uniform(1, kSampleDenominatorBound);
        return make_rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    }

    /// Magnitude in [0.5, 1.5] with a random sign.
    double unit_coefficient() {
        const double magnitude = 0.5 + static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return (engine_() & 1u) ? magnitude : -magnitude;
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::string_view task) {
        std::uint64_t h = 1469598103934665603ull;   // FNV-1a
        for (unsigned char ch : task) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        std::uint64_t z = seed ^ h;   // splitmix64 finalizer
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace facon
