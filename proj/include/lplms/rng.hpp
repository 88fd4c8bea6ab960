#ifndef LPLMS_RNG_HPP
#define LPLMS_RNG_HPP

#include <cstdint>
#include <random>

namespace lplms {

/// SplitMix64-style mix of a master seed and a stream index. Used everywhere
/// a sub-stream is derived (trials from the master seed, system/input/noise
/// streams from a trial seed), so results depend only on indices, never on
/// execution order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded generator with explicit sampling routines. std::mt19937_64 has a
/// standardized output sequence, and the transforms below avoid the
/// implementation-defined std::*_distribution classes, so identical seeds
/// give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one fresh pair of uniforms per draw).
    double gaussian() {
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double gaussian(double mean, double stddev) { return mean + stddev * gaussian(); }

    /// Uniform integer in [0, n). The modulo bias is below 2^-57 for n <= 64.
    std::uint64_t bounded(std::uint64_t n) { return engine_() % n; }

    /// Fair coin as +1.0 / -1.0.
    double coin_pm1() { return (engine_() & 1u) ? 1.0 : -1.0; }

private:
    std::mt19937_64 engine_;
};

} // namespace lplms

#endif // LPLMS_RNG_HPP
