#ifndef LPLMS_SIGNALS_HPP
#define LPLMS_SIGNALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lplms/filters.hpp"
#include "lplms/rng.hpp"

namespace lplms {

/// Description of one true system to identify. Either a random placement of
/// n_nonzero taps with values +/-1, or a fixed tap vector loaded from a file.
struct SparseSystemSpec {
    int n_taps = 0;
    int n_nonzero = 0;
    std::optional<WeightVector> fixed_taps; // overrides random drawing when set

    double sparsity_ratio() const;
};

/// A sequence of systems, each active for a fixed number of iterations.
/// Filters carry their state across stage boundaries unchanged.
struct Stage {
    SparseSystemSpec system;
    int iterations = 0;
};

struct StageSchedule {
    std::vector<Stage> stages;

    int total_iterations() const;
    int n_taps() const; // common tap count, validated elsewhere
};

struct InputModel {
    enum class Kind { WhiteGaussian, Ar1Normalized };

    Kind kind = Kind::WhiteGaussian;
    double variance = 1.0;             // WhiteGaussian
    double ar_coefficient = 0.0;       // Ar1Normalized
    double innovation_variance = 0.0;  // Ar1Normalized
    double output_variance = 1.0;      // Ar1Normalized: variance after rescaling

    static InputModel white(double variance);
    static InputModel ar1(double coefficient, double innovation_variance,
                          double output_variance = 1.0);
};

/// Zero-mean white Gaussian observation noise.
struct NoiseModel {
    double variance = 0.0;
};

/// Draws a system with exactly spec.n_nonzero entries at distinct random
/// positions, each +1 or -1 with equal probability. A fixed-tap spec returns
/// its taps unchanged.
WeightVector draw_system(const SparseSystemSpec& spec, Rng& rng);

/// Input sample stream. WhiteGaussian: i.i.d. N(0, variance). Ar1Normalized:
/// x_{k+1} = a*x_k + u_k from x_0 = 0, a 1000-sample burn-in discarded, then
/// scaled by sqrt(output_variance * (1 - a^2) / innovation_variance) so the
/// stationary variance equals output_variance.
std::vector<double> gen_input(const InputModel& model, int length, Rng& rng);

/// Sliding regressor windows over the input, newest sample first. Yields
/// length - n_taps + 1 windows; the first one appears once a full window of
/// samples exists.
std::vector<WeightVector> gen_regressor_stream(const std::vector<double>& input, int n_taps);

/// System output w'x + n with n ~ N(0, noise.variance).
double measure_output(const WeightVector& w, std::span<const double> x,
                      const NoiseModel& noise, Rng& rng);

/// Reads a 256-tap impulse response, one value per line (whitespace or commas
/// both accepted). Throws on parse failure or length mismatch.
WeightVector load_ecg_ir(const std::string& path);

int count_nonzero(const WeightVector& w);

/// Taps of the bundled ECG-like impulse response: 256 taps, 28 nonzero.
constexpr int kEcgIrTaps = 256;
constexpr int kEcgIrNonzero = 28;

} // namespace lplms

#endif // LPLMS_SIGNALS_HPP
