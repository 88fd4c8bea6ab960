#ifndef LPLMS_HARNESS_HPP
#define LPLMS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lplms/filters.hpp"
#include "lplms/signals.hpp"

namespace lplms {

/// Full experiment description. All algorithms share mu, and the p-norm
/// family shares epsilon and p; rho is a per-stage parameter unless a
/// per-algorithm value overrides it for every stage.
struct Scenario {
    StageSchedule schedule;
    InputModel input;
    NoiseModel noise;
    std::vector<LpParams> per_stage_params;       // one per stage; mu/epsilon/p equal
    std::map<Algorithm, double> per_algorithm_rho; // optional alternative rho reading
    std::vector<Algorithm> algorithms;
    int ngc_window = 5;
    bool lagged_comparator = false;
    int runs = 1;
    std::uint64_t master_seed = 1;
    std::string system_file; // source path of fixed taps, if any (for serialization)

    /// Throws std::invalid_argument on the first violated invariant.
    void validate() const;

    /// rho used by a given algorithm in a given stage.
    double rho_for(Algorithm alg, std::size_t stage) const;
};

/// Per-iteration squared deviation averaged over Monte-Carlo runs.
struct MsdCurve {
    Algorithm algorithm = Algorithm::Lms;
    std::vector<double> per_iteration_msd;
    std::vector<double> steady_state_msd_per_stage; // empty if any stage < 50 iterations
};

/// Everything random a single trial consumes, materialized up front so every
/// algorithm sees the identical systems, inputs and noise.
struct TrialSignals {
    std::vector<WeightVector> systems;  // one per stage
    std::vector<double> input;          // total_iterations + n_taps - 1 samples
    std::vector<double> noise;          // one per iteration
};

TrialSignals make_trial_signals(const Scenario& scenario, std::uint64_t trial_seed);

/// Runs one identification trial on the given signals, starting from w_0 = 0,
/// and returns ||w_true(k) - w_k||_2^2 after every update. The deviation is
/// always measured against the stage that is active at iteration k.
std::vector<double> run_trial_on(const Scenario& scenario, Algorithm alg,
                                 const TrialSignals& signals);

/// make_trial_signals + run_trial_on.
std::vector<double> run_trial(const Scenario& scenario, Algorithm alg,
                              std::uint64_t trial_seed);

/// Per-iteration mean of squared deviations over scenario.runs trials. Trial
/// seeds derive from the master seed by trial index; within a trial every
/// algorithm consumes the same signals.
std::map<Algorithm, MsdCurve> run_monte_carlo(const Scenario& scenario);

/// Per-stage mean of the final 10% of each stage's iterations.
/// stage_lengths gives the iteration count of each stage, in order; each must
/// be >= 50.
std::vector<double> steady_state_msd(const std::vector<double>& per_iteration_msd,
                                     const std::vector<int>& stage_lengths);

double msd_in_db(double msd);

} // namespace lplms

#endif // LPLMS_HARNESS_HPP
