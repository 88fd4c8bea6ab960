#include "lplms/harness.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lplms {

namespace {

std::vector<int> stage_lengths_of(const StageSchedule& schedule) {
    std::vector<int> lengths;
    lengths.reserve(schedule.stages.size());
    for (const Stage& s : schedule.stages)
        lengths.push_back(s.iterations);
    return lengths;
}

} // namespace

void Scenario::validate() const {
    if (schedule.stages.empty())
        throw std::invalid_argument("scenario has no stages");
    const int n_taps = schedule.stages.front().system.n_taps;
    if (n_taps < 1)
        throw std::invalid_argument("scenario tap count must be >= 1");
    for (const Stage& s : schedule.stages) {
        if (s.system.n_taps != n_taps)
            throw std::invalid_argument("all stages must share the tap count");
        if (s.iterations < 1)
            throw std::invalid_argument("every stage needs at least one iteration");
        if (!s.system.fixed_taps &&
            (s.system.n_nonzero < 0 || s.system.n_nonzero > s.system.n_taps))
            throw std::invalid_argument("stage nonzero count must lie in [0, n_taps]");
        if (s.system.fixed_taps &&
            static_cast<int>(s.system.fixed_taps->size()) != n_taps)
            throw std::invalid_argument("fixed system length does not match the tap count");
    }
    if (per_stage_params.size() != schedule.stages.size())
        throw std::invalid_argument("per-stage parameter count does not match stage count");
    const LpParams& first = per_stage_params.front();
    for (const LpParams& p : per_stage_params) {
        p.validate();
        if (p.mu != first.mu || p.epsilon != first.epsilon || p.p != first.p)
            throw std::invalid_argument("mu, epsilon and p must not vary across stages");
    }
    for (const auto& [alg, rho] : per_algorithm_rho) {
        (void)alg;
        if (!(rho >= 0.0))
            throw std::invalid_argument("per-algorithm rho must be >= 0");
    }
    if (algorithms.empty())
        throw std::invalid_argument("scenario enables no algorithms");
    if (ngc_window < 1)
        throw std::invalid_argument("comparator window must be >= 1");
    if (runs < 1)
        throw std::invalid_argument("runs must be >= 1");
    if (!(noise.variance >= 0.0))
        throw std::invalid_argument("noise variance must be >= 0");
}

double Scenario::rho_for(Algorithm alg, std::size_t stage) const {
    if (alg == Algorithm::Lms)
        return 0.0;
    if (const auto it = per_algorithm_rho.find(alg); it != per_algorithm_rho.end())
        return it->second;
    return per_stage_params.at(stage).rho;
}

TrialSignals make_trial_signals(const Scenario& scenario, std::uint64_t trial_seed) {
    scenario.validate();
    const int n_taps = scenario.schedule.n_taps();
    const int total = scenario.schedule.total_iterations();

    TrialSignals signals;
    Rng system_rng(derive_seed(trial_seed, 0));
    for (const Stage& s : scenario.schedule.stages)
        signals.systems.push_back(draw_system(s.system, system_rng));

    Rng input_rng(derive_seed(trial_seed, 1));
    signals.input = gen_input(scenario.input, total + n_taps - 1, input_rng);

    Rng noise_rng(derive_seed(trial_seed, 2));
    const double noise_std = std::sqrt(scenario.noise.variance);
    signals.noise.resize(total);
    for (double& n : signals.noise)
        n = noise_rng.gaussian(0.0, noise_std);
    return signals;
}

std::vector<double> run_trial_on(const Scenario& scenario, Algorithm alg,
                                 const TrialSignals& signals) {
    const int n_taps = scenario.schedule.n_taps();
    const int total = scenario.schedule.total_iterations();
    if (static_cast<int>(signals.input.size()) != total + n_taps - 1 ||
        static_cast<int>(signals.noise.size()) != total ||
        signals.systems.size() != scenario.schedule.stages.size())
        throw std::invalid_argument("trial signals do not match the scenario");

    const std::vector<WeightVector> regressors = gen_regressor_stream(signals.input, n_taps);

    LpParams params = scenario.per_stage_params.front();
    params.rho = scenario.rho_for(alg, 0);
    FilterState state = make_filter(alg, n_taps, params,
                                    static_cast<std::size_t>(scenario.ngc_window),
                                    scenario.lagged_comparator);

    std::vector<double> deviations(total);
    int k = 0;
    for (std::size_t stage = 0; stage < scenario.schedule.stages.size(); ++stage) {
        const WeightVector& w_true = signals.systems[stage];
        state.params.rho = scenario.rho_for(alg, stage);
        for (int i = 0; i < scenario.schedule.stages[stage].iterations; ++i, ++k) {
            const WeightVector& x = regressors[k];
            double y = signals.noise[k];
            double y_hat = 0.0;
            for (int j = 0; j < n_taps; ++j) {
                y += w_true[j] * x[j];
                y_hat += state.estimate[j] * x[j];
            }
            step_in_place(state, x, y - y_hat);
            double dev = 0.0;
            for (int j = 0; j < n_taps; ++j) {
                const double d = w_true[j] - state.estimate[j];
                dev += d * d;
            }
            deviations[k] = dev;
        }
    }
    return deviations;
}

std::vector<double> run_trial(const Scenario& scenario, Algorithm alg,
                              std::uint64_t trial_seed) {
    return run_trial_on(scenario, alg, make_trial_signals(scenario, trial_seed));
}

std::map<Algorithm, MsdCurve> run_monte_carlo(const Scenario& scenario) {
    scenario.validate();
    const int total = scenario.schedule.total_iterations();

    std::map<Algorithm, MsdCurve> curves;
    for (Algorithm alg : scenario.algorithms) {
        MsdCurve c;
        c.algorithm = alg;
        c.per_iteration_msd.assign(total, 0.0);
        curves[alg] = std::move(c);
    }

    for (int trial = 0; trial < scenario.runs; ++trial) {
        const TrialSignals signals =
            make_trial_signals(scenario, derive_seed(scenario.master_seed, trial));
        for (Algorithm alg : scenario.algorithms) {
            const std::vector<double> dev = run_trial_on(scenario, alg, signals);
            std::vector<double>& acc = curves[alg].per_iteration_msd;
            for (int k = 0; k < total; ++k)
                acc[k] += dev[k];
        }
    }

    const std::vector<int> lengths = stage_lengths_of(scenario.schedule);
    bool stages_long_enough = true;
    for (int len : lengths)
        stages_long_enough = stages_long_enough && len >= 50;

    for (auto& [alg, curve] : curves) {
        (void)alg;
        for (double& v : curve.per_iteration_msd)
            v /= scenario.runs;
        if (stages_long_enough)
            curve.steady_state_msd_per_stage = steady_state_msd(curve.per_iteration_msd, lengths);
    }
    return curves;
}

std::vector<double> steady_state_msd(const std::vector<double>& per_iteration_msd,
                                     const std::vector<int>& stage_lengths) {
    std::vector<double> out;
    out.reserve(stage_lengths.size());
    std::size_t offset = 0;
    for (int len : stage_lengths) {
        if (len < 50)
            throw std::invalid_argument("stage too short for a steady-state estimate");
        if (offset + len > per_iteration_msd.size())
            throw std::invalid_argument("stage lengths exceed the curve length");
        const int window = len / 10;
        double sum = 0.0;
        for (int i = len - window; i < len; ++i)
            sum += per_iteration_msd[offset + i];
        out.push_back(sum / window);
        offset += len;
    }
    if (offset != per_iteration_msd.size())
        throw std::invalid_argument("stage lengths do not cover the curve");
    return out;
}

double msd_in_db(double msd) {
    if (!(msd > 0.0))
        throw std::invalid_argument("msd_in_db needs a positive value");
    return 10.0 * std::log10(msd);
}

} // namespace lplms
