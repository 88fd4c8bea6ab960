#include "lplms/signals.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lplms {

double SparseSystemSpec::sparsity_ratio() const {
    if (n_taps <= 0)
        throw std::invalid_argument("system spec has no taps");
    const int nz = fixed_taps ? count_nonzero(*fixed_taps) : n_nonzero;
    return static_cast<double>(nz) / static_cast<double>(n_taps);
}

int StageSchedule::total_iterations() const {
    int total = 0;
    for (const Stage& s : stages)
        total += s.iterations;
    return total;
}

int StageSchedule::n_taps() const {
    if (stages.empty())
        throw std::invalid_argument("empty stage schedule");
    return stages.front().system.n_taps;
}

InputModel InputModel::white(double variance) {
    if (!(variance > 0.0))
        throw std::invalid_argument("white input variance must be > 0");
    InputModel m;
    m.kind = Kind::WhiteGaussian;
    m.variance = variance;
    return m;
}

InputModel InputModel::ar1(double coefficient, double innovation_variance,
                           double output_variance) {
    if (!(std::abs(coefficient) < 1.0))
        throw std::invalid_argument("AR(1) coefficient must satisfy |a| < 1");
    if (!(innovation_variance > 0.0) || !(output_variance > 0.0))
        throw std::invalid_argument("AR(1) variances must be > 0");
    InputModel m;
    m.kind = Kind::Ar1Normalized;
    m.ar_coefficient = coefficient;
    m.innovation_variance = innovation_variance;
    m.output_variance = output_variance;
    return m;
}

WeightVector draw_system(const SparseSystemSpec& spec, Rng& rng) {
    if (spec.fixed_taps) {
        if (static_cast<int>(spec.fixed_taps->size()) != spec.n_taps)
            throw std::invalid_argument("fixed tap vector does not match n_taps");
        return *spec.fixed_taps;
    }
    if (spec.n_taps < 1)
        throw std::invalid_argument("draw_system: n_taps must be >= 1");
    if (spec.n_nonzero < 0 || spec.n_nonzero > spec.n_taps)
        throw std::invalid_argument("draw_system: n_nonzero must lie in [0, n_taps]");

    // Partial Fisher-Yates: the first n_nonzero slots end up holding the
    // chosen positions, drawn uniformly without replacement.
    std::vector<int> positions(spec.n_taps);
    std::iota(positions.begin(), positions.end(), 0);
    WeightVector w(spec.n_taps, 0.0);
    for (int i = 0; i < spec.n_nonzero; ++i) {
        const std::uint64_t j = i + rng.bounded(spec.n_taps - i);
        std::swap(positions[i], positions[j]);
        w[positions[i]] = rng.coin_pm1();
    }
    return w;
}

std::vector<double> gen_input(const InputModel& model, int length, Rng& rng) {
    if (length < 1)
        throw std::invalid_argument("gen_input: length must be >= 1");
    std::vector<double> out(length);
    switch (model.kind) {
        case InputModel::Kind::WhiteGaussian: {
            const double stddev = std::sqrt(model.variance);
            for (double& v : out)
                v = rng.gaussian(0.0, stddev);
            return out;
        }
        case InputModel::Kind::Ar1Normalized: {
            const double a = model.ar_coefficient;
            if (!(std::abs(a) < 1.0))
                throw std::invalid_argument("AR(1) coefficient must satisfy |a| < 1");
            const double innov_std = std::sqrt(model.innovation_variance);
            // Closed-form stationary scaling; a burn-in hides the x_0 = 0 start.
            const double scale = std::sqrt(model.output_variance * (1.0 - a * a) /
                                           model.innovation_variance);
            constexpr int kBurnIn = 1000;
            double x = 0.0;
            for (int k = 0; k < kBurnIn; ++k)
                x = a * x + rng.gaussian(0.0, innov_std);
            for (double& v : out) {
                x = a * x + rng.gaussian(0.0, innov_std);
                v = scale * x;
            }
            return out;
        }
    }
    throw std::invalid_argument("unknown input model");
}

std::vector<WeightVector> gen_regressor_stream(const std::vector<double>& input, int n_taps) {
    if (n_taps < 1)
        throw std::invalid_argument("gen_regressor_stream: n_taps must be >= 1");
    if (static_cast<int>(input.size()) < n_taps)
        throw std::invalid_argument("gen_regressor_stream: input shorter than the filter");
    const int count = static_cast<int>(input.size()) - n_taps + 1;
    std::vector<WeightVector> out(count);
    for (int k = 0; k < count; ++k) {
        WeightVector& x = out[k];
        x.resize(n_taps);
        for (int j = 0; j < n_taps; ++j)
            x[j] = input[k + n_taps - 1 - j];
    }
    return out;
}

double measure_output(const WeightVector& w, std::span<const double> x,
                      const NoiseModel& noise, Rng& rng) {
    if (w.size() != x.size())
        throw std::invalid_argument("measure_output: shape mismatch");
    if (!(noise.variance >= 0.0))
        throw std::invalid_argument("noise variance must be >= 0");
    double y = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        y += w[i] * x[i];
    return y + rng.gaussian(0.0, std::sqrt(noise.variance));
}

WeightVector load_ecg_ir(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open impulse response file: " + path);
    WeightVector w;
    std::string token;
    while (in >> token) {
        std::replace(token.begin(), token.end(), ',', ' ');
        std::istringstream fields(token);
        std::string field;
        while (fields >> field) {
            std::size_t used = 0;
            double value = 0.0;
            try {
                value = std::stod(field, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("bad value '" + field + "' in " + path);
            }
            if (used != field.size())
                throw std::runtime_error("bad value '" + field + "' in " + path);
            w.push_back(value);
        }
    }
    if (static_cast<int>(w.size()) != kEcgIrTaps)
        throw std::runtime_error("impulse response in " + path + " has " +
                                 std::to_string(w.size()) + " taps, expected " +
                                 std::to_string(kEcgIrTaps));
    return w;
}

int count_nonzero(const WeightVector& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(),
                                          [](double v) { return v != 0.0; }));
}

} // namespace lplms
