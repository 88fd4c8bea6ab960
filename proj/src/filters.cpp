#include "lplms/filters.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace lplms {

namespace {

// |a|^q with the q == 0.5 case routed through sqrt (the presets all use
// p = 0.5, so this is the hot path).
inline double abs_pow(double a, double q) {
    return q == 0.5 ? std::sqrt(a) : std::pow(a, q);
}

void check_step_inputs(const FilterState& state, std::span<const double> x, double e) {
    if (x.size() != state.estimate.size())
        throw std::invalid_argument("regressor length " + std::to_string(x.size()) +
                                    " does not match filter length " +
                                    std::to_string(state.estimate.size()));
    if (!std::isfinite(e))
        throw std::invalid_argument("non-finite error input to filter step");
    for (double v : x)
        if (!std::isfinite(v))
            throw std::invalid_argument("non-finite regressor input to filter step");
}

// estimate += mu*e*x - gate .* attractor(estimate); gate == nullptr means all-ones.
void gated_update(FilterState& state, std::span<const double> x, double e,
                  const double* gate_diag) {
    const double mu_e = state.params.mu * e;
    if (state.params.rho == 0.0) {
        for (std::size_t i = 0; i < state.estimate.size(); ++i)
            state.estimate[i] += mu_e * x[i];
        return;
    }
    const WeightVector attractor = lp_attractor(state.estimate, state.params);
    for (std::size_t i = 0; i < state.estimate.size(); ++i) {
        const double g = gate_diag ? gate_diag[i] : 1.0;
        state.estimate[i] += mu_e * x[i] - g * attractor[i];
    }
}

void lms_update(FilterState& state, std::span<const double> x, double e) {
    const double mu_e = state.params.mu * e;
    for (std::size_t i = 0; i < state.estimate.size(); ++i)
        state.estimate[i] += mu_e * x[i];
}

void lp_ngc_update(FilterState& state, std::span<const double> x, double e) {
    ComparatorMatrix g = gc_comparator(x, e, state.estimate);
    if (state.lagged_comparator) {
        // Gate from previous iterations only; no history yet means no gating.
        if (state.window.empty()) {
            const std::vector<double> zeros(state.estimate.size(), 0.0);
            gated_update(state, x, e, zeros.data());
        } else {
            const ComparatorMatrix d = ngc_comparator(state.window);
            gated_update(state, x, e, d.diag.data());
        }
        state.window.push(std::move(g));
    } else {
        // The current comparator participates in its own gate.
        state.window.push(std::move(g));
        const ComparatorMatrix d = ngc_comparator(state.window);
        gated_update(state, x, e, d.diag.data());
    }
}

} // namespace

const char* algorithm_name(Algorithm alg) {
    switch (alg) {
        case Algorithm::Lms: return "lms";
        case Algorithm::LpLms: return "lp";
        case Algorithm::LpGc: return "lpgc";
        case Algorithm::LpNgc: return "lpngc";
    }
    throw std::invalid_argument("unknown algorithm");
}

void LpParams::validate() const {
    if (!(mu >= 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("LpParams: mu must be >= 0");
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("LpParams: rho must be >= 0");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw std::invalid_argument("LpParams: epsilon must be > 0");
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("LpParams: p must lie in (0, 1)");
}

void ComparatorWindow::push(ComparatorMatrix g) {
    history.push_back(std::move(g));
    while (history.size() > capacity)
        history.pop_front();
}

FilterState make_filter(Algorithm alg, std::size_t n_taps, const LpParams& params,
                        std::size_t window_capacity, bool lagged_comparator) {
    if (n_taps == 0)
        throw std::invalid_argument("filter needs at least one tap");
    params.validate();
    if (alg == Algorithm::LpNgc && window_capacity == 0)
        throw std::invalid_argument("comparator window capacity must be >= 1");
    FilterState state;
    state.algorithm = alg;
    state.estimate.assign(n_taps, 0.0);
    state.params = params;
    state.lagged_comparator = lagged_comparator;
    if (alg == Algorithm::LpNgc)
        state.window.capacity = window_capacity;
    return state;
}

double sign(double x) {
    if (std::isnan(x))
        throw std::invalid_argument("sign(NaN)");
    if (x > 0.0) return 1.0;
    if (x < 0.0) return -1.0;
    return 0.0;
}

std::vector<double> sign(std::span<const double> v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = sign(v[i]);
    return out;
}

double p_norm(std::span<const double> w, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("p_norm: p must lie in (0, 1)");
    double sum = 0.0;
    for (double v : w)
        sum += abs_pow(std::abs(v), p);
    if (sum == 0.0)
        return 0.0;
    return std::pow(sum, 1.0 / p);
}

WeightVector lp_attractor(std::span<const double> w, const LpParams& params) {
    params.validate();
    WeightVector t(w.size(), 0.0);
    if (params.rho == 0.0)
        return t;
    double sum = 0.0; // sum_i |w_i|^p
    for (double v : w)
        sum += abs_pow(std::abs(v), params.p);
    // ||w||_p^(1-p) = sum^((1-p)/p); equals 0 at w = 0.
    const double norm_pow = sum == 0.0 ? 0.0 : std::pow(sum, (1.0 - params.p) / params.p);
    const double scale = params.rho * norm_pow;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0.0)
            continue;
        const double s = w[i] > 0.0 ? 1.0 : -1.0;
        t[i] = scale * s / (params.epsilon + abs_pow(std::abs(w[i]), 1.0 - params.p));
    }
    return t;
}

ComparatorMatrix gc_comparator(std::span<const double> x, double e, std::span<const double> w) {
    if (x.size() != w.size())
        throw std::invalid_argument("gc_comparator: shape mismatch");
    ComparatorMatrix g;
    g.diag.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        g.diag[i] = std::abs(sign(e * x[i]) - sign(w[i])) / 2.0;
    return g;
}

ComparatorMatrix ngc_comparator(const ComparatorWindow& window) {
    if (window.empty())
        throw std::invalid_argument("ngc_comparator: empty window");
    const std::size_t n = window.history.front().diag.size();
    ComparatorMatrix d;
    d.diag.assign(n, 0.0);
    for (const ComparatorMatrix& g : window.history) {
        if (g.diag.size() != n)
            throw std::invalid_argument("ngc_comparator: inconsistent window shapes");
        for (std::size_t i = 0; i < n; ++i)
            d.diag[i] += g.diag[i];
    }
    const double count = static_cast<double>(window.size());
    for (std::size_t i = 0; i < n; ++i)
        d.diag[i] = sign(d.diag[i] / count);
    return d;
}

FilterState lms_step(const FilterState& state, std::span<const double> x, double e) {
    check_step_inputs(state, x, e);
    FilterState next = state;
    lms_update(next, x, e);
    return next;
}

FilterState lp_lms_step(const FilterState& state, std::span<const double> x, double e) {
    check_step_inputs(state, x, e);
    FilterState next = state;
    gated_update(next, x, e, nullptr);
    return next;
}

FilterState lp_gated_step(const FilterState& state, std::span<const double> x, double e,
                          std::span<const double> gate_diag) {
    check_step_inputs(state, x, e);
    if (gate_diag.size() != state.estimate.size())
        throw std::invalid_argument("lp_gated_step: gate shape mismatch");
    FilterState next = state;
    gated_update(next, x, e, gate_diag.data());
    return next;
}

FilterState lp_gc_step(const FilterState& state, std::span<const double> x, double e) {
    check_step_inputs(state, x, e);
    FilterState next = state;
    const ComparatorMatrix g = gc_comparator(x, e, next.estimate);
    gated_update(next, x, e, g.diag.data());
    return next;
}

FilterState lp_ngc_step(const FilterState& state, std::span<const double> x, double e) {
    check_step_inputs(state, x, e);
    FilterState next = state;
    lp_ngc_update(next, x, e);
    return next;
}

FilterState step(const FilterState& state, std::span<const double> x, double e) {
    FilterState next = state;
    step_in_place(next, x, e);
    return next;
}

void step_in_place(FilterState& state, std::span<const double> x, double e) {
    check_step_inputs(state, x, e);
    switch (state.algorithm) {
        case Algorithm::Lms:
            lms_update(state, x, e);
            return;
        case Algorithm::LpLms:
            gated_update(state, x, e, nullptr);
            return;
        case Algorithm::LpGc: {
            const ComparatorMatrix g = gc_comparator(x, e, state.estimate);
            gated_update(state, x, e, g.diag.data());
            return;
        }
        case Algorithm::LpNgc:
            lp_ngc_update(state, x, e);
            return;
    }
    throw std::invalid_argument("unknown algorithm");
}

} // namespace lplms
