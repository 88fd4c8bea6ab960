#ifndef LPLMS_FILTERS_HPP
#define LPLMS_FILTERS_HPP

#include <cstddef>
#include <deque>
#include <span>
#include <vector>

namespace lplms {

/// Dense real tap vector. Used both for true systems and filter estimates.
using WeightVector = std::vector<double>;

enum class Algorithm { Lms, LpLms, LpGc, LpNgc };

const char* algorithm_name(Algorithm alg);

/// Parameters of the p-norm penalized update.
///
/// mu      step size (shared by all algorithms in an experiment); mu = 0 is
///         accepted and freezes the data-driven term
/// rho     weight of the zero-attractor term (rho = mu * gamma)
/// epsilon positive bound keeping the attractor denominator away from zero
/// p       norm exponent, 0 < p < 1
struct LpParams {
    double mu = 0.0;
    double rho = 0.0;
    double epsilon = 1.0;
    double p = 0.5;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Diagonal comparator gate, stored as its diagonal. Entries are 0, 0.5 or 1
/// for the instantaneous comparator and 0 or 1 for the sign-smoothed one.
struct ComparatorMatrix {
    std::vector<double> diag;
};

/// Bounded FIFO of the most recent comparator matrices.
struct ComparatorWindow {
    std::size_t capacity = 5;
    std::deque<ComparatorMatrix> history;

    void push(ComparatorMatrix g);
    bool empty() const { return history.empty(); }
    std::size_t size() const { return history.size(); }
};

struct FilterState {
    Algorithm algorithm = Algorithm::Lms;
    WeightVector estimate;
    LpParams params;
    ComparatorWindow window;       // used by LpNgc only
    bool lagged_comparator = false; // LpNgc: gate from the previous iterations only
};

/// New filter with a zero estimate of length n_taps. The comparator window is
/// allocated only for the sign-smoothed variant.
FilterState make_filter(Algorithm alg, std::size_t n_taps, const LpParams& params,
                        std::size_t window_capacity = 5, bool lagged_comparator = false);

/// Strict sign: -1, 0 or 1. Rejects NaN.
double sign(double x);
std::vector<double> sign(std::span<const double> v);

/// (sum_i |w_i|^p)^(1/p) for 0 < p < 1. Zero for the all-zero vector.
double p_norm(std::span<const double> w, double p);

/// The subtracted zero-attractor term of the p-norm penalized update:
///   t_i = rho * ||w||_p^(1-p) * sign(w_i) / (epsilon + |w_i|^(1-p))
/// The denominator is elementwise in |w_i|, which makes t/rho the gradient of
/// ||w||_p as epsilon -> 0.
WeightVector lp_attractor(std::span<const double> w, const LpParams& params);

/// Instantaneous gradient comparator: diag_i = |sign(e*x_i) - sign(w_i)| / 2.
/// Entry 1 exactly when the two signs are nonzero and opposite, 0 when equal,
/// 0.5 when exactly one of them is zero.
ComparatorMatrix gc_comparator(std::span<const double> x, double e, std::span<const double> w);

/// Sign of the mean of the stored comparator matrices. Entries land in {0, 1}:
/// 1 wherever any stored matrix has a nonzero entry. The mean is taken over
/// the actual number of stored matrices, which cannot change the sign.
/// Throws on an empty window.
ComparatorMatrix ngc_comparator(const ComparatorWindow& window);

/// One step of each algorithm. All of them are pure: the input state is left
/// untouched and the successor returned. The attractor and comparator are
/// evaluated on the pre-update estimate.
FilterState lms_step(const FilterState& state, std::span<const double> x, double e);
FilterState lp_lms_step(const FilterState& state, std::span<const double> x, double e);
FilterState lp_gc_step(const FilterState& state, std::span<const double> x, double e);
FilterState lp_ngc_step(const FilterState& state, std::span<const double> x, double e);

/// Shared core: estimate' = estimate + mu*e*x - gate .* lp_attractor(estimate).
/// Exposed so a caller can force an arbitrary gate.
FilterState lp_gated_step(const FilterState& state, std::span<const double> x, double e,
                          std::span<const double> gate_diag);

/// Dispatch on state.algorithm.
FilterState step(const FilterState& state, std::span<const double> x, double e);

/// In-place variant of step(), for tight trial loops.
void step_in_place(FilterState& state, std::span<const double> x, double e);

} // namespace lplms

#endif // LPLMS_FILTERS_HPP
