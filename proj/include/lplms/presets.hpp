#ifndef LPLMS_PRESETS_HPP
#define LPLMS_PRESETS_HPP

#include <string>
#include <vector>

#include "lplms/harness.hpp"

namespace lplms {

/// Names of the built-in experiment presets: example1 (white input, three
/// sparsity stages), example2 (correlated AR(1) input, three stages),
/// example3 (256-tap ECG-like impulse response).
std::vector<std::string> preset_names();

bool is_preset_name(const std::string& name);

/// Path of the bundled ECG-like impulse response data file.
std::string default_ecg_ir_path();

/// Fully populated scenario for a named preset, all four algorithms enabled.
/// example3 loads its fixed system from ecg_path (bundled file by default)
/// and insists on the expected 28-of-256 nonzero layout for the bundled file.
Scenario build_preset(const std::string& name);
Scenario build_preset(const std::string& name, const std::string& ecg_path);

/// Cross-checks every built preset against an independent compiled-in
/// parameter table; throws std::logic_error on any drift. Called at CLI
/// startup.
void verify_preset_table();

/// Single-stage scenario for one sparsity-sweep grid point: the base
/// scenario's stage-1 length and parameters with the given nonzero count and
/// a fixed rho applied to every p-norm algorithm.
Scenario make_sweep_point(const Scenario& base, int n_nonzero, double fixed_rho);

/// rho used for the sparsity sweep.
constexpr double kSweepFixedRho = 0.0005;

} // namespace lplms

#endif // LPLMS_PRESETS_HPP
