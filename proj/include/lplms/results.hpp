#ifndef LPLMS_RESULTS_HPP
#define LPLMS_RESULTS_HPP

#include <map>
#include <string>
#include <vector>

#include "lplms/harness.hpp"

namespace lplms {

/// One sparsity-sweep grid point: sparsity ratio and per-algorithm
/// steady-state MSD.
struct SweepPoint {
    double sparsity_ratio = 0.0;
    std::map<Algorithm, double> steady_state_msd;
};

/// Per-iteration table: iteration, stage, sr, then one msd_<algorithm> column
/// per enabled algorithm. Numeric cells carry full precision.
void write_run_csv(const std::string& path, const Scenario& scenario,
                   const std::map<Algorithm, MsdCurve>& curves);

/// Per-stage steady-state summary: algorithm, stage, sr, steady_state_msd,
/// steady_state_msd_db.
void write_run_summary_csv(const std::string& path, const Scenario& scenario,
                           const std::map<Algorithm, MsdCurve>& curves);

/// Everything in one JSON document: the scenario (as its key=value map),
/// stage layout, curves and steady-state summaries.
void write_run_json(const std::string& path, const Scenario& scenario,
                    const std::map<Algorithm, MsdCurve>& curves);

/// Columns: sr, then ssmsd_<algorithm> per enabled algorithm.
void write_sweep_csv(const std::string& path, const std::vector<Algorithm>& algorithms,
                     const std::vector<SweepPoint>& points);

void write_sweep_json(const std::string& path, const std::vector<Algorithm>& algorithms,
                      const std::vector<SweepPoint>& points);

/// "results.csv" -> "results.summary.csv" (no extension: appends ".summary").
std::string summary_path_for(const std::string& out_path);

} // namespace lplms

#endif // LPLMS_RESULTS_HPP
