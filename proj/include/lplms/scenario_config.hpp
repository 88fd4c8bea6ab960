#ifndef LPLMS_SCENARIO_CONFIG_HPP
#define LPLMS_SCENARIO_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "lplms/harness.hpp"

namespace lplms {

/// Flat key=value view of a Scenario. Keys follow the documented schema
/// (n_taps, runs, seed, algorithms, input.*, noise.variance, params.*,
/// params.rho.stageN / params.rho.<algorithm>, stages.stageN.*, system.file);
/// scenario_from_kv rejects unknown keys, naming the offender.
using KvDocument = std::map<std::string, std::string>;

KvDocument kv_from_scenario(const Scenario& scenario);
Scenario scenario_from_kv(const KvDocument& kv);

/// Parses a "key = value" document; '#' starts a comment, blank lines are
/// skipped, duplicate keys are an error.
KvDocument parse_kv_text(const std::string& text);
KvDocument load_scenario_file(const std::string& path);

/// Applies one "key=value" override in place.
void apply_override(KvDocument& kv, const std::string& assignment);

/// Serializes in canonical key order; the output parses back to an equal
/// document.
std::string format_kv(const KvDocument& kv);

} // namespace lplms

#endif // LPLMS_SCENARIO_CONFIG_HPP
