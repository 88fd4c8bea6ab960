#include "lplms/results.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "lplms/scenario_config.hpp"

namespace lplms {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out)
        throw std::runtime_error("failed while writing: " + path);
}

const MsdCurve& curve_for(const std::map<Algorithm, MsdCurve>& curves, Algorithm alg) {
    const auto it = curves.find(alg);
    if (it == curves.end())
        throw std::invalid_argument("no curve recorded for algorithm");
    return it->second;
}

} // namespace

void write_run_csv(const std::string& path, const Scenario& scenario,
                   const std::map<Algorithm, MsdCurve>& curves) {
    std::ofstream out = open_out(path);
    out << "iteration,stage,sr";
    for (Algorithm alg : scenario.algorithms)
        out << ",msd_" << algorithm_name(alg);
    out << "\n";

    int iteration = 1;
    int offset = 0;
    for (std::size_t stage = 0; stage < scenario.schedule.stages.size(); ++stage) {
        const Stage& st = scenario.schedule.stages[stage];
        const std::string sr = num(st.system.sparsity_ratio());
        for (int i = 0; i < st.iterations; ++i, ++iteration) {
            out << iteration << "," << (stage + 1) << "," << sr;
            for (Algorithm alg : scenario.algorithms)
                out << "," << num(curve_for(curves, alg).per_iteration_msd.at(offset + i));
            out << "\n";
        }
        offset += st.iterations;
    }
    finish(out, path);
}

void write_run_summary_csv(const std::string& path, const Scenario& scenario,
                           const std::map<Algorithm, MsdCurve>& curves) {
    std::ofstream out = open_out(path);
    out << "algorithm,stage,sr,steady_state_msd,steady_state_msd_db\n";
    for (Algorithm alg : scenario.algorithms) {
        const MsdCurve& curve = curve_for(curves, alg);
        for (std::size_t stage = 0; stage < curve.steady_state_msd_per_stage.size(); ++stage) {
            const double msd = curve.steady_state_msd_per_stage[stage];
            out << algorithm_name(alg) << "," << (stage + 1) << ","
                << num(scenario.schedule.stages[stage].system.sparsity_ratio()) << ","
                << num(msd) << "," << num(msd_in_db(msd)) << "\n";
        }
    }
    finish(out, path);
}

void write_run_json(const std::string& path, const Scenario& scenario,
                    const std::map<Algorithm, MsdCurve>& curves) {
    nlohmann::ordered_json doc;
    doc["scenario"] = kv_from_scenario(scenario);

    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const Stage& st : scenario.schedule.stages) {
        stages.push_back({{"iterations", st.iterations},
                          {"sr", st.system.sparsity_ratio()}});
    }
    doc["stages"] = std::move(stages);

    nlohmann::ordered_json curves_json;
    nlohmann::ordered_json steady_json;
    for (Algorithm alg : scenario.algorithms) {
        const MsdCurve& curve = curve_for(curves, alg);
        curves_json[algorithm_name(alg)] = curve.per_iteration_msd;
        nlohmann::ordered_json entry;
        entry["linear"] = curve.steady_state_msd_per_stage;
        std::vector<double> db;
        db.reserve(curve.steady_state_msd_per_stage.size());
        for (double v : curve.steady_state_msd_per_stage)
            db.push_back(msd_in_db(v));
        entry["db"] = std::move(db);
        steady_json[algorithm_name(alg)] = std::move(entry);
    }
    doc["curves"] = std::move(curves_json);
    doc["steady_state"] = std::move(steady_json);

    std::ofstream out = open_out(path);
    out << doc.dump(2) << "\n";
    finish(out, path);
}

void write_sweep_csv(const std::string& path, const std::vector<Algorithm>& algorithms,
                     const std::vector<SweepPoint>& points) {
    std::ofstream out = open_out(path);
    out << "sr";
    for (Algorithm alg : algorithms)
        out << ",ssmsd_" << algorithm_name(alg);
    out << "\n";
    for (const SweepPoint& point : points) {
        out << num(point.sparsity_ratio);
        for (Algorithm alg : algorithms)
            out << "," << num(point.steady_state_msd.at(alg));
        out << "\n";
    }
    finish(out, path);
}

void write_sweep_json(const std::string& path, const std::vector<Algorithm>& algorithms,
                      const std::vector<SweepPoint>& points) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const SweepPoint& point : points) {
        nlohmann::ordered_json entry;
        entry["sr"] = point.sparsity_ratio;
        for (Algorithm alg : algorithms)
            entry[std::string("ssmsd_") + algorithm_name(alg)] = point.steady_state_msd.at(alg);
        doc.push_back(std::move(entry));
    }
    std::ofstream out = open_out(path);
    out << doc.dump(2) << "\n";
    finish(out, path);
}

std::string summary_path_for(const std::string& out_path) {
    const std::size_t slash = out_path.find_last_of("/\\");
    const std::size_t dot = out_path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return out_path + ".summary";
    return out_path.substr(0, dot) + ".summary" + out_path.substr(dot);
}

} // namespace lplms
