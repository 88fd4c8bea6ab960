#include "lplms/scenario_config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lplms {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
    throw std::invalid_argument("invalid value '" + value + "' for " + key +
                                " (expected " + expected + ")");
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        bad_value(key, value, "a number");
    }
    if (used != value.size())
        bad_value(key, value, "a number");
    return v;
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &used);
    } catch (const std::exception&) {
        bad_value(key, value, "an integer");
    }
    if (used != value.size())
        bad_value(key, value, "an integer");
    return v;
}

std::uint64_t parse_seed(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        bad_value(key, value, "an unsigned integer");
    }
    if (used != value.size() || value.find('-') != std::string::npos)
        bad_value(key, value, "an unsigned integer");
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    bad_value(key, value, "true or false");
}

Algorithm parse_algorithm(const std::string& key, const std::string& token) {
    if (token == "lms") return Algorithm::Lms;
    if (token == "lp") return Algorithm::LpLms;
    if (token == "lpgc") return Algorithm::LpGc;
    if (token == "lpngc") return Algorithm::LpNgc;
    bad_value(key, token, "one of lms, lp, lpgc, lpngc");
}

// Matches "<prefix><N>" with N >= 1; returns N or 0.
int stage_index(const std::string& key, const std::string& prefix) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0)
        return 0;
    int n = 0;
    for (std::size_t i = prefix.size(); i < key.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(key[i])))
            return 0;
        n = n * 10 + (key[i] - '0');
        if (n > 1000000)
            return 0;
    }
    return n;
}

const std::string& require(const KvDocument& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end())
        throw std::invalid_argument("missing required key: " + key);
    return it->second;
}

} // namespace

KvDocument kv_from_scenario(const Scenario& scenario) {
    KvDocument kv;
    kv["n_taps"] = std::to_string(scenario.schedule.n_taps());
    kv["runs"] = std::to_string(scenario.runs);
    kv["seed"] = std::to_string(scenario.master_seed);

    std::string algs;
    for (Algorithm alg : scenario.algorithms) {
        if (!algs.empty())
            algs += ",";
        algs += algorithm_name(alg);
    }
    kv["algorithms"] = algs;

    if (scenario.input.kind == InputModel::Kind::WhiteGaussian) {
        kv["input.kind"] = "white";
        kv["input.variance"] = format_double(scenario.input.variance);
    } else {
        kv["input.kind"] = "ar1";
        kv["input.ar_coefficient"] = format_double(scenario.input.ar_coefficient);
        kv["input.innovation_variance"] = format_double(scenario.input.innovation_variance);
        kv["input.output_variance"] = format_double(scenario.input.output_variance);
    }
    kv["noise.variance"] = format_double(scenario.noise.variance);

    const LpParams& first = scenario.per_stage_params.front();
    kv["params.mu"] = format_double(first.mu);
    kv["params.epsilon"] = format_double(first.epsilon);
    kv["params.p"] = format_double(first.p);
    kv["params.window"] = std::to_string(scenario.ngc_window);
    kv["params.lagged_comparator"] = scenario.lagged_comparator ? "true" : "false";
    for (std::size_t i = 0; i < scenario.per_stage_params.size(); ++i)
        kv["params.rho.stage" + std::to_string(i + 1)] =
            format_double(scenario.per_stage_params[i].rho);
    for (const auto& [alg, rho] : scenario.per_algorithm_rho)
        kv["params.rho." + std::string(algorithm_name(alg))] = format_double(rho);

    const bool fixed = scenario.schedule.stages.front().system.fixed_taps.has_value();
    for (std::size_t i = 0; i < scenario.schedule.stages.size(); ++i) {
        const Stage& stage = scenario.schedule.stages[i];
        const std::string prefix = "stages.stage" + std::to_string(i + 1);
        kv[prefix + ".iterations"] = std::to_string(stage.iterations);
        if (!fixed)
            kv[prefix + ".nonzero"] = std::to_string(stage.system.n_nonzero);
    }
    if (fixed) {
        if (scenario.system_file.empty())
            throw std::invalid_argument(
                "scenario with fixed taps has no system.file to serialize");
        kv["system.file"] = scenario.system_file;
    }
    return kv;
}

Scenario scenario_from_kv(const KvDocument& kv) {
    // First pass: recognize every key and collect stage indices.
    int max_stage = 0;
    for (const auto& [key, value] : kv) {
        (void)value;
        static const char* kScalarKeys[] = {
            "n_taps", "runs", "seed", "algorithms",
            "input.kind", "input.variance", "input.ar_coefficient",
            "input.innovation_variance", "input.output_variance",
            "noise.variance",
            "params.mu", "params.epsilon", "params.p", "params.window",
            "params.lagged_comparator",
            "params.rho.lp", "params.rho.lpgc", "params.rho.lpngc",
            "system.file",
        };
        bool known = false;
        for (const char* k : kScalarKeys)
            known = known || key == k;
        int idx = 0;
        if (!known && (idx = stage_index(key, "params.rho.stage")) > 0)
            known = true;
        if (!known && key.rfind("stages.stage", 0) == 0) {
            const std::size_t dot = key.find('.', std::string("stages.").size());
            if (dot != std::string::npos) {
                const std::string field = key.substr(dot + 1);
                idx = stage_index(key.substr(0, dot), "stages.stage");
                if (idx > 0 && (field == "iterations" || field == "nonzero"))
                    known = true;
                else
                    idx = 0;
            }
        }
        if (!known)
            throw std::invalid_argument("unknown scenario key: " + key);
        if (idx > max_stage)
            max_stage = idx;
    }
    if (max_stage == 0)
        throw std::invalid_argument("scenario defines no stages");

    Scenario s;
    const int n_taps = static_cast<int>(parse_int("n_taps", require(kv, "n_taps")));
    if (n_taps < 1)
        throw std::invalid_argument("n_taps must be >= 1");

    s.runs = static_cast<int>(parse_int("runs", require(kv, "runs")));
    if (const auto it = kv.find("seed"); it != kv.end())
        s.master_seed = parse_seed("seed", it->second);

    if (const auto it = kv.find("algorithms"); it != kv.end()) {
        std::stringstream ss(it->second);
        std::string token;
        while (std::getline(ss, token, ','))
            s.algorithms.push_back(parse_algorithm("algorithms", trim(token)));
    } else {
        s.algorithms = {Algorithm::Lms, Algorithm::LpLms, Algorithm::LpGc, Algorithm::LpNgc};
    }

    const std::string& kind = require(kv, "input.kind");
    if (kind == "white") {
        s.input = InputModel::white(
            parse_double("input.variance", require(kv, "input.variance")));
    } else if (kind == "ar1") {
        s.input = InputModel::ar1(
            parse_double("input.ar_coefficient", require(kv, "input.ar_coefficient")),
            parse_double("input.innovation_variance",
                         require(kv, "input.innovation_variance")),
            parse_double("input.output_variance", require(kv, "input.output_variance")));
    } else {
        bad_value("input.kind", kind, "white or ar1");
    }

    s.noise.variance = parse_double("noise.variance", require(kv, "noise.variance"));

    LpParams shared;
    shared.mu = parse_double("params.mu", require(kv, "params.mu"));
    shared.epsilon = parse_double("params.epsilon", require(kv, "params.epsilon"));
    shared.p = parse_double("params.p", require(kv, "params.p"));
    if (const auto it = kv.find("params.window"); it != kv.end())
        s.ngc_window = static_cast<int>(parse_int("params.window", it->second));
    if (const auto it = kv.find("params.lagged_comparator"); it != kv.end())
        s.lagged_comparator = parse_bool("params.lagged_comparator", it->second);

    WeightVector fixed_taps;
    if (const auto it = kv.find("system.file"); it != kv.end()) {
        s.system_file = it->second;
        fixed_taps = load_ecg_ir(it->second);
        if (static_cast<int>(fixed_taps.size()) != n_taps)
            throw std::invalid_argument("system.file tap count does not match n_taps");
    }

    for (int i = 1; i <= max_stage; ++i) {
        const std::string sp = "stages.stage" + std::to_string(i);
        Stage stage;
        stage.system.n_taps = n_taps;
        stage.iterations =
            static_cast<int>(parse_int(sp + ".iterations", require(kv, sp + ".iterations")));
        if (!fixed_taps.empty()) {
            if (kv.count(sp + ".nonzero"))
                throw std::invalid_argument(sp + ".nonzero conflicts with system.file");
            stage.system.fixed_taps = fixed_taps;
            stage.system.n_nonzero = count_nonzero(fixed_taps);
        } else {
            stage.system.n_nonzero =
                static_cast<int>(parse_int(sp + ".nonzero", require(kv, sp + ".nonzero")));
        }
        s.schedule.stages.push_back(std::move(stage));

        LpParams params = shared;
        const std::string rk = "params.rho.stage" + std::to_string(i);
        params.rho = parse_double(rk, require(kv, rk));
        s.per_stage_params.push_back(params);
    }

    const std::pair<const char*, Algorithm> rho_overrides[] = {
        {"params.rho.lp", Algorithm::LpLms},
        {"params.rho.lpgc", Algorithm::LpGc},
        {"params.rho.lpngc", Algorithm::LpNgc},
    };
    for (const auto& [key, alg] : rho_overrides)
        if (const auto it = kv.find(key); it != kv.end())
            s.per_algorithm_rho[alg] = parse_double(key, it->second);

    s.validate();
    return s;
}

KvDocument parse_kv_text(const std::string& text) {
    KvDocument kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": empty key");
        if (kv.count(key))
            throw std::invalid_argument("duplicate key: " + key);
        kv[key] = value;
    }
    return kv;
}

KvDocument load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_kv_text(buffer.str());
}

void apply_override(KvDocument& kv, const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override '" + assignment + "' is not key=value");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    if (key.empty())
        throw std::invalid_argument("override '" + assignment + "' has an empty key");
    if (value.empty())
        kv.erase(key); // "key=" removes the key, restoring its default
    else
        kv[key] = value;
}

std::string format_kv(const KvDocument& kv) {
    // std::map keeps keys sorted, which groups the dotted sections naturally.
    std::string out;
    for (const auto& [key, value] : kv) {
        out += key;
        out += " = ";
        out += value;
        out += "\n";
    }
    return out;
}

} // namespace lplms
