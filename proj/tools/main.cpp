// Command-line front end for the sparse adaptive-filter experiment harness.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lplms/presets.hpp"
#include "lplms/results.hpp"
#include "lplms/scenario_config.hpp"

namespace {

using namespace lplms;

struct CommonOptions {
    std::string preset;
    std::string scenario_path;
    std::vector<std::string> overrides;
    int runs = 0;
    std::string seed;
    std::string out;
    std::string format = "csv";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool allow_custom) {
    std::vector<std::string> choices = preset_names();
    if (allow_custom)
        choices.push_back("custom");
    cmd->add_option("--preset", opt.preset, "Experiment preset")
        ->required()
        ->check(CLI::IsMember(choices));
    if (allow_custom)
        cmd->add_option("--scenario", opt.scenario_path,
                        "Scenario file (required with --preset custom)");
    cmd->add_option("--set", opt.overrides, "Override a scenario key, e.g. runs=50")
        ->take_all();
    cmd->add_option("--runs", opt.runs, "Override the Monte-Carlo run count");
    cmd->add_option("--seed", opt.seed, "Override the master seed");
    cmd->add_option("--out", opt.out, "Output file")->required();
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

// Precedence, weakest first: preset/scenario value, LPLMS_SEED, --set, --seed.
KvDocument resolve_kv(const CommonOptions& opt) {
    KvDocument kv;
    if (opt.preset == "custom") {
        if (opt.scenario_path.empty())
            throw std::invalid_argument("--preset custom requires --scenario FILE");
        kv = load_scenario_file(opt.scenario_path);
    } else {
        if (!opt.scenario_path.empty())
            throw std::invalid_argument("--scenario is only valid with --preset custom");
        kv = kv_from_scenario(build_preset(opt.preset));
    }
    if (const char* env_seed = std::getenv("LPLMS_SEED"))
        kv["seed"] = env_seed;
    for (const std::string& assignment : opt.overrides)
        apply_override(kv, assignment);
    if (opt.runs != 0)
        kv["runs"] = std::to_string(opt.runs);
    if (!opt.seed.empty())
        kv["seed"] = opt.seed;
    return kv;
}

int cmd_run(const CommonOptions& opt) {
    const Scenario scenario = scenario_from_kv(resolve_kv(opt));
    const std::map<Algorithm, MsdCurve> curves = run_monte_carlo(scenario);
    if (opt.format == "json") {
        write_run_json(opt.out, scenario, curves);
        std::cout << "wrote " << opt.out << "\n";
    } else {
        write_run_csv(opt.out, scenario, curves);
        const std::string summary = summary_path_for(opt.out);
        write_run_summary_csv(summary, scenario, curves);
        std::cout << "wrote " << opt.out << " and " << summary << "\n";
    }
    return 0;
}

int cmd_sweep(const CommonOptions& opt, std::vector<int> grid) {
    if (opt.preset != "example1")
        throw std::invalid_argument("sweep-sparsity is defined on the example1 preset");
    const Scenario base = scenario_from_kv(resolve_kv(opt));
    const int n_taps = base.schedule.n_taps();
    if (grid.empty())
        for (int g = 1; g <= n_taps; ++g)
            grid.push_back(g);
    for (int g : grid)
        if (g < 0 || g > n_taps)
            throw std::invalid_argument("grid entry " + std::to_string(g) +
                                        " outside [0, " + std::to_string(n_taps) + "]");

    std::vector<SweepPoint> points;
    for (int g : grid) {
        const Scenario point_scenario = make_sweep_point(base, g, kSweepFixedRho);
        const std::map<Algorithm, MsdCurve> curves = run_monte_carlo(point_scenario);
        SweepPoint point;
        point.sparsity_ratio = static_cast<double>(g) / n_taps;
        for (Algorithm alg : point_scenario.algorithms)
            point.steady_state_msd[alg] = curves.at(alg).steady_state_msd_per_stage.at(0);
        points.push_back(std::move(point));
    }
    if (opt.format == "json")
        write_sweep_json(opt.out, base.algorithms, points);
    else
        write_sweep_csv(opt.out, base.algorithms, points);
    std::cout << "wrote " << opt.out << "\n";
    return 0;
}

int cmd_print_preset(const std::string& preset, const std::string& out) {
    const std::string text = format_kv(kv_from_scenario(build_preset(preset)));
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file: " + out);
        f << text;
        if (!f.flush())
            throw std::runtime_error("failed while writing: " + out);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse system identification with LMS and p-norm penalized LMS variants"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "Run a preset or custom scenario");
    add_common_flags(run, run_opt, /*allow_custom=*/true);

    CommonOptions sweep_opt;
    sweep_opt.preset = "example1";
    std::vector<int> grid;
    CLI::App* sweep = app.add_subcommand(
        "sweep-sparsity", "Steady-state MSD across sparsity levels (fixed rho)");
    add_common_flags(sweep, sweep_opt, /*allow_custom=*/false);
    sweep->get_option("--preset")->required(false);
    sweep->add_option("--grid", grid,
                      "Comma-separated nonzero tap counts (default 1..n_taps)")
        ->delimiter(',');

    std::string pp_preset;
    std::string pp_out;
    CLI::App* pp = app.add_subcommand("print-preset",
                                      "Print a preset as a scenario document");
    pp->add_option("--preset", pp_preset, "Preset name")
        ->required()
        ->check(CLI::IsMember(preset_names()));
    pp->add_option("--out", pp_out, "Write to a file instead of stdout");

    try {
        app.parse(argc, argv);
        verify_preset_table();
        if (run->parsed())
            return cmd_run(run_opt);
        if (sweep->parsed())
            return cmd_sweep(sweep_opt, grid);
        return cmd_print_preset(pp_preset, pp_out);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
