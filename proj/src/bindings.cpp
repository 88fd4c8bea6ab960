// Python bindings for the filter steps, signal generators and the
// Monte-Carlo experiment harness.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lplms/presets.hpp"
#include "lplms/scenario_config.hpp"

namespace py = pybind11;
using namespace lplms;

namespace {

std::map<std::string, MsdCurve> run_monte_carlo_named(const Scenario& scenario) {
    std::map<std::string, MsdCurve> out;
    for (auto& [alg, curve] : run_monte_carlo(scenario))
        out[algorithm_name(alg)] = std::move(curve);
    return out;
}

} // namespace

PYBIND11_MODULE(_lplms, m) {
    m.doc() = "Sparse system identification with LMS and p-norm penalized LMS variants";

    py::enum_<Algorithm>(m, "Algorithm")
        .value("LMS", Algorithm::Lms)
        .value("LP_LMS", Algorithm::LpLms)
        .value("LP_GC_LMS", Algorithm::LpGc)
        .value("LP_NGC_LMS", Algorithm::LpNgc);

    m.def("algorithm_name", &algorithm_name);

    py::class_<LpParams>(m, "LpParams")
        .def(py::init([](double mu, double rho, double epsilon, double p) {
                 LpParams params{mu, rho, epsilon, p};
                 params.validate();
                 return params;
             }),
             py::arg("mu"), py::arg("rho") = 0.0, py::arg("epsilon") = 1.0,
             py::arg("p") = 0.5)
        .def_readwrite("mu", &LpParams::mu)
        .def_readwrite("rho", &LpParams::rho)
        .def_readwrite("epsilon", &LpParams::epsilon)
        .def_readwrite("p", &LpParams::p);

    py::class_<FilterState>(m, "FilterState")
        .def_property_readonly("estimate",
                               [](const FilterState& s) { return s.estimate; })
        .def_property_readonly("algorithm",
                               [](const FilterState& s) { return s.algorithm; });

    m.def("make_filter", &make_filter, py::arg("algorithm"), py::arg("n_taps"),
          py::arg("params"), py::arg("window") = 5,
          py::arg("lagged_comparator") = false);

    m.def("sign", py::overload_cast<double>(&sign));
    m.def("p_norm",
          [](const std::vector<double>& w, double p) { return p_norm(w, p); },
          py::arg("w"), py::arg("p"));
    m.def("lp_attractor",
          [](const std::vector<double>& w, const LpParams& params) {
              return lp_attractor(w, params);
          },
          py::arg("w"), py::arg("params"));
    m.def("gc_comparator",
          [](const std::vector<double>& x, double e, const std::vector<double>& w) {
              return gc_comparator(x, e, w).diag;
          },
          py::arg("x"), py::arg("e"), py::arg("w"));

    m.def("step",
          [](const FilterState& state, const std::vector<double>& x, double e) {
              return step(state, x, e);
          },
          py::arg("state"), py::arg("x"), py::arg("e"));

    py::class_<InputModel>(m, "InputModel")
        .def_static("white", &InputModel::white, py::arg("variance"))
        .def_static("ar1", &InputModel::ar1, py::arg("coefficient"),
                    py::arg("innovation_variance"), py::arg("output_variance") = 1.0);

    m.def("draw_system",
          [](int n_taps, int n_nonzero, std::uint64_t seed) {
              SparseSystemSpec spec;
              spec.n_taps = n_taps;
              spec.n_nonzero = n_nonzero;
              Rng rng(seed);
              return draw_system(spec, rng);
          },
          py::arg("n_taps"), py::arg("n_nonzero"), py::arg("seed"));
    m.def("gen_input",
          [](const InputModel& model, int length, std::uint64_t seed) {
              Rng rng(seed);
              return gen_input(model, length, rng);
          },
          py::arg("model"), py::arg("length"), py::arg("seed"));
    m.def("gen_regressor_stream", &gen_regressor_stream, py::arg("input"),
          py::arg("n_taps"));
    m.def("load_ecg_ir", &load_ecg_ir, py::arg("path"));
    m.def("count_nonzero", &count_nonzero, py::arg("w"));

    py::class_<MsdCurve>(m, "MsdCurve")
        .def_property_readonly("algorithm",
                               [](const MsdCurve& c) { return c.algorithm; })
        .def_property_readonly("per_iteration_msd",
                               [](const MsdCurve& c) { return c.per_iteration_msd; })
        .def_property_readonly("steady_state_msd_per_stage", [](const MsdCurve& c) {
            return c.steady_state_msd_per_stage;
        });

    py::class_<Scenario>(m, "Scenario")
        .def_property_readonly("runs", [](const Scenario& s) { return s.runs; })
        .def_property_readonly("seed", [](const Scenario& s) { return s.master_seed; })
        .def_property_readonly("n_taps",
                               [](const Scenario& s) { return s.schedule.n_taps(); })
        .def_property_readonly("total_iterations",
                               [](const Scenario& s) {
                                   return s.schedule.total_iterations();
                               })
        .def("to_kv", &kv_from_scenario)
        .def("with_overrides", [](const Scenario& s,
                                  const std::map<std::string, std::string>& overrides) {
            KvDocument kv = kv_from_scenario(s);
            for (const auto& [key, value] : overrides)
                kv[key] = value;
            return scenario_from_kv(kv);
        });

    m.def("scenario_from_kv", &scenario_from_kv, py::arg("kv"));
    m.def("build_preset", py::overload_cast<const std::string&>(&build_preset),
          py::arg("name"));
    m.def("build_preset",
          py::overload_cast<const std::string&, const std::string&>(&build_preset),
          py::arg("name"), py::arg("ecg_path"));
    m.def("preset_names", &preset_names);
    m.def("default_ecg_ir_path", &default_ecg_ir_path);

    m.def("run_trial",
          [](const Scenario& scenario, Algorithm alg, std::uint64_t trial_seed) {
              return run_trial(scenario, alg, trial_seed);
          },
          py::arg("scenario"), py::arg("algorithm"), py::arg("trial_seed"));
    m.def("run_monte_carlo", &run_monte_carlo_named, py::arg("scenario"),
          "Per-algorithm MSD curves, keyed by algorithm name");
    m.def("steady_state_msd", &steady_state_msd, py::arg("per_iteration_msd"),
          py::arg("stage_lengths"));
    m.def("msd_in_db", &msd_in_db, py::arg("msd"));
}
