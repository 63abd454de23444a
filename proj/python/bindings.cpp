// Copyright 2026 The spinsignal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the spinsignal core.

#include "spinsignal/analysis.hpp"
#include "spinsignal/errors.hpp"
#include "spinsignal/oracles/free_fermion.hpp"
#include "spinsignal/oracles/magnon.hpp"
#include "spinsignal/presets.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace spinsignal;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spin-chain simulation of signals from a local measurement";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation",
                                             PyExc_RuntimeError);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def(py::init<>())
      .def_property(
          "model", [](const ModelSpec& s) { return std::string(to_string(s.model)); },
          [](ModelSpec& s, const std::string& v) { s.model = parse_model(v); })
      .def_property(
          "boundary",
          [](const ModelSpec& s) { return std::string(to_string(s.boundary)); },
          [](ModelSpec& s, const std::string& v) { s.boundary = parse_boundary(v); })
      .def_readwrite("N", &ModelSpec::n_sites)
      .def_readwrite("J", &ModelSpec::J)
      .def_readwrite("delta", &ModelSpec::delta)
      .def_readwrite("Jz", &ModelSpec::Jz)
      .def_readwrite("Jx", &ModelSpec::Jx)
      .def_readwrite("Jy", &ModelSpec::Jy)
      .def_readwrite("h", &ModelSpec::h)
      .def_readwrite("h_long", &ModelSpec::h_long)
      .def("validate", [](const ModelSpec& s) { s.validate(); });

  py::class_<ProtocolSpec>(m, "ProtocolSpec")
      .def(py::init<>())
      .def_readwrite("model", &ProtocolSpec::model)
      .def_property(
          "state", [](const ProtocolSpec& p) { return p.initial.expr; },
          [](ProtocolSpec& p, const std::string& v) { p.initial.expr = v; })
      .def_readwrite("t0", &ProtocolSpec::t0)
      .def_property(
          "theta", [](const ProtocolSpec& p) { return p.axis.theta; },
          [](ProtocolSpec& p, double v) { p.axis.theta = v; })
      .def_property(
          "phi", [](const ProtocolSpec& p) { return p.axis.phi; },
          [](ProtocolSpec& p, double v) { p.axis.phi = v; })
      .def_readwrite("qdp_site", &ProtocolSpec::qdp_site)
      .def_property(
          "t_max_over_t0", [](const ProtocolSpec& p) { return p.grid.t_max_over_t0; },
          [](ProtocolSpec& p, double v) { p.grid.t_max_over_t0 = v; })
      .def_property(
          "samples_per_t0", [](const ProtocolSpec& p) { return p.grid.samples_per_t0; },
          [](ProtocolSpec& p, int v) { p.grid.samples_per_t0 = v; })
      .def("effective_t0", &ProtocolSpec::effective_t0)
      .def("validate", [](const ProtocolSpec& p) { p.validate(); })
      .def("set", &set_parameter, py::arg("name"), py::arg("value"));

  py::class_<DetectorTrace>(m, "DetectorTrace")
      .def_readonly("t0", &DetectorTrace::t0)
      .def_readonly("times_over_t0", &DetectorTrace::times_over_t0)
      .def_readonly("F", &DetectorTrace::F)
      .def_readonly("O", &DetectorTrace::O)
      .def_readonly("D", &DetectorTrace::D)
      .def_property_readonly("n_sites", &DetectorTrace::n_sites);

  py::class_<SpeedFit>(m, "SpeedFit")
      .def_readonly("slope", &SpeedFit::slope)
      .def_readonly("intercept", &SpeedFit::intercept)
      .def_readonly("residual_rms", &SpeedFit::residual_rms)
      .def_readonly("slope_stderr", &SpeedFit::slope_stderr)
      .def_readonly("points", &SpeedFit::points)
      .def_property_readonly("speed", &SpeedFit::speed);

  py::class_<WaitingTimeTable>(m, "WaitingTimeTable")
      .def_readonly("epsilon", &WaitingTimeTable::epsilon)
      .def_readonly("t_star", &WaitingTimeTable::t_star)
      .def_readonly("fit", &WaitingTimeTable::fit)
      .def_property_readonly(
          "status", [](const WaitingTimeTable& t) { return std::string(to_string(t.status)); })
      .def_property_readonly("speed", &WaitingTimeTable::speed);

  m.def(
      "simulate",
      [](const ProtocolSpec& spec) { return detector_trace(run_protocol(spec)); },
      py::arg("spec"), py::call_guard<py::gil_scoped_release>(),
      "Detector trace of one protocol run.");

  m.def(
      "waiting_times",
      [](const DetectorTrace& tr, double eps, int first, int last_offset) {
        return waiting_times(tr, eps, {first, last_offset});
      },
      py::arg("trace"), py::arg("epsilon") = kDefaultEpsilon,
      py::arg("fit_first") = 3, py::arg("fit_last_offset") = 2);

  m.def(
      "sweep",
      [](const ProtocolSpec& spec, const std::string& axis1,
         std::vector<double> values1, std::optional<std::string> axis2,
         std::optional<std::vector<double>> values2, double eps, int workers) {
        std::optional<SweepAxis> a2;
        if (axis2) a2 = SweepAxis{*axis2, values2.value_or(std::vector<double>{})};
        SweepOptions opts;
        opts.epsilon = eps;
        opts.workers = workers;
        SweepResult r;
        {
          py::gil_scoped_release release;
          r = sweep(spec, {axis1, std::move(values1)}, a2, opts);
        }
        py::list cells;
        for (const auto& c : r.cells) {
          py::dict d;
          d["axis1"] = c.axis1;
          if (r.axis2) d["axis2"] = c.axis2;
          d["status"] = std::string(to_string(c.status));
          d["speed"] = c.speed();
          d["error"] = c.error;
          cells.append(d);
        }
        return cells;
      },
      py::arg("spec"), py::arg("axis1"), py::arg("values1"),
      py::arg("axis2") = py::none(), py::arg("values2") = py::none(),
      py::arg("epsilon") = kDefaultEpsilon, py::arg("workers") = 1);

  m.def("figure_ids", &figure_ids);
  m.def(
      "figure_spec", [](const std::string& id) { return figure_preset(id).spec; },
      py::arg("id"));

  m.def("one_magnon_F", &one_magnon_F, py::arg("n"), py::arg("t"),
        py::arg("t0"), py::arg("J") = 1.0);
  m.def(
      "free_fermion_F",
      [](int n, double Jx, double Jy, double h, double t0,
         const std::vector<double>& times) {
        return ff_protocol_F(n, Jx, Jy, h, t0, times).F;
      },
      py::arg("N"), py::arg("Jx"), py::arg("Jy"), py::arg("h"), py::arg("t0"),
      py::arg("times_over_t0"));
}
