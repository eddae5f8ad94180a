#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aknsmf/cli.hpp"
#include "aknsmf/multiform.hpp"
#include "aknsmf/poisson.hpp"
#include "aknsmf/report.hpp"

#include <memory>
#include <sstream>

namespace py = pybind11;
using namespace aknsmf;

namespace {

std::shared_ptr<const AknsFrame> make_frame(int order) {
    return std::make_shared<const AknsFrame>(build_frame(order));
}

std::string derive_l(int i, int j, const std::string& coords) {
    AknsFrame fr = build_frame(i + j + 1);
    Poly v = lagrangian_coeff(fr, i, j).value;
    if (coords == "qr") v = QrChart(std::max(1, v.max_ef_index())).ef_to_qr(v);
    return v.str();
}

std::string derive_h(int i, int j, const std::string& coords) {
    AknsFrame fr = build_frame(i + j + 1);
    Poly v = hamiltonian_coeff(fr, i, j).value;
    if (coords == "qr") v = QrChart(std::max(1, v.max_ef_index())).ef_to_qr(v);
    return v.str();
}

std::string derive_omega(int k, const std::string& coords) {
    AknsFrame fr = build_frame(std::max(k, 1));
    VBForm w = symplectic_coeff(fr, k).omega;
    if (coords == "qr") {
        int top = 1;
        for (const VBTerm& t : w.terms())
            for (const Variable& v : t.vlegs) top = std::max(top, v.index);
        w = ef_to_qr(QrChart(top), w);
    }
    return w.str();
}

std::string derive_flow_str(int time, const std::string& var, const std::string& coords) {
    if (var.size() < 2 || (var[0] != 'e' && var[0] != 'f'))
        throw Error("var must be e<j> or f<j>");
    int idx = std::atoi(var.c_str() + 1);
    auto fr = make_frame(idx + time);
    FlowSet flows(fr);
    Poly v = flows.apply(time, var[0] == 'e' ? Poly::e(idx) : Poly::f(idx));
    if (coords == "qr") v = QrChart(std::max(1, v.max_ef_index())).ef_to_qr(v);
    return v.str();
}

py::list run_verify(const std::string& what, int max_time) {
    std::ostringstream out, err;
    std::vector<std::string> args{"verify", what, "--max-time", std::to_string(max_time),
                                  "--format", "json"};
    int rc = run_cli(args, out, err);
    if (rc == 2) throw Error("verify failed: " + err.str());
    py::module json = py::module::import("json");
    return json.attr("loads")(out.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact multiform engine for the 2x2 integrable hierarchy";

    py::register_exception<Error>(m, "EngineError");

    m.def("derive_l", &derive_l, py::arg("i"), py::arg("j"), py::arg("coords") = "ef",
          "Lagrangian multiform coefficient L_ij in canonical text form");
    m.def("derive_h", &derive_h, py::arg("i"), py::arg("j"), py::arg("coords") = "ef",
          "Hamiltonian multiform coefficient H_ij in canonical text form");
    m.def("derive_omega", &derive_omega, py::arg("k"), py::arg("coords") = "ef",
          "single-time symplectic form omega_k");
    m.def("derive_flow", &derive_flow_str, py::arg("time"), py::arg("var"), py::arg("coords") = "ef",
          "flow derivative D_time of a phase variable");
    m.def("verify", &run_verify, py::arg("check"), py::arg("max_time") = 4,
          "run a verification suite; returns the list of check records");
    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int rc = run_cli(args, out, err);
        return py::make_tuple(rc, out.str(), err.str());
    });
}
