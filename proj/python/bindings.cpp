// Documents cross the boundary as JSON strings; the Python package decodes them.
#include "qtf/analysis.hpp"
#include "qtf/dft.hpp"
#include "qtf/directional.hpp"
#include "qtf/errors.hpp"
#include "qtf/fixtures.hpp"
#include "qtf/report_json.hpp"
#include "qtf/sampler.hpp"
#include "qtf/smoothness.hpp"
#include "qtf/specfact.hpp"
#include "qtf/verify.hpp"
#include "qtf/vmconstruct.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qtf;

namespace {

// "fixture:<name>", a file path, or an inline JSON document
json document(const std::string& s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (s[first] == '{' || s[first] == '[')) {
        try {
            return json::parse(s);
        } catch (const json::parse_error& e) {
            throw Error(Errc::SchemaError, e.what());
        }
    }
    return load_input(s);
}

QtfBank bank(const std::string& s) { return bank_from_json(document(s)); }

std::string analyze_doc(const std::string& in) {
    QtfBank b = bank(in);
    return to_json(analyze(b.lowpass, b.ctx)).dump();
}

std::string construct_doc(const std::string& method, const std::string& in, int m, bool merge, int max_expand) {
    QtfBank b = bank(in);
    QtfBank out;
    if (method == "directional") out = construct_directional(b.lowpass, b.ctx, {merge});
    else if (method == "vm-sos") out = construct_vm_sos(b.lowpass, b.ctx, m);
    else if (method == "vm-linear") out = construct_vm_linear(b.lowpass, b.ctx, m, max_expand);
    else if (method == "differencing") out = construct_differencing(b.lowpass, b.ctx, m, max_expand);
    else throw Error(Errc::InvalidArgument, "unknown construction '" + method + "'");
    return to_json(out).dump();
}

std::string verify_doc(const std::string& in) { return to_json(verify_bank(bank(in))).dump(); }

double spot_check_doc(const std::string& in, int samples) { return spot_check_frequency(bank(in), samples); }

std::string smoothness_doc(const std::string& in, const std::string& method, bool cross_check, double tol) {
    QtfBank b = bank(in);
    SmoothnessOptions o;
    if (method == "ratio") o.method = SmoothnessMethod::PowerRatio;
    else if (method != "transition") throw Error(Errc::InvalidArgument, "method must be transition or ratio");
    o.cross_check = cross_check;
    o.tol = tol;
    return to_json(smoothness_l2(b.lowpass, b.ctx, o)).dump();
}

std::string specfact_doc(const std::string& in) {
    return to_json(factor_hermitian(laurent_matrix_from_json(document(in)))).dump();
}

std::string analyze_signal(const std::string& v, const std::string& bank_in, int levels) {
    return to_json(analyze(laurent_from_json(document(v)), bank(bank_in), levels)).dump();
}

std::string synthesize_signal(const std::string& tree, const std::string& bank_in) {
    return to_json(synthesize(tree_from_json(document(tree)), bank(bank_in))).dump();
}

// Rows of (x_1, ..., x_d, value).
std::vector<std::vector<double>> sample_doc(const std::string& in, int depth, int which) {
    QtfBank b = bank(in);
    GridSamples phi = sample_refinable(b.lowpass, b.ctx, depth);
    GridSamples s = phi;
    if (which > 0) {
        if (static_cast<std::size_t>(which) > b.highpass.size())
            throw Error(Errc::InvalidArgument, "framelet index " + std::to_string(which) + " out of range");
        s = sample_framelet(b.highpass[static_cast<std::size_t>(which) - 1].filter, phi, b.ctx);
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(s.values.size());
    for (auto& [k, v] : s.values) {
        auto x = grid_point(b.ctx, s.depth, k);
        x.push_back(v);
        rows.push_back(std::move(x));
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quasi-tight framelet filter banks with exact rational arithmetic";

    static py::exception<Error> qtf_error(m, "QtfError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = qtf_error;
            py::object inst = err(e.what());
            inst.attr("code") = errc_name(e.code());
            PyErr_SetObject(qtf_error.ptr(), inst.ptr());
        }
    });

    m.def("fixture_names", &fixture_names);
    m.def("bank_fixture_names", &bank_fixture_names);
    m.def("fixture", [](const std::string& name) { return fixture_json(name).dump(); }, py::arg("name"));
    m.def("analyze", &analyze_doc, py::arg("filter"));
    m.def("construct", &construct_doc, py::arg("method"), py::arg("filter"), py::arg("m") = 0,
          py::arg("merge") = false, py::arg("max_expand") = 4);
    m.def("verify", &verify_doc, py::arg("bank"));
    m.def("spot_check", &spot_check_doc, py::arg("bank"), py::arg("samples") = 64);
    m.def("smoothness", &smoothness_doc, py::arg("filter"), py::arg("method") = "transition",
          py::arg("cross_check") = false, py::arg("tol") = 1e-6);
    m.def("specfact", &specfact_doc, py::arg("matrix"));
    m.def("transform", &analyze_signal, py::arg("signal"), py::arg("bank"), py::arg("levels"));
    m.def("inverse_transform", &synthesize_signal, py::arg("tree"), py::arg("bank"));
    m.def("sample", &sample_doc, py::arg("filter"), py::arg("depth"), py::arg("which") = 0);
}
