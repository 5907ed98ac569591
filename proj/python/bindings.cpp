#include "mixedmoore/algebra.hpp"
#include "mixedmoore/bounds.hpp"
#include "mixedmoore/canonical.hpp"
#include "mixedmoore/codec.hpp"
#include "mixedmoore/core.hpp"
#include "mixedmoore/error.hpp"
#include "mixedmoore/families.hpp"
#include "mixedmoore/reference.hpp"
#include "mixedmoore/search.hpp"
#include "mixedmoore/spectra.hpp"
#include "mixedmoore/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mixedmoore;

namespace {

// Big integers cross the boundary as Python ints.
py::object to_py(const BigInt& x)
{
    return py::reinterpret_steal<py::object>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

MixedGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<std::pair<int, int>>& arcs)
{
    std::vector<Edge> e;
    std::vector<Arc> a;
    for (auto [u, v] : edges)
        e.emplace_back(u, v);
    for (auto [u, v] : arcs)
        a.push_back({u, v});
    return MixedGraph::build(n, std::move(e), std::move(a));
}

py::tuple labeled(const families::LabeledMixedGraph& g)
{
    return py::make_tuple(g.graph, g.labels);
}

algebra::FiniteGroup group_of(const std::string& spec)
{
    return algebra::parse_group(spec);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Mixed graphs of small diameter: constructions, bounds and searches";

    static PyObject* exc_type = PyErr_NewException("mixedmoore._core.MixedMooreError", PyExc_ValueError, nullptr);
    m.add_object("MixedMooreError", py::handle(exc_type));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::reinterpret_borrow<py::object>(exc_type)(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(exc_type, inst.ptr());
        }
    });

    py::class_<MixedGraph>(m, "MixedGraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
             py::arg("arcs") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("order", &MixedGraph::order)
        .def_property_readonly("edges",
                               [](const MixedGraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& e : g.edges())
                                       out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def_property_readonly("arcs",
                               [](const MixedGraph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& a : g.arcs())
                                       out.emplace_back(a.from, a.to);
                                   return out;
                               })
        .def("has_edge", &MixedGraph::has_edge)
        .def("has_arc", &MixedGraph::has_arc)
        .def("diameter", [](const MixedGraph& g, int jobs) { return diameter(g, jobs); }, py::arg("jobs") = 1)
        .def("is_totally_regular", &is_totally_regular, py::arg("r") = 1, py::arg("z") = 1)
        .def("digraph6", [](const MixedGraph& g, bool amp) { return codec::encode_digraph6(g, amp); },
             py::arg("prefix") = true)
        .def("to_text", &codec::to_text)
        .def("canonical_hex", [](const MixedGraph& g) { return canonical_form(g).hex(); })
        .def("__eq__", &MixedGraph::operator==)
        .def("__repr__", [](const MixedGraph& g) {
            return "<MixedGraph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edges().size()) +
                   " arcs=" + std::to_string(g.arcs().size()) + ">";
        });

    m.def("decode_digraph6", [](const std::string& s) { return codec::decode_digraph6(s); });
    m.def("parse_text", [](const std::string& s) { return codec::parse_text(s); });
    m.def("are_isomorphic", &are_isomorphic);
    m.def("automorphism_count", &automorphism_count, py::arg("g"), py::arg("max_order") = 256);

    m.def("moore_bound", [](int k, int r, int z) { return to_py(bounds::moore_mixed(r, z, k)); }, py::arg("k"),
          py::arg("r") = 1, py::arg("z") = 1);
    m.def("upper_bound", [](int k) { return to_py(bounds::upper_bound(k)); });
    m.def("lower_bound", [](int k) { return to_py(bounds::lower_bound(k)); });
    m.def("lower_bound_source", &bounds::lower_bound_source);

    m.def("build_E", [](int n) { return labeled(families::build_E(n)); });
    m.def("build_F", [](int n) { return labeled(families::build_F(n)); });
    m.def("build_Fstar", [](int n) { return labeled(families::build_Fstar(n)); });
    m.def("build_Fprime", [](int n) { return labeled(families::build_Fprime(n)); });
    m.def("build_G", [](int n) { return labeled(families::build_G(n)); });
    m.def("build_Gplus", [](int n) { return labeled(families::build_Gplus(n)); });
    m.def("build_H_K3", [](int n) { return labeled(families::build_H(n, families::symmetric_cycle(3))); });
    m.def("de_bruijn", [](int d, int k) { return families::de_bruijn(d, k).as_mixed(); });
    m.def("kautz", [](int d, int k) { return families::kautz(d, k).as_mixed(); });

    m.def("char_poly", [](const MixedGraph& g) {
        py::list out;
        for (const auto& c : spectra::char_poly(g).coefficients())
            out.append(to_py(c));
        return out;
    });
    m.def("spectrum_class", [](const MixedGraph& g) { return spectra::classify(g); });
    m.def("order14_diameter4", [] {
        std::vector<MixedGraph> out;
        for (auto s : reference::order14_diameter4)
            out.push_back(codec::decode_digraph6(s));
        return out;
    });

    m.def("group_order", [](const std::string& spec) { return group_of(spec).order(); });
    m.def("cayley", [](const std::string& spec, const std::vector<std::string>& s1, const std::vector<std::string>& s2) {
        const auto g = group_of(spec);
        std::vector<int> a, b;
        for (const auto& x : s1)
            a.push_back(g.element(x));
        for (const auto& x : s2)
            b.push_back(g.element(x));
        return algebra::cayley_mixed(g, a, b);
    });
    m.def("lift", [](const std::string& spec, const std::string& base) {
        const auto g = group_of(spec);
        return algebra::lift(algebra::parse_voltage_base(base, g), g);
    });
    m.attr("FIG7_BASE") = std::string(reference::fig7_base);

    m.def(
        "search_almost_moore",
        [](int k, int jobs, std::uint64_t budget) {
            search::SearchOptions opts;
            opts.jobs = jobs;
            opts.budget = budget;
            py::gil_scoped_release release;
            auto res = search::search_almost_moore(k, opts);
            py::gil_scoped_acquire acquire;
            py::dict d;
            d["matching_completions"] = res.matching_completions;
            d["examined"] = res.examined;
            d["budget_exhausted"] = res.budget_exhausted;
            std::vector<MixedGraph> graphs;
            for (const auto& s : res.survivors)
                graphs.push_back(s.graph);
            d["survivors"] = graphs;
            return d;
        },
        py::arg("k"), py::arg("jobs") = 1, py::arg("budget") = 0);

    m.def("suite_names", &verify::suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, int jobs) {
            const auto rep = verify::run_suite(name, jobs);
            py::list checks;
            for (const auto& c : rep.checks)
                checks.append(py::make_tuple(c.description, c.expected, c.observed, c.pass));
            return py::make_tuple(rep.passed(), checks);
        },
        py::arg("name"), py::arg("jobs") = 1);
}
