#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arcgraph/adjoint.hpp"
#include "arcgraph/btable.hpp"
#include "arcgraph/coloring.hpp"
#include "arcgraph/errors.hpp"
#include "arcgraph/io.hpp"
#include "arcgraph/verify.hpp"

namespace py = pybind11;
using namespace arcgraph;

namespace {

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["instance"] = r.instance;
    d["check"] = r.check;
    d["k"] = r.k;
    d["direct"] = r.direct;
    d["formula"] = r.formula;
    d["lower_bound"] = r.lower_bound;
    d["agreement"] = r.agreement;
    d["seconds"] = r.seconds;
    return d;
}

std::optional<std::vector<std::size_t>> hom_or_none(const std::optional<VertexMap>& m) {
    if (!m) return std::nullopt;
    return m->assignment;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Arc graphs, the right adjoint, ideal lattices and exact colouring/width solvers";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidInput>(m, "InvalidInput", base);
    py::register_exception<SizeBudgetExceeded>(m, "SizeBudgetExceeded", base);
    py::register_exception<LoopPresent>(m, "LoopPresent", base);
    py::register_exception<NotSymmetric>(m, "NotSymmetric", base);
    py::register_exception<MissingLabels>(m, "MissingLabels", base);
    py::register_exception<RetractionInvalid>(m, "RetractionInvalid", base);
    py::register_exception<TableIncomplete>(m, "TableIncomplete", base);
    py::register_exception<CacheMismatch>(m, "CacheMismatch", base);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init<std::size_t>(), py::arg("n"))
        .def(py::init<std::size_t, const std::vector<Arc>&>(), py::arg("n"), py::arg("arcs"))
        .def_property_readonly("vertex_count", &Digraph::vertex_count)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def("arcs", &Digraph::arcs)
        .def("has_arc", &Digraph::has_arc)
        .def("is_symmetric", &Digraph::is_symmetric)
        .def("has_loops", &Digraph::has_loops)
        .def("labels",
             [](const Digraph& g) {
                 std::vector<std::string> out;
                 if (g.has_labels())
                     for (const auto& l : g.labels()) out.push_back(label_to_string(l));
                 return out;
             })
        .def("to_json", [](const Digraph& g) { return io::canonical(io::to_json(g)); })
        .def_static("from_json", [](const std::string& s) { return io::digraph_from_json(io::json::parse(s)); })
        .def(py::self == py::self)
        .def("__repr__", [](const Digraph& g) {
            return "<Digraph n=" + std::to_string(g.vertex_count()) + " arcs=" + std::to_string(g.arc_count()) + ">";
        });

    py::class_<Poset>(m, "Poset")
        .def(py::init<std::size_t>(), py::arg("m"))
        .def_static("from_relation", &Poset::from_relation, py::arg("m"), py::arg("less"))
        .def_property_readonly("size", &Poset::size)
        .def("less", &Poset::less)
        .def("comparable", &Poset::comparable)
        .def("relation", &Poset::relation)
        .def("covers", &Poset::covers)
        .def("to_json", [](const Poset& p) { return io::canonical(io::to_json(p)); })
        .def("__len__", &Poset::size);

    m.def("generate", [](const std::string& kind, std::size_t n) { return generate(parse_graph_kind(kind), n); },
          py::arg("kind"), py::arg("n"));
    m.def("arc_graph", &arc_graph);
    m.def("iterated_arc_graph", &iterated_arc_graph, py::arg("g"), py::arg("k"));
    m.def("check_delta_iso", &check_delta_iso, py::arg("g"), py::arg("k"), py::arg("budget") = 1'000'000);
    m.def("symmetric_restriction", &symmetric_restriction);
    m.def("find_homomorphism", [](const Digraph& g, const Digraph& h) { return hom_or_none(find_homomorphism(g, h)); });

    m.def("chromatic_number", &chromatic_number);
    m.def("optimal_coloring", [](const Digraph& g) {
        const Coloring c = optimal_coloring(g);
        return py::make_tuple(c.k, c.colors);
    });

    m.def("antichain_poset", &antichain_poset);
    m.def("chain_poset", &chain_poset);
    m.def("ideal_lattice", &ideal_lattice, py::arg("p"), py::arg("budget") = kDefaultBudget);
    m.def("iterated_ideal_lattice", &iterated_ideal_lattice, py::arg("n"), py::arg("k"),
          py::arg("budget") = kDefaultBudget);
    m.def("count_ideals", &count_ideals, py::arg("p"), py::arg("budget") = kDefaultBudget);
    m.def(
        "width",
        [](const Poset& p, bool force) {
            const auto cert = width(p, force);
            return py::make_tuple(cert.antichain, cert.chains);
        },
        py::arg("p"), py::arg("force") = false);
    m.def("level_sizes", &level_sizes);
    m.def("dedekind", &dedekind, py::arg("n"), py::arg("budget") = kDefaultBudget);
    m.def("nondomination", &nondomination);
    m.def(
        "b_value",
        [](std::size_t n, std::size_t k, std::size_t budget, const std::optional<std::string>& table) {
            if (!table) return b_value(n, k, {budget, nullptr, true});
            auto t = BTable::load(*table);
            const auto b = b_value(n, k, {budget, t.get(), true});
            t->save(*table);
            return b;
        },
        py::arg("n"), py::arg("k"), py::arg("budget") = kDefaultBudget, py::arg("table") = py::none());

    m.def("delta_right", &delta_right, py::arg("k"), py::arg("budget") = kDefaultBudget);
    m.def("iterated_delta_right", &iterated_delta_right, py::arg("k"), py::arg("times"),
          py::arg("budget") = kDefaultBudget);
    m.def(
        "tight_core",
        [](const Digraph& k, std::size_t budget) {
            const auto tc = tight_core(k, budget);
            return py::make_tuple(tc.core, tc.core_vertices, tc.retraction.assignment);
        },
        py::arg("k"), py::arg("budget") = kDefaultBudget);
    m.def("check_adjunction", &check_adjunction, py::arg("g"), py::arg("k"), py::arg("budget") = kDefaultBudget);
    m.def("core_equals_nondomination", &core_equals_nondomination, py::arg("p"), py::arg("budget") = kDefaultBudget);

    m.def(
        "chi_via_formula", [](std::size_t chi, std::size_t k) { return chi_via_formula(chi, k); }, py::arg("chi"),
        py::arg("k"));
    m.def(
        "verify_theorem3", [](const Digraph& g, std::size_t k) { return report_dict(verify_theorem3(g, k)); },
        py::arg("g"), py::arg("k"));
    m.def("verify_eh", [](const Digraph& g) { return report_dict(verify_eh(g)); });
    m.def("max_tt", &max_tt, py::arg("n"), py::arg("k"), py::arg("m_cap"), py::arg("budget") = kDefaultBudget);
}
