#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quandle/amalgam.hpp"
#include "quandle/core.hpp"
#include "quandle/decomp.hpp"
#include "quandle/generators.hpp"
#include "quandle/isomorph.hpp"
#include "quandle/matrix_io.hpp"

#include <variant>

namespace py = pybind11;
using namespace quandle;

namespace {

RackAction action_from_images(const Table& source, const Table& target,
                              const std::vector<std::vector<int>>& maps) {
    RackAction a{source, target, {}};
    a.maps.reserve(maps.size());
    for (const auto& images : maps)
        a.maps.emplace_back(images);
    return a;
}

} // namespace

PYBIND11_MODULE(_quandles, m) {
    m.doc() = "finite quandles as operation matrices: validation, orbit "
              "decomposition, rack actions, gluing, isomorphism and census";

    py::register_exception<BoundExceeded>(m, "BoundExceeded");
    py::register_exception<ParseError>(m, "MatrixParseError");

    py::class_<Table>(m, "Table")
        .def(py::init(&Table::from_rows), py::arg("rows"))
        .def_property_readonly("order", &Table::order)
        .def("op", &Table::op, py::arg("a"), py::arg("b"))
        .def("inv_op", &Table::inv_op, py::arg("a"), py::arg("b"))
        .def("rows", &Table::rows)
        .def("__eq__", [](const Table& a, const Table& b) { return a == b; })
        .def("__lt__", [](const Table& a, const Table& b) { return a < b; })
        .def("__hash__",
             [](const Table& t) {
                 size_t h = std::hash<int>()(t.order());
                 for (int v : t.entries())
                     h = h * 1000003u + static_cast<size_t>(v);
                 return h;
             })
        .def("__repr__", [](const Table& t) {
            return "<quandle Table of order " + std::to_string(t.order()) + ">";
        })
        .def("__str__", [](const Table& t) { return to_matrix_text(t); });

    m.def(
        "validate",
        [](const std::vector<std::vector<int>>& rows) {
            auto result = validate(rows);
            if (const auto* violation = std::get_if<AxiomViolation>(&result))
                throw py::value_error(violation->describe());
            return std::get<Table>(result);
        },
        py::arg("rows"), "Returns a Table or raises ValueError naming the failed axiom.");
    m.def("is_quandle", &is_quandle);
    m.def(
        "axiom_violation",
        [](const Table& t) -> std::optional<std::string> {
            if (auto violation = check_axioms(t))
                return violation->describe();
            return std::nullopt;
        },
        "First axiom violation in scan order, or None.");
    m.def("dual", &dual);
    m.def("column_permutation",
          [](const Table& q, int b) { return column_permutation(q, b).images(); });

    m.def("trivial", &trivial, py::arg("n"));
    m.def("alexander", &alexander, py::arg("n"), py::arg("t"));
    m.def("dihedral", &dihedral, py::arg("n"));
    m.def("conjugation", &conjugation, py::arg("cayley"));
    m.def("product", &product);

    m.def("is_closed_subset", &is_closed_subset);
    m.def("is_complemented", &is_complemented);
    m.def("orbit", &orbit);
    m.def("orbit_decomposition",
          [](const Table& q) { return orbit_decomposition(q).parts; });
    m.def("minimal_complemented", &minimal_complemented);
    m.def("is_connected", &is_connected);
    m.def("subquandle_depth", &subquandle_depth);
    m.def("all_subquandles", &all_subquandles, py::arg("q"), py::arg("max_order") = 12);
    m.def(
        "restrict_to",
        [](const Table& q, const std::vector<int>& part) {
            auto sub = restrict_to(q, part);
            return py::make_tuple(sub.table, sub.labels);
        },
        "Restriction relabeled 1..k plus the original labels.");

    m.def("is_automorphism",
          [](const Table& q, const std::vector<int>& images) {
              return is_automorphism(q, Permutation(images));
          });
    m.def(
        "automorphisms",
        [](const Table& q, int max_order) {
            std::vector<std::vector<int>> out;
            for (const auto& p : automorphisms(q, max_order))
                out.push_back(p.images());
            return out;
        },
        py::arg("q"), py::arg("max_order") = 10);
    m.def(
        "verify_rack_action",
        [](const Table& source, const Table& target,
           const std::vector<std::vector<int>>& maps) -> std::optional<py::tuple> {
            if (auto v = verify_rack_action(action_from_images(source, target, maps)))
                return py::make_tuple(v->kind == RackActionDefect::NotAutomorphism
                                          ? "not_automorphism"
                                          : "rack_law",
                                      v->witness[0], v->witness[1], v->witness[2]);
            return std::nullopt;
        },
        py::arg("source"), py::arg("target"), py::arg("maps"),
        "None when valid, else (defect, ...witness).");
    m.def("enumerate_rack_actions", [](const Table& r, const Table& s) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& action : enumerate_rack_actions(r, s)) {
            std::vector<std::vector<int>> maps;
            for (const auto& p : action.maps)
                maps.push_back(p.images());
            out.push_back(std::move(maps));
        }
        return out;
    });

    m.def("glue2", &glue2);
    m.def("glue_n", &glue_n);
    m.def("enumerate_nonconnected", &enumerate_nonconnected);

    m.def("are_isomorphic",
          [](const Table& q, const Table& q2) -> std::optional<std::vector<int>> {
              if (auto witness = are_isomorphic(q, q2))
                  return witness->images();
              return std::nullopt;
          });
    m.def("relabel",
          [](const Table& q, const std::vector<int>& images) {
              return relabel(q, Permutation(images));
          });
    m.def("canonical_form", &canonical_form, py::arg("q"), py::arg("max_order") = 9);
    m.def("census", &census, py::arg("n"), py::arg("max_order") = 5);

    m.def("parse_matrix_text", &parse_matrix_text);
    m.def("to_matrix_text", &to_matrix_text);
}
