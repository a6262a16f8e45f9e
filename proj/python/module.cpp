#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <vector>

#include "latsq/core.hpp"
#include "latsq/harness.hpp"
#include "latsq/isotopy.hpp"
#include "latsq/mappings.hpp"
#include "latsq/prolong.hpp"

namespace py = pybind11;
using namespace latsq;

namespace {

PartialTransversal transversal_from_cells(
    const std::vector<std::tuple<int, int, int>>& cells) {
  PartialTransversal t;
  for (const auto& [row, col, symbol] : cells) t.cells.push_back({row, col, symbol});
  return t;
}

std::vector<std::tuple<int, int, int>> cells_of(const PartialTransversal& t) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& e : t.cells) out.emplace_back(e.row, e.col, e.symbol);
  return out;
}

}  // namespace

PYBIND11_MODULE(_latsq, m) {
  m.doc() = "Latin squares, complete mappings and prolongations";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Permutation>(m, "Permutation")
      .def_static("identity", &Permutation::identity, py::arg("n"))
      .def_static("from_images", &Permutation::from_images, py::arg("images"))
      .def_static("parse", &Permutation::parse, py::arg("text"))
      .def_property_readonly("order", &Permutation::order)
      .def("of", &Permutation::of, py::arg("x"))
      .def_property_readonly("images", &Permutation::images)
      .def("inverse", &Permutation::inverse)
      .def("__str__", &Permutation::to_string)
      .def("__repr__",
           [](const Permutation& p) { return "Permutation(" + p.to_string() + ")"; })
      .def(py::self == py::self)
      .def(py::self < py::self);

  m.def("compose", &compose, py::arg("f"), py::arg("g"),
        "compose(f, g)(x) = f(g(x))");

  py::class_<LatinSquare>(m, "LatinSquare")
      .def_static("from_rows", &LatinSquare::from_rows, py::arg("rows"))
      .def_property_readonly("order", &LatinSquare::order)
      .def("at", &LatinSquare::at, py::arg("row"), py::arg("col"))
      .def("rows", &LatinSquare::rows)
      .def("__str__", [](const LatinSquare& s) { return to_text(s); })
      .def("__repr__",
           [](const LatinSquare& s) {
             return "LatinSquare(order=" + std::to_string(s.order()) + ")";
           })
      .def(py::self == py::self);

  m.def("parse", [](const std::string& text) { return parse_square(text); }, py::arg("text"),
        "Parse the text table format into a LatinSquare.");
  m.def("to_text", [](const LatinSquare& s) { return to_text(s); }, py::arg("square"));
  m.def(
      "validate_rows",
      [](const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        Grid grid(n);
        for (int r = 1; r <= n; ++r) {
          if (static_cast<int>(rows[r - 1].size()) != n)
            throw std::invalid_argument("rows must form an n-by-n array");
          for (int c = 1; c <= n; ++c) grid.at(r, c) = rows[r - 1][c - 1];
        }
        return validate(grid).message();
      },
      py::arg("rows"), "Check the Latin property; returns 'valid' or the first violation.");

  m.def("cyclic_table", &cyclic_table, py::arg("n"));
  m.def("klein_table", &klein_table);
  m.def("apply_isotopy", &apply_isotopy, py::arg("square"), py::arg("alpha"), py::arg("beta"),
        py::arg("gamma"));

  py::enum_<MappingKind>(m, "MappingKind")
      .value("complete", MappingKind::complete)
      .value("quasicomplete", MappingKind::quasicomplete)
      .value("neither", MappingKind::neither);

  py::class_<MappingClassification>(m, "MappingClassification")
      .def_readonly("kind", &MappingClassification::kind)
      .def_property_readonly(
          "conjugate", [](const MappingClassification& c) { return c.conjugate.values; })
      .def_readonly("defect", &MappingClassification::defect)
      .def_readonly("special", &MappingClassification::special)
      .def_readonly("special_preimages", &MappingClassification::special_preimages);

  m.def(
      "conjugate",
      [](const LatinSquare& square, const Permutation& sigma) {
        return conjugate(square, sigma).values;
      },
      py::arg("square"), py::arg("sigma"),
      "Images of x -> square[x, sigma(x)] as a list.");
  m.def("classify", &classify, py::arg("square"), py::arg("sigma"));
  m.def("find_complete_mappings", &find_complete_mappings, py::arg("square"),
        py::arg("limit") = std::optional<int>{});
  m.def("find_quasicomplete_mappings", &find_quasicomplete_mappings, py::arg("square"),
        py::arg("limit") = std::optional<int>{});

  m.def(
      "max_partial_transversal",
      [](const LatinSquare& square) { return cells_of(max_partial_transversal(square)); },
      py::arg("square"),
      "Lexicographically least maximum partial transversal as (row, col, symbol) tuples.");
  m.def("max_partial_transversal_length", &max_partial_transversal_length, py::arg("square"));
  m.def(
      "transversal_to_mapping",
      [](const LatinSquare& square, const std::vector<std::tuple<int, int, int>>& cells) {
        return transversal_to_mapping(square, transversal_from_cells(cells));
      },
      py::arg("square"), py::arg("cells"));

  py::class_<Prolongation>(m, "Prolongation")
      .def_readonly("result", &Prolongation::result)
      .def_readonly("q", &Prolongation::q)
      .def_property_readonly(
          "method", [](const Prolongation& p) { return std::string(to_string(p.spec.method)); })
      .def_property_readonly("sigma", [](const Prolongation& p) { return p.spec.sigma; })
      .def_property_readonly("a", [](const Prolongation& p) { return p.spec.a; })
      .def_property_readonly("x1", [](const Prolongation& p) { return p.spec.x1; })
      .def("__str__", [](const Prolongation& p) { return to_text(p); });

  m.def("prolong_classical", &prolong_classical, py::arg("square"), py::arg("sigma"));
  m.def("prolong_classical_idempotent", &prolong_classical_idempotent, py::arg("square"));
  m.def("prolong_belyavskaya", &prolong_belyavskaya, py::arg("square"), py::arg("sigma"),
        py::arg("a"));
  m.def("prolong_deriyenko_dudek", &prolong_deriyenko_dudek, py::arg("square"),
        py::arg("sigma"), py::arg("x1"));
  m.def("prolong_any", &prolong_any, py::arg("square"));

  py::class_<IsotopyWitness>(m, "IsotopyWitness")
      .def(py::init([](Permutation alpha, Permutation beta, Permutation gamma) {
             return IsotopyWitness{std::move(alpha), std::move(beta), std::move(gamma)};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
      .def_readonly("alpha", &IsotopyWitness::alpha)
      .def_readonly("beta", &IsotopyWitness::beta)
      .def_readonly("gamma", &IsotopyWitness::gamma)
      .def(py::self == py::self);

  m.def("are_isotopic", &are_isotopic, py::arg("first"), py::arg("second"),
        "Witness triple with gamma(first[x, y]) = second[alpha(x), beta(y)], or None.");
  m.def("verify_witness", &verify_witness, py::arg("first"), py::arg("second"),
        py::arg("witness"));

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("order", &ScanReport::order)
      .def_readonly("squares_scanned", &ScanReport::squares_scanned)
      .def_readonly("min_max_transversal", &ScanReport::min_max_transversal)
      .def_readonly("witnesses", &ScanReport::witnesses);

  m.def("enumerate_reduced_squares", &enumerate_reduced_squares, py::arg("n"));
  m.def("brualdi_scan", &brualdi_scan, py::arg("n"), py::arg("threads") = 0);
}
