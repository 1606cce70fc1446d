// Copyright 2026 The Authors.
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cflat/cflat.hpp"

namespace py = pybind11;
using namespace cflat;

namespace {

Subset to_subset(const Matroid& m, const std::vector<std::string>& labels) {
  return m.ground().subset_of(labels);
}

py::dict poly_dict(const Poly2& p) {
  py::dict out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& t : p.terms()) out[py::make_tuple(t.x, t.y)] = to_int(t.c.str());
  return out;
}

Matroid from_flats(const std::vector<std::string>& ground,
                   const std::vector<std::pair<std::vector<std::string>, int>>& flats) {
  GroundSet g(ground);
  std::vector<CyclicFlat> entries;
  for (const auto& [set, rank] : flats) entries.push_back({g.subset_of(set), rank});
  return Matroid::from_family(RankedFamily(std::move(g), std::move(entries)));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Matroids through their lattices of cyclic flats";

  static py::exception<Error> error_type(mod, "CflatError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Matroid>(mod, "Matroid")
      .def(py::init(&from_flats), py::arg("ground"), py::arg("cyclic_flats"),
           "Build from ground labels and (set, rank) pairs; the axioms are checked.")
      .def_static("from_json", [](const std::string& text) {
        return Matroid::from_family(parse_matroid(text));
      })
      .def("to_json", [](const Matroid& m) { return emit_matroid(m); })
      .def_property_readonly("ground", [](const Matroid& m) { return m.ground().labels(); })
      .def_property_readonly("cyclic_flats",
                             [](const Matroid& m) {
                               std::vector<std::pair<std::vector<std::string>, int>> out;
                               for (const auto& f : m.cyclic_flats()) {
                                 out.emplace_back(m.ground().names_of(f.set), f.rank);
                               }
                               return out;
                             })
      .def("rank", [](const Matroid& m) { return m.rank(); })
      .def("rank", [](const Matroid& m, const std::vector<std::string>& s) {
        return m.rank(to_subset(m, s));
      })
      .def("nullity", [](const Matroid& m) { return m.nullity(); })
      .def("is_independent", [](const Matroid& m, const std::vector<std::string>& s) {
        return is_independent(m, to_subset(m, s));
      })
      .def("closure", [](const Matroid& m, const std::vector<std::string>& s) {
        return m.ground().names_of(closure(m, to_subset(m, s)));
      })
      .def("circuits",
           [](const Matroid& m) {
             std::vector<std::vector<std::string>> out;
             for (Subset c : circuits(m)) out.push_back(m.ground().names_of(c));
             return out;
           })
      .def("__len__", [](const Matroid& m) { return m.ground_size(); })
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& m) {
        return "<Matroid |E|=" + std::to_string(m.ground_size()) + " rank=" +
               std::to_string(m.rank()) + " |Z|=" + std::to_string(m.num_cyclic_flats()) + ">";
      });

  mod.def("dual", &dual);
  mod.def(
      "minor",
      [](const Matroid& m, const std::vector<std::string>& contract,
         const std::vector<std::string>& remove) {
        return minor(m, {to_subset(m, contract), to_subset(m, remove)});
      },
      py::arg("m"), py::arg("contract") = std::vector<std::string>{},
      py::arg("delete") = std::vector<std::string>{});
  mod.def("relax", [](const Matroid& m, const std::vector<std::string>& flat) {
    return relax(m, to_subset(m, flat));
  });
  mod.def("direct_sum", &direct_sum);
  mod.def("free_product", &free_product);
  mod.def("free_extension", &free_extension, py::arg("m"), py::arg("label") = "");
  mod.def("free_coextension", &free_coextension, py::arg("m"), py::arg("label") = "");
  mod.def("truncate", [](const Matroid& m) { return truncate(m); });
  mod.def("higgs_lift", &higgs_lift);
  mod.def("is_isomorphic", [](const Matroid& m, const Matroid& n, int max_ground) {
    IsoOptions o;
    o.max_ground = max_ground;
    return is_isomorphic(m, n, o);
  }, py::arg("m"), py::arg("n"), py::arg("max_ground") = IsoOptions{}.max_ground);
  mod.def("has_minor", [](const Matroid& m, const Matroid& n) { return has_minor(m, n); });
  mod.def("tutte_polynomial", [](const Matroid& m) { return poly_dict(tutte_polynomial(m)); });
  mod.def("rank_generating_function",
          [](const Matroid& m) { return poly_dict(rank_gen_brute(m).coeffs); });
  mod.def("cyclic_width", &cyclic_width);
  mod.def("is_nested", [](const Matroid& m) { return is_chain(m.family().sets()); });
  mod.def("nested_sequence", [](const Matroid& m) { return nested_sequence_of(m).str(); });
  mod.def("ingleton_transversal", [](const Matroid& m) {
    const IngletonResult r = ingleton_transversal(m);
    std::vector<std::vector<std::string>> antichain;
    for (int i : r.antichain) antichain.push_back(m.ground().names_of(m.flat(i).set));
    return py::make_tuple(r.ok, antichain, r.sides.lhs, r.sides.rhs);
  });
  mod.def("bitransversal", [](const Matroid& m) { return bitransversal_cert(m).ok(); });

  mod.def("uniform", [](int r, int n) { return uniform(r, n); });
  mod.def("nested", [](const std::string& seq) { return nested_from_sequence(IFSequence(seq)); });
  mod.def("excluded_minor_pn", &excluded_minor_pn);
  mod.def("gimenez", &gimenez_family);
  mod.def("catalog", &catalog);
  mod.def("random_matroid", &random_matroid, py::arg("seed"), py::arg("max_ground") = 10);
  mod.def("realize_lattice",
          [](const std::vector<std::string>& elements,
             const std::vector<std::pair<std::string, std::string>>& covers, bool sublattice) {
            return realize_lattice(lattice_from_covers(elements, covers),
                                   sublattice ? RealizationVariant::kSublattice
                                              : RealizationVariant::kPlain)
                .matroid;
          },
          py::arg("elements"), py::arg("covers"), py::arg("sublattice") = false);
}
