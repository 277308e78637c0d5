#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "positroidkit/constructions.hpp"
#include "positroidkit/errors.hpp"
#include "positroidkit/isomorphism.hpp"
#include "positroidkit/matroid.hpp"
#include "positroidkit/matroid_io.hpp"
#include "positroidkit/minors.hpp"
#include "positroidkit/oriented.hpp"
#include "positroidkit/positroid.hpp"
#include "positroidkit/verify.hpp"

namespace py = pybind11;

// ElementSet <-> frozenset[int]. Accepts any iterable of ints on input.
namespace pybind11::detail {
template <>
struct type_caster<pkit::ElementSet> {
  PYBIND11_TYPE_CASTER(pkit::ElementSet, const_name("frozenset[int]"));

  bool load(handle src, bool) {
    if (!src || !py::isinstance<py::iterable>(src) || py::isinstance<py::str>(src)) return false;
    pkit::ElementSet out;
    for (handle item : py::reinterpret_borrow<py::iterable>(src)) {
      if (!py::isinstance<py::int_>(item)) return false;
      const long e = item.cast<long>();
      if (e < 0 || e >= pkit::kMaxGround) {
        throw py::value_error("element out of range: " + std::to_string(e));
      }
      out = out.with(static_cast<int>(e));
    }
    value = out;
    return true;
  }

  static handle cast(pkit::ElementSet s, return_value_policy, handle) {
    py::list items;
    for (int e : s) items.append(e);
    return py::frozenset(items).release();
  }
};
}  // namespace pybind11::detail

namespace {

py::dict report_dict(const pkit::VerificationReport& r) {
  py::dict counts;
  for (const auto& [k, v] : r.counts) counts[py::str(k)] = v;
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  py::list witnesses;
  for (const auto& w : r.witnesses) {
    py::dict d;
    d["role"] = w.role;
    d["context"] = w.context;
    d["matroid"] = w.matroid;
    witnesses.append(d);
  }
  py::dict out;
  out["claim_id"] = r.claim_id;
  out["outcome"] = pkit::to_string(r.outcome);
  out["params"] = params;
  out["counts"] = counts;
  out["witnesses"] = witnesses;
  out["scope_note"] = r.scope_note;
  return out;
}

py::object witness_dict(const std::optional<pkit::MinorWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["contracted"] = py::cast(w->contracted);
  d["deleted"] = py::cast(w->deleted);
  d["mapping"] = w->iso.mapping;
  return d;
}

pkit::ExactMatrix to_exact(const std::vector<std::vector<py::object>>& rows) {
  pkit::ExactMatrix a;
  py::module_ fractions = py::module_::import("fractions");
  for (const auto& row : rows) {
    std::vector<pkit::Fraction> r;
    for (const py::object& v : row) {
      const py::object f = fractions.attr("Fraction")(v);
      r.push_back({f.attr("numerator").cast<std::int64_t>(),
                   f.attr("denominator").cast<std::int64_t>()});
    }
    a.push_back(std::move(r));
  }
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Matroids, positroids and rank-2 chirotopes";

  py::register_exception<pkit::Error>(m, "Error", PyExc_ValueError);

  py::class_<pkit::Matroid>(m, "Matroid")
      .def_static("from_bases", &pkit::Matroid::from_bases, py::arg("n"), py::arg("bases"))
      .def_static("parse", &pkit::parse_matroid, py::arg("text"))
      .def_property_readonly("size", &pkit::Matroid::size)
      .def_property_readonly("rank", &pkit::Matroid::rank)
      .def_property_readonly("bases", &pkit::Matroid::bases)
      .def("rank_of", &pkit::Matroid::rank_of, py::arg("s"))
      .def("closure", &pkit::Matroid::closure, py::arg("s"))
      .def("is_flat", &pkit::Matroid::is_flat, py::arg("s"))
      .def("is_independent", &pkit::Matroid::is_independent, py::arg("s"))
      .def("is_basis", &pkit::Matroid::is_basis, py::arg("s"))
      .def("loops", &pkit::Matroid::loops)
      .def("coloops", &pkit::Matroid::coloops)
      .def("is_simple", &pkit::Matroid::is_simple)
      .def("to_text", [](const pkit::Matroid& self) { return pkit::to_text(self); })
      .def("__eq__", [](const pkit::Matroid& a, const pkit::Matroid& b) { return a == b; })
      .def("__repr__", [](const pkit::Matroid& self) {
        return "<Matroid n=" + std::to_string(self.size()) +
               " r=" + std::to_string(self.rank()) + ">";
      });

  m.def("deletion", &pkit::deletion, py::arg("m"), py::arg("removed"));
  m.def("contraction", &pkit::contraction, py::arg("m"), py::arg("contracted"));
  m.def("minor", &pkit::minor, py::arg("m"), py::arg("contracted"), py::arg("removed"));
  m.def("dual", &pkit::dual, py::arg("m"));
  m.def("direct_sum", &pkit::direct_sum, py::arg("a"), py::arg("b"));
  m.def("flats", [](const pkit::Matroid& mat) { return pkit::flat_lattice(mat).by_rank; },
        py::arg("m"), "Flats grouped by rank.");
  m.def("long_lines", &pkit::long_lines, py::arg("m"));
  m.def("components", &pkit::components, py::arg("m"));
  m.def("is_connected", &pkit::is_connected, py::arg("m"));
  m.def("is_3connected", &pkit::is_3connected, py::arg("m"));
  m.def("canonical_form", [](const pkit::Matroid& mat) {
    return py::bytes(pkit::canonical_form(mat));
  }, py::arg("m"));
  m.def("are_isomorphic", [](const pkit::Matroid& a, const pkit::Matroid& b) {
    return pkit::are_isomorphic(a, b).has_value();
  }, py::arg("a"), py::arg("b"));

  m.def("uniform", &pkit::uniform, py::arg("r"), py::arg("n"));
  m.def("parallel_connection", &pkit::parallel_connection, py::arg("m"), py::arg("n"),
        py::arg("m_base"), py::arg("n_base"));
  m.def("extremal_family", &pkit::extremal_family, py::arg("r"), py::arg("l"));
  m.def("principal_extension", &pkit::principal_extension, py::arg("m"), py::arg("flat"));
  m.def("whirl_like", &pkit::whirl_like, py::arg("r"), py::arg("l"));
  m.def("whirl_like_plus", &pkit::whirl_like_plus, py::arg("r"), py::arg("l"));
  m.def("catalog", [](const std::string& id) {
    const auto parsed = pkit::parse_catalog_id(id);
    if (!parsed) throw py::value_error("unknown catalog id: " + id);
    return pkit::catalog(*parsed);
  }, py::arg("id"));
  m.def("catalog_ids", [] {
    std::vector<std::string> out;
    for (pkit::CatalogId id : pkit::kAllCatalogIds) out.push_back(pkit::to_string(id));
    return out;
  });

  m.def("has_minor", [](const pkit::Matroid& host, const pkit::Matroid& target) {
    return witness_dict(pkit::has_minor(host, target));
  }, py::arg("host"), py::arg("target"),
        "Witness dict {contracted, deleted, mapping} or None.");
  m.def("has_uniform_line_minor", &pkit::has_uniform_line_minor, py::arg("m"), py::arg("k"));
  m.def("find_catalog_minor", [](const pkit::Matroid& mat) -> py::object {
    const auto found = pkit::find_catalog_minor(mat);
    if (!found) return py::none();
    return py::str(pkit::to_string(found->id));
  }, py::arg("m"));

  m.def("is_positroid", &pkit::is_positroid, py::arg("m"));
  m.def("bonin_order", &pkit::bonin_check, py::arg("m"),
        "A cyclic order witnessing the positroid property, or None.");
  m.def("necklace_of", [](const pkit::Matroid& mat) {
    return pkit::necklace_of(mat).terms;
  }, py::arg("m"));
  m.def("positroid_from_necklace", [](const std::vector<pkit::ElementSet>& terms) {
    return pkit::positroid_from_necklace({static_cast<int>(terms.size()), terms});
  }, py::arg("terms"));
  m.def("enumerate_positroids", [](int n, std::optional<int> rank, bool simple, bool connected,
                                   std::optional<int> no_line_minor, int threads) {
    pkit::PositroidFilters f;
    f.rank = rank;
    f.simple = simple;
    f.connected = connected;
    f.no_line_minor = no_line_minor;
    py::gil_scoped_release release;
    return pkit::enumerate_positroids(n, f, threads).classes;
  }, py::arg("n"), py::arg("rank") = py::none(), py::arg("simple") = false,
        py::arg("connected") = false, py::arg("no_line_minor") = py::none(),
        py::arg("threads") = 1);

  py::class_<pkit::Chirotope>(m, "Chirotope")
      .def_static("from_signs", &pkit::Chirotope::from_sign_string, py::arg("n"), py::arg("r"),
                  py::arg("signs"))
      .def_static("from_matrix", [](const std::vector<std::vector<py::object>>& rows) {
        return pkit::chirotope_from_matrix(to_exact(rows));
      }, py::arg("rows"), "Rows of ints, Fractions or 'p/q' strings.")
      .def_property_readonly("size", &pkit::Chirotope::size)
      .def_property_readonly("rank", &pkit::Chirotope::rank)
      .def("sign", [](const pkit::Chirotope& chi, const std::vector<int>& tuple) {
        return chi.sign(std::span<const int>(tuple));
      }, py::arg("tuple"))
      .def("signs", &pkit::Chirotope::to_sign_string)
      .def("negated", &pkit::Chirotope::negated)
      .def("underlying_matroid", &pkit::underlying_matroid)
      .def("contract", &pkit::oriented_contract, py::arg("e"))
      .def("delete", &pkit::oriented_delete, py::arg("e"))
      .def("__eq__", [](const pkit::Chirotope& a, const pkit::Chirotope& b) { return a == b; });

  m.def("monochromatic_line_minor", [](const pkit::Chirotope& chi, int k,
                                       int polarity) -> py::object {
    const auto w = pkit::monochromatic_line_minor(chi, k, polarity);
    if (!w) return py::none();
    py::dict d;
    d["flat"] = py::cast(w->flat);
    d["elements"] = w->elements;
    d["polarity"] = w->polarity;
    return d;
  }, py::arg("chi"), py::arg("k"), py::arg("polarity") = 1);

  m.def("verify_excluded_catalog", [] {
    return report_dict(pkit::verify_excluded_catalog());
  });
  m.def("verify_oracle_agreement", [](int max_n, int threads) {
    return report_dict(pkit::verify_oracle_agreement(max_n, threads));
  }, py::arg("max_n"), py::arg("threads") = 1);
  m.def("verify_theorem_main", [](int r, int l, int threads) {
    return report_dict(pkit::verify_theorem_main(r, l, threads));
  }, py::arg("r"), py::arg("l"), py::arg("threads") = 1);
}
