#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdesc/cohom.hpp"
#include "qdesc/descent.hpp"
#include "qdesc/json_io.hpp"

namespace py = pybind11;
using namespace qdesc;

namespace {

// Results cross the boundary as JSON text so Python sees the same objects the CLI prints.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

json from_py(const py::object& o) {
  return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::int_ big(const BigInt& a) { return py::int_(py::str(to_string(a))); }

MPoly<BigInt> curve_arg(const std::vector<py::int_>& coeffs) {
  if (coeffs.size() != 15) throw Error("parse", "a quartic needs 15 coefficients");
  QuarticCoeffs c;
  for (std::size_t i = 0; i < 15; ++i) c[i] = parse_bigint(py::str(coeffs[i]).cast<std::string>());
  return quartic_from_coeffs(c);
}

const GModule& pick(const ModuleFamily& f, const std::string& name) {
  if (name == "R") return f.R;
  if (name == "Rdual") return f.Rdual;
  if (name == "J2") return f.J2;
  if (name == "Edual") return f.Edual;
  if (name == "E") return f.E;
  throw Error("parse", "unknown module", name);
}

}  // namespace

PYBIND11_MODULE(_qdesc, m) {
  m.doc() = "2-descent on plane quartics";

  // QdescError.args is (code, message, context)
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> exc;
  exc.call_once_and_store_result([&] { return py::object(py::exception<Error>(m, "QdescError", PyExc_RuntimeError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(exc.get_stored().ptr(), py::make_tuple(e.code(), e.what(), e.context()).ptr());
    }
  });

  m.def("discriminant", [](const std::vector<py::int_>& c) { return big(discriminant_i27(curve_arg(c))); },
        py::arg("coeffs"), "I27 of the quartic with the given 15 coefficients.");
  m.def("count_points", [](const std::vector<py::int_>& c, std::uint32_t p, int r) {
    return count_points(curve_arg(c), p, r);
  }, py::arg("coeffs"), py::arg("p"), py::arg("r") = 1);
  m.def("l_polynomial", [](const std::vector<py::int_>& c, std::uint32_t p) {
    return to_py(lpoly_to_json(l_polynomial(curve_arg(c), p)));
  }, py::arg("coeffs"), py::arg("p"));
  m.def("torsion_bound", [](const std::vector<py::int_>& c, const std::vector<std::uint32_t>& primes) {
    return big(torsion_bound(curve_arg(c), primes));
  }, py::arg("coeffs"), py::arg("primes"));
  m.def("bitangents", [](const std::vector<py::int_>& c, std::uint32_t p, bool contact) {
    return to_py(bitangents_to_json(bitangents_fq(curve_arg(c), p, contact)));
  }, py::arg("coeffs"), py::arg("p"), py::arg("contact_points") = false);
  m.def("syzygetic_count", [](const std::vector<py::int_>& c, std::uint32_t p) {
    const BitangentSet b = bitangents_fq(curve_arg(c), p, false);
    return syzygetic_structure(b).quads.size();
  }, py::arg("coeffs"), py::arg("p"));
  m.def("reduction_flags", [](const std::vector<py::int_>& c, std::uint32_t p) {
    return to_py(flags_to_json(reduction_flags(curve_arg(c), p)));
  }, py::arg("coeffs"), py::arg("p"));

  m.def("sigma_count", [](int g) {
    const CanonicalTheta c = build_canonical(g);
    return py::make_tuple(c.size(), c.sigma.size(), sigma_count_formula(g));
  }, py::arg("genus"), "(#labels, #quadruples, closed formula) for the canonical structure.");
  m.def("sp6_group", [] { return to_py(group_to_json(sp6_group())); });
  m.def("even_form_stabilizer", [] { return to_py(group_to_json(even_form_stabilizer())); });
  m.def("group_order", [](const py::object& g) { return big(group_from_json(from_py(g)).order()); },
        py::arg("group"));
  m.def("search_subgroup", [](const py::object& within, std::uint64_t order, bool transitive, std::uint64_t seed,
                              std::uint64_t cap) -> py::object {
    const auto h = search_subgroup(group_from_json(from_py(within)), order, transitive, seed, cap);
    if (!h) return py::none();
    return to_py(group_to_json(*h));
  }, py::arg("within"), py::arg("order"), py::arg("transitive") = true, py::arg("seed") = 0,
     py::arg("cap") = 1000000);

  m.def("fixed_row", [](const py::object& g, const py::object& h) {
    const ModuleFamily f = module_family(group_from_json(from_py(g)));
    const PermGroup sub = h.is_none() ? f.group : group_from_json(from_py(h));
    return to_py(fixed_row_to_json(fixed_row(f, sub, "local")));
  }, py::arg("group"), py::arg("subgroup") = py::none());
  m.def("h1_dim", [](const py::object& g, const std::string& module) {
    const ModuleFamily f = module_family(group_from_json(from_py(g)));
    return h1_group(f.group, pick(f, module)).h1_dim();
  }, py::arg("group"), py::arg("module"));
  m.def("sha1_bound", [](const py::object& g, const std::string& module) {
    const ModuleFamily f = module_family(group_from_json(from_py(g)));
    const Sha1Bound s = sha1_bound(f.group, pick(f, module));
    return py::make_tuple(s.dimension, s.h1_dimension);
  }, py::arg("group"), py::arg("module"), "(dim of the bound, dim H^1).");
  m.def("rank_bound", [](int fake, int kernel, int j2, int multiple) {
    const RankBound b = rank_bound(fake, kernel, j2, multiple);
    return py::make_tuple(b.selmer_dim, b.rank);
  }, py::arg("fake_selmer_dim"), py::arg("kappa_kernel_dim"), py::arg("j2_global_dim"), py::arg("rank_multiple") = 1);
}
