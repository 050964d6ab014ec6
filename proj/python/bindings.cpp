#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "koszul/builtins.hpp"
#include "koszul/classes.hpp"
#include "koszul/error.hpp"
#include "koszul/io.hpp"
#include "koszul/koszul.hpp"
#include "koszul/parallel.hpp"

namespace py = pybind11;
using namespace koszul;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them into Fractions.
Vector to_vector(const std::vector<std::string>& xs) {
  Vector v;
  for (const auto& x : xs) v.push_back(parse_scalar(x));
  return v;
}

std::vector<std::string> from_vector(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Matrix to_matrix(const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vector> r;
  for (const auto& row : rows) r.push_back(to_vector(row));
  return Matrix::from_rows(rows.empty() ? 0 : rows[0].size(), r);
}

std::string dump(const io::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_koszul, m) {
  m.doc() = "Exact Lie algebra cohomology and the Koszul homomorphism";

  static py::exception<Error> error(m, "KoszulError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.code(), e.what(), static_cast<int>(e.category()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis_names", &LieAlgebra::basis_names)
      .def("bracket", [](const LieAlgebra& g, const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return from_vector(g.bracket(to_vector(x), to_vector(y)));
      })
      .def("to_json", [](const LieAlgebra& g) { return dump(io::algebra_to_json(g)); })
      .def("__repr__", [](const LieAlgebra& g) { return "<LieAlgebra dim=" + std::to_string(g.dim()) + ">"; });

  py::class_<SubalgebraPair>(m, "SubalgebraPair")
      .def_property_readonly("ambient", &SubalgebraPair::ambient)
      .def_property_readonly("sub_dim", &SubalgebraPair::sub_dim)
      .def_property_readonly("quotient_dim", &SubalgebraPair::quotient_dim);

  m.def("builtin", [](const std::string& ref) { return builtin(BuiltinRef::parse(ref)); }, py::arg("ref"));
  m.def("algebra_from_json", [](const std::string& text) { return io::algebra_from_json(io::parse_json(text, "<string>")); });
  m.def("pair", [](const std::string& ambient, const std::string& sub) { return canonical_subalgebra(BuiltinRef::parse(ambient), sub); },
        py::arg("ambient"), py::arg("sub"));
  m.def("subalgebra", [](const LieAlgebra& g, const std::vector<std::vector<std::string>>& vectors) {
    std::vector<Vector> vs;
    for (const auto& v : vectors) vs.push_back(to_vector(v));
    return make_subalgebra(g, vs);
  });
  m.def("direct_sum", [](const LieAlgebra& g, const LieAlgebra& h) { return direct_sum(g, h).sum; });

  m.def("set_threads", &set_thread_count);
  m.def("betti", [](const LieAlgebra& g) { return compute_cohomology(exterior_complex(g)).betti_numbers(); });
  m.def("relative_betti", [](const SubalgebraPair& p) {
    return compute_cohomology(invariant_quotient_complex(p).complex).betti_numbers();
  });
  m.def("koszul_json", [](const SubalgebraPair& p, bool with_kernel) {
    py::gil_scoped_release release;
    const PairContext c = make_context(p);
    const KoszulResult r = delta_cohom(c);
    io::json j = io::koszul_result_to_json(c, r, true, with_kernel);
    factorization_check(c, r);
    j["factorization"] = true;
    return dump(j);
  }, py::arg("pair"), py::arg("with_kernel") = true);
  m.def("ncz", [](const SubalgebraPair& p) { return ncz(make_context(p)).ncz; });
  m.def("reductive", [](const SubalgebraPair& p) { return invariant_complement(p).exists; });
  m.def("classes_json", [](const SubalgebraPair& p) { return dump(io::generator_report_to_json(identify_generators(p))); });
  m.def("direct_product_check", [](const LieAlgebra& g, const LieAlgebra& h) {
    const DirectProductReport r = direct_product_check(g, h);
    return py::dict(py::arg("injective") = r.injective, py::arg("formula_holds") = r.formula_holds,
                    py::arg("horizontal") = r.horizontal);
  });
  m.def("functoriality", [](const std::string& morphism_json) {
    return functoriality_check(io::morphism_from_json(io::parse_json(morphism_json, "<string>"))).commutes;
  });
  m.def("trace_form_json", [](std::size_t n, std::size_t k) { return dump(io::form_to_json(trace_form(n, k))); });
  m.def("pfaffian", [](const std::vector<std::vector<std::string>>& rows) { return to_string(pfaffian(to_matrix(rows))); });
}
