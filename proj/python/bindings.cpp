#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <functional>
#include <string>

#include "tnnlag/affperm.hpp"
#include "tnnlag/cells.hpp"
#include "tnnlag/error.hpp"
#include "tnnlag/lagrange.hpp"
#include "tnnlag/measure.hpp"
#include "tnnlag/necklace.hpp"
#include "tnnlag/plabic.hpp"

namespace py = pybind11;
using namespace tnnlag;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object fraction(const Rational& q) { return py::module_::import("fractions").attr("Fraction")(to_string(q)); }

// ints, Fractions and "p/q" strings; floats are refused to keep everything exact.
Rational rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw Error(ErrorKind::ParseError, "floats are not accepted, use Fraction or str");
  return parse_rational(py::str(h).cast<std::string>());
}

Matrix matrix(const py::sequence& rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (const auto& x : r.cast<py::sequence>()) row.push_back(rational(x));
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(out);
}

py::list rows_of(const Matrix& M) {
  py::list out;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < M.cols(); ++j) row.append(fraction(M(i, j)));
    out.append(row);
  }
  return out;
}

AffinePerm perm(const std::vector<int>& window) {
  const int m = static_cast<int>(window.size());
  long s = 0;
  for (int i = 0; i < m; ++i) s += window[static_cast<std::size_t>(i)] - (i + 1);
  if (m == 0 || s % m != 0) throw Error(ErrorKind::SumMismatch, "window sum is not i + k m");
  return validate(window, static_cast<int>(s / m), m);
}

}  // namespace

PYBIND11_MODULE(_tnnlag, mod) {
  mod.doc() = "Exact computations on the totally nonnegative Lagrangian Grassmannian";

  static py::exception<Error> exc(mod, "TnnlagError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc)(e.what());
      err.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  py::class_<AffinePerm>(mod, "Perm")
      .def(py::init(&perm), py::arg("window"))
      .def_property_readonly("window", &AffinePerm::window)
      .def_property_readonly("k", &AffinePerm::k)
      .def_property_readonly("m", &AffinePerm::m)
      .def("__call__", &AffinePerm::operator())
      .def("__eq__", [](const AffinePerm& a, const AffinePerm& b) { return a == b; })
      .def("__lt__", [](const AffinePerm& a, const AffinePerm& b) { return a < b; })
      .def("__hash__", [](const AffinePerm& f) { return std::hash<std::string>{}(f.str()); })
      .def("__repr__", [](const AffinePerm& f) { return "Perm" + f.str(); })
      .def("length", [](const AffinePerm& f) { return length(f); })
      .def("dim", [](const AffinePerm& f) { return dim(f); })
      .def("symmdim", [](const AffinePerm& f) { return symmdim(f); })
      .def("middle_count", [](const AffinePerm& f) { return middle_count(f); })
      .def("is_rho_symmetric", [](const AffinePerm& f) { return is_rho_symmetric(f); })
      .def("beta", [](const AffinePerm& f, int i) { return beta(f, i); })
      .def("necklace", [](const AffinePerm& f) { return necklace_of(f).min; })
      .def("matroid", [](const AffinePerm& f) { return matroid_of(f); })
      .def("to_json", [](const AffinePerm& f) { return to_py(to_json(f)); });

  mod.def("top_cell", &shift_perm, py::arg("k"), py::arg("m"));
  mod.def("enumerate", &enumerate, py::arg("k"), py::arg("m"), py::arg("rho_symmetric") = false);
  mod.def("bruhat_leq", &bruhat_leq);
  mod.def("covers", &covers);
  mod.def("perm_from_necklace", [](int k, int m, const std::vector<IndexSet>& min) {
    GrassmannNecklace N;
    N.m = m;
    N.k = k;
    N.min = min;
    return f_from_necklace(N);
  }, py::arg("k"), py::arg("m"), py::arg("necklace"));

  py::class_<GrassmannPoint>(mod, "Point")
      .def(py::init([](const py::sequence& rows) { return GrassmannPoint(matrix(rows)); }), py::arg("rows"))
      .def_property_readonly("k", &GrassmannPoint::k)
      .def_property_readonly("m", &GrassmannPoint::m)
      .def_property_readonly("rows", [](const GrassmannPoint& X) { return rows_of(X.matrix()); })
      .def("plucker", [](const GrassmannPoint& X) {
        py::dict out;
        const Plucker& p = X.plucker();
        for (std::size_t t = 0; t < p.sets.size(); ++t) out[py::tuple(py::cast(p.sets[t]))] = fraction(p.val[t]);
        return out;
      })
      .def("perm", [](const GrassmannPoint& X) { return f_of_point(X); })
      .def("is_isotropic", [](const GrassmannPoint& X) { return is_isotropic(X); })
      .def("is_tnn", [](const GrassmannPoint& X) { return is_tnn(X); })
      .def("is_in_lgrnn", [](const GrassmannPoint& X) { return is_in_lgrnn(X); })
      .def("big_t", [](const GrassmannPoint& X) { return big_t_point(X); })
      .def("add_sym_bridge", [](const GrassmannPoint& X, int i, const py::handle& a) {
        return add_sym_bridge_point(X, i, rational(a));
      })
      .def("__eq__", [](const GrassmannPoint& a, const GrassmannPoint& b) { return a == b; })
      .def("to_json", [](const GrassmannPoint& X) { return to_py(to_json(X)); });

  mod.def("random_point", &random_point, py::arg("f"), py::arg("seed") = 1);
  mod.def("random_sym_point", &random_sym_point, py::arg("f"), py::arg("seed") = 1);
  mod.def("sigma", [](const py::sequence& M) { return sigma(matrix(M)); });

  mod.def("remove_sym_bridge", [](const GrassmannPoint& Y, int i, const AffinePerm& f) {
    SymBridgeRemoval r = remove_sym_bridge(Y, i, f);
    py::dict out;
    out["rational"] = r.rational;
    out["c"] = r.c.str();
    if (r.rational) out["point"] = py::cast(r.X);
    out["perm"] = py::cast(r.f_of_result);
    return out;
  });

  mod.def("construct", [](const AffinePerm& f) {
    Construction C = bridge_construction(f);
    py::dict out;
    out["graph"] = to_py(to_json(C.graph));
    out["faces"] = faces(C.graph);
    out["minimal_faces"] = minimal_symmetric_faces(f);
    out["bridges"] = bridge_step_count(C.steps);
    out["hash"] = graph_hash(C.graph);
    out["svg"] = to_svg(C.graph);
    return out;
  }, py::arg("f"));

  mod.def("construction_point", [](const AffinePerm& f, const py::sequence& weights) {
    Construction C = bridge_construction(f);
    std::vector<Rational> w;
    for (const auto& x : weights) w.push_back(rational(x));
    return boundary_measurement(replay_network(C.steps, w));
  }, py::arg("f"), py::arg("weights"));

  mod.def("poset", [](int n) { return to_py(to_json(build_poset(n))); }, py::arg("n"));
  mod.def("closure_witness", &closure_witness, py::arg("f"), py::arg("g"), py::arg("samples") = 12);
  mod.def("positivity_flow", [](const GrassmannPoint& X, const py::handle& t) {
    FlowCheck c = positivity_flow(X, rational(t));
    py::dict out;
    out["positive"] = c.positive;
    out["symmetric"] = c.symmetric;
    out["bits"] = c.bits;
    return out;
  }, py::arg("point"), py::arg("t"));
}
