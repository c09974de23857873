#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ehrtensor/arith.hpp"
#include "ehrtensor/classify.hpp"
#include "ehrtensor/cli.hpp"
#include "ehrtensor/ehrhart.hpp"
#include "ehrtensor/points.hpp"
#include "ehrtensor/polytope.hpp"
#include "ehrtensor/tri2d.hpp"

namespace py = pybind11;
using namespace ehrtensor;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(q.to_string());
}

py::dict tensor_dict(const SymTensor& t) {
  py::dict d;
  for (const auto& [alpha, value] : t.coords()) d[py::tuple(py::cast(alpha))] = fraction(value);
  return d;
}

py::list tensor_list(const std::vector<SymTensor>& ts) {
  py::list out;
  for (const auto& t : ts) out.append(tensor_dict(t));
  return out;
}

LatticePolytope polytope(const std::vector<IntVec>& vertices, int dim) {
  if (vertices.empty() && dim < 1) throw std::invalid_argument("empty vertex list needs dim >= 1");
  return LatticePolytope::from_points(vertices, vertices.empty() ? dim : -1);
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["checked"] = r.checked;
  if (r.failure) {
    py::dict f;
    f["relation"] = r.failure->relation;
    f["index"] = r.failure->index;
    f["coordinate"] = py::tuple(py::cast(r.failure->coordinate));
    f["lhs"] = fraction(r.failure->lhs);
    f["rhs"] = fraction(r.failure->rhs);
    d["failure"] = f;
  } else {
    d["failure"] = py::none();
  }
  return d;
}

CoordinateFilter parse_filter(const std::string& s) {
  if (s == "all") return CoordinateFilter::All;
  if (s == "odd") return CoordinateFilter::LastOdd;
  if (s == "even") return CoordinateFilter::LastEven;
  throw std::invalid_argument("filter must be all, odd or even");
}

}  // namespace

PYBIND11_MODULE(_ehrtensor, m) {
  m.doc() = "Exact discrete moment tensors and Ehrhart tensor polynomials";

  m.def("bernoulli", [](unsigned k) { return fraction(bernoulli(k)); }, py::arg("m"));
  m.def("faulhaber_sum", [](unsigned long k, unsigned r) { return fraction(faulhaber_sum(k, r)); }, py::arg("k"),
        py::arg("r"));

  m.def("count", [](const std::vector<IntVec>& v, int dim, bool relint) {
        auto p = polytope(v, dim);
        return relint ? count_relint(p) : count(p);
      },
      py::arg("vertices"), py::arg("dim") = 0, py::arg("relint") = false);
  m.def("lattice_points", [](const std::vector<IntVec>& v, int dim, bool relint) {
        auto p = polytope(v, dim);
        return relint ? relint_lattice_points(p) : lattice_points(p);
      },
      py::arg("vertices"), py::arg("dim") = 0, py::arg("relint") = false);

  m.def("discrete_moment", [](const std::vector<IntVec>& v, int r, bool relint, int dim) {
        auto p = polytope(v, dim);
        return tensor_dict(relint ? discrete_moment_relint(p, r) : discrete_moment(p, r));
      },
      py::arg("vertices"), py::arg("r"), py::arg("relint") = false, py::arg("dim") = 0);
  m.def("ehrhart_tensors", [](const std::vector<IntVec>& v, int r) {
        return tensor_list(ehrhart_tensors(polytope(v, 0), r).coefficients);
      },
      py::arg("vertices"), py::arg("r"));
  m.def("moment_tensor", [](const std::vector<IntVec>& v, int r) { return tensor_dict(moment_tensor(polytope(v, 0), r)); },
        py::arg("vertices"), py::arg("r"));

  m.def("check_reciprocity", [](const std::vector<IntVec>& v, int r) {
        return report_dict(check_reciprocity(polytope(v, 0), r));
      },
      py::arg("vertices"), py::arg("r"));
  m.def("check_translation_covariance", [](const std::vector<IntVec>& v, int r, const IntVec& y) {
        return report_dict(check_translation_covariance(polytope(v, 0), r, y));
      },
      py::arg("vertices"), py::arg("r"), py::arg("y"));
  m.def("check_equivariance", [](const std::vector<IntVec>& v, int r, const IntMatrix& phi) {
        return report_dict(check_equivariance(polytope(v, 0), r, phi));
      },
      py::arg("vertices"), py::arg("r"), py::arg("matrix"));

  m.def("valuation_n", [](const std::vector<IntVec>& v) { return tensor_dict(valuation_n(polytope(v, 0))); },
        py::arg("vertices"));

  m.def("planar_rank", [](int r, int parity, bool square) {
        auto s = planar_system(r, parity);
        if (square) add_square_relation(s);
        return rank(s);
      },
      py::arg("r"), py::arg("parity") = 0, py::arg("square") = false);
  m.def("planar_kernel", [](int r, int parity, bool square) {
        auto s = planar_system(r, parity);
        if (square) add_square_relation(s);
        return tensor_list(kernel_basis(s));
      },
      py::arg("r"), py::arg("parity") = 0, py::arg("square") = false);
  m.def("prism_rank", [](int n, int r, const std::string& filter) { return rank(prism_system(n, r, parse_filter(filter))); },
        py::arg("n"), py::arg("r"), py::arg("filter") = "all");

  m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = run_command_line(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
