// Python bindings. Specs, matrices and witnesses cross the boundary as JSON
// strings in the same format the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matcat/category.hpp"
#include "matcat/equivalence.hpp"
#include "matcat/h4.hpp"
#include "matcat/io.hpp"
#include "matcat/validate.hpp"

namespace py = pybind11;
using namespace matcat;

namespace {

py::dict report_dict(const Report& r) {
  py::list entries;
  for (const auto& e : r.entries) {
    py::dict d;
    d["check"] = e.check;
    d["status"] = status_name(e.status);
    d["locus"] = e.locus;
    d["details"] = e.details;
    d["instances"] = e.instances;
    entries.append(d);
  }
  py::dict out;
  out["ok"] = r.ok();
  out["violations"] = r.violations();
  out["entries"] = entries;
  return out;
}

BlockMatrix matrix_in(const Quadruple& q, const std::string& s) { return matrix_from_json(q.alg, json::parse(s)); }

std::string matrix_out(const BlockMatrix& x) { return matrix_to_json(x).dump(); }

}  // namespace

PYBIND11_MODULE(_matcat, m) {
  m.doc() = "Tensor categories rebuilt from (R, A, phi, a) data";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "MatrixTypeError", PyExc_ValueError);

  py::class_<Quadruple>(m, "Quadruple")
      .def_static("from_json", [](const std::string& s) { return quadruple_from_json(json::parse(s)); })
      .def("to_json", [](const Quadruple& q) { return quadruple_to_json(q).dump(); })
      .def_property_readonly("rank", &Quadruple::rank)
      .def_property_readonly("dim", &Quadruple::dim)
      .def_property_readonly("basis", [](const Quadruple& q) {
        std::vector<std::string> names;
        for (const auto& b : q.alg->basis()) names.push_back(b.name);
        return names;
      })
      .def("basis_matrix", [](const Quadruple& q, const std::string& name) {
        auto p = q.alg->index_of(name);
        if (!p) throw py::key_error(name);
        return matrix_out(BlockMatrix::basis(q.alg, *p));
      })
      .def("phi", [](const Quadruple& q, const std::string& x, const std::string& y) {
        auto p = q.alg->index_of(x), r = q.alg->index_of(y);
        if (!p || !r) throw py::key_error(x + "," + y);
        return matrix_out(q.phi_at(*p, *r));
      });

  m.def("build_h4", [](bool negate_v4) {
    H4Options opt;
    opt.negate_v4_in_theta22 = negate_v4;
    return build_h4(opt);
  }, py::arg("negate_v4_in_theta22") = false);
  m.def("vec_z2", [](bool sign) { return vec_z2(sign); }, py::arg("sign") = false);
  m.def("build_h4_regauged", [](const std::vector<std::string>& scales) {
    std::vector<Scalar> s;
    for (const auto& t : scales) s.push_back(Field::rational().parse(t));
    Regauged g = build_h4_regauged(s);
    return py::make_tuple(g.quad, eta_to_json(g.quad, g.eta).dump());
  }, "16 scales as strings, row-major; returns (quadruple, eta witness json)");

  m.def("validate", [](const Quadruple& q, unsigned jobs) { return report_dict(validate(q, jobs)); },
        py::arg("q"), py::arg("jobs") = 1);
  m.def("is_semisimple", [](const Quadruple& q) { return is_semisimple(*q.alg); });
  m.def("hom_dim", [](const Quadruple& q, const ObjVec& a, const ObjVec& b) { return hom_dim(*q.alg, a, b); });

  m.def("tensor_obj", [](const Quadruple& q, const ObjVec& a, const ObjVec& b) { return q.tensor(a, b); });
  m.def("tensor_mor", [](const Quadruple& q, const std::string& x, const std::string& y) {
    return matrix_out(hat_tensor(q, matrix_in(q, x), matrix_in(q, y)));
  });
  m.def("compose", [](const Quadruple& q, const std::string& x, const std::string& y) {
    return matrix_out(matrix_in(q, x) * matrix_in(q, y));
  });
  m.def("assoc", [](const Quadruple& q, const ObjVec& a, const ObjVec& b, const ObjVec& c) {
    return matrix_out(extend(q, a, b, c));
  });
  m.def("kernel", [](const Quadruple& q, const std::string& x) {
    SubQuot k = kernel(matrix_in(q, x));
    return py::make_tuple(k.obj, matrix_out(k.map));
  });
  m.def("cokernel", [](const Quadruple& q, const std::string& x) {
    SubQuot k = cokernel(matrix_in(q, x));
    return py::make_tuple(k.obj, matrix_out(k.map));
  });
  m.def("factor", [](const Quadruple& q, const std::string& x) {
    auto [x1, x2] = epi_mono_factor(matrix_in(q, x));
    return py::make_tuple(matrix_out(x1), matrix_out(x2));
  });
  m.def("green_ring", [](const Quadruple& q, const std::string& expr) {
    try {
      return eval_ring_expr(*q.ring, expr);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  });

  m.def("check_eta_equiv", [](const Quadruple& q, const Quadruple& q2, const std::string& eta, unsigned jobs) {
    return report_dict(check_eta_equiv(q, q2, eta_from_json(q, json::parse(eta)), jobs));
  }, py::arg("q"), py::arg("q2"), py::arg("eta"), py::arg("jobs") = 1);
  m.def("identity_eta", [](const Quadruple& q) { return eta_to_json(q, identity_eta(q)).dump(); });
  m.def("check_tensor_equiv", [](const Quadruple& qa, const Quadruple& qb, const std::string& w, unsigned jobs) {
    return report_dict(check_tensor_equiv(qa, qb, equiv_from_json(qa, qb, json::parse(w)), jobs));
  }, py::arg("qa"), py::arg("qb"), py::arg("witness"), py::arg("jobs") = 1);
  m.def("relabel", [](const Quadruple& q, const std::vector<int>& sigma) {
    auto [q2, w] = relabel(q, sigma);
    return py::make_tuple(q2, equiv_to_json(q, w).dump());
  });
}
