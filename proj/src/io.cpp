#include "matcat/io.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace matcat {

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(fmt::format("{}: missing key '{}'", where, key));
  return j.at(key);
}

long to_index(const json& j, long bound, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  long v = j.get<long>();
  if (v < 0 || v >= bound) throw ParseError(fmt::format("{} = {} out of range [0,{})", what, v, bound));
  return v;
}

ObjVec obj_from_json(const json& j, int n, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError(fmt::format("{} must be a list of {} counts", what, n));
  ObjVec m;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() < 0) throw ParseError(what + " entries must be nonnegative integers");
    m.push_back(x.get<std::int64_t>());
  }
  return m;
}

}  // namespace

Field field_from_json(const json& j) {
  const auto& kind = need(j, "kind", "field");
  if (kind == "rational") return Field::rational();
  if (kind == "prime") {
    const auto& p = need(j, "p", "field");
    if (!p.is_number_unsigned()) throw ParseError("field.p must be a positive integer");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field.kind must be \"rational\" or \"prime\"");
}

json field_to_json(const Field& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.p}};
}

Scalar scalar_from_json(const Field& f, const json& j) {
  try {
    if (j.is_string()) return f.parse(j.get<std::string>());
    if (j.is_number_integer()) return f.parse(std::to_string(j.get<long long>()));
  } catch (const FieldError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("scalar must be an integer or a \"p/q\" string");
}

json scalar_to_json(const Scalar& s) {
  if (s.is_modular()) return s.residue_value();
  return s.str();
}

AlgElement elem_from_json(const GradedAlgebra& a, const json& j) {
  if (!j.is_array()) throw ParseError("algebra element must be a list of [coeff, index] pairs");
  AlgElement x;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw ParseError("algebra term must be [coeff, index]");
    x.add_term(static_cast<std::uint32_t>(to_index(t[1], a.dim(), "basis index")), scalar_from_json(a.field(), t[0]));
  }
  return x;
}

json elem_to_json(const AlgElement& x) {
  json out = json::array();
  for (const auto& t : x.terms()) out.push_back(json::array({scalar_to_json(t.c), t.idx}));
  return out;
}

BlockMatrix matrix_from_json(const AlgebraPtr& alg, const json& j) {
  int n = alg->rank();
  ObjVec m = obj_from_json(need(j, "row_type", "matrix"), n, "row_type");
  ObjVec s = obj_from_json(need(j, "col_type", "matrix"), n, "col_type");
  BlockMatrix x(alg, m, s);
  auto om = offsets(m), os = offsets(s);
  const auto& blocks = need(j, "blocks", "matrix");
  if (!blocks.is_array()) throw ParseError("matrix.blocks must be a list");
  for (const auto& b : blocks) {
    long i = to_index(need(b, "i", "block"), n, "block.i"), k = to_index(need(b, "j", "block"), n, "block.j");
    const auto& ent = need(b, "entries", "block");
    if (!ent.is_array() || static_cast<std::int64_t>(ent.size()) != m[i])
      throw ParseError(fmt::format("block ({},{}) must have {} rows", i, k, m[i]));
    for (std::int64_t r = 0; r < m[i]; ++r) {
      if (!ent[r].is_array() || static_cast<std::int64_t>(ent[r].size()) != s[k])
        throw ParseError(fmt::format("block ({},{}) must have {} columns", i, k, s[k]));
      for (std::int64_t c = 0; c < s[k]; ++c) {
        AlgElement e = elem_from_json(*alg, ent[r][c]);
        if (!alg->in_peirce(e, static_cast<int>(i), static_cast<int>(k)))
          throw ParseError(fmt::format("block ({},{}) entry ({},{}) is outside e_{}Ae_{}", i, k, r, c, i + 1, k + 1));
        x.set(om[i] + r, os[k] + c, e);
      }
    }
  }
  return x;
}

json matrix_to_json(const BlockMatrix& x) {
  json out;
  out["row_type"] = x.row_type();
  out["col_type"] = x.col_type();
  json blocks = json::array();
  int n = x.alg().rank();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (x.row_type()[i] == 0 || x.col_type()[k] == 0) continue;
      AlgMatrix b = x.block(i, k);
      if (b.is_zero()) continue;
      json ent = json::array();
      for (std::size_t r = 0; r < b.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(elem_to_json(b(r, c)));
        ent.push_back(row);
      }
      blocks.push_back(json{{"i", i}, {"j", k}, {"entries", ent}});
    }
  out["blocks"] = blocks;
  return out;
}

Quadruple quadruple_from_json(const json& j) {
  try {
    Field f = field_from_json(need(j, "field", "spec"));
    const auto& fus = need(j, "fusion", "spec");
    if (!fus.is_array() || fus.empty()) throw ParseError("fusion must be a nonempty n x n x n array");
    int n = static_cast<int>(fus.size());
    std::vector<std::int64_t> c;
    for (const auto& a : fus) {
      if (!a.is_array() || static_cast<int>(a.size()) != n) throw ParseError("fusion must be an n x n x n array");
      for (const auto& b : a) {
        if (!b.is_array() || static_cast<int>(b.size()) != n) throw ParseError("fusion must be an n x n x n array");
        for (const auto& v : b) {
          if (!v.is_number_integer()) throw ParseError("fusion entries must be integers");
          c.push_back(v.get<std::int64_t>());
        }
      }
    }
    auto ring = std::make_shared<FusionRing>(n, c);

    const auto& aj = need(j, "algebra", "spec");
    std::vector<BasisElem> basis;
    for (const auto& b : need(aj, "basis", "algebra")) {
      const auto& name = need(b, "name", "basis element");
      if (!name.is_string()) throw ParseError("basis name must be a string");
      basis.push_back({name.get<std::string>(), static_cast<int>(to_index(need(b, "row", "basis element"), n, "row")),
                       static_cast<int>(to_index(need(b, "col", "basis element"), n, "col"))});
    }
    long d = static_cast<long>(basis.size());
    std::vector<int> idem;
    for (const auto& e : need(aj, "idempotents", "algebra"))
      idem.push_back(static_cast<int>(to_index(e, d, "idempotent")));
    // a throwaway algebra gives the field and dimension for parsing product values
    auto shell = std::make_shared<GradedAlgebra>(f, n, basis, idem, std::vector<Product>{});
    std::vector<Product> prods;
    for (const auto& p : need(aj, "products", "algebra"))
      prods.push_back({static_cast<int>(to_index(need(p, "p", "product"), d, "product.p")),
                       static_cast<int>(to_index(need(p, "q", "product"), d, "product.q")),
                       elem_from_json(*shell, need(p, "value", "product"))});
    auto alg = std::make_shared<GradedAlgebra>(f, n, basis, idem, prods);

    Quadruple q{ring, alg, zero_phi(*ring, alg), identity_assoc(*ring, alg)};
    for (const auto& e : need(j, "phi", "spec")) {
      long p = to_index(need(e, "p", "phi entry"), d, "phi.p"), r = to_index(need(e, "q", "phi entry"), d, "phi.q");
      q.phi_at(static_cast<int>(p), static_cast<int>(r)) = matrix_from_json(alg, need(e, "value", "phi entry"));
    }
    std::vector<bool> seen(q.assoc.size(), false);
    for (const auto& e : need(j, "associator", "spec")) {
      int i = static_cast<int>(to_index(need(e, "i", "associator entry"), n, "associator.i"));
      int k = static_cast<int>(to_index(need(e, "j", "associator entry"), n, "associator.j"));
      int l = static_cast<int>(to_index(need(e, "l", "associator entry"), n, "associator.l"));
      q.a(i, k, l) = matrix_from_json(alg, need(e, "matrix", "associator entry"));
      seen[(static_cast<std::size_t>(i) * n + k) * n + l] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (!seen[k])
        throw ParseError(fmt::format("associator entry ({},{},{}) missing", k / n / n + 1, k / n % n + 1, k % n + 1));
    return q;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const TypeError& e) {
    throw ParseError(e.what());
  }
}

json quadruple_to_json(const Quadruple& q) {
  const auto& a = *q.alg;
  int n = q.rank(), d = q.dim();
  json out;
  out["field"] = field_to_json(q.field());
  json fus = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(q.c(i, j));
    fus.push_back(row);
  }
  out["fusion"] = fus;
  json basis = json::array();
  for (const auto& b : a.basis()) basis.push_back(json{{"name", b.name}, {"row", b.row}, {"col", b.col}});
  json prods = json::array();
  for (const auto& p : a.products()) prods.push_back(json{{"p", p.p}, {"q", p.q}, {"value", elem_to_json(p.value)}});
  out["algebra"] = json{{"basis", basis}, {"idempotents", a.idems()}, {"products", prods}};
  json phi = json::array();
  for (int p = 0; p < d; ++p)
    for (int r = 0; r < d; ++r)
      if (!q.phi_at(p, r).is_zero()) phi.push_back(json{{"p", p}, {"q", r}, {"value", matrix_to_json(q.phi_at(p, r))}});
  out["phi"] = phi;
  json as = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        as.push_back(json{{"i", i}, {"j", j}, {"l", l}, {"matrix", matrix_to_json(q.a(i, j, l))}});
  out["associator"] = as;
  return out;
}

EtaWitness eta_from_json(const Quadruple& q, const json& j) {
  try {
    int n = q.rank();
    EtaWitness eta = identity_eta(q);
    std::vector<bool> seen(eta.size(), false);
    for (const auto& e : need(j, "eta", "witness")) {
      int i = static_cast<int>(to_index(need(e, "i", "eta entry"), n, "eta.i"));
      int k = static_cast<int>(to_index(need(e, "j", "eta entry"), n, "eta.j"));
      eta[i * n + k] = matrix_from_json(q.alg, need(e, "matrix", "eta entry"));
      seen[i * n + k] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (!seen[k]) throw ParseError(fmt::format("eta entry ({},{}) missing", k / n + 1, k % n + 1));
    return eta;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const TypeError& e) {
    throw ParseError(e.what());
  }
}

json eta_to_json(const Quadruple& q, const EtaWitness& eta) {
  json arr = json::array();
  int n = q.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) arr.push_back(json{{"i", i}, {"j", j}, {"matrix", matrix_to_json(eta[i * n + j])}});
  return json{{"eta", arr}};
}

EquivWitness equiv_from_json(const Quadruple& qa, const Quadruple& qb, const json& j) {
  try {
    int n = qa.rank();
    EquivWitness w;
    for (const auto& s : need(j, "sigma", "witness")) w.sigma.push_back(static_cast<int>(to_index(s, n, "sigma")));
    if (static_cast<int>(w.sigma.size()) != n) throw ParseError("sigma must list n images");
    for (const auto& x : need(j, "delta", "witness")) w.delta.push_back(elem_from_json(*qb.alg, x));
    w.alpha = j.contains("alpha") ? scalar_from_json(qb.field(), j.at("alpha")) : qb.field().from_int(1);
    w.phi.resize(static_cast<std::size_t>(n) * n);
    std::vector<bool> seen(w.phi.size(), false);
    for (const auto& e : need(j, "phi", "witness")) {
      int i = static_cast<int>(to_index(need(e, "i", "phi entry"), n, "phi.i"));
      int k = static_cast<int>(to_index(need(e, "j", "phi entry"), n, "phi.j"));
      w.phi[i * n + k] = matrix_from_json(qb.alg, need(e, "matrix", "phi entry"));
      seen[i * n + k] = true;
    }
    for (std::size_t k = 0; k < seen.size(); ++k)
      if (!seen[k]) throw ParseError(fmt::format("phi entry ({},{}) missing", k / n + 1, k % n + 1));
    return w;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const TypeError& e) {
    throw ParseError(e.what());
  }
}

json equiv_to_json(const Quadruple& qa, const EquivWitness& w) {
  int n = qa.rank();
  json delta = json::array();
  for (const auto& x : w.delta) delta.push_back(elem_to_json(x));
  json phi = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phi.push_back(json{{"i", i}, {"j", j}, {"matrix", matrix_to_json(w.phi[i * n + j])}});
  return json{{"sigma", w.sigma}, {"delta", delta}, {"alpha", scalar_to_json(w.alpha)}, {"phi", phi}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()));
  }
}

Quadruple load_quadruple(const std::string& path) { return quadruple_from_json(read_json_file(path)); }

ObjVec parse_obj(const std::string& s, int n) {
  std::string t;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ' ') t += ch;
  if (!t.empty() && (t[0] == 'e' || t[0] == 'E')) {
    try {
      std::size_t used = 0;
      int i = std::stoi(t.substr(1), &used);
      if (used + 1 == t.size() && i >= 1 && i <= n) return unit_vec(n, i - 1);
    } catch (const std::exception&) {
    }
    throw ParseError("bad object '" + s + "'");
  }
  ObjVec m;
  std::stringstream ss(t);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(part, &used);
      if (used != part.size() || v < 0) throw ParseError("");
      m.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("bad object '" + s + "'");
    }
  }
  if (static_cast<int>(m.size()) != n) throw ParseError(fmt::format("object '{}' must have {} entries", s, n));
  return m;
}

}  // namespace matcat
