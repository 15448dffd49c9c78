#include "matcat/h4.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "matcat/linmod.hpp"

namespace matcat {

int ConcreteModel::dim_of(const ObjVec& m) const {
  int d = 0;
  for (int i = 0; i < n(); ++i) d += static_cast<int>(m[i]) * dims[i];
  return d;
}

DenseMatrix tensor_maps(const DenseMatrix& f, const DenseMatrix& g) { return kron(g, f); }

namespace {

struct ThetaEntry {
  int a, b, out;  // v_a ⊗ w_b -> coordinate `out` of the target
  int coef;
};

std::vector<std::int64_t> h4_fusion() {
  int n = 4;
  std::vector<std::int64_t> c(n * n * n, 0);
  auto set = [&](int i, int j, std::initializer_list<int> ks) {
    for (int k : ks) c[(i * n + j) * n + k] = 1;
  };
  for (int i = 0; i < n; ++i) {
    set(0, i, {i});
    set(i, 0, {i});
  }
  set(2, 2, {0});
  for (auto [i, j] : {std::pair{1, 1}, {3, 3}, {1, 3}, {3, 1}}) set(i, j, {1, 3});
  set(1, 2, {3});
  set(2, 1, {3});
  set(2, 3, {1});
  set(3, 2, {1});
  return c;
}

// Target coordinates of ⊕ c_ijk V_k: V2 block (v21, v22) before the V4 block (v41, v42).
std::vector<std::vector<ThetaEntry>> h4_theta_tables() {
  std::vector<std::vector<ThetaEntry>> t(16);
  auto at = [&](int i, int j) -> std::vector<ThetaEntry>& { return t[(i - 1) * 4 + (j - 1)]; };
  at(3, 2) = {{0, 0, 0, 1}, {0, 1, 1, 1}};
  at(3, 4) = {{0, 0, 0, 1}, {0, 1, 1, 1}};
  at(2, 3) = {{0, 0, 0, 1}, {1, 0, 1, -1}};
  at(4, 3) = {{0, 0, 0, 1}, {1, 0, 1, -1}};
  at(3, 3) = {{0, 0, 0, 1}};
  at(2, 2) = {{0, 1, 0, 1}, {1, 1, 1, 1}, {0, 0, 2, 1}, {1, 0, 0, 1}, {1, 0, 3, -1}};
  at(2, 4) = {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 1, 2, -1}, {1, 0, 2, 1}, {1, 1, 3, 1}};
  at(4, 2) = {{0, 0, 0, 1}, {1, 0, 2, 1}, {1, 0, 1, -1}, {0, 1, 2, 1}, {1, 1, 3, 1}};
  at(4, 4) = {{1, 0, 0, 1}, {1, 1, 1, 1}, {0, 0, 2, 1}, {0, 1, 3, 1}, {0, 1, 0, -1}};
  return t;
}

DenseMatrix map_from(int rows, int cols, std::initializer_list<std::pair<int, int>> ones) {
  DenseMatrix m(rows, cols);
  for (auto [r, c] : ones) m(r, c) = 1;
  return m;
}

std::vector<BasisElem> h4_basis() {
  return {{"e1", 0, 0},  {"e2", 1, 1},  {"e3", 2, 2},  {"e4", 3, 3},      {"x21", 1, 0},
          {"x32", 2, 1}, {"x43", 3, 2}, {"x14", 0, 3}, {"x43x32", 3, 1}, {"x21x14", 1, 3}};
}

// Coordinates of f in the span of the given basis maps, or nullopt.
std::optional<Vec> decompose(const std::vector<const DenseMatrix*>& span, const DenseMatrix& f) {
  DenseMatrix sys(f.rows() * f.cols(), span.size());
  Vec rhs(f.rows() * f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      for (std::size_t k = 0; k < span.size(); ++k) sys(r * f.cols() + c, k) = (*span[k])(r, c);
      rhs[r * f.cols() + c] = f(r, c);
    }
  return solve(sys, rhs);
}

std::vector<const DenseMatrix*> peirce_maps(const ConcreteModel& mod, int i, int j) {
  std::vector<const DenseMatrix*> out;
  for (int p : mod.alg->peirce(i, j)) out.push_back(&mod.maps[p]);
  return out;
}

std::vector<int> coord_offsets(const ConcreteModel& mod, const ObjVec& m) {
  std::vector<int> off;
  int o = 0;
  for (int g : grades_of(m)) {
    off.push_back(o);
    o += mod.dims[g];
  }
  return off;
}

}  // namespace

ConcreteModel h4_model(const H4Options& opt) {
  ConcreteModel mod;
  mod.dims = {1, 2, 1, 2};
  mod.ring = std::make_shared<FusionRing>(4, h4_fusion());
  auto basis = h4_basis();

  mod.maps.resize(basis.size());
  for (int i = 0; i < 4; ++i) mod.maps[i] = DenseMatrix::identity(mod.dims[i]);
  mod.maps[4] = map_from(2, 1, {{1, 0}});          // x21: v1 -> v22
  mod.maps[5] = map_from(1, 2, {{0, 0}});          // x32: v21 -> v3, v22 -> 0
  mod.maps[6] = map_from(2, 1, {{1, 0}});          // x43: v3 -> v42
  mod.maps[7] = map_from(1, 2, {{0, 0}});          // x14: v41 -> v1, v42 -> 0
  mod.maps[8] = mod.maps[6] * mod.maps[5];
  mod.maps[9] = mod.maps[4] * mod.maps[7];

  // structure constants read off the composition of maps
  std::vector<Product> prods;
  int d = static_cast<int>(basis.size());
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      if (basis[p].col != basis[q].row) continue;
      DenseMatrix f = mod.maps[p] * mod.maps[q];
      if (f.is_zero()) continue;
      std::vector<const DenseMatrix*> span;
      std::vector<int> idx;
      for (int r = 0; r < d; ++r)
        if (basis[r].row == basis[p].row && basis[r].col == basis[q].col) {
          span.push_back(&mod.maps[r]);
          idx.push_back(r);
        }
      auto v = decompose(span, f);
      if (!v) throw std::logic_error(fmt::format("H4: {}{} outside the hom basis", basis[p].name, basis[q].name));
      AlgElement e;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (!(*v)[k].is_zero()) e.add_term(idx[k], (*v)[k]);
      prods.push_back({p, q, e});
    }
  mod.alg = std::make_shared<GradedAlgebra>(opt.field, 4, basis, std::vector<int>{0, 1, 2, 3}, prods);

  auto tables = h4_theta_tables();
  mod.theta.resize(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int in = mod.dims[i] * mod.dims[j];
      int out = mod.dim_of(mod.ring->cvec(i, j));
      DenseMatrix th(out, in);
      if (i == 0 || j == 0) {
        th = DenseMatrix::identity(in);
      } else {
        for (const auto& e : tables[i * 4 + j]) {
          Scalar c = e.coef;
          if (opt.negate_v4_in_theta22 && i == 1 && j == 1 && e.out >= 2) c = -c;
          th(e.out, e.a + mod.dims[i] * e.b) += c;
        }
      }
      if (!opt.scales.empty()) {
        const Scalar& s = opt.scales.at(i * 4 + j);
        for (std::size_t r = 0; r < th.rows(); ++r)
          for (std::size_t c = 0; c < th.cols(); ++c) th(r, c) *= s;
      }
      if (!try_inverse(th)) throw std::logic_error(fmt::format("H4: theta_{}{} is singular", i + 1, j + 1));
      mod.theta[i * 4 + j] = th;
    }
  return mod;
}

DenseMatrix realize(const ConcreteModel& mod, const BlockMatrix& x) {
  int rows = mod.dim_of(x.row_type()), cols = mod.dim_of(x.col_type());
  DenseMatrix f(rows, cols);
  if (rows == 0 || cols == 0) return f;
  auto ro = coord_offsets(mod, x.row_type()), co = coord_offsets(mod, x.col_type());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      for (const auto& t : x.at(r, c).terms()) {
        const auto& m = mod.maps[t.idx];
        for (std::size_t u = 0; u < m.rows(); ++u)
          for (std::size_t v = 0; v < m.cols(); ++v)
            if (!m(u, v).is_zero()) f(ro[r] + u, co[c] + v) += t.c * m(u, v);
      }
  return f;
}

BlockMatrix from_linear(const ConcreteModel& mod, const ObjVec& m, const ObjVec& s, const DenseMatrix& f) {
  BlockMatrix z(mod.alg, m, s);
  if (size(m) == 0 || size(s) == 0) return z;
  if (static_cast<int>(f.rows()) != mod.dim_of(m) || static_cast<int>(f.cols()) != mod.dim_of(s))
    throw std::runtime_error("from_linear: map has the wrong shape");
  auto gr = grades_of(m), gc = grades_of(s);
  auto ro = coord_offsets(mod, m), co = coord_offsets(mod, s);
  AlgMatrix raw(z.rows(), z.cols());
  for (std::size_t r = 0; r < gr.size(); ++r)
    for (std::size_t c = 0; c < gc.size(); ++c) {
      DenseMatrix blk(mod.dims[gr[r]], mod.dims[gc[c]]);
      for (std::size_t u = 0; u < blk.rows(); ++u)
        for (std::size_t v = 0; v < blk.cols(); ++v) blk(u, v) = f(ro[r] + u, co[c] + v);
      if (blk.is_zero()) continue;
      const auto& pb = mod.alg->peirce(gr[r], gc[c]);
      auto coeffs = decompose(peirce_maps(mod, gr[r], gc[c]), blk);
      if (!coeffs)
        throw std::runtime_error(fmt::format("block ({},{}) is not a morphism V{} -> V{}", r + 1, c + 1, gc[c] + 1,
                                             gr[r] + 1));
      for (std::size_t k = 0; k < pb.size(); ++k)
        if (!(*coeffs)[k].is_zero()) raw(r, c).add_term(pb[k], (*coeffs)[k]);
    }
  return BlockMatrix::from_raw(mod.alg, m, s, std::move(raw));
}

DenseMatrix theta_ext(const ConcreteModel& mod, const Quadruple& q, const ObjVec& m1, const ObjVec& m2) {
  ObjVec t = q.tensor(m1, m2);
  int n = mod.n();
  DenseMatrix f(mod.dim_of(t), mod.dim_of(m1) * mod.dim_of(m2));
  for (int i = 0; i < n; ++i)
    for (int k1 = 0; k1 < m1[i]; ++k1)
      for (int j = 0; j < n; ++j)
        for (int k2 = 0; k2 < m2[j]; ++k2) {
          DenseMatrix x = realize(mod, hat_tensor(q, selector_col(q.alg, m1, i, k1), selector_col(q.alg, m2, j, k2)));
          DenseMatrix y = tensor_maps(realize(mod, selector_row(q.alg, m1, i, k1)),
                                      realize(mod, selector_row(q.alg, m2, j, k2)));
          f = f + x * mod.th(i, j) * y;
        }
  return f;
}

Quadruple quadruple_from_model(const ConcreteModel& mod) {
  Quadruple q{mod.ring, mod.alg, zero_phi(*mod.ring, mod.alg), {}};
  const auto& a = *mod.alg;
  int d = a.dim(), n = a.rank();
  for (int p = 0; p < d; ++p)
    for (int r = 0; r < d; ++r) {
      // x in e_i A e_j, y in e_l A e_k: theta_il (x ⊗ y) theta_jk^{-1}
      int i = a.basis(p).row, j = a.basis(p).col, l = a.basis(r).row, k = a.basis(r).col;
      DenseMatrix f = mod.th(i, l) * tensor_maps(mod.maps[p], mod.maps[r]) * inverse(mod.th(j, k));
      q.phi_at(p, r) = from_linear(mod, q.c(i, l), q.c(j, k), f);
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        ObjVec ei = unit_vec(n, i), el = unit_vec(n, l);
        ObjVec cij = q.c(i, j), cjl = q.c(j, l);
        ObjVec tot = q.tensor(cij, el);
        DenseMatrix idi = DenseMatrix::identity(mod.dims[i]), idl = DenseMatrix::identity(mod.dims[l]);
        DenseMatrix f = theta_ext(mod, q, ei, cjl) * tensor_maps(idi, mod.th(j, l)) *
                        tensor_maps(inverse(mod.th(i, j)), idl) * inverse(theta_ext(mod, q, cij, el));
        q.assoc.push_back(from_linear(mod, tot, tot, f));
      }
  return q;
}

Quadruple build_h4(const H4Options& opt) { return quadruple_from_model(h4_model(opt)); }

Regauged build_h4_regauged(const std::vector<Scalar>& scales) {
  if (scales.size() != 16) throw std::invalid_argument("regauge needs 16 scales");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Scalar& s = scales[i * 4 + j];
      if (s.is_zero()) throw std::invalid_argument(fmt::format("scale({},{}) is zero", i + 1, j + 1));
      if ((i == 0 || j == 0) && !s.is_one())
        throw std::invalid_argument(fmt::format("scale({},{}) must be 1", i + 1, j + 1));
    }
  H4Options opt;
  opt.scales = scales;
  Regauged g{build_h4(opt), {}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      g.eta.push_back(scales[i * 4 + j].inv() * BlockMatrix::identity(g.quad.alg, g.quad.c(i, j)));
  return g;
}

Report check_model_diagrams(const ConcreteModel& mod, const Quadruple& q, const std::vector<ObjVec>& objects) {
  Report rep;
  const auto& a = *q.alg;
  int d = a.dim();
  bool ok = true;
  for (int p = 0; p < d; ++p)
    for (int r = 0; r < d; ++r) {
      int i = a.basis(p).row, j = a.basis(p).col, l = a.basis(r).row, k = a.basis(r).col;
      DenseMatrix lhs = realize(mod, q.phi_at(p, r)) * mod.th(j, k);
      DenseMatrix rhs = mod.th(i, l) * tensor_maps(mod.maps[p], mod.maps[r]);
      if (lhs != rhs) {
        ok = false;
        rep.fail("model.phi_square", {p + 1, r + 1},
                 fmt::format("phi({}⊗{}) theta != theta ({}⊗{})", a.basis(p).name, a.basis(r).name, a.basis(p).name,
                             a.basis(r).name));
      }
    }
  if (ok) rep.pass("model.phi_square", static_cast<long>(d) * d);

  ok = true;
  long inst = 0;
  for (std::size_t u = 0; u < objects.size(); ++u)
    for (std::size_t v = 0; v < objects.size(); ++v)
      for (std::size_t w = 0; w < objects.size(); ++w) {
        const auto &m = objects[u], &s = objects[v], &t = objects[w];
        if (size(q.tensor(q.tensor(m, s), t)) == 0) continue;
        ++inst;
        DenseMatrix em = DenseMatrix::identity(mod.dim_of(m)), et = DenseMatrix::identity(mod.dim_of(t));
        DenseMatrix lhs = realize(mod, extend(q, m, s, t)) * theta_ext(mod, q, q.tensor(m, s), t) *
                          tensor_maps(theta_ext(mod, q, m, s), et);
        DenseMatrix rhs = theta_ext(mod, q, m, q.tensor(s, t)) * tensor_maps(em, theta_ext(mod, q, s, t));
        if (lhs != rhs) {
          ok = false;
          rep.fail("model.assoc_square", {static_cast<int>(u) + 1, static_cast<int>(v) + 1, static_cast<int>(w) + 1},
                   fmt::format("a theta (theta⊗E) != theta (E⊗theta) at ({}),({}),({})", obj_str(m), obj_str(s),
                               obj_str(t)));
        }
      }
  if (ok) rep.pass("model.assoc_square", inst);
  return rep;
}

Report check_hom_faithful(const ConcreteModel& mod, const Quadruple& q, const std::vector<ObjVec>& objects) {
  Report rep;
  const auto& a = *q.alg;
  bool ok = true;
  long inst = 0;
  for (std::size_t u = 0; u < objects.size(); ++u)
    for (std::size_t v = 0; v < objects.size(); ++v) {
      const auto &m = objects[u], &s = objects[v];
      // Hom(m, s) = M_{s x m}(A): one basis matrix per (row, column, Peirce basis element)
      auto gs = grades_of(s), gm = grades_of(m);
      std::vector<Vec> images;
      for (std::size_t r = 0; r < gs.size(); ++r)
        for (std::size_t c = 0; c < gm.size(); ++c)
          for (int p : a.peirce(gs[r], gm[c])) {
            BlockMatrix x(q.alg, s, m);
            x.set(r, c, AlgElement::basis(p));
            DenseMatrix f = realize(mod, x);
            Vec flat;
            for (std::size_t i = 0; i < f.rows(); ++i)
              for (std::size_t j = 0; j < f.cols(); ++j) flat.push_back(f(i, j));
            images.push_back(std::move(flat));
          }
      ++inst;
      std::size_t dim = images.size();
      std::size_t rk = 0;
      if (dim) {
        RowSpace span(images[0].size());
        for (const auto& im : images) rk += span.add(im) ? 1 : 0;
      }
      if (rk != dim) {
        ok = false;
        rep.fail("model.hom_faithful", {static_cast<int>(u) + 1, static_cast<int>(v) + 1},
                 fmt::format("Hom(({}),({})) has dim {} but realizes to rank {}", obj_str(m), obj_str(s), dim, rk));
      }
    }
  if (ok) rep.pass("model.hom_faithful", inst);
  return rep;
}

std::vector<PhiSpot> h4_printed_phi(const Quadruple& q) {
  const auto& a = *q.alg;
  auto el = [&](const char* name, long c) { return AlgElement::basis(*a.index_of(name), c); };
  auto mat = [&](int i, int j, int k, int l, std::vector<AlgElement> entries) {
    ObjVec m = q.c(i, j), s = q.c(k, l);
    BlockMatrix x(q.alg, m, s);
    std::size_t t = 0;
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) x.set(r, c, entries.at(t++));
    return x;
  };
  return {
      {"e2", "x32", mat(1, 2, 1, 1, {AlgElement(), el("e4", -1)})},
      {"x21", "x21", mat(1, 1, 0, 0, {el("x21", 1), AlgElement()})},
      {"x21", "x32", mat(1, 2, 0, 1, {el("x43x32", -1)})},
      {"x32", "x43", mat(2, 3, 1, 2, {el("x21x14", 1)})},
      {"x43", "x32", mat(3, 2, 2, 1, {el("x21x14", -1)})},
  };
}

AlgebraPtr diagonal_algebra(int n, Field field) {
  std::vector<BasisElem> b;
  std::vector<int> idem;
  std::vector<Product> prods;
  for (int i = 0; i < n; ++i) {
    b.push_back({fmt::format("e{}", i + 1), i, i});
    idem.push_back(i);
    prods.push_back({i, i, AlgElement::basis(i)});
  }
  return std::make_shared<GradedAlgebra>(field, n, b, idem, prods);
}

Quadruple diagonal_quadruple(std::shared_ptr<const FusionRing> ring, Field field) {
  auto alg = diagonal_algebra(ring->rank(), field);
  Quadruple q{ring, alg, zero_phi(*ring, alg), identity_assoc(*ring, alg)};
  for (int i = 0; i < ring->rank(); ++i)
    for (int j = 0; j < ring->rank(); ++j) q.phi_at(i, j) = BlockMatrix::identity(alg, ring->cvec(i, j));
  return q;
}

Quadruple vec_z2(bool sign, Field field) {
  auto ring = std::make_shared<FusionRing>(2, std::vector<std::int64_t>{1, 0, 0, 1, 0, 1, 1, 0});
  Quadruple q = diagonal_quadruple(ring, field);
  if (sign) q.a(1, 1, 1) = Scalar(-1) * q.a(1, 1, 1);
  return q;
}

}  // namespace matcat
