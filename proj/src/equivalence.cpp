#include "matcat/equivalence.hpp"

#include <fmt/format.h>

#include "matcat/linmod.hpp"
#include "matcat/parallel.hpp"

namespace matcat {

namespace {

BlockMatrix unit_id(const AlgebraPtr& alg, int i) { return BlockMatrix::identity(alg, unit_vec(alg->rank(), i)); }

bool same_algebra(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (&a == &b) return true;
  if (a.dim() != b.dim() || a.rank() != b.rank() || !(a.field() == b.field()) || a.idems() != b.idems()) return false;
  for (int p = 0; p < a.dim(); ++p) {
    if (a.basis(p).row != b.basis(p).row || a.basis(p).col != b.basis(p).col) return false;
    for (int q = 0; q < a.dim(); ++q)
      if (a.mul_basis(p, q) != b.mul_basis(p, q)) return false;
  }
  return true;
}

template <class Fn>
void sweep(Report& rep, const std::string& check, std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Report> part(count);
  parallel_for(count, jobs, [&](std::size_t k) { fn(k, part[k]); });
  bool ok = true;
  for (const auto& r : part) {
    if (!r.ok()) ok = false;
    rep.merge(r);
  }
  if (ok) rep.pass(check, static_cast<long>(count));
}

}  // namespace

EtaWitness identity_eta(const Quadruple& q) {
  EtaWitness eta;
  for (int i = 0; i < q.rank(); ++i)
    for (int j = 0; j < q.rank(); ++j) eta.push_back(BlockMatrix::identity(q.alg, q.c(i, j)));
  return eta;
}

BlockMatrix extend_eta(const Quadruple& q, const Quadruple& q2, const EtaWitness& eta, const ObjVec& m,
                       const ObjVec& s) {
  ObjVec t = q.tensor(m, s);
  BlockMatrix acc(q.alg, t, t);
  if (size(t) == 0) return acc;
  int n = q.rank();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m[i]; ++k)
      for (int j = 0; j < n; ++j)
        for (int kp = 0; kp < s[j]; ++kp)
          acc = acc + hat_tensor(q, selector_col(q.alg, m, i, k), selector_col(q.alg, s, j, kp)) * eta[i * n + j] *
                          hat_tensor(q2, selector_row(q.alg, m, i, k), selector_row(q.alg, s, j, kp));
  return acc;
}

Report check_eta_equiv(const Quadruple& q, const Quadruple& q2, const EtaWitness& eta, unsigned jobs) {
  Report rep;
  int n = q.rank(), d = q.dim();
  if (q2.rank() != n || q.ring->data() != q2.ring->data() || !same_algebra(*q.alg, *q2.alg)) {
    rep.fail("eta.compatible", {}, "the two quadruples do not share R and A");
    return rep;
  }
  rep.pass("eta.compatible", 1);

  bool ok = eta.size() == static_cast<std::size_t>(n) * n;
  if (!ok) rep.fail("eta.types", {}, fmt::format("witness has {} entries, expected {}", eta.size(), n * n));
  for (int i = 0; ok && i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& e = eta[i * n + j];
      if (e.row_type() != q.c(i, j) || e.col_type() != q.c(i, j)) {
        ok = false;
        rep.fail("eta.types", {i + 1, j + 1},
                 fmt::format("eta has type ({}|{}), expected c{}{}", obj_str(e.row_type()), obj_str(e.col_type()),
                             i + 1, j + 1));
      }
    }
  if (!ok) return rep;
  rep.pass("eta.types", static_cast<long>(n) * n);

  ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!try_inverse(eta[i * n + j])) {
        ok = false;
        rep.fail("eta.invertible", {i + 1, j + 1}, "eta is not invertible");
      }
  if (ok) rep.pass("eta.invertible", static_cast<long>(n) * n);

  const auto& a = *q.alg;
  sweep(rep, "eta.naturality", static_cast<std::size_t>(d) * d, jobs, [&](std::size_t k, Report& r) {
    int p = static_cast<int>(k / d), u = static_cast<int>(k % d);
    BlockMatrix x = BlockMatrix::basis(q.alg, p), y = BlockMatrix::basis(q.alg, u);
    int ip = a.basis(p).row, i = a.basis(p).col, jp = a.basis(u).row, j = a.basis(u).col;
    if (hat_tensor(q, x, y) * eta[i * n + j] != eta[ip * n + jp] * hat_tensor(q2, x, y))
      r.fail("eta.naturality", {p + 1, u + 1},
             fmt::format("(x⊗̂y) eta != eta (x⊗̂'y) for x={}, y={}", a.basis(p).name, a.basis(u).name));
  });

  sweep(rep, "eta.coherence", static_cast<std::size_t>(n) * n * n, jobs, [&](std::size_t k, Report& r) {
    int l = static_cast<int>(k % n), j = static_cast<int>(k / n % n), i = static_cast<int>(k / n / n);
    ObjVec ei = unit_vec(n, i), el = unit_vec(n, l);
    BlockMatrix lhs = q.a(i, j, l) * extend_eta(q, q2, eta, q.c(i, j), el) *
                      hat_tensor(q2, eta[i * n + j], unit_id(q.alg, l));
    BlockMatrix rhs = extend_eta(q, q2, eta, ei, q.c(j, l)) * hat_tensor(q2, unit_id(q.alg, i), eta[j * n + l]) *
                      q2.a(i, j, l);
    if (lhs != rhs) r.fail("eta.coherence", {i + 1, j + 1, l + 1}, "a eta (eta ⊗̂' E) != eta (E ⊗̂' eta) a'");
  });
  return rep;
}

EtaWitness compose_eta(const EtaWitness& eta, const EtaWitness& eta2) {
  if (eta.size() != eta2.size()) throw std::invalid_argument("witnesses have different sizes");
  EtaWitness out;
  for (std::size_t k = 0; k < eta.size(); ++k) out.push_back(eta[k] * eta2[k]);
  return out;
}

ObjVec permute_obj(const std::vector<int>& sigma, const ObjVec& m) {
  ObjVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) out[sigma[i]] = m[i];
  return out;
}

DenseMatrix sigma_perm(const std::vector<int>& sigma, const ObjVec& m) {
  auto total = static_cast<std::size_t>(size(m));
  if (total == 0) return DenseMatrix(1, 1);
  DenseMatrix p(total, total);
  auto off = offsets(m), offs = offsets(permute_obj(sigma, m));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::int64_t k = 0; k < m[a]; ++k) p(offs[sigma[a]] + k, off[a] + k) = 1;
  return p;
}

AlgElement apply_delta(const EquivWitness& w, const AlgElement& x) {
  AlgElement out;
  for (const auto& t : x.terms()) out += t.c * w.delta.at(t.idx);
  return out;
}

AlgMatrix apply_delta(const EquivWitness& w, const AlgMatrix& x) {
  AlgMatrix out(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out(r, c) = apply_delta(w, x(r, c));
  return out;
}

BlockMatrix apply_functor(const EquivWitness& w, const AlgebraPtr& target, const BlockMatrix& x) {
  AlgMatrix raw = AlgMatrix::rmul(AlgMatrix::lmul(sigma_perm(w.sigma, x.row_type()), apply_delta(w, x.raw())),
                                  sigma_perm(w.sigma, x.col_type()).transpose());
  return BlockMatrix::from_raw(target, permute_obj(w.sigma, x.row_type()), permute_obj(w.sigma, x.col_type()),
                               std::move(raw));
}

Report check_tensor_equiv(const Quadruple& qa, const Quadruple& qb, const EquivWitness& w, unsigned jobs) {
  Report rep;
  int n = qa.rank(), d = qa.dim();
  const auto& A = *qa.alg;
  const auto& B = *qb.alg;
  if (qb.rank() != n) {
    rep.fail("equiv.rank", {}, fmt::format("ranks differ: {} vs {}", n, qb.rank()));
    return rep;
  }
  rep.pass("equiv.rank", 1);

  std::vector<int> seen(n, 0);
  bool ok = static_cast<int>(w.sigma.size()) == n;
  for (int i = 0; ok && i < n; ++i) {
    if (w.sigma[i] < 0 || w.sigma[i] >= n || seen[w.sigma[i]]++) ok = false;
  }
  if (ok && w.sigma[0] != 0) ok = false;
  if (!ok) {
    rep.fail("equiv.sigma", {}, "sigma is not a permutation fixing the unit index");
    return rep;
  }
  rep.pass("equiv.sigma", 1);

  // (1) ring isomorphism r_i -> r'_σ(i)
  ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (qa.ring->c(i, j, k) != qb.ring->c(w.sigma[i], w.sigma[j], w.sigma[k])) {
          ok = false;
          rep.fail("equiv.ring", {i + 1, j + 1, k + 1},
                   fmt::format("c = {} but c' = {}", qa.ring->c(i, j, k),
                               qb.ring->c(w.sigma[i], w.sigma[j], w.sigma[k])));
        }
  if (!ok) return rep;
  rep.pass("equiv.ring", static_cast<long>(n) * n * n);

  // (2) δ an algebra isomorphism with δ(e_i) = e'_σ(i)
  ok = static_cast<int>(w.delta.size()) == d && B.dim() == d;
  if (!ok) rep.fail("equiv.delta", {}, fmt::format("delta has {} images for dim {} -> {}", w.delta.size(), d, B.dim()));
  for (int i = 0; ok && i < n; ++i)
    if (w.delta[A.idem(i)] != B.e(w.sigma[i])) {
      ok = false;
      rep.fail("equiv.delta", {i + 1}, fmt::format("delta(e{}) != e'{}", i + 1, w.sigma[i] + 1));
    }
  if (ok) {
    for (int p = 0; p < d; ++p)
      if (!B.in_peirce(w.delta[p], w.sigma[A.basis(p).row], w.sigma[A.basis(p).col])) {
        ok = false;
        rep.fail("equiv.delta", {p + 1}, fmt::format("delta({}) is not in the permuted Peirce component", A.basis(p).name));
      }
    for (int p = 0; p < d; ++p)
      for (int r = 0; r < d; ++r)
        if (apply_delta(w, A.mul_basis(p, r)) != B.mul(w.delta[p], w.delta[r])) {
          ok = false;
          rep.fail("equiv.delta", {p + 1, r + 1},
                   fmt::format("delta({}{}) != delta({})delta({})", A.basis(p).name, A.basis(r).name, A.basis(p).name,
                               A.basis(r).name));
        }
    DenseMatrix img(d, d);
    for (int p = 0; p < d; ++p)
      for (const auto& t : w.delta[p].terms()) img(t.idx, p) = t.c;
    if (rank(img) != static_cast<std::size_t>(d)) {
      ok = false;
      rep.fail("equiv.delta", {}, "delta is not bijective");
    }
  }
  if (!ok) return rep;
  rep.pass("equiv.delta", static_cast<long>(d) * d);

  if (w.alpha.is_zero() || w.phi.size() != static_cast<std::size_t>(n) * n) {
    rep.fail("equiv.phi", {}, "alpha must be nonzero and phi must have n^2 entries");
    return rep;
  }
  std::vector<BlockMatrix> ph;
  Scalar ainv = w.alpha.inv();
  ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& f = w.phi[i * n + j];
      ObjVec c = qb.c(w.sigma[i], w.sigma[j]);
      if (f.row_type() != c || f.col_type() != c || !try_inverse(f)) {
        ok = false;
        rep.fail("equiv.phi", {i + 1, j + 1}, "phi_ij must be invertible in M_{c'(σi,σj)}(A')");
      }
      ph.push_back(ainv * f);
    }
  if (!ok) return rep;
  rep.pass("equiv.phi", static_cast<long>(n) * n);

  // (3a) after normalizing alpha to 1
  ok = true;
  for (int i = 0; i < n; ++i) {
    BlockMatrix e = unit_id(qb.alg, w.sigma[i]);
    if (ph[i] != e || ph[i * n] != e) {
      ok = false;
      rep.fail("equiv.unit", {i + 1}, fmt::format("phi_1{0} or phi_{0}1 is not alpha e'{1}", i + 1, w.sigma[i] + 1));
    }
  }
  if (ok) rep.pass("equiv.unit", n);

  // (3b)
  sweep(rep, "equiv.naturality", static_cast<std::size_t>(d) * d, jobs, [&](std::size_t k, Report& r) {
    int p = static_cast<int>(k / d), u = static_cast<int>(k % d);
    int ip = A.basis(p).row, i = A.basis(p).col, jp = A.basis(u).row, j = A.basis(u).col;
    BlockMatrix dx = BlockMatrix::element(qb.alg, w.sigma[ip], w.sigma[i], w.delta[p]);
    BlockMatrix dy = BlockMatrix::element(qb.alg, w.sigma[jp], w.sigma[j], w.delta[u]);
    BlockMatrix lhs = ph[ip * n + jp] * hat_tensor(qb, dx, dy);
    BlockMatrix rhs =
        apply_functor(w, qb.alg, hat_tensor(qa, BlockMatrix::basis(qa.alg, p), BlockMatrix::basis(qa.alg, u))) *
        ph[i * n + j];
    if (lhs != rhs)
      r.fail("equiv.naturality", {p + 1, u + 1},
             fmt::format("phi (δx ⊗̂' δy) != P δ(x ⊗̂ y) P^T phi for x={}, y={}", A.basis(p).name, A.basis(u).name));
  });

  // (3c) as displayed: rows in the layout of c_ij ⊗̂ e_l, columns in that of c'_{σiσj} ⊗̂' e'_{σl}
  sweep(rep, "equiv.coherence", static_cast<std::size_t>(n) * n * n, jobs, [&](std::size_t k, Report& r) {
    int l = static_cast<int>(k % n), j = static_cast<int>(k / n % n), i = static_cast<int>(k / n / n);
    int si = w.sigma[i], sj = w.sigma[j], sl = w.sigma[l];
    ObjVec cij = qa.c(i, j), cjl = qa.c(j, l);
    ObjVec cpij = qb.c(si, sj), cpjl = qb.c(sj, sl);
    AlgMatrix da = apply_delta(w, qa.a(i, j, l).raw());

    AlgMatrix lhs, rhs;
    for (int t = 0; t < n; ++t)
      for (int kk = 0; kk < cij[t]; ++kk) {
        AlgMatrix f = AlgMatrix::mul(B, da, apply_delta(w, hat_tensor(qa, selector_col(qa.alg, cij, t, kk),
                                                                       unit_id(qa.alg, l))
                                                            .raw()));
        f = AlgMatrix::rmul(f, sigma_perm(w.sigma, qa.c(t, l)).transpose());
        f = AlgMatrix::mul(B, f, ph[t * n + l].raw());
        BlockMatrix tail =
            hat_tensor(qb, selector_row(qb.alg, cpij, w.sigma[t], kk) * ph[i * n + j], unit_id(qb.alg, sl));
        f = AlgMatrix::mul(B, f, tail.raw());
        if (lhs.rows() == 0) lhs = f; else lhs += f;
      }
    for (int t = 0; t < n; ++t)
      for (int kk = 0; kk < cjl[t]; ++kk) {
        AlgMatrix f =
            apply_delta(w, hat_tensor(qa, unit_id(qa.alg, i), selector_col(qa.alg, cjl, t, kk)).raw());
        f = AlgMatrix::rmul(f, sigma_perm(w.sigma, qa.c(i, t)).transpose());
        f = AlgMatrix::mul(B, f, ph[i * n + t].raw());
        BlockMatrix tail =
            hat_tensor(qb, unit_id(qb.alg, si), selector_row(qb.alg, cpjl, w.sigma[t], kk) * ph[j * n + l]);
        f = AlgMatrix::mul(B, f, tail.raw());
        f = AlgMatrix::mul(B, f, qb.a(si, sj, sl).raw());
        if (rhs.rows() == 0) rhs = f; else rhs += f;
      }
    if (!(lhs == rhs)) r.fail("equiv.coherence", {i + 1, j + 1, l + 1}, "the two double sums differ");
  });
  return rep;
}

std::pair<Quadruple, EquivWitness> relabel(const Quadruple& q, const std::vector<int>& sigma) {
  int n = q.rank(), d = q.dim();
  if (static_cast<int>(sigma.size()) != n || sigma[0] != 0) throw std::invalid_argument("sigma must fix index 1");
  const auto& A = *q.alg;
  std::vector<std::int64_t> c(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[(sigma[i] * n + sigma[j]) * n + sigma[k]] = q.ring->c(i, j, k);
  auto ring = std::make_shared<FusionRing>(n, c);
  std::vector<BasisElem> basis;
  for (int p = 0; p < d; ++p) basis.push_back({A.basis(p).name, sigma[A.basis(p).row], sigma[A.basis(p).col]});
  std::vector<int> idem(n);
  for (int i = 0; i < n; ++i) idem[sigma[i]] = A.idem(i);
  auto alg = std::make_shared<GradedAlgebra>(A.field(), n, basis, idem, A.products());

  EquivWitness w;
  w.sigma = sigma;
  for (int p = 0; p < d; ++p) w.delta.push_back(AlgElement::basis(p));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.phi.push_back(BlockMatrix::identity(alg, ring->cvec(sigma[i], sigma[j])));

  Quadruple out{ring, alg, zero_phi(*ring, alg), identity_assoc(*ring, alg)};
  for (int p = 0; p < d; ++p)
    for (int r = 0; r < d; ++r) out.phi_at(p, r) = apply_functor(w, alg, q.phi_at(p, r));
  // a' is the unique solution of the coherence condition with phi_ij = E:
  // F(a) sum F(X ⊗̂ e_l)(Y' ⊗̂' e') = sum F(e_i ⊗̂ X)(e' ⊗̂' Y') a'
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        int si = sigma[i], sj = sigma[j], sl = sigma[l];
        ObjVec cij = q.c(i, j), cjl = q.c(j, l), cpij = out.c(si, sj), cpjl = out.c(sj, sl);
        ObjVec tot = out.tensor(cpij, unit_vec(n, sl));
        BlockMatrix lhs(alg, tot, tot), rhs(alg, tot, tot);
        for (int t = 0; t < n; ++t)
          for (int k = 0; k < cij[t]; ++k)
            lhs = lhs + apply_functor(w, alg, hat_tensor(q, selector_col(q.alg, cij, t, k), unit_id(q.alg, l))) *
                            hat_tensor(out, selector_row(alg, cpij, sigma[t], k), unit_id(alg, sl));
        for (int t = 0; t < n; ++t)
          for (int k = 0; k < cjl[t]; ++k)
            rhs = rhs + apply_functor(w, alg, hat_tensor(q, unit_id(q.alg, i), selector_col(q.alg, cjl, t, k))) *
                            hat_tensor(out, unit_id(alg, si), selector_row(alg, cpjl, sigma[t], k));
        out.a(si, sj, sl) = inverse(rhs) * apply_functor(w, alg, q.a(i, j, l)) * lhs;
      }
  return {std::move(out), std::move(w)};
}

EquivWitness identity_witness(const Quadruple& q) {
  std::vector<int> id(q.rank());
  for (int i = 0; i < q.rank(); ++i) id[i] = i;
  EquivWitness w;
  w.sigma = id;
  for (int p = 0; p < q.dim(); ++p) w.delta.push_back(AlgElement::basis(p));
  for (int i = 0; i < q.rank(); ++i)
    for (int j = 0; j < q.rank(); ++j) w.phi.push_back(BlockMatrix::identity(q.alg, q.c(i, j)));
  return w;
}

}  // namespace matcat
