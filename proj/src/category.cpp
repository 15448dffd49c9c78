#include "matcat/category.hpp"

#include <fmt/format.h>

namespace matcat {

std::int64_t hom_dim(const GradedAlgebra& a, const ObjVec& m, const ObjVec& s) {
  std::int64_t d = 0;
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) d += s[i] * m[j] * static_cast<std::int64_t>(a.peirce(i, j).size());
  return d;
}

DirectSum direct_sum(const AlgebraPtr& alg, const ObjVec& m, const ObjVec& s) {
  DirectSum ds{m + s, {}, {}, {}, {}};
  int n = alg->rank();
  BlockMatrix x(alg, ds.obj, m), y(alg, ds.obj, s);
  auto off = offsets(ds.obj), om = offsets(m), os = offsets(s);
  // copy k of e_i in m sits first in block i of m+s, copies from s follow
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < m[i]; ++k) x.set(off[i] + k, om[i] + k, alg->e(i));
    for (int k = 0; k < s[i]; ++k) y.set(off[i] + m[i] + k, os[i] + k, alg->e(i));
  }
  // transpose over A keeps entries in place because they are idempotents
  AlgMatrix pm(x.cols(), x.rows()), ps(y.cols(), y.rows());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) pm(c, r) = x.at(r, c);
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) ps(c, r) = y.at(r, c);
  ds.proj_m = BlockMatrix::from_raw(alg, m, ds.obj, std::move(pm));
  ds.proj_s = BlockMatrix::from_raw(alg, s, ds.obj, std::move(ps));
  ds.inj_m = std::move(x);
  ds.inj_s = std::move(y);
  return ds;
}

Report check_direct_sum(const DirectSum& ds, const ObjVec& m, const ObjVec& s) {
  Report rep;
  const auto& alg = ds.inj_m.algebra();
  bool ok = ds.proj_m * ds.inj_m == BlockMatrix::identity(alg, m) &&
            ds.proj_s * ds.inj_s == BlockMatrix::identity(alg, s) && (ds.proj_s * ds.inj_m).is_zero() &&
            (ds.proj_m * ds.inj_s).is_zero() &&
            ds.inj_m * ds.proj_m + ds.inj_s * ds.proj_s == BlockMatrix::identity(alg, ds.obj);
  if (ok)
    rep.pass("category.direct_sum", 1);
  else
    rep.fail("category.direct_sum", {}, fmt::format("biproduct identities fail for ({}) + ({})", obj_str(m), obj_str(s)));
  return rep;
}

bool is_semisimple(const GradedAlgebra& a) { return a.dim() == a.rank(); }

RingElement green_ring_class(const ObjVec& m) { return m; }

Report check_green_ring(const FusionRing& r, const std::vector<ObjVec>& objects) {
  Report rep;
  bool ok = true;
  for (std::size_t u = 0; u < objects.size(); ++u)
    for (std::size_t v = 0; v < objects.size(); ++v) {
      const auto &m = objects[u], &s = objects[v];
      RingElement lhs = green_ring_class(r.tensor(m, s));
      RingElement rhs = r.multiply(green_ring_class(m), green_ring_class(s));
      if (lhs != rhs) {
        ok = false;
        rep.fail("category.green_ring", {static_cast<int>(u) + 1, static_cast<int>(v) + 1},
                 fmt::format("[{} ⊗̂ {}] = {} but [m][s] = {}", obj_str(m), obj_str(s), ring_str(lhs), ring_str(rhs)));
      }
    }
  if (ok) rep.pass("category.green_ring", static_cast<long>(objects.size() * objects.size()));
  return rep;
}

SubQuot kernel(const BlockMatrix& x) {
  BlockMatrix k = right_universal_annihilator(x);
  return {k.col_type(), std::move(k)};
}

SubQuot cokernel(const BlockMatrix& x) {
  BlockMatrix c = left_universal_annihilator(x);
  return {c.row_type(), std::move(c)};
}

bool unit_is_simple(const GradedAlgebra& a) {
  int n = a.rank();
  if (a.peirce(0, 0).size() != 1) return false;
  auto ptr = std::shared_ptr<const GradedAlgebra>(&a, [](const GradedAlgebra*) {});
  for (int l = 1; l < n; ++l) {
    const auto& pb = a.peirce(0, l);
    if (pb.empty()) continue;
    std::vector<AlgElement> probes;
    AlgElement generic;
    for (std::size_t k = 0; k < pb.size(); ++k) {
      probes.push_back(AlgElement::basis(pb[k]));
      generic.add_term(pb[k], Scalar(static_cast<long>(2 * k + 1)));
    }
    probes.push_back(generic);
    for (const auto& x : probes)
      if (is_column_independent(BlockMatrix::element(ptr, 0, l, x))) return false;
  }
  return true;
}

std::vector<ObjVec> objects_up_to(int n, int k) {
  std::vector<ObjVec> out;
  ObjVec m(n, 0);
  // odometer over all vectors with entries <= k, keep those of size <= k
  while (true) {
    if (size(m) <= k) out.push_back(m);
    int i = n - 1;
    while (i >= 0 && m[i] == k) m[i--] = 0;
    if (i < 0) break;
    ++m[i];
  }
  return out;
}

}  // namespace matcat
