#pragma once

// Randomized algebraic laws over a quadruple. Shared by the property suite
// and the acceptance binary so both count the same cases.

#include <functional>
#include <string>
#include <vector>

#include "matcat/associator.hpp"
#include "matcat/linmod.hpp"
#include "support.hpp"

namespace testsupport {

struct LawResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first;
};

inline LawResult run_law(const std::string& name, int cases, std::uint64_t seed,
                         const std::function<std::string(Rng&)>& body) {
  LawResult res{name};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    std::string err;
    try {
      err = body(rng);
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    ++res.cases;
    if (!err.empty()) {
      if (res.failures++ == 0) res.first = "case " + std::to_string(k) + ": " + err;
    }
  }
  return res;
}

inline std::vector<LawResult> run_laws(const Quadruple& q, int cases, std::uint64_t seed) {
  const int n = q.rank();
  const auto& alg = q.alg;
  auto obj = [&](Rng& r, int k = 2) { return random_obj(r, n, k); };
  auto mat = [&](Rng& r, const ObjVec& m, const ObjVec& s) { return random_matrix(r, alg, m, s); };
  auto T = [&](const BlockMatrix& x, const BlockMatrix& y) { return hat_tensor(q, x, y); };
  std::vector<LawResult> out;

  out.push_back(run_law("interchange", cases, seed + 1, [&](Rng& r) -> std::string {
    ObjVec a = obj(r), b = obj(r), c = obj(r), d = obj(r), e = obj(r), f = obj(r);
    BlockMatrix x = mat(r, a, b), x1 = mat(r, b, c), y = mat(r, d, e), y1 = mat(r, e, f);
    return T(x, y) * T(x1, y1) == T(x * x1, y * y1) ? "" : "(X⊗̂Y)(X1⊗̂Y1) != XX1⊗̂YY1";
  }));

  out.push_back(run_law("identity_tensor", cases, seed + 2, [&](Rng& r) -> std::string {
    ObjVec m = obj(r, 3), s = obj(r, 3);
    return T(BlockMatrix::identity(alg, m), BlockMatrix::identity(alg, s)) ==
                   BlockMatrix::identity(alg, q.tensor(m, s))
               ? ""
               : "E_m⊗̂E_s != E_{m⊗̂s}";
  }));

  out.push_back(run_law("unit_absorption", cases, seed + 3, [&](Rng& r) -> std::string {
    ObjVec m = obj(r), s = obj(r);
    BlockMatrix x = mat(r, m, s), u = BlockMatrix::identity(alg, unit_vec(n, 0));
    if (T(u, x) != x) return "E_{e1}⊗̂X != X";
    if (T(x, u) != x) return "X⊗̂E_{e1} != X";
    return "";
  }));

  out.push_back(run_law("object_tensor_assoc", cases, seed + 4, [&](Rng& r) -> std::string {
    ObjVec m = random_obj(r, n, 3, true), s = random_obj(r, n, 3, true), t = random_obj(r, n, 3, true);
    return q.tensor(q.tensor(m, s), t) == q.tensor(m, q.tensor(s, t)) ? "" : "(m⊗̂s)⊗̂t != m⊗̂(s⊗̂t)";
  }));

  out.push_back(run_law("tensor_routes_agree", cases, seed + 5, [&](Rng& r) -> std::string {
    ObjVec a = obj(r), b = obj(r), c = obj(r), d = obj(r);
    BlockMatrix x = mat(r, a, b), y = mat(r, c, d);
    BlockMatrix direct = T(x, y);
    if (hat_tensor_pi(q, x, y) != direct) return "Π route differs";
    if (hat_tensor_perm(q, x, y) != direct) return "P·X·Pᵀ route differs";
    return "";
  }));

  out.push_back(run_law("annihilator_unique", cases, seed + 6, [&](Rng& r) -> std::string {
    ObjVec m = obj(r, 3), s = obj(r, 3);
    BlockMatrix x = mat(r, m, s);
    BlockMatrix k = right_universal_annihilator(x);
    if (!(x * k).is_zero()) return "XK != 0";
    if (!is_column_independent(k)) return "K not column independent";
    // same kernel after an invertible change on the other side
    BlockMatrix k2 = right_universal_annihilator(random_invertible(r, alg, m) * x);
    if (k2.col_type() != k.col_type()) return "kernel objects differ";
    auto u = solve_left(k, k2);
    if (!u || k * *u != k2) return "K2 not in K·M";
    if (!try_inverse(*u)) return "K2 = K·U with U not invertible";
    // and K·W is again an annihilator
    BlockMatrix kw = k * random_invertible(r, alg, k.col_type());
    if (!(x * kw).is_zero() || !is_column_independent(kw)) return "K·W not an annihilator";
    return "";
  }));

  out.push_back(run_law("epi_mono_recompose", cases, seed + 7, [&](Rng& r) -> std::string {
    ObjVec m = obj(r, 3), s = obj(r, 3);
    BlockMatrix x = mat(r, m, s);
    auto [x1, x2] = epi_mono_factor(x);
    if (x1 * x2 != x) return "X1 X2 != X";
    if (!is_column_independent(x1)) return "X1 not column independent";
    if (!is_row_independent(x2)) return "X2 not row independent";
    return "";
  }));

  out.push_back(run_law("assoc_naturality", cases, seed + 8, [&](Rng& r) -> std::string {
    ObjVec m1 = obj(r), m2 = obj(r), m3 = obj(r), n1 = obj(r), n2 = obj(r), n3 = obj(r);
    BlockMatrix x1 = mat(r, m1, n1), x2 = mat(r, m2, n2), x3 = mat(r, m3, n3);
    BlockMatrix lhs = T(x1, T(x2, x3)) * extend(q, n1, n2, n3);
    BlockMatrix rhs = extend(q, m1, m2, m3) * T(T(x1, x2), x3);
    return lhs == rhs ? "" : "(X1⊗̂(X2⊗̂X3))a != a((X1⊗̂X2)⊗̂X3)";
  }));

  out.push_back(run_law("assoc_unit_middle", cases, seed + 9, [&](Rng& r) -> std::string {
    ObjVec m = obj(r), s = obj(r);
    return extend(q, m, unit_vec(n, 0), s) == BlockMatrix::identity(alg, q.tensor(m, s)) ? "" : "a_{m,e1,s} != E";
  }));

  out.push_back(run_law("assoc_inverse", cases, seed + 10, [&](Rng& r) -> std::string {
    ObjVec m = obj(r), s = obj(r), t = obj(r);
    BlockMatrix a = extend(q, m, s, t), b = inverse_extended(q, m, s, t);
    BlockMatrix e = BlockMatrix::identity(alg, q.tensor(q.tensor(m, s), t));
    if (b * a != e) return "b·a != E";
    if (a * b != e) return "a·b != E";
    return "";
  }));
  return out;
}

}  // namespace testsupport
