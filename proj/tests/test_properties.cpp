#include <doctest.h>

#include "laws.hpp"
#include "matcat/equivalence.hpp"
#include "matcat/h4.hpp"

using namespace matcat;
using namespace testsupport;

namespace {

void check_all(const std::vector<LawResult>& laws, int cases) {
  for (const auto& l : laws) {
    INFO(l.name << ": " << l.first);
    CHECK(l.cases >= cases);
    CHECK(l.failures == 0);
  }
}

}  // namespace

TEST_CASE("laws hold on the four-object example") {
  Quadruple q = build_h4();
  check_all(run_laws(q, 500, 20240611), 500);
}

TEST_CASE("laws hold on signed Vec(Z2)") {
  Quadruple q = vec_z2(true);
  check_all(run_laws(q, 500, 77), 500);
}

TEST_CASE("laws hold on a regauged example") {
  Rng rng(3);
  auto rg = build_h4_regauged(random_scales(rng));
  check_all(run_laws(rg.quad, 100, 991), 100);
}

TEST_CASE("relabel functor preserves composition and identities") {
  Quadruple q = build_h4();
  auto [q2, w] = relabel(q, {0, 3, 2, 1});
  Rng rng(4242);
  for (int k = 0; k < 200; ++k) {
    ObjVec a = random_obj(rng, 4, 3), b = random_obj(rng, 4, 3), c = random_obj(rng, 4, 3);
    BlockMatrix x = random_matrix(rng, q.alg, a, b), y = random_matrix(rng, q.alg, b, c);
    CHECK(apply_functor(w, q2.alg, x * y) == apply_functor(w, q2.alg, x) * apply_functor(w, q2.alg, y));
    CHECK(apply_functor(w, q2.alg, BlockMatrix::identity(q.alg, a)) ==
          BlockMatrix::identity(q2.alg, permute_obj(w.sigma, a)));
  }
}

TEST_CASE("sigma permutation is orthogonal") {
  Rng rng(5);
  std::vector<std::vector<int>> perms = {{0, 1, 2, 3}, {0, 3, 2, 1}, {1, 0, 3, 2}, {3, 2, 1, 0}};
  for (int k = 0; k < 100; ++k) {
    ObjVec m = random_obj(rng, 4, 5);
    const auto& s = perms[k % perms.size()];
    DenseMatrix p = sigma_perm(s, m);
    CHECK(p * p.transpose() == DenseMatrix::identity(p.rows()));
  }
}

TEST_CASE("extended eta for the identity witness is the identity") {
  Quadruple q = build_h4();
  EtaWitness eta = identity_eta(q);
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    ObjVec m = random_obj(rng, 4, 2), s = random_obj(rng, 4, 2);
    CHECK(extend_eta(q, q, eta, m, s) == BlockMatrix::identity(q.alg, q.tensor(m, s)));
  }
}
