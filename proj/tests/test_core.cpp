#include <doctest.h>

#include <sstream>

#include "matcat/category.hpp"
#include "matcat/equivalence.hpp"
#include "matcat/h4.hpp"
#include "matcat/io.hpp"
#include "matcat/validate.hpp"
#include "support.hpp"

using namespace matcat;
using namespace testsupport;

namespace {

BlockMatrix named(const Quadruple& q, const std::string& name) {
  auto p = q.alg->index_of(name);
  REQUIRE(p.has_value());
  return BlockMatrix::basis(q.alg, *p);
}

AlgebraPtr one_object_algebra(std::vector<std::string> names, const std::vector<Product>& prods) {
  std::vector<BasisElem> basis;
  for (auto& s : names) basis.push_back({s, 0, 0});
  return std::make_shared<GradedAlgebra>(Field::rational(), 1, basis, std::vector<int>{0}, prods);
}

// dim of the null space of a dense map, by rank
std::size_t nullity(const DenseMatrix& f) { return f.cols() - rank(f); }

}  // namespace

TEST_CASE("scalars over Q and F_p") {
  CHECK(Scalar(1, 3) + Scalar(2, 3) == Scalar(1));
  CHECK(Scalar(-2, 4) == Scalar(-1, 2));
  Field f7 = Field::prime(7);
  CHECK(f7.from_int(3) * f7.from_int(5) == f7.from_int(1));
  CHECK(f7.from_int(3).inv() == f7.from_int(5));
  CHECK(f7.parse("1/2") == f7.from_int(4));
  CHECK_THROWS(Field::prime(9));
}

TEST_CASE("dense rref, inverse and nullspace") {
  DenseMatrix a = DenseMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(a) == 2);
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  auto z = a.apply(ns[0]);
  for (auto& v : z) CHECK(v.is_zero());
  DenseMatrix b = DenseMatrix::from_rows({{2, 1}, {1, 1}});
  CHECK(b * inverse(b) == DenseMatrix::identity(2));
  CHECK_FALSE(try_inverse(a).has_value());
}

TEST_CASE("radical of dual numbers is spanned by t") {
  auto a = one_object_algebra({"1", "t"}, {{0, 0, AlgElement::basis(0)},
                                           {0, 1, AlgElement::basis(1)},
                                           {1, 0, AlgElement::basis(1)}});
  auto rad = a->radical(0, 0);
  REQUIRE(rad.size() == 1);
  CHECK(rad[0].coeff(0).is_zero());
  CHECK_FALSE(rad[0].coeff(1).is_zero());
  Report r = a->check();
  CHECK(r.count("algebra.KS", Status::Pass) == 1);
  CHECK(r.count("algebra.split_local", Status::Pass) == 1);
  CHECK(r.has_failure("algebra.unit_dim"));  // e1Ae1 is 2-dimensional
}

TEST_CASE("2x2 matrices fail the radical condition") {
  // matrix units E11 E22 E12 E21, graded by the two diagonal idempotents
  std::vector<BasisElem> basis{{"E11", 0, 0}, {"E22", 1, 1}, {"E12", 0, 1}, {"E21", 1, 0}};
  int row[4] = {0, 1, 0, 1}, col[4] = {0, 1, 1, 0};
  std::vector<Product> pr;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      if (col[p] != row[q]) continue;
      for (int t = 0; t < 4; ++t)
        if (row[t] == row[p] && col[t] == col[q]) pr.push_back({p, q, AlgElement::basis(t)});
    }
  auto a = std::make_shared<GradedAlgebra>(Field::rational(), 2, basis, std::vector<int>{0, 1}, pr);
  Report r = a->check();
  CHECK(r.count("algebra.assoc", Status::Fail) == 0);
  CHECK(r.has_failure("algebra.KS"));
  CHECK(a->radical().empty());
}

TEST_CASE("four-object example algebra") {
  Quadruple q = build_h4();
  CHECK(q.dim() == 10);
  CHECK(q.alg->radical().size() == 6);
  CHECK_FALSE(is_semisimple(*q.alg));
  CHECK(unit_is_simple(*q.alg));
  // radical squared lands in radical, and the radical cubed is zero
  auto rad = q.alg->radical();
  for (auto& x : rad)
    for (auto& y : rad)
      for (auto& z : rad) {
        AlgElement xy = q.alg->mul(x, y);
        CHECK(q.alg->mul(xy, z).is_zero());
      }
}

TEST_CASE("hom dimensions count Peirce entries") {
  Quadruple q = build_h4();
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    ObjVec m = random_obj(rng, 4, 3, true), s = random_obj(rng, 4, 3, true);
    BlockMatrix x(q.alg, s, m);
    std::int64_t want = 0;
    if (size(m) && size(s))
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
          want += static_cast<std::int64_t>(q.alg->peirce(x.row_grade(r), x.col_grade(c)).size());
    CHECK(hom_dim(*q.alg, m, s) == want);
  }
}

TEST_CASE("direct sum is a biproduct") {
  Quadruple q = build_h4();
  ObjVec m{2, 1, 0, 0}, s{0, 1, 1, 0};
  DirectSum ds = direct_sum(q.alg, m, s);
  CHECK(ds.obj == ObjVec{2, 2, 1, 0});
  CHECK(check_direct_sum(ds, m, s).ok());
}

TEST_CASE("kernel and cokernel of the arrows") {
  Quadruple q = build_h4();
  SubQuot k = kernel(named(q, "x32"));
  CHECK(k.obj == ObjVec{1, 0, 0, 0});
  CHECK(k.map == named(q, "x21"));
  SubQuot c = cokernel(named(q, "x21"));
  CHECK(c.obj == ObjVec{0, 0, 1, 0});
  CHECK(c.map == named(q, "x32"));
}

TEST_CASE("kernel matches the linear kernel of the realization") {
  auto mod = h4_model();
  Quadruple q = quadruple_from_model(mod);
  Rng rng(8);
  for (int k = 0; k < 150; ++k) {
    ObjVec m = random_obj(rng, 4, 3), s = random_obj(rng, 4, 3);
    BlockMatrix x = random_matrix(rng, q.alg, m, s);
    DenseMatrix fx = realize(mod, x);
    SubQuot ker = kernel(x);
    DenseMatrix fk = realize(mod, ker.map);
    CHECK((fx * fk).is_zero());
    CHECK(rank(fk) == fk.cols());
    CHECK(fk.cols() == nullity(fx));
    SubQuot cok = cokernel(x);
    DenseMatrix fc = realize(mod, cok.map);
    CHECK((fc * fx).is_zero());
    CHECK(rank(fc) == fc.rows());
    CHECK(fc.rows() == fx.rows() - rank(fx));
  }
}

TEST_CASE("green ring of the example") {
  Quadruple q = build_h4();
  RingElement all = eval_ring_expr(*q.ring, "(r1+r2+r3+r4)^2");
  RingElement want(4, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int l = 0; l < 4; ++l) want[l] += q.ring->c(i, j, l);
  CHECK(all == want);
  CHECK(ring_str(all) == "2r1+8r2+2r3+8r4");
  CHECK_THROWS_AS(eval_ring_expr(*q.ring, "r5"), std::invalid_argument);
}

TEST_CASE("validation of the example passes and flipping a phi sign breaks it") {
  Quadruple q = build_h4();
  Report r = validate(q);
  CHECK(r.ok());
  CHECK(r.violations() == 0);

  auto x = *q.alg->index_of("x21"), y = *q.alg->index_of("x32");
  Quadruple bad = q;
  bad.phi_at(x, y) = Scalar(-1) * bad.phi_at(x, y);
  Report rb = check_phi(bad);
  CHECK(rb.has_failure("phi.multiplicative"));
}

TEST_CASE("associator with the unit in the middle is the identity") {
  Quadruple q = build_h4();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(q.a(i, 0, j) == BlockMatrix::identity(q.alg, q.c(i, j)));
}

TEST_CASE("regauged example stays valid and equivalent") {
  std::vector<Scalar> s(16, Scalar(1));
  s[1 * 4 + 1] = Scalar(-1);
  auto g = build_h4_regauged(s);
  CHECK(validate(g.quad).ok());
  CHECK(check_eta_equiv(build_h4(), g.quad, g.eta).ok());
  std::vector<Scalar> zero(16, Scalar(1));
  zero[5] = Scalar(0);
  CHECK_THROWS(build_h4_regauged(zero));
}

TEST_CASE("eta witnesses compose") {
  Rng rng(21);
  auto s1 = random_scales(rng), s2 = random_scales(rng);
  std::vector<Scalar> s12(16);
  for (int k = 0; k < 16; ++k) s12[k] = s1[k] * s2[k];
  Quadruple q0 = build_h4();
  auto g1 = build_h4_regauged(s1);
  auto g12 = build_h4_regauged(s12);
  EtaWitness step;  // q1 <- q12
  for (int k = 0; k < 16; ++k) step.push_back(s2[k].inv() * BlockMatrix::identity(q0.alg, q0.c(k / 4, k % 4)));
  CHECK(check_eta_equiv(g1.quad, g12.quad, step).ok());
  CHECK(check_eta_equiv(q0, g12.quad, compose_eta(g1.eta, step)).ok());
}

TEST_CASE("Vec(Z2) with and without sign") {
  Quadruple triv = vec_z2(false), sign = vec_z2(true);
  CHECK(validate(triv).ok());
  CHECK(validate(sign).ok());
  CHECK(is_semisimple(*triv.alg));
  Report r = check_eta_equiv(triv, sign, identity_eta(triv));
  CHECK_FALSE(r.ok());
  const CheckResult* f = r.first_failure("eta.coherence");
  REQUIRE(f != nullptr);
  CHECK(f->locus == std::vector<int>{2, 2, 2});
}

TEST_CASE("positive characteristic skips radical checks") {
  Quadruple q = vec_z2(true, Field::prime(5));
  Report r = validate(q);
  CHECK(r.ok());
  CHECK(r.count("algebra.KS", Status::Skipped) == 1);
  Quadruple h = build_h4({Field::prime(7), {}, false});
  CHECK(validate(h).ok());
}

TEST_CASE("relabeled quadruple validates and is equivalent") {
  Quadruple q = build_h4();
  auto [q2, w] = relabel(q, {0, 3, 2, 1});
  CHECK(validate(q2).ok());
  CHECK(check_tensor_equiv(q, q2, w).ok());
  CHECK(check_tensor_equiv(q, q, identity_witness(q)).ok());
}

TEST_CASE("json round trip") {
  Quadruple q = build_h4();
  json j = quadruple_to_json(q);
  Quadruple back = quadruple_from_json(j);
  CHECK(quadruple_to_json(back).dump() == j.dump());
  CHECK(back.phi == q.phi);
  CHECK(back.assoc == q.assoc);

  BlockMatrix x = named(q, "x21");
  CHECK(matrix_from_json(q.alg, matrix_to_json(x)) == x);

  json bad = matrix_to_json(x);
  bad["blocks"][0]["entries"][0][0] = json::array({json::array({"1", *q.alg->index_of("x32")})});
  CHECK_THROWS_AS(matrix_from_json(q.alg, bad), ParseError);

  json broken = j;
  broken.erase("associator");
  CHECK_THROWS_AS(quadruple_from_json(broken), ParseError);
}

TEST_CASE("object parsing") {
  CHECK(parse_obj("0,1,0,0", 4) == ObjVec{0, 1, 0, 0});
  CHECK(parse_obj("(0,1,0,2)", 4) == ObjVec{0, 1, 0, 2});
  CHECK(parse_obj("e3", 4) == ObjVec{0, 0, 1, 0});
  CHECK_THROWS_AS(parse_obj("1,2", 4), ParseError);
  CHECK_THROWS_AS(parse_obj("e9", 4), ParseError);
}
