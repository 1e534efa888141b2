#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdq/errors.hpp"
#include "qdq/frt.hpp"
#include "support.hpp"

using namespace qdq;

namespace {

Matrix diag(std::initializer_list<RatFunc> d) {
  Matrix m(d.size(), d.size());
  std::size_t k = 0;
  for (const auto& x : d) m(k, k) = x, ++k;
  return m;
}

BDTriple cg() { return BDTriple::parse(3, "1", "2", "1>2"); }

Twist cg_twist(bool with_beta) {
  QMatrix th(3, 3);
  th(0, 1) = th(0, 2) = th(1, 0) = th(1, 2) = th(2, 1) = BigRational(1, 2);
  QMatrix b(3, 3);
  if (with_beta) {
    BigRational u[3] = {1, 1, 1}, v[3] = {1, 0, -1};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b(i, j) = BigRational(1, 2) * (u[i] * v[j] - v[i] * u[j]);
  }
  return build_twist(cg(), theta_from_grid(cg(), th), b);
}

}  // namespace

TEST_CASE("T blocks for n=2") {
  Twist tw = untwisted(2);
  RatFunc q = RatFunc::q(tw.field);
  RatFunc gap = q - q.inverse();
  FRTModel m = build_T(tw, 1, 1);
  CHECK(m.t.inner_dim() == 4);
  CHECK(m.t(1, 0) == kron(diag({1, q}), -gap * unit_matrix(2, 1, 2)));
  CHECK(m.t(0, 0) ==
        kron(diag({q, 1}), diag({q.inverse(), 1})) - gap * gap * kron(unit_matrix(2, 2, 1), unit_matrix(2, 1, 2)));
  CHECK(m.t(0, 1) == kron(gap * unit_matrix(2, 2, 1), diag({1, q.inverse()})));
}

TEST_CASE("T specializes to the block identity at s = 1") {
  for (std::size_t n = 2; n <= 3; ++n) {
    FRTModel m = build_T(untwisted(n), 1, 1);
    CHECK(evaluate(m.t.flatten(), 1) == QMatrix::identity(n * n * n));
  }
  FRTModel m = build_T(cg_twist(true), 1, 1);
  CHECK(evaluate(m.t.flatten(), 1) == QMatrix::identity(27));
}

TEST_CASE("block form agrees with the leg-product form") {
  for (auto [k1, k2] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    for (std::size_t n = 2; n <= 3; ++n) {
      Twist tw = untwisted(n);
      CHECK(build_T(tw, k1, k2).t.flatten() == t_via_legs(tw, k1, k2));
    }
  }
  Twist tw = cg_twist(false);
  CHECK(build_T(tw, 1, 1).t.flatten() == t_via_legs(tw, 1, 1));
  CHECK_THROWS_AS(build_T(tw, 0, 1), InvalidArgument);
}

TEST_CASE("FRT relation") {
  CHECK(frt_check(build_T(untwisted(2), 1, 1)).pass);
  CHECK(frt_check(build_T(untwisted(2), 2, 1)).pass);
  CHECK(frt_check(build_T(cg_twist(false), 1, 1)).pass);

  Twist tw = untwisted(2);
  FRTModel m = build_T(tw, 1, 1);
  m.t(0, 0)(0, 0) += RatFunc(1);
  Report rep = frt_check(m);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness);
  CHECK(rep.witness->coords.size() == 2);
  CHECK_FALSE(*rep.witness->lhs == *rep.witness->rhs);

  // a few single-entry shifts happen to stay inside the solution set; most do not
  int broken = 0;
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t e = 0; e < 16; ++e) {
      FRTModel p = build_T(tw, 1, 1);
      p.t(b / 2, b % 2)(e / 4, e % 4) += RatFunc(1);
      broken += !frt_check(p).pass;
    }
  CHECK(broken >= 48);
}

TEST_CASE("quantum determinant from the coaction") {
  Twist tw = untwisted(2);
  RatFunc q = RatFunc::q(tw.field);
  FRTModel m = build_T(tw, 1, 1);
  Matrix d = qdet_coaction(m);
  CHECK(d == m.t(0, 0) * m.t(1, 1) - q.inverse() * m.t(0, 1) * m.t(1, 0));
  CHECK(d == Matrix::identity(4));
  CHECK(qdet_coaction(build_T(untwisted(3), 1, 1)) == Matrix::identity(9));

  Twist c = cg_twist(false);
  RatFunc s = RatFunc::s(c.field);
  Matrix expect = kron(diag({s.pow(3), s.pow(2), s}), diag({s.pow(-1), s.pow(-2), s.pow(-3)}));
  CHECK(qdet_coaction(build_T(c, 1, 1)) == expect);
  CHECK(f_of_D_image(c, 1, 1) == expect);
}

TEST_CASE("coaction value does not depend on the wedge normalization") {
  Twist tw = cg_twist(true);
  FRTModel m = build_T(tw, 1, 1);
  Matrix w = wedge_top(r_hat(tw.r_j), 3, tw.field);
  RatFunc scale = RatFunc::q(tw.field) * RatFunc(-7) + RatFunc(2);
  CHECK(qdet_coaction(m.t, w * scale, 3) == qdet_coaction(m.t, w, 3));

  Matrix wrong(27, 1);
  wrong(1, 0) = 1;
  CHECK_THROWS_AS(qdet_coaction(m.t, wrong, 3), CoactionNotProportional);
  CHECK_THROWS_AS(qdet_coaction(m.t, Matrix(27, 1), 3), WrongWedgeDimension);
}

TEST_CASE("image of P e^{hH} (x) P e^{-hH}") {
  Twist tw = untwisted(2);
  RatFunc q = RatFunc::q(tw.field);
  CHECK(f_of_D_image(tw, 1, 1) == Matrix::identity(4));
  CHECK(f_of_D_image(tw, 2, 1) == q * Matrix::identity(8));
}

TEST_CASE("det_sigma of T for n=2") {
  FRTModel m = build_T(untwisted(2), 1, 1);
  for (const auto& sigma : SigmaOrder::all(2)) {
    DetSigma<Matrix> ds = detsigma_T(m, sigma);
    REQUIRE(ds.factors.size() == 2);
    CHECK(ds.factors[0] == m.t(1, 1) - m.t(1, 0) * gauss_invert(m.t(0, 0)) * m.t(0, 1));
    CHECK(ds.factors[1] == m.t(0, 0));
    CHECK(ds.value == Matrix::identity(4));
  }
  CHECK(factors_commute(m).pass);
}

TEST_CASE("unitriangular invariance with operator entries") {
  FRTModel m = build_T(untwisted(2), 1, 1);
  NCSquare<Matrix> x = to_ncsquare(m.t);
  qdq::testing::Gen g(19);
  for (int trial = 0; trial < 3; ++trial) {
    NCSquare<Matrix> z = identity_like(x), y = identity_like(x);
    z.at(2, 1) = Matrix::identity(4) * RatFunc(g.rational());
    y.at(1, 2) = Matrix::identity(4) * RatFunc(g.rational());
    for (const auto& sigma : SigmaOrder::all(2)) CHECK(triangular_invariance_check(x, z, y, sigma));
  }
}

TEST_CASE("full battery") {
  Report r2 = main_theorem_report(untwisted(2), 1, 1, SigmaOrder::all(2));
  CHECK(r2.pass);
  CHECK(r2.children.size() >= 7);
  CHECK(main_theorem_report(untwisted(3), 1, 1, SigmaOrder::all(3)).pass);
  CHECK(main_theorem_report(cg_twist(false), 1, 1, SigmaOrder::all(3)).pass);
  CHECK(main_theorem_report(cg_twist(true), 1, 1, SigmaOrder::all(3)).pass);

  QMatrix bad(3, 3);
  bad(0, 1) = bad(0, 2) = bad(1, 0) = bad(1, 2) = bad(2, 1) = BigRational(1, 2);
  bad(0, 0) = 1;
  Twist broken = build_twist(cg(), theta_from_grid(cg(), bad), QMatrix(3, 3));
  Report rep = main_theorem_report(broken, 1, 1, SigmaOrder::all(3));
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness);
  CHECK_FALSE(rep.witness->detail.empty());
}
