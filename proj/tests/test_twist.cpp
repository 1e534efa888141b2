#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdq/errors.hpp"
#include "qdq/twist.hpp"
#include "support.hpp"

using namespace qdq;

namespace {

BigRational half(long k) { return BigRational(k, 2); }

BDTriple cg() { return BDTriple::parse(3, "1", "2", "1>2"); }

QMatrix recorded_theta() {
  QMatrix th(3, 3);
  th(0, 1) = th(0, 2) = th(1, 0) = th(1, 2) = th(2, 1) = half(1);
  return th;
}

QMatrix cg_beta() {
  BigRational u[3] = {1, 1, 1}, v[3] = {1, 0, -1};
  QMatrix b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = half(1) * (u[i] * v[j] - v[i] * u[j]);
  return b;
}

QMatrix grid(std::initializer_list<std::initializer_list<BigRational>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::string clause(const BDTriple& t) { return validate_triple(t).info.value("clause", ""); }

}  // namespace

TEST_CASE("triple parsing") {
  BDTriple t = BDTriple::parse(5, "1,2", "3,4", "1>3,2>4");
  CHECK(t.gamma1 == std::vector<std::size_t>{1, 2});
  CHECK(t.gamma2 == std::vector<std::size_t>{3, 4});
  CHECK(t.tau.at(2) == 4);
  CHECK(t.blocks() == std::vector<std::vector<std::size_t>>{{1, 2}});
  CHECK(BDTriple::parse(3, "", "", "").is_trivial());
  CHECK_THROWS_AS(BDTriple::parse(3, "a", "2", "1>2"), InvalidArgument);
  CHECK_THROWS_AS(BDTriple::parse(3, "1", "2", "1-2"), InvalidArgument);
  CHECK_THROWS_AS(BDTriple::parse(3, "1", "2", "1>2,1>2"), InvalidArgument);
}

TEST_CASE("triple validation") {
  CHECK(validate_triple(cg()).pass);
  CHECK(validate_triple(BDTriple::trivial(4)).pass);
  CHECK(clause(BDTriple::parse(3, "1", "1", "1>1")) == "NotDisjoint");
  Report rev = validate_triple(BDTriple::parse(5, "1,2", "3,4", "1>4,2>3"));
  CHECK_FALSE(rev.pass);
  CHECK(rev.info["clause"] == "OrderReversing");
  CHECK(clause(BDTriple::parse(3, "1", "3", "1>3")) == "Range");
  CHECK(clause(BDTriple::parse(4, "1", "2", "")) == "NotBijection");
  CHECK(clause(BDTriple::parse(6, "1,2", "3,5", "1>3,2>5")) == "Adjacency");

  CHECK_THROWS_AS(build_twist(BDTriple::parse(5, "1,2", "3,4", "1>4,2>3"), ThetaSolution{QMatrix(5, 5), QMatrix(5, 5)},
                              QMatrix(5, 5)),
                  OrderReversing);
  CHECK_THROWS_AS(solve_theta(BDTriple::parse(3, "1", "1", "1>1")), InvalidTriple);
}

TEST_CASE("Cartan data for the gl3 example") {
  CartanData cd = cartan_data(cg());
  QMatrix z(3, 3);
  z(1, 0) = half(1);
  z(1, 1) = half(-1);
  z(2, 0) = half(-1);
  z(2, 1) = half(1);
  CHECK(cd.z == z);
  CHECK(cd.h1_basis == grid({{1, -1, 0}}));
  CHECK(cd.h2_basis == grid({{0, 1, -1}}));
  CHECK(cd.h0_basis == row_space_basis(grid({{1, 1, 1}, {1, 0, -1}})));
}

TEST_CASE("empty triple") {
  BDTriple t = BDTriple::trivial(3);
  CartanData cd = cartan_data(t);
  CHECK(cd.z.is_zero());
  CHECK(cd.h0_basis == QMatrix::identity(3));
  CHECK(solve_theta(t).theta.is_zero());

  Twist tw = build_twist(t, solve_theta(t), QMatrix(3, 3));
  CHECK(tw.j_vv == Matrix::identity(9));
  CHECK(tw.r_j.mat == standard_r(3, tw.field).mat);
  CHECK(tw.field.root_order == 1);
  CHECK(untwisted(3).r_j.mat == standard_r(3, ScalarField{1}).mat);
}

TEST_CASE("recorded Theta for gl3") {
  BDTriple t = cg();
  ThetaSolution th = theta_from_grid(t, recorded_theta());
  CHECK(theta_residuals(t, th.theta).all_zero());
  QMatrix y = grid({{0, half(-1), half(-1)}, {0, half(-1), half(-1)}, {half(-1), 0, 0}});
  CHECK(th.y == y);

  ThetaSolution solved = solve_theta(t);
  CHECK(theta_residuals(t, solved.theta).all_zero());
  CHECK(solved.y == cartan_data(t).z - solved.theta);

  QMatrix broken = recorded_theta();
  broken(0, 0) += 1;
  CHECK_FALSE(theta_residuals(t, broken).all_zero());
}

TEST_CASE("twist for gl3") {
  BDTriple t = cg();
  Twist tw = build_twist(t, theta_from_grid(t, recorded_theta()), QMatrix(3, 3));
  CHECK(tw.field.root_order == 2);
  RatFunc q = RatFunc::q(tw.field);
  Matrix jp = Matrix::identity(9) + (q - q.inverse()) * kron(unit_matrix(3, 2, 3), unit_matrix(3, 2, 1));
  CHECK(tw.jprime_vv == jp);
  CHECK(evaluate(tw.j_vv, 1) == QMatrix::identity(9));
  CHECK(evaluate(tw.r_j.mat, 1) == QMatrix::identity(9));
  CHECK(ybe_check(tw.r_j).pass);
  CHECK(hecke_check(r_hat(tw.r_j), tw.field).pass);
  CHECK(wedge_top(r_hat(tw.r_j), 3, tw.field).cols() == 1);
}

TEST_CASE("J' - Id is supported on first leg decreasing, second leg increasing") {
  const char* triples[][4] = {{"3", "1", "2", "1>2"},
                              {"4", "1", "3", "1>3"},
                              {"4", "1,2", "2,3", ""},
                              {"5", "1,2", "3,4", "1>3,2>4"},
                              {"5", "1,3", "2,4", "1>4,3>2"},
                              {"5", "2", "4", "2>4"}};
  for (const auto& row : triples) {
    BDTriple t = BDTriple::parse(std::stoul(row[0]), row[1], row[2], row[3]);
    if (!validate_triple(t).pass) continue;
    ScalarField f{1};
    Matrix d = jprime_vv(t, f) - Matrix::identity(t.n * t.n);
    CHECK_FALSE(d.is_zero());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (d(r, c).is_zero()) continue;
        CHECK(r / t.n < c / t.n);
        CHECK(r % t.n > c % t.n);
      }
  }
}

TEST_CASE("beta validation") {
  BDTriple t = cg();
  CHECK_NOTHROW(check_beta(t, cg_beta()));
  QMatrix nonanti(3, 3);
  nonanti(0, 1) = 1;
  CHECK_THROWS_AS(check_beta(t, nonanti), BetaNotInH0);
  QMatrix outside(3, 3);  // H1 ^ H2 is not in h0 ^ h0
  outside(0, 1) = 1;
  outside(1, 0) = -1;
  CHECK_THROWS_AS(check_beta(t, outside), BetaNotInH0);
}

TEST_CASE("cocycle condition") {
  BDTriple t = cg();
  CHECK(cocycle_check(BDTriple::trivial(3), solve_theta(BDTriple::trivial(3)), QMatrix(3, 3)).pass);
  CHECK(cocycle_check(t, theta_from_grid(t, recorded_theta()), QMatrix(3, 3)).pass);
  CHECK(cocycle_check(t, theta_from_grid(t, recorded_theta()), cg_beta()).pass);
  CHECK(cocycle_check(t, solve_theta(t), QMatrix(3, 3)).pass);

  QMatrix broken = recorded_theta();
  broken(0, 0) += 1;
  Report rep = cocycle_check(t, theta_from_grid(t, broken), QMatrix(3, 3));
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.witness);
  CHECK(rep.witness->coords.size() == 2);
  REQUIRE(rep.witness->lhs);
  REQUIRE(rep.witness->rhs);
  CHECK_FALSE(*rep.witness->lhs == *rep.witness->rhs);

  BDTriple t4 = BDTriple::parse(4, "1", "3", "1>3");
  CHECK(cocycle_check(t4, solve_theta(t4), QMatrix(4, 4)).pass);
}

TEST_CASE("P exponent vector") {
  CHECK(p_vector(untwisted(3)) == WeightVector{0, 0, 0});
  BDTriple t = cg();
  ThetaSolution th = theta_from_grid(t, recorded_theta());
  CHECK(p_vector(build_twist(t, th, QMatrix(3, 3))) == WeightVector{half(1), 0, half(-1)});

  WeightVector p0 = p_vector(build_twist(t, th, QMatrix(3, 3)));
  WeightVector pp = p_vector(build_twist(t, th, cg_beta()));
  QMatrix minus = QMatrix(3, 3) - cg_beta();
  WeightVector pm = p_vector(build_twist(t, th, minus));
  for (std::size_t i = 0; i < 3; ++i) CHECK(pp[i] - p0[i] == -(pm[i] - p0[i]));
  CHECK_FALSE(pp == p0);
}
