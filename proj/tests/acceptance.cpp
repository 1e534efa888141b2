// Acceptance run: one PASS/FAIL line per criterion. All identities are exact;
// the only pinned tolerances are the wall-clock limits below.

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdq/errors.hpp"
#include "qdq/frt.hpp"
#include "support.hpp"

using namespace qdq;
using qdq::testing::Gen;
using qdq::testing::leibniz_det;
using qdq::testing::minor_of;
using qdq::testing::ncsquare_of;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

BDTriple cg_triple() { return BDTriple::parse(3, "1", "2", "1>2"); }

QMatrix cg_recorded_theta() {
  QMatrix th(3, 3);
  th(0, 1) = th(0, 2) = th(1, 0) = th(1, 2) = th(2, 1) = BigRational(1, 2);
  return th;
}

// beta = 1/2 (u (x) v - v (x) u), u = H1+H2+H3, v = H1-H3
QMatrix cg_beta() {
  BigRational u[3] = {1, 1, 1}, v[3] = {1, 0, -1};
  QMatrix b(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b(i, j) = BigRational(1, 2) * (u[i] * v[j] - v[i] * u[j]);
  return b;
}

std::string failing_child(const Report& r) {
  if (r.pass) return "";
  return r.check + (r.witness ? ": " + r.witness->detail : "");
}

// det_sigma(T) for every sigma, compared with an expected value
void all_sigmas_equal(Outcome& out, const FRTModel& m, const Matrix& expect) {
  for (const auto& sigma : SigmaOrder::all(m.twist.triple.n)) {
    DetSigma<Matrix> ds = detsigma_T(m, sigma);
    out.require(ds.value == expect, "det_sigma differs for sigma " + sigma.str());
  }
}

Outcome untwisted_main(std::size_t n) {
  Outcome out;
  Twist tw = untwisted(n);
  FRTModel m = build_T(tw, 1, 1);
  Matrix id = Matrix::identity(n * n);
  Report rep = main_theorem_report(tw, 1, 1, SigmaOrder::all(n));
  out.require(rep.pass, failing_child(rep));
  all_sigmas_equal(out, m, id);
  out.require(qdet_coaction(m) == id, "coaction value is not the identity");
  out.require(f_of_D_image(tw, 1, 1) == id, "f(D) image is not the identity");
  out.require(factors_commute(m).pass, "quasiminor factors do not commute");
  return out;
}

// c_i = (column sum - row sum) of Y + beta, computed directly from the grid
WeightVector column_minus_row(const QMatrix& a) {
  WeightVector c(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c[i] += a(j, i) - a(i, j);
  return c;
}

Outcome gl3_battery(const QMatrix& beta) {
  Outcome out;
  BDTriple t = cg_triple();
  out.require(validate_triple(t).pass, "triple rejected");

  ThetaSolution solved = solve_theta(t);
  out.require(theta_residuals(t, solved.theta).all_zero(), "solver residuals are nonzero");

  ThetaSolution th = theta_from_grid(t, cg_recorded_theta());
  out.require(theta_residuals(t, th.theta).all_zero(), "recorded Theta residuals are nonzero");
  out.require(cocycle_check(t, th, beta).pass, "cocycle fails");
  out.require(cocycle_check(t, solved, beta).pass, "cocycle fails for the solver's Theta");

  Twist tw = build_twist(t, th, beta);
  out.require(ybe_check(tw.r_j).pass, "YBE fails for R_J");
  out.require(hecke_check(r_hat(tw.r_j), tw.field).pass, "Hecke fails for R_J");
  try {
    out.require(wedge_top(r_hat(tw.r_j), 3, tw.field).cols() == 1, "wedge is not a line");
  } catch (const WrongWedgeDimension& e) {
    out.require(false, e.what());
  }

  WeightVector p = p_vector(tw);
  out.require(p == column_minus_row(tw.a_grid), "p_vector disagrees with the direct column/row sums");
  if (beta.is_zero()) out.require(p == WeightVector{BigRational(1, 2), 0, BigRational(-1, 2)}, "p != (1/2, 0, -1/2)");

  FRTModel m = build_T(tw, 1, 1);
  Matrix fd = f_of_D_image(tw, 1, 1);
  out.require(frt_check(m).pass, "FRT relation fails");
  out.require(factors_commute(m).pass, "quasiminor factors do not commute");
  all_sigmas_equal(out, m, fd);
  out.require(qdet_coaction(m) == fd, "coaction value differs from f(D) image");

  Report rep = main_theorem_report(tw, 1, 1, SigmaOrder::all(3));
  out.require(rep.pass, failing_child(rep));
  Report rep_solved = main_theorem_report(build_twist(t, solved, beta), 1, 1, SigmaOrder::all(3));
  out.require(rep_solved.pass, "solver Theta: " + failing_child(rep_solved));
  return out;
}

Outcome gl4() {
  Outcome out;
  BDTriple t = BDTriple::parse(4, "1", "3", "1>3");
  ThetaSolution th = solve_theta(t);
  out.require(theta_residuals(t, th.theta).all_zero(), "solver residuals are nonzero");
  Twist tw = build_twist(t, th, QMatrix(4, 4));
  Report rep = main_theorem_report(tw, 1, 1, SigmaOrder::all(4));
  out.require(rep.pass, failing_child(rep));
  out.require(rep.children.size() >= 10, "battery is incomplete");
  return out;
}

Outcome quasidet_properties() {
  Outcome out;
  Gen g(20241015);
  int matrices = 0;
  while (matrices < 120) {
    const std::size_t m = static_cast<std::size_t>(g.integer(1, 4));
    QMatrix a = g.qmatrix(m, m);
    BigRational det = leibniz_det(a);
    auto x = ncsquare_of(a);
    bool all_minors = true;
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = 1; j <= m; ++j) {
        BigRational minor = m == 1 ? BigRational(1) : leibniz_det(minor_of(a, i - 1, j - 1));
        if (is_zero(minor)) {
          all_minors = false;
          continue;
        }
        BigRational sign = (i + j) % 2 ? -1 : 1;
        out.require(quasideterminant(x, i, j) * RatFunc(minor) == RatFunc(sign * det),
                    "determinant ratio fails");
      }
    try {
      auto factors = quasiminor_factors(x);
      for (const auto& s : SigmaOrder::all(m))
        out.require(ordered_product(factors, s) == RatFunc(det), "det_sigma differs from det for " + s.str());
      NCSquare<RatFunc> z = identity_like(x), y = identity_like(x);
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
          if (i > j) z.at(i, j) = RatFunc(g.rational());
          if (i < j) y.at(i, j) = RatFunc(g.rational());
        }
      for (const auto& s : SigmaOrder::all(m))
        out.require(triangular_invariance_check(x, z, y, s), "unitriangular invariance fails");
    } catch (const SubmatrixSingular&) {
    }
    if (all_minors && !is_zero(det)) {
      auto inv = inverse_via_quasiminors(x);
      out.require(x * inv == identity_like(x) && inv * x == identity_like(x), "quasiminor inverse fails");
    }
    ++matrices;
  }
  return out;
}

// every valid disjoint order-preserving triple with n <= 5
std::vector<BDTriple> all_triples(std::size_t n) {
  std::vector<BDTriple> out;
  const std::size_t roots = n - 1;
  std::size_t combos = 1;
  for (std::size_t k = 0; k < roots; ++k) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::vector<std::size_t> g1, g2;
    std::size_t c = code;
    for (std::size_t r = 1; r <= roots; ++r, c /= 3) {
      if (c % 3 == 1) g1.push_back(r);
      if (c % 3 == 2) g2.push_back(r);
    }
    if (g1.size() != g2.size()) continue;
    std::vector<std::size_t> image = g2;
    do {
      BDTriple t;
      t.n = n;
      t.gamma1 = g1;
      t.gamma2 = g2;
      for (std::size_t k = 0; k < g1.size(); ++k) t.tau[g1[k]] = image[k];
      if (validate_triple(t).pass) out.push_back(t);
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return out;
}

Outcome solver_coverage(std::string& summary) {
  Outcome out;
  std::size_t count = 0, nontrivial = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& t : all_triples(n)) {
      ++count;
      nontrivial += !t.is_trivial();
      ThetaSolution th = solve_theta(t);
      out.require(theta_residuals(t, th.theta).all_zero(), "nonzero residuals for " + t.str());
      Report c = cocycle_check(t, th, QMatrix(n, n));
      out.require(c.pass, "cocycle fails for " + t.str());
    }
  summary = std::to_string(count) + " triples, " + std::to_string(nontrivial) + " nontrivial";
  // by hand: 1 + 1 + 3 + 7 + 19 triples for n = 1..5
  out.require(count == 31, "enumeration found " + std::to_string(count) + " triples, expected 31");
  return out;
}

Outcome negative_controls() {
  Outcome out;
  BDTriple t = cg_triple();
  QMatrix broken = cg_recorded_theta();
  broken(0, 0) += 1;
  out.require(!theta_residuals(t, broken).all_zero(), "corrupted Theta still satisfies the conditions");
  Report c = cocycle_check(t, theta_from_grid(t, broken), QMatrix(3, 3));
  out.require(!c.pass, "corrupted Theta passes the cocycle check");
  out.require(c.witness && c.witness->coords.size() == 2 && c.witness->lhs && c.witness->rhs &&
                  !(*c.witness->lhs == *c.witness->rhs),
              "cocycle failure has no mismatch witness");

  FRTModel m = build_T(untwisted(2), 1, 1);
  m.t(0, 0)(0, 0) += RatFunc(1);
  Report f = frt_check(m);
  out.require(!f.pass, "perturbed T passes the FRT check");
  out.require(f.witness && f.witness->coords.size() == 2 && f.witness->lhs && f.witness->rhs &&
                  !(*f.witness->lhs == *f.witness->rhs),
              "FRT failure has no mismatch witness");

  FRTModel cgm = build_T(build_twist(t, theta_from_grid(t, cg_recorded_theta()), QMatrix(3, 3)), 1, 1);
  cgm.t(1, 2)(4, 4) += RatFunc(1);
  out.require(!frt_check(cgm).pass, "perturbed twisted T passes the FRT check");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only;
  app.add_option("--only", only, "run a single criterion");
  CLI11_PARSE(app, argc, argv);

  std::string coverage_summary;
  const std::vector<Criterion> criteria = {
      {"untwisted_n2", 1.0, [] { return untwisted_main(2); }},
      {"untwisted_n3", 30.0, [] { return untwisted_main(3); }},
      {"cremmer_gervais_gl3", 120.0, [] { return gl3_battery(QMatrix(3, 3)); }},
      {"beta_extension_gl3", 120.0, [] { return gl3_battery(cg_beta()); }},
      {"gl4_g1_1_g2_3", 600.0, gl4},
      {"quasidet_properties", 60.0, quasidet_properties},
      {"solver_coverage_n_le_5", 600.0, [&] { return solver_coverage(coverage_summary); }},
      {"negative_controls", 60.0, negative_controls},
  };

  int failed = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && c.name != only) continue;
    ++ran;
    Stopwatch sw;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = sw.ms() / 1000.0;
    if (o.pass && secs > c.limit_s) {
      o.pass = false;
      o.detail = "time limit exceeded";
    }
    std::ostringstream line;
    line << (o.pass ? "PASS " : "FAIL ") << c.name << "  " << std::fixed << std::setprecision(2) << secs
         << "s / limit " << std::setprecision(0) << c.limit_s << "s  exact";
    if (c.name == "solver_coverage_n_le_5" && !coverage_summary.empty()) line << "  (" << coverage_summary << ")";
    if (!o.pass) line << "  -- " << o.detail;
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  if (ran == 0) {
    std::cerr << "unknown criterion: " << only << "\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
