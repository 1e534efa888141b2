#include "qdq/twist.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <string>

#include "qdq/errors.hpp"

namespace qdq {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::size_t parse_index(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidArgument("expected a positive integer, got '" + s + "'");
  return std::stoul(s);
}

std::vector<std::size_t> parse_list(std::string_view s) {
  std::vector<std::size_t> out;
  if (trim(s).empty()) return out;
  for (const auto& item : split(s, ',')) out.push_back(parse_index(item));
  std::sort(out.begin(), out.end());
  return out;
}

// simple root alpha_i = H_i - H_{i+1} as a coefficient row
QMatrix simple_root(std::size_t n, std::size_t i) {
  QMatrix r(1, n);
  r(0, i - 1) = 1;
  r(0, i) = -1;
  return r;
}

QMatrix stack_rows(const std::vector<QMatrix>& rows, std::size_t n) {
  QMatrix out(rows.size(), n);
  for (std::size_t k = 0; k < rows.size(); ++k) out.set_block(k, 0, rows[k]);
  return out;
}

QMatrix kernel_rows(const QMatrix& a) {
  auto ker = kernel_basis(a);
  QMatrix out(ker.size(), a.cols());
  for (std::size_t k = 0; k < ker.size(); ++k) out.set_block(k, 0, ker[k].transpose());
  return row_space_basis(out);
}

// rows alpha_i, i in gamma1 (not echelon-reduced)
QMatrix gamma1_roots(const BDTriple& t) {
  std::vector<QMatrix> rows;
  for (auto i : t.gamma1) rows.push_back(simple_root(t.n, i));
  return stack_rows(rows, t.n);
}

QMatrix tau_applied_rows(const QMatrix& tau_mat, const QMatrix& rows) {
  return (tau_mat * rows.transpose()).transpose();
}

Witness index_witness(std::vector<std::size_t> coords, std::string detail) {
  return Witness{std::move(coords), std::nullopt, std::nullopt, std::move(detail)};
}

BigInt grid_denominator(const QMatrix& g, BigInt acc) {
  for (const auto& x : g.data()) acc = lcm(acc, x.get_den());
  return acc;
}

}  // namespace

BDTriple BDTriple::trivial(std::size_t n) {
  BDTriple t;
  t.n = n;
  return t;
}

BDTriple BDTriple::parse(std::size_t n, std::string_view g1, std::string_view g2, std::string_view tau) {
  BDTriple t;
  t.n = n;
  t.gamma1 = parse_list(g1);
  t.gamma2 = parse_list(g2);
  if (!trim(tau).empty()) {
    for (const auto& pair : split(tau, ',')) {
      auto parts = split(pair, '>');
      if (parts.size() != 2) throw InvalidArgument("tau entries look like 'a>b', got '" + pair + "'");
      std::size_t a = parse_index(parts[0]), b = parse_index(parts[1]);
      if (!t.tau.emplace(a, b).second) throw InvalidArgument("tau assigns root " + parts[0] + " twice");
    }
  }
  return t;
}

std::vector<std::vector<std::size_t>> BDTriple::blocks() const {
  std::vector<std::vector<std::size_t>> out;
  for (auto r : gamma1) {
    if (out.empty() || out.back().back() + 1 != r) out.emplace_back();
    out.back().push_back(r);
  }
  return out;
}

std::string BDTriple::str() const {
  std::ostringstream os;
  os << "n=" << n << " g1={";
  for (std::size_t k = 0; k < gamma1.size(); ++k) os << (k ? "," : "") << gamma1[k];
  os << "} g2={";
  for (std::size_t k = 0; k < gamma2.size(); ++k) os << (k ? "," : "") << gamma2[k];
  os << "} tau={";
  bool first = true;
  for (auto [a, b] : tau) {
    os << (first ? "" : ",") << a << ">" << b;
    first = false;
  }
  os << "}";
  return os.str();
}

Report validate_triple(const BDTriple& t) {
  Report rep;
  rep.check = "triple";
  rep.params = {{"triple", t.str()}};
  auto fail = [&](const char* clause, Witness w) {
    rep.info["clause"] = clause;
    rep.fail(std::move(w));
    return rep;
  };
  if (t.n < 1) return fail("Range", index_witness({}, "n must be positive"));
  for (const auto* g : {&t.gamma1, &t.gamma2}) {
    for (std::size_t k = 0; k < g->size(); ++k) {
      std::size_t r = (*g)[k];
      if (r < 1 || r + 1 > t.n) return fail("Range", index_witness({r}, "root outside 1..n-1"));
      if (k > 0 && (*g)[k - 1] == r) return fail("Duplicate", index_witness({r}, "root listed twice"));
    }
  }
  std::set<std::size_t> g1(t.gamma1.begin(), t.gamma1.end()), g2(t.gamma2.begin(), t.gamma2.end());
  std::set<std::size_t> domain, image;
  for (auto [a, b] : t.tau) {
    domain.insert(a);
    if (!image.insert(b).second) return fail("NotBijection", index_witness({a, b}, "tau is not injective"));
  }
  if (domain != g1) return fail("NotBijection", index_witness({}, "domain of tau differs from gamma1"));
  if (image != g2) return fail("NotBijection", index_witness({}, "image of tau differs from gamma2"));
  for (auto r : g1)
    if (g2.count(r)) return fail("NotDisjoint", index_witness({r}, "root in both gamma1 and gamma2"));
  auto adjacent = [](std::size_t a, std::size_t b) { return a + 1 == b || b + 1 == a; };
  for (auto a : g1)
    for (auto b : g1)
      if (adjacent(a, b) != adjacent(t.tau.at(a), t.tau.at(b)))
        return fail("Adjacency", index_witness({a, b}, "adjacency not preserved by tau"));
  for (const auto& block : t.blocks())
    for (std::size_t k = 0; k + 1 < block.size(); ++k)
      if (t.tau.at(block[k + 1]) != t.tau.at(block[k]) + 1)
        return fail("OrderReversing", index_witness({block[k], block[k + 1]}, "tau reverses a block"));
  rep.succeed();
  return rep;
}

CartanData cartan_data(const BDTriple& t) {
  require_valid(t);
  const std::size_t n = t.n;
  CartanData cd;
  QMatrix roots1 = gamma1_roots(t);
  std::vector<QMatrix> r2;
  for (auto i : t.gamma2) r2.push_back(simple_root(n, i));
  QMatrix roots2 = stack_rows(r2, n);

  cd.h1_basis = row_space_basis(roots1);
  cd.h2_basis = row_space_basis(roots2);
  cd.h1_perp_basis = kernel_rows(roots1);
  cd.h2_perp_basis = kernel_rows(roots2);

  // tau on the basis {alpha_i : i in gamma1} u h1^perp; columns are basis vectors
  QMatrix basis(n, n), images(n, n);
  std::size_t col = 0;
  for (auto i : t.gamma1) {
    basis.set_block(0, col, simple_root(n, i).transpose());
    images.set_block(0, col, simple_root(n, t.tau.at(i)).transpose());
    ++col;
  }
  for (std::size_t k = 0; k < cd.h1_perp_basis.rows(); ++k, ++col)
    basis.set_block(0, col, cd.h1_perp_basis.block(k, 0, 1, n).transpose());
  cd.tau_mat = images * gauss_invert(basis);

  if (t.gamma1.empty()) {
    cd.z = QMatrix(n, n);
    cd.h0_basis = QMatrix::identity(n);
    return cd;
  }
  // Z = sum_{kl} (G^{-1})_{kl} tau(b_k) (x) b_l for any basis b of h1, G its Gram matrix
  QMatrix gram_inv = gauss_invert(roots1 * roots1.transpose());
  cd.z = (cd.tau_mat * roots1.transpose()) * gram_inv * roots1;
  cd.h0_basis = kernel_rows(roots1 - tau_applied_rows(cd.tau_mat, roots1));
  return cd;
}

ThetaResiduals theta_residuals(const BDTriple& t, const QMatrix& theta) {
  CartanData cd = cartan_data(t);
  QMatrix y = cd.z - theta;
  QMatrix x = gamma1_roots(t);
  QMatrix tx = tau_applied_rows(cd.tau_mat, x);
  ThetaResiduals res;
  res.first_slot = x * y;
  res.second_slot = (y * tx.transpose()).transpose();
  res.mixed = tx * theta + (theta * x.transpose()).transpose();
  return res;
}

ThetaSolution theta_from_grid(const BDTriple& t, QMatrix theta) {
  if (theta.rows() != t.n || theta.cols() != t.n) throw DimensionMismatch("Theta must be n x n");
  CartanData cd = cartan_data(t);
  ThetaSolution th;
  th.y = cd.z - theta;
  th.theta = std::move(theta);
  return th;
}

ThetaSolution solve_theta(const BDTriple& t) {
  const std::size_t n = t.n;
  CartanData cd = cartan_data(t);
  QMatrix x = gamma1_roots(t);
  QMatrix tx = tau_applied_rows(cd.tau_mat, x);
  const std::size_t r = x.rows();
  const std::size_t unknowns = n * n;
  // 3 n r equations in theta_{ij} (column i*n+j) with right-hand side last
  QMatrix sys(3 * n * r, unknowns + 1);
  std::size_t eq = 0;
  QMatrix xz = x * cd.z;
  QMatrix ztx = cd.z * tx.transpose();
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j < n; ++j, ++eq) {  // (x (x) 1, Z - Theta) = 0
      for (std::size_t i = 0; i < n; ++i) sys(eq, i * n + j) = x(k, i);
      sys(eq, unknowns) = xz(k, j);
    }
    for (std::size_t i = 0; i < n; ++i, ++eq) {  // (1 (x) tau x, Z - Theta) = 0
      for (std::size_t j = 0; j < n; ++j) sys(eq, i * n + j) = tx(k, j);
      sys(eq, unknowns) = ztx(i, k);
    }
    for (std::size_t c = 0; c < n; ++c, ++eq) {  // (tau x (x) 1 + 1 (x) x, Theta) = 0
      for (std::size_t i = 0; i < n; ++i) sys(eq, i * n + c) += tx(k, i);
      for (std::size_t j = 0; j < n; ++j) sys(eq, c * n + j) += x(k, j);
    }
  }
  Echelon<BigRational> e = rref(sys);
  if (!e.pivots.empty() && e.pivots.back() == unknowns)
    throw NoSolution("Theta conditions are inconsistent for " + t.str() + " (implementation fault)");
  QMatrix theta(n, n);
  for (std::size_t row = 0; row < e.pivots.size(); ++row) {
    std::size_t p = e.pivots[row];
    theta(p / n, p % n) = e.reduced(row, unknowns);
  }
  ThetaSolution th;
  th.y = cd.z - theta;
  th.theta = std::move(theta);
  return th;
}

Matrix jprime_vv(const BDTriple& t, ScalarField field) {
  require_valid(t);
  const std::size_t n = t.n;
  Matrix jp = Matrix::identity(n * n);
  if (t.gamma1.empty()) return jp;
  const RatFunc q = RatFunc::q(field);
  const RatFunc gap = q - q.inverse();
  for (const auto& block : t.blocks()) {
    const std::size_t lo = block.front(), hi = block.back() + 1;  // vertex interval
    const std::size_t shift_to = t.tau.at(lo);
    auto hat = [&](std::size_t v) { return shift_to + (v - lo); };
    for (std::size_t a = lo; a <= hi; ++a)
      for (std::size_t b = a + 1; b <= hi; ++b) {
        // E_{hat a, hat b} (x) E_{b, a}
        const std::size_t row = (hat(a) - 1) * n + (b - 1);
        const std::size_t col = (hat(b) - 1) * n + (a - 1);
        jp(row, col) += gap;
      }
  }
  return jp;
}

void check_beta(const BDTriple& t, const QMatrix& beta) {
  if (beta.rows() != t.n || beta.cols() != t.n) throw BetaNotInH0("beta must be n x n");
  if (!(beta == -beta.transpose())) throw BetaNotInH0("beta is not antisymmetric");
  if (t.gamma1.empty()) return;
  CartanData cd = cartan_data(t);
  QMatrix roots = gamma1_roots(t);
  QMatrix w = roots - tau_applied_rows(cd.tau_mat, roots);  // spans the complement of h0
  if (!(w * beta).is_zero() || !(beta * w.transpose()).is_zero())
    throw BetaNotInH0("beta is not supported on h0 (x) h0");
}

ScalarField twist_field(const BDTriple& t, const ThetaSolution& th, const QMatrix& beta) {
  CartanData cd = cartan_data(t);
  BigInt m = 1;
  m = grid_denominator(cd.z, m);
  m = grid_denominator(th.theta, m);
  m = grid_denominator(cd.z - th.theta, m);
  m = grid_denominator(beta, m);
  if (!m.fits_uint_p() || m > std::numeric_limits<std::uint32_t>::max())
    throw NonRepresentableExponent("root order too large");
  return ScalarField(static_cast<std::uint32_t>(m.get_ui()));
}

void require_valid(const BDTriple& t) {
  Report valid = validate_triple(t);
  if (valid.pass) return;
  std::string detail = valid.witness ? valid.witness->detail : "";
  if (valid.info.value("clause", "") == "OrderReversing") throw OrderReversing(detail + ": " + t.str());
  throw InvalidTriple(valid.info.value("clause", "") + ": " + detail + " in " + t.str());
}

Twist build_twist(const BDTriple& t, const ThetaSolution& th, const QMatrix& beta) {
  require_valid(t);
  check_beta(t, beta);
  if (th.theta.rows() != t.n || th.theta.cols() != t.n) throw DimensionMismatch("Theta must be n x n");

  Twist tw;
  tw.triple = t;
  tw.theta = theta_from_grid(t, th.theta);
  tw.beta = beta;
  tw.a_grid = tw.theta.y + beta;
  tw.field = twist_field(t, tw.theta, beta);
  tw.jprime_vv = jprime_vv(t, tw.field);
  tw.j_vv = cartan_exp(tw.theta.y, tw.field) * tw.jprime_vv * cartan_exp(beta, tw.field);

  RMatrix r = standard_r(t.n, tw.field);
  Matrix flip = flip_perm(t.n);
  Matrix j21_inv = flip * gauss_invert(tw.j_vv) * flip;
  tw.r_j = RMatrix{t.n, j21_inv * r.mat * tw.j_vv, tw.field};
  return tw;
}

Twist untwisted(std::size_t n) {
  BDTriple t = BDTriple::trivial(n);
  return build_twist(t, ThetaSolution{QMatrix(n, n), QMatrix(n, n)}, QMatrix(n, n));
}

Report cocycle_check(const BDTriple& t, const ThetaSolution& th, const QMatrix& beta) {
  Stopwatch sw;
  const std::size_t n = t.n;
  ScalarField field = twist_field(t, th, beta);
  CartanData cd = cartan_data(t);
  QMatrix y = cd.z - th.theta;

  Matrix jp = jprime_vv(t, field);
  Matrix r_tilde = cartan_exp(cd.z, field) * jp;  // image of (f_tau (x) 1)(R)
  Matrix j = cartan_exp(y, field) * jp * cartan_exp(beta, field);
  Matrix e_theta = cartan_exp(-th.theta, field);
  Matrix e_beta = cartan_exp(beta, field);

  auto on = [&](const Matrix& op, std::size_t a, std::size_t b) { return leg_embed(op, {a, b}, n, 3); };
  // (Delta (x) 1)(J) = e^{-h(Theta_13 + Theta_23)} R~_13 R~_23 e^{h(beta_13 + beta_23)}
  Matrix delta1 = on(e_theta, 1, 3) * on(e_theta, 2, 3) * on(r_tilde, 1, 3) * on(r_tilde, 2, 3) *
                  on(e_beta, 1, 3) * on(e_beta, 2, 3);
  // (1 (x) Delta)(J) = e^{-h(Theta_13 + Theta_12)} R~_13 R~_12 e^{h(beta_13 + beta_12)}
  Matrix delta2 = on(e_theta, 1, 3) * on(e_theta, 1, 2) * on(r_tilde, 1, 3) * on(r_tilde, 1, 2) *
                  on(e_beta, 1, 3) * on(e_beta, 1, 2);
  Report rep = compare_matrices("cocycle", delta1 * on(j, 1, 2), delta2 * on(j, 2, 3));
  rep.params = {{"triple", t.str()}, {"root_order", field.root_order}, {"beta_zero", beta.is_zero()}};
  rep.ms = sw.ms();
  return rep;
}

WeightVector p_vector(const Twist& tw) {
  const std::size_t n = tw.triple.n;
  WeightVector c(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += tw.a_grid(j, i) - tw.a_grid(i, j);
  return c;
}

}  // namespace qdq
