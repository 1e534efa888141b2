#include "qdq/rmatrix.hpp"

#include "qdq/errors.hpp"

namespace qdq {

namespace {

Matrix r21_inverse(const RMatrix& r) {
  Matrix p = flip_perm(r.n);
  return p * gauss_invert(r.mat) * p;
}

// R_{0,k} ... R_{0,1} on k+1 legs; leg 1 is the matrix leg.
BlockMatrix hexagon_product(const Matrix& r, std::size_t n, std::size_t k) {
  if (k < 1) throw InvalidArgument("tensor power must be at least 1");
  const std::size_t legs = k + 1;
  Matrix acc = leg_embed(r, {1, legs}, n, legs);
  for (std::size_t w = legs - 1; w >= 2; --w) acc = acc * leg_embed(r, {1, w}, n, legs);
  return BlockMatrix::from_flat(acc, TensorIndexing{n, k}.dim());
}

}  // namespace

RMatrix standard_r(std::size_t n, ScalarField field) {
  if (n < 1) throw InvalidArgument("n must be positive");
  const RatFunc q = RatFunc::q(field);
  const RatFunc gap = q - q.inverse();
  Matrix m(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      m(a * n + b, a * n + b) = a == b ? q : RatFunc(1);
      // E_ab (x) E_ba sends v_b (x) v_a to v_a (x) v_b
      if (a < b) m(a * n + b, b * n + a) = gap;
    }
  return RMatrix{n, std::move(m), field};
}

Matrix r_hat(const RMatrix& r) { return flip_perm(r.n) * r.mat; }

Report ybe_check(const RMatrix& r) {
  Stopwatch sw;
  const std::size_t n = r.n;
  Matrix r12 = leg_embed(r.mat, {1, 2}, n, 3);
  Matrix r13 = leg_embed(r.mat, {1, 3}, n, 3);
  Matrix r23 = leg_embed(r.mat, {2, 3}, n, 3);
  Report rep = compare_matrices("ybe", r12 * r13 * r23, r23 * r13 * r12);
  rep.params = {{"n", n}, {"root_order", r.field.root_order}};
  rep.ms = sw.ms();
  return rep;
}

Report hecke_check(const Matrix& rhat, ScalarField field) {
  Stopwatch sw;
  if (!rhat.is_square()) throw DimensionMismatch("hecke_check needs a square matrix");
  const std::size_t d = rhat.rows();
  const RatFunc q = RatFunc::q(field);
  Matrix id = Matrix::identity(d);
  Matrix minus_q = rhat - q * id;
  Matrix plus_qinv = rhat + q.inverse() * id;
  Report rep = compare_matrices("hecke", minus_q * plus_qinv, Matrix(d, d));
  rep.params = {{"dim", d}, {"root_order", field.root_order}};
  rep.info["eigenspace_dims"] = {d - rank(minus_q), d - rank(plus_qinv)};
  rep.ms = sw.ms();
  return rep;
}

Matrix wedge_top(const Matrix& rhat, std::size_t n, ScalarField field) {
  if (rhat.rows() != n * n || rhat.cols() != n * n) throw DimensionMismatch("R^ does not act on V (x) V");
  const std::size_t dim = TensorIndexing{n, n}.dim();
  if (n == 1) return Matrix::identity(1);
  const RatFunc qinv = RatFunc::q(field).inverse();
  const Matrix shifted = rhat + qinv * Matrix::identity(n * n);

  // span is kept as the columns of `basis`
  Matrix basis;
  for (std::size_t i = 1; i < n; ++i) {
    Matrix a = leg_embed(shifted, {i, i + 1}, n, n);
    Matrix restricted = i == 1 ? a : a * basis;
    auto ker = kernel_basis(restricted);
    Matrix k(restricted.cols(), ker.size());
    for (std::size_t c = 0; c < ker.size(); ++c) k.set_block(0, c, ker[c]);
    basis = i == 1 ? k : basis * k;
    if (basis.cols() == 0) break;
  }
  if (basis.cols() != 1) throw WrongWedgeDimension(basis.cols());
  Matrix w = basis;
  std::size_t first = 0;
  while (first < dim && w(first, 0).is_zero()) ++first;
  w *= w(first, 0).inverse();
  return w;
}

BlockMatrix l_plus(const RMatrix& r, std::size_t k) { return hexagon_product(r.mat, r.n, k); }

BlockMatrix l_minus(const RMatrix& r, std::size_t k) { return hexagon_product(r21_inverse(r), r.n, k); }

Matrix cartan_exp(const QMatrix& a, ScalarField field) {
  if (!a.is_square()) throw DimensionMismatch("Cartan grid must be square");
  const std::size_t n = a.rows();
  Matrix m(n * n, n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) m(k * n + l, k * n + l) = q_power(a(k, l), field);
  return m;
}

Matrix weight_exp(const WeightVector& c, std::size_t k, ScalarField field) {
  const std::size_t n = c.size();
  TensorIndexing idx{n, k};
  Matrix m(idx.dim(), idx.dim());
  for (std::size_t lin = 0; lin < idx.dim(); ++lin) {
    BigRational e = 0;
    for (auto f : idx.factors(lin)) e += c[f - 1];
    m(lin, lin) = q_power(e, field);
  }
  return m;
}

}  // namespace qdq
