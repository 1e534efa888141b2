#include "qdq/matrix.hpp"

#include <algorithm>

namespace qdq {

std::size_t TensorIndexing::dim() const {
  std::size_t d = 1;
  for (std::size_t j = 0; j < legs; ++j) d *= n;
  return d;
}

std::size_t TensorIndexing::linear(std::span<const std::size_t> factors) const {
  if (factors.size() != legs) throw DimensionMismatch("wrong number of tensor factors");
  std::size_t idx = 0;
  for (auto f : factors) {
    if (f < 1 || f > n) throw InvalidArgument("tensor factor index out of range");
    idx = idx * n + (f - 1);
  }
  return idx;
}

std::vector<std::size_t> TensorIndexing::factors(std::size_t linear) const {
  std::vector<std::size_t> out(legs);
  for (std::size_t j = legs; j-- > 0;) {
    out[j] = linear % n + 1;
    linear /= n;
  }
  return out;
}

Matrix leg_embed(const Matrix& op, std::span<const std::size_t> legs, std::size_t n, std::size_t k) {
  const std::size_t m = legs.size();
  std::vector<bool> used(k + 1, false);
  for (auto l : legs) {
    if (l < 1 || l > k) throw InvalidArgument("leg out of range");
    if (used[l]) throw InvalidArgument("duplicate leg");
    used[l] = true;
  }
  TensorIndexing sub{n, m};
  TensorIndexing full{n, k};
  if (op.rows() != sub.dim() || op.cols() != sub.dim())
    throw DimensionMismatch("operator does not act on the named legs");

  std::vector<std::size_t> rest;
  for (std::size_t l = 1; l <= k; ++l)
    if (!used[l]) rest.push_back(l);
  TensorIndexing rest_idx{n, rest.size()};

  // stride of each leg in the full linear index (0-based digits)
  std::vector<std::size_t> stride(k + 1);
  std::size_t st = 1;
  for (std::size_t l = k; l >= 1; --l) {
    stride[l] = st;
    st *= n;
  }
  auto offset_of = [&](std::size_t sub_linear, std::span<const std::size_t> which) {
    std::size_t off = 0;
    for (std::size_t j = which.size(); j-- > 0;) {
      off += (sub_linear % n) * stride[which[j]];
      sub_linear /= n;
    }
    return off;
  };

  Matrix out(full.dim(), full.dim());
  for (std::size_t r = 0; r < op.rows(); ++r) {
    const std::size_t roff = offset_of(r, legs);
    for (std::size_t c = 0; c < op.cols(); ++c) {
      const RatFunc& x = op(r, c);
      if (x.is_zero()) continue;
      const std::size_t coff = offset_of(c, legs);
      for (std::size_t e = 0; e < rest_idx.dim(); ++e) {
        const std::size_t eoff = offset_of(e, rest);
        out(roff + eoff, coff + eoff) = x;
      }
    }
  }
  return out;
}

Matrix leg_embed(const Matrix& op, std::initializer_list<std::size_t> legs, std::size_t n, std::size_t k) {
  std::vector<std::size_t> v(legs);
  return leg_embed(op, std::span<const std::size_t>(v), n, k);
}

Matrix flip_perm(std::size_t n) {
  Matrix p(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(j * n + i, i * n + j) = RatFunc(1);
  return p;
}

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidArgument("matrix unit index out of range");
  Matrix e(n, n);
  e(i - 1, j - 1) = RatFunc(1);
  return e;
}

QMatrix evaluate(const Matrix& m, const BigRational& x) {
  QMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = m(i, j).eval(x);
  return r;
}

Matrix lift(const QMatrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) r(i, j) = RatFunc(m(i, j));
  return r;
}

}  // namespace qdq
