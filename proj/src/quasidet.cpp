#include "qdq/quasidet.hpp"

#include <algorithm>
#include <numeric>

namespace qdq {

NCSquare<RatFunc> to_ncsquare(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("NCSquare needs a square matrix");
  return NCSquare<RatFunc>(m.rows(), m.data());
}

Matrix to_matrix(const NCSquare<RatFunc>& x) {
  Matrix m(x.size(), x.size());
  for (std::size_t i = 1; i <= x.size(); ++i)
    for (std::size_t j = 1; j <= x.size(); ++j) m(i - 1, j - 1) = x.at(i, j);
  return m;
}

NCSquare<Matrix> to_ncsquare(const BlockMatrix& b) {
  if (b.block_rows() != b.block_cols()) throw DimensionMismatch("NCSquare needs a square block matrix");
  std::vector<Matrix> entries;
  entries.reserve(b.block_rows() * b.block_cols());
  for (std::size_t i = 0; i < b.block_rows(); ++i)
    for (std::size_t j = 0; j < b.block_cols(); ++j) entries.push_back(b(i, j));
  return NCSquare<Matrix>(b.block_rows(), std::move(entries));
}

BlockMatrix to_block_matrix(const NCSquare<Matrix>& x) {
  const std::size_t d = x.size() == 0 ? 0 : x.at(1, 1).rows();
  BlockMatrix b(x.size(), x.size(), d);
  for (std::size_t i = 1; i <= x.size(); ++i)
    for (std::size_t j = 1; j <= x.size(); ++j) {
      const Matrix& e = x.at(i, j);
      if (e.rows() != d || e.cols() != d) throw DimensionMismatch("operator entries differ in size");
      b(i - 1, j - 1) = e;
    }
  return b;
}

NCSquare<RatFunc> EntryRing<RatFunc>::invert_square(const NCSquare<RatFunc>& x) {
  return to_ncsquare(gauss_invert(to_matrix(x)));
}

NCSquare<Matrix> EntryRing<Matrix>::invert_square(const NCSquare<Matrix>& x) {
  return to_ncsquare(block_invert(to_block_matrix(x)));
}

SigmaOrder::SigmaOrder(std::vector<std::size_t> one_line) : p_(std::move(one_line)) {
  std::vector<bool> seen(p_.size() + 1, false);
  for (auto v : p_) {
    if (v < 1 || v > p_.size() || seen[v]) throw InvalidArgument("sigma is not a permutation: " + str());
    seen[v] = true;
  }
}

SigmaOrder SigmaOrder::identity(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{1});
  return SigmaOrder(std::move(p));
}

SigmaOrder SigmaOrder::parse(std::string_view digits) {
  std::vector<std::size_t> p;
  for (char ch : digits) {
    if (ch < '1' || ch > '9') throw InvalidArgument("bad permutation digit in '" + std::string(digits) + "'");
    p.push_back(static_cast<std::size_t>(ch - '0'));
  }
  if (p.empty()) throw InvalidArgument("empty permutation");
  return SigmaOrder(std::move(p));
}

std::vector<SigmaOrder> SigmaOrder::all(std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{1});
  std::vector<SigmaOrder> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string SigmaOrder::str() const {
  std::string s;
  for (auto v : p_) s += std::to_string(v);
  return s;
}

}  // namespace qdq
