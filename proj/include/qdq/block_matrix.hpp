#pragma once

#include <cstddef>
#include <vector>

#include "qdq/matrix.hpp"

namespace qdq {

/// Matrix whose entries are d x d operator matrices. Flattening to a
/// (block_rows d) x (block_cols d) matrix is a ring isomorphism.
class BlockMatrix {
 public:
  BlockMatrix() = default;
  /// All blocks zero.
  BlockMatrix(std::size_t block_rows, std::size_t block_cols, std::size_t inner_dim);

  static BlockMatrix identity(std::size_t blocks, std::size_t inner_dim);
  /// Cut a flat matrix into inner_dim x inner_dim blocks.
  static BlockMatrix from_flat(const Matrix& flat, std::size_t inner_dim);

  std::size_t block_rows() const { return br_; }
  std::size_t block_cols() const { return bc_; }
  std::size_t inner_dim() const { return d_; }

  /// 0-based block access.
  Matrix& operator()(std::size_t i, std::size_t j) { return blocks_[i * bc_ + j]; }
  const Matrix& operator()(std::size_t i, std::size_t j) const { return blocks_[i * bc_ + j]; }

  Matrix flatten() const;

  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b);
  friend BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) = default;

 private:
  std::size_t br_ = 0;
  std::size_t bc_ = 0;
  std::size_t d_ = 0;
  std::vector<Matrix> blocks_;
};

/// Inverse through the flattened matrix. Throws Singular.
BlockMatrix block_invert(const BlockMatrix& x);

}  // namespace qdq
