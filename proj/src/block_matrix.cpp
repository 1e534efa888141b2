#include "qdq/block_matrix.hpp"

namespace qdq {

BlockMatrix::BlockMatrix(std::size_t block_rows, std::size_t block_cols, std::size_t inner_dim)
    : br_(block_rows), bc_(block_cols), d_(inner_dim), blocks_(block_rows * block_cols, Matrix(inner_dim, inner_dim)) {}

BlockMatrix BlockMatrix::identity(std::size_t blocks, std::size_t inner_dim) {
  BlockMatrix b(blocks, blocks, inner_dim);
  for (std::size_t i = 0; i < blocks; ++i) b(i, i) = Matrix::identity(inner_dim);
  return b;
}

BlockMatrix BlockMatrix::from_flat(const Matrix& flat, std::size_t inner_dim) {
  if (inner_dim == 0 || flat.rows() % inner_dim != 0 || flat.cols() % inner_dim != 0)
    throw DimensionMismatch("flat matrix is not divisible into blocks");
  BlockMatrix b(flat.rows() / inner_dim, flat.cols() / inner_dim, inner_dim);
  for (std::size_t i = 0; i < b.br_; ++i)
    for (std::size_t j = 0; j < b.bc_; ++j) b(i, j) = flat.block(i * inner_dim, j * inner_dim, inner_dim, inner_dim);
  return b;
}

Matrix BlockMatrix::flatten() const {
  Matrix flat(br_ * d_, bc_ * d_);
  for (std::size_t i = 0; i < br_; ++i)
    for (std::size_t j = 0; j < bc_; ++j) flat.set_block(i * d_, j * d_, (*this)(i, j));
  return flat;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.bc_ != b.br_ || a.d_ != b.d_) throw DimensionMismatch("block product shape mismatch");
  BlockMatrix c(a.br_, b.bc_, a.d_);
  for (std::size_t i = 0; i < a.br_; ++i)
    for (std::size_t k = 0; k < a.bc_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.bc_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

BlockMatrix operator+(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.br_ != b.br_ || a.bc_ != b.bc_ || a.d_ != b.d_) throw DimensionMismatch("block sum shape mismatch");
  BlockMatrix c = a;
  for (std::size_t k = 0; k < c.blocks_.size(); ++k) c.blocks_[k] += b.blocks_[k];
  return c;
}

BlockMatrix operator-(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.br_ != b.br_ || a.bc_ != b.bc_ || a.d_ != b.d_) throw DimensionMismatch("block difference shape mismatch");
  BlockMatrix c = a;
  for (std::size_t k = 0; k < c.blocks_.size(); ++k) c.blocks_[k] -= b.blocks_[k];
  return c;
}

BlockMatrix block_invert(const BlockMatrix& x) {
  if (x.block_rows() != x.block_cols()) throw DimensionMismatch("inverse of non-square block matrix");
  return BlockMatrix::from_flat(gauss_invert(x.flatten()), x.inner_dim());
}

}  // namespace qdq
