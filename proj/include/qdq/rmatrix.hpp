#pragma once

#include <cstddef>
#include <vector>

#include "qdq/block_matrix.hpp"
#include "qdq/matrix.hpp"
#include "qdq/ratfunc.hpp"
#include "qdq/report.hpp"

namespace qdq {

/// An R-matrix on V (x) V, dim V = n.
struct RMatrix {
  std::size_t n = 0;
  Matrix mat;
  ScalarField field;
};

/// Exponents of a Cartan element sum_i c_i H_i (H_i v_j = delta_ij v_j).
using WeightVector = std::vector<BigRational>;

/// Image of the universal R-matrix of quantum gl_n on V (x) V:
///   R = sum_a q E_aa (x) E_aa + sum_{a!=b} E_aa (x) E_bb + (q - q^{-1}) sum_{a<b} E_ab (x) E_ba.
RMatrix standard_r(std::size_t n, ScalarField field);

/// flip * R.
Matrix r_hat(const RMatrix& r);

/// R_12 R_13 R_23 == R_23 R_13 R_12 on V^{(x)3}.
Report ybe_check(const RMatrix& r);

/// (R^ - q)(R^ + q^{-1}) == 0. info carries "eigenspace_dims": [dim ker(R^-q), dim ker(R^+q^{-1})].
Report hecke_check(const Matrix& rhat, ScalarField field);

/// Spanning vector (n^n x 1) of the intersection over i of ker(R^_{i,i+1} + q^{-1})
/// on V^{(x)n}, first nonzero coordinate 1. Throws WrongWedgeDimension unless
/// the intersection is a line.
Matrix wedge_top(const Matrix& rhat, std::size_t n, ScalarField field);

/// L+ on W = V^{(x)k}: R_{0,k} ... R_{0,1}, read as an n x n block matrix over the
/// leg-0 index with n^k x n^k operator entries.
BlockMatrix l_plus(const RMatrix& r, std::size_t k);
/// L- on W = V^{(x)k}: the same with R_21^{-1} = flip R^{-1} flip in place of R.
BlockMatrix l_minus(const RMatrix& r, std::size_t k);

/// Diagonal operator on V (x) V with entry q^{a_kl} at v_k (x) v_l.
Matrix cartan_exp(const QMatrix& a, ScalarField field);

/// Diagonal operator on V^{(x)k} scaling v_{i1}(x)...(x)v_{ik} by q^{c_{i1}+...+c_{ik}}.
Matrix weight_exp(const WeightVector& c, std::size_t k, ScalarField field);

}  // namespace qdq
