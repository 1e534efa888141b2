#pragma once

// Concrete solutions T of the FRT relations obtained from L+ (x) L-, and the
// checks comparing the quantum determinant with ordered quasiminor products.

#include <cstddef>
#include <optional>
#include <vector>

#include "qdq/block_matrix.hpp"
#include "qdq/quasidet.hpp"
#include "qdq/report.hpp"
#include "qdq/twist.hpp"

namespace qdq {

/// T = (t_ij) with t_ij in End(W1 (x) W2), W_i = V^{(x)k_i}.
struct FRTModel {
  Twist twist;
  std::size_t k1 = 1;
  std::size_t k2 = 1;
  BlockMatrix t;
};

/// T_ij = sum_k (L+)_ik (x) (L-)_kj, with L+ acting on W1 and L- on W2.
FRTModel build_T(const Twist& tw, std::size_t k1, std::size_t k2);

/// The same operator on V (x) W1 (x) W2 assembled as (L+ on legs 1,W1) (L- on legs 1,W2).
Matrix t_via_legs(const Twist& tw, std::size_t k1, std::size_t k2);

/// R^{12} T^{13} T^{23} == T^{23} T^{13} R^{12} on V (x) V (x) (W1 (x) W2).
Report frt_check(const BlockMatrix& t, const RMatrix& r);
Report frt_check(const FRTModel& m);

/// D from the coaction on the top wedge line w = sum_K c_K v_K: for every I with
/// c_I != 0, D_I = c_I^{-1} sum_K c_K T_{i1 k1} ... T_{in kn}; all D_I must agree
/// (CoactionNotProportional otherwise). Multi-indices J with c_J = 0 must give
/// sum_K c_K T_{JK} = 0.
Matrix qdet_coaction(const BlockMatrix& t, const Matrix& wedge, std::size_t n);
Matrix qdet_coaction(const FRTModel& m);

/// P e^{hH} (x) P e^{-hH} on W1 (x) W2.
Matrix f_of_D_image(const Twist& tw, std::size_t k1, std::size_t k2);

DetSigma<Matrix> detsigma_T(const FRTModel& m, const SigmaOrder& sigma);

/// Pairwise commutators of the factors all vanish.
Report factors_commute(const std::vector<Matrix>& factors);
Report factors_commute(const FRTModel& m);

/// Full battery for one twist: twist-level checks (for a nontrivial triple),
/// FRT relation, factor commutation, sigma-independence of det_sigma(T), and
/// det_sigma(T) == D (coaction) == P e^{hH} (x) P e^{-hH}.
Report main_theorem_report(const Twist& tw, std::size_t k1, std::size_t k2, const std::vector<SigmaOrder>& sigmas);

}  // namespace qdq
