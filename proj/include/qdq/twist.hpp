#pragma once

// Belavin-Drinfeld type data with disjoint Gamma_1, Gamma_2 and the Hodges-style
// construction of an upper triangular twist J = e^{-h Theta} (f_tau (x) 1)(R) e^{h beta},
// realized on V (x) V.

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "qdq/matrix.hpp"
#include "qdq/report.hpp"
#include "qdq/rmatrix.hpp"

namespace qdq {

/// (Gamma_1, Gamma_2, tau) for gl_n; roots are labelled 1..n-1.
struct BDTriple {
  std::size_t n = 0;
  std::vector<std::size_t> gamma1;  // ascending
  std::vector<std::size_t> gamma2;  // ascending
  std::map<std::size_t, std::size_t> tau;

  static BDTriple trivial(std::size_t n);
  /// From command-line syntax: gamma lists "1,2", tau "1>3,2>4". Empty strings mean empty sets.
  static BDTriple parse(std::size_t n, std::string_view g1, std::string_view g2, std::string_view tau);

  bool is_trivial() const { return gamma1.empty(); }
  /// Maximal runs of consecutive roots in gamma1.
  std::vector<std::vector<std::size_t>> blocks() const;
  std::string str() const;
};

/// Checks disjointness, that tau is a bijection gamma1 -> gamma2, the adjacency
/// condition, and that tau preserves order on every block. info["clause"] names
/// the first failing clause ("OrderReversing" for a reversed block).
Report validate_triple(const BDTriple& t);

/// Throws OrderReversing or InvalidTriple when validate_triple fails.
void require_valid(const BDTriple& t);

/// Cartan-level data. Vectors in h are coefficient rows over H_1..H_n; every
/// basis is given as the rows of its reduced echelon form.
struct CartanData {
  QMatrix tau_mat;  // column j = tau(H_j)
  QMatrix h1_basis;
  QMatrix h2_basis;
  QMatrix h1_perp_basis;
  QMatrix h2_perp_basis;
  QMatrix z;  // Z = sum_ij z_ij H_i (x) H_j
  QMatrix h0_basis;
};

CartanData cartan_data(const BDTriple& t);

/// Theta = sum theta_ij H_i (x) H_j together with Y = Z - Theta.
struct ThetaSolution {
  QMatrix theta;
  QMatrix y;
};

/// Residuals of the two conditions on Theta; all zero iff Theta is admissible.
///   first_slot:  rows (x (x) 1, Z - Theta) for x in the h1 basis
///   second_slot: rows (1 (x) tau(x), Z - Theta)
///   mixed:       rows (tau(x) (x) 1 + 1 (x) x, Theta)
struct ThetaResiduals {
  QMatrix first_slot;
  QMatrix second_slot;
  QMatrix mixed;
  bool all_zero() const { return first_slot.is_zero() && second_slot.is_zero() && mixed.is_zero(); }
};

ThetaResiduals theta_residuals(const BDTriple& t, const QMatrix& theta);

/// Wraps a user-supplied Theta (no admissibility check).
ThetaSolution theta_from_grid(const BDTriple& t, QMatrix theta);

/// Deterministic admissible Theta: reduced echelon solve over theta_ij in
/// lexicographic order with free unknowns set to 0. Throws NoSolution.
ThetaSolution solve_theta(const BDTriple& t);

struct Twist {
  BDTriple triple;
  ThetaSolution theta;
  QMatrix beta;
  QMatrix a_grid;  // exponent of J^0: Y + beta
  Matrix jprime_vv;
  Matrix j_vv;
  RMatrix r_j;
  ScalarField field;
};

/// Image on V (x) V of the unipotent part of (f_tau (x) 1)(R):
///   Id + (q - q^{-1}) sum_blocks sum_{i<j in vert(B)} E_{tau(i),tau(j)} (x) E_{j,i}.
Matrix jprime_vv(const BDTriple& t, ScalarField field);

/// Throws BetaNotInH0 unless beta is antisymmetric with rows and columns in h0.
void check_beta(const BDTriple& t, const QMatrix& beta);

/// Root order large enough for q^{y_ij}, q^{beta_ij}, q^{z_ij}, q^{theta_ij}.
ScalarField twist_field(const BDTriple& t, const ThetaSolution& th, const QMatrix& beta);

/// Assemble J, R_J = J_21^{-1} R J on V (x) V. Throws InvalidTriple,
/// OrderReversing, BetaNotInH0.
Twist build_twist(const BDTriple& t, const ThetaSolution& th, const QMatrix& beta);

/// The untwisted datum (J = Id, R_J = R).
Twist untwisted(std::size_t n);

/// (Delta (x) 1)(J) J_12 == (1 (x) Delta)(J) J_23 on V^{(x)3}.
Report cocycle_check(const BDTriple& t, const ThetaSolution& th, const QMatrix& beta);

/// c_i = sum_j (a_ji - a_ij), the exponent of P = e^{h sum c_i H_i}.
WeightVector p_vector(const Twist& tw);

}  // namespace qdq
