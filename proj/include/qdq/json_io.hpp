#pragma once

// JSON encodings shared by the CLI and the tests. Coefficients are "p/q"
// strings; objects carrying RatFunc values also carry "root_order" once.

#include <nlohmann/json.hpp>

#include "qdq/block_matrix.hpp"
#include "qdq/quasidet.hpp"
#include "qdq/ratfunc.hpp"
#include "qdq/report.hpp"
#include "qdq/rmatrix.hpp"
#include "qdq/twist.hpp"

namespace qdq {

using nlohmann::json;

json rational_json(const BigRational& r);
BigRational rational_from_json(const json& j);

json ratfunc_json(const RatFunc& x);
RatFunc ratfunc_from_json(const json& j, ScalarField field);

json matrix_json(const Matrix& m);
Matrix matrix_from_json(const json& j, ScalarField field);

json block_json(const BlockMatrix& b);
BlockMatrix block_from_json(const json& j, ScalarField field);

/// Rational grid as an array of rows of "p/q" strings.
json grid_json(const QMatrix& g);
QMatrix grid_from_json(const json& j);

json rmatrix_json(const RMatrix& r);
json theta_json(const BDTriple& t, const ThetaSolution& th);

/// `timing` false writes "ms": null so that reports are reproducible byte for byte.
json report_json(const Report& r, bool timing);

/// NCSquare file: {"root_order": M} plus either a Matrix object (scalar entries)
/// or a BlockMatrix object (block entries) with block_rows == block_cols.
struct NCSquareFile {
  ScalarField field{1};
  bool blocks = false;
  NCSquare<RatFunc> scalar;
  NCSquare<Matrix> block;
};
NCSquareFile ncsquare_from_json(const json& j);

}  // namespace qdq
