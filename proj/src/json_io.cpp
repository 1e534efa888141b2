#include "qdq/json_io.hpp"

#include "qdq/errors.hpp"

namespace qdq {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::size_t require_size(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long>() < 0) throw InvalidArgument(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be an array of coefficients");
  std::vector<BigRational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Poly(std::move(c));
}

json poly_json(const Poly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(rational_json(c));
  if (out.empty()) out.push_back(rational_json(0));
  return out;
}

}  // namespace

json rational_json(const BigRational& r) { return to_string(r); }

BigRational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  throw InvalidArgument("rational must be a \"p/q\" string or an integer");
}

json ratfunc_json(const RatFunc& x) { return {{"num", poly_json(x.num())}, {"den", poly_json(x.den())}}; }

RatFunc ratfunc_from_json(const json& j, ScalarField field) {
  if (j.is_string() || j.is_number_integer()) return RatFunc(rational_from_json(j));
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly(BigRational(1));
  return RatFunc::fraction(poly_from_json(require(j, "num")), std::move(den), field);
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratfunc_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, ScalarField field) {
  const std::size_t r = require_size(j, "rows"), c = require_size(j, "cols");
  const json& e = require(j, "entries");
  if (!e.is_array() || e.size() != r) throw DimensionMismatch("entries do not match rows");
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) throw DimensionMismatch("entries do not match cols");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = ratfunc_from_json(e[i][k], field);
  }
  return m;
}

json block_json(const BlockMatrix& b) {
  json blocks = json::array();
  for (std::size_t i = 0; i < b.block_rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < b.block_cols(); ++j) row.push_back(matrix_json(b(i, j)));
    blocks.push_back(std::move(row));
  }
  return {{"block_rows", b.block_rows()},
          {"block_cols", b.block_cols()},
          {"inner_dim", b.inner_dim()},
          {"blocks", std::move(blocks)}};
}

BlockMatrix block_from_json(const json& j, ScalarField field) {
  const std::size_t br = require_size(j, "block_rows"), bc = require_size(j, "block_cols");
  const std::size_t d = require_size(j, "inner_dim");
  const json& blocks = require(j, "blocks");
  if (!blocks.is_array() || blocks.size() != br) throw DimensionMismatch("blocks do not match block_rows");
  BlockMatrix b(br, bc, d);
  for (std::size_t i = 0; i < br; ++i) {
    if (!blocks[i].is_array() || blocks[i].size() != bc) throw DimensionMismatch("blocks do not match block_cols");
    for (std::size_t k = 0; k < bc; ++k) {
      Matrix m = matrix_from_json(blocks[i][k], field);
      if (m.rows() != d || m.cols() != d) throw DimensionMismatch("block does not match inner_dim");
      b(i, k) = std::move(m);
    }
  }
  return b;
}

json grid_json(const QMatrix& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(rational_json(g(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix grid_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("grid must be a non-empty array of rows");
  const std::size_t r = j.size(), c = j[0].is_array() ? j[0].size() : 0;
  QMatrix g(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw DimensionMismatch("grid rows have unequal length");
    for (std::size_t k = 0; k < c; ++k) g(i, k) = rational_from_json(j[i][k]);
  }
  return g;
}

json rmatrix_json(const RMatrix& r) {
  return {{"root_order", r.field.root_order}, {"n", r.n}, {"matrix", matrix_json(r.mat)}};
}

json theta_json(const BDTriple& t, const ThetaSolution& th) {
  ThetaResiduals res = theta_residuals(t, th.theta);
  CartanData cd = cartan_data(t);
  return {{"triple", t.str()},
          {"theta", grid_json(th.theta)},
          {"y", grid_json(th.y)},
          {"z", grid_json(cd.z)},
          {"residuals",
           {{"first_slot", grid_json(res.first_slot)},
            {"second_slot", grid_json(res.second_slot)},
            {"mixed", grid_json(res.mixed)}}},
          {"admissible", res.all_zero()}};
}

json report_json(const Report& r, bool timing) {
  json out;
  out["check"] = r.check;
  out["params"] = r.params;
  out["pass"] = r.pass;
  if (r.witness) {
    const Witness& w = *r.witness;
    out["witness"] = {{"coords", w.coords},
                      {"lhs", w.lhs ? ratfunc_json(*w.lhs) : json(nullptr)},
                      {"rhs", w.rhs ? ratfunc_json(*w.rhs) : json(nullptr)},
                      {"detail", w.detail}};
  } else {
    out["witness"] = nullptr;
  }
  out["ms"] = timing ? json(r.ms) : json(nullptr);
  if (!r.info.empty()) out["info"] = r.info;
  if (!r.children.empty()) {
    json kids = json::array();
    for (const auto& c : r.children) kids.push_back(report_json(c, timing));
    out["children"] = std::move(kids);
  }
  return out;
}

NCSquareFile ncsquare_from_json(const json& j) {
  NCSquareFile f;
  if (j.contains("root_order")) {
    const json& m = j.at("root_order");
    if (!m.is_number_integer() || m.get<long>() <= 0 || m.get<long>() > 1000000) throw InvalidArgument("root_order must be positive");
    f.field = ScalarField{m.get<std::uint32_t>()};
  }
  if (j.contains("blocks")) {
    BlockMatrix b = block_from_json(j, f.field);
    if (b.block_rows() != b.block_cols()) throw DimensionMismatch("NCSquare must be square in blocks");
    f.blocks = true;
    f.block = to_ncsquare(b);
  } else {
    Matrix m = matrix_from_json(j, f.field);
    if (!m.is_square()) throw DimensionMismatch("NCSquare must be square");
    f.scalar = to_ncsquare(m);
  }
  return f;
}

}  // namespace qdq
