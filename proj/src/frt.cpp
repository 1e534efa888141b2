#include "qdq/frt.hpp"

#include <map>
#include <memory>
#include <string>

#include "qdq/errors.hpp"
#include "qdq/json_io.hpp"

namespace qdq {

namespace {

std::size_t legs_of(std::size_t dim, std::size_t n) {
  std::size_t legs = 0, d = 1;
  while (d < dim) {
    d *= n;
    ++legs;
  }
  if (d != dim) throw DimensionMismatch("operator dimension is not a power of n");
  return legs;
}

std::vector<std::size_t> leg_range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v;
  for (std::size_t k = 0; k < count; ++k) v.push_back(first + k);
  return v;
}

// Multi-indices K with nonzero wedge coefficient, stored as a prefix tree so
// that T_{j1 k1} ... T_{jp kp} is formed once per shared prefix.
struct Trie {
  std::map<std::size_t, std::unique_ptr<Trie>> next;
  std::optional<RatFunc> coeff;  // set on leaves
};

void accumulate(const Trie& node, const BlockMatrix& t, const std::vector<std::size_t>& row_idx, std::size_t depth,
                const Matrix& prefix, Matrix& sum) {
  if (node.coeff) {
    sum += prefix * *node.coeff;
    return;
  }
  for (const auto& [k, child] : node.next) {
    const Matrix& block = t(row_idx[depth] - 1, k - 1);
    if (block.is_zero()) continue;
    Matrix p = depth == 0 ? block : prefix * block;
    if (p.is_zero()) continue;
    accumulate(*child, t, row_idx, depth + 1, p, sum);
  }
}

Report failed(std::string check, const std::string& what) {
  Report r;
  r.check = std::move(check);
  r.fail(what);
  return r;
}

}  // namespace

FRTModel build_T(const Twist& tw, std::size_t k1, std::size_t k2) {
  if (k1 < 1 || k2 < 1) throw InvalidArgument("k1 and k2 must be at least 1");
  const std::size_t n = tw.triple.n;
  BlockMatrix lp = l_plus(tw.r_j, k1);
  BlockMatrix lm = l_minus(tw.r_j, k2);
  const std::size_t d = lp.inner_dim() * lm.inner_dim();
  BlockMatrix t(n, n, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (lp(i, k).is_zero() || lm(k, j).is_zero()) continue;
        t(i, j) += kron(lp(i, k), lm(k, j));
      }
  return FRTModel{tw, k1, k2, std::move(t)};
}

Matrix t_via_legs(const Twist& tw, std::size_t k1, std::size_t k2) {
  const std::size_t n = tw.triple.n;
  const std::size_t total = 1 + k1 + k2;
  std::vector<std::size_t> plus_legs{1}, minus_legs{1};
  for (auto l : leg_range(2, k1)) plus_legs.push_back(l);
  for (auto l : leg_range(2 + k1, k2)) minus_legs.push_back(l);
  Matrix lp = l_plus(tw.r_j, k1).flatten();
  Matrix lm = l_minus(tw.r_j, k2).flatten();
  return leg_embed(lp, plus_legs, n, total) * leg_embed(lm, minus_legs, n, total);
}

Report frt_check(const BlockMatrix& t, const RMatrix& r) {
  Stopwatch sw;
  const std::size_t n = r.n;
  if (t.block_rows() != n || t.block_cols() != n) throw DimensionMismatch("T must be n x n in blocks");
  const std::size_t w_legs = legs_of(t.inner_dim(), n);
  const std::size_t total = 2 + w_legs;
  std::vector<std::size_t> legs13{1}, legs23{2};
  for (auto l : leg_range(3, w_legs)) {
    legs13.push_back(l);
    legs23.push_back(l);
  }
  Matrix flat = t.flatten();
  Matrix t13 = leg_embed(flat, legs13, n, total);
  Matrix t23 = leg_embed(flat, legs23, n, total);
  Matrix r12 = leg_embed(r.mat, {1, 2}, n, total);
  Report rep = compare_matrices("frt", r12 * t13 * t23, t23 * t13 * r12);
  rep.params = {{"n", n}, {"inner_dim", t.inner_dim()}};
  rep.ms = sw.ms();
  return rep;
}

Report frt_check(const FRTModel& m) {
  Report rep = frt_check(m.t, m.twist.r_j);
  rep.params["k1"] = m.k1;
  rep.params["k2"] = m.k2;
  return rep;
}

Matrix qdet_coaction(const BlockMatrix& t, const Matrix& wedge, std::size_t n) {
  TensorIndexing idx{n, n};
  if (wedge.rows() != idx.dim() || wedge.cols() != 1) throw DimensionMismatch("wedge vector has the wrong size");
  Trie root;
  for (std::size_t lin = 0; lin < idx.dim(); ++lin) {
    if (wedge(lin, 0).is_zero()) continue;
    Trie* node = &root;
    for (auto k : idx.factors(lin)) {
      auto& child = node->next[k];
      if (!child) child = std::make_unique<Trie>();
      node = child.get();
    }
    node->coeff = wedge(lin, 0);
  }
  const std::size_t d = t.inner_dim();
  std::optional<Matrix> common;
  for (std::size_t lin = 0; lin < idx.dim(); ++lin) {
    const auto row_idx = idx.factors(lin);
    Matrix sum(d, d);
    accumulate(root, t, row_idx, 0, Matrix(), sum);
    const RatFunc& c = wedge(lin, 0);
    if (c.is_zero()) {
      if (!sum.is_zero())
        throw CoactionNotProportional("wedge line is not a subcomodule (component " + std::to_string(lin) + ")");
      continue;
    }
    Matrix value = sum * c.inverse();
    if (!common) {
      common = std::move(value);
    } else if (!(value == *common)) {
      throw CoactionNotProportional("coaction coefficients disagree at component " + std::to_string(lin));
    }
  }
  if (!common) throw WrongWedgeDimension(0);
  return *common;
}

Matrix qdet_coaction(const FRTModel& m) {
  const std::size_t n = m.twist.triple.n;
  Matrix w = wedge_top(r_hat(m.twist.r_j), n, m.twist.field);
  return qdet_coaction(m.t, w, n);
}

Matrix f_of_D_image(const Twist& tw, std::size_t k1, std::size_t k2) {
  WeightVector p = p_vector(tw);
  WeightVector plus = p, minus = p;
  for (auto& c : plus) c += 1;
  for (auto& c : minus) c -= 1;
  return kron(weight_exp(plus, k1, tw.field), weight_exp(minus, k2, tw.field));
}

DetSigma<Matrix> detsigma_T(const FRTModel& m, const SigmaOrder& sigma) {
  return det_sigma(to_ncsquare(m.t), sigma);
}

Report factors_commute(const std::vector<Matrix>& factors) {
  Stopwatch sw;
  Report rep;
  rep.check = "factors_commute";
  rep.params = {{"factors", factors.size()}};
  rep.succeed();
  for (std::size_t a = 0; a < factors.size() && rep.pass; ++a)
    for (std::size_t b = a + 1; b < factors.size(); ++b) {
      Matrix ab = factors[a] * factors[b];
      Matrix ba = factors[b] * factors[a];
      if (auto at = first_mismatch(ab, ba)) {
        rep.fail(Witness{{a + 1, b + 1, at->first, at->second},
                         ab(at->first, at->second),
                         ba(at->first, at->second),
                         "factors " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " do not commute"});
        break;
      }
    }
  rep.ms = sw.ms();
  return rep;
}

Report factors_commute(const FRTModel& m) { return factors_commute(quasiminor_factors(to_ncsquare(m.t))); }

Report main_theorem_report(const Twist& tw, std::size_t k1, std::size_t k2, const std::vector<SigmaOrder>& sigmas) {
  Stopwatch sw;
  const std::size_t n = tw.triple.n;
  Report rep;
  rep.check = "main";
  nlohmann::json sigma_names = nlohmann::json::array();
  for (const auto& s : sigmas) sigma_names.push_back(s.str());
  rep.params = {{"triple", tw.triple.str()}, {"k1", k1},
                {"k2", k2},                  {"sigmas", sigma_names},
                {"beta_zero", tw.beta.is_zero()}, {"root_order", tw.field.root_order}};
  if (sigmas.empty()) throw InvalidArgument("no sigma requested");

  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      rep.absorb(body());
    } catch (const SubmatrixSingular& e) {
      rep.info["singular"] = true;
      rep.absorb(failed(name, e.what()));
    } catch (const Error& e) {
      rep.absorb(failed(name, e.what()));
    }
  };

  if (!tw.triple.is_trivial()) {
    guarded("triple", [&] { return validate_triple(tw.triple); });
    guarded("theta_residuals", [&] {
      Report r;
      r.check = "theta_residuals";
      ThetaResiduals res = theta_residuals(tw.triple, tw.theta.theta);
      if (res.all_zero()) {
        r.succeed();
      } else {
        r.fail("Theta violates the admissibility conditions");
      }
      return r;
    });
    guarded("cocycle", [&] { return cocycle_check(tw.triple, tw.theta, tw.beta); });
  }
  guarded("ybe", [&] { return ybe_check(tw.r_j); });
  Matrix rhat = r_hat(tw.r_j);
  guarded("hecke", [&] { return hecke_check(rhat, tw.field); });

  std::optional<Matrix> wedge;
  guarded("wedge", [&] {
    Report r;
    r.check = "wedge";
    wedge = wedge_top(rhat, n, tw.field);
    r.info["dimension"] = 1;
    r.succeed();
    return r;
  });

  FRTModel model = build_T(tw, k1, k2);
  guarded("frt", [&] { return frt_check(model); });

  std::optional<Matrix> det_value;
  std::vector<Matrix> factors;
  guarded("factors_commute", [&] {
    factors = quasiminor_factors(to_ncsquare(model.t));
    return factors_commute(factors);
  });
  if (!factors.empty()) {
    guarded("det_sigma_agree", [&] {
      Stopwatch inner;
      Report r;
      r.check = "det_sigma_agree";
      r.succeed();
      for (const auto& s : sigmas) {
        Matrix v = ordered_product(factors, s);
        if (!det_value) {
          det_value = std::move(v);
          continue;
        }
        if (auto at = first_mismatch(v, *det_value)) {
          r.fail(Witness{{at->first, at->second}, v(at->first, at->second), (*det_value)(at->first, at->second),
                         "sigma " + s.str() + " differs from sigma " + sigmas.front().str()});
          break;
        }
      }
      r.ms = inner.ms();
      return r;
    });
  }
  if (det_value && wedge) {
    guarded("qdet_coaction", [&] {
      Report r = compare_matrices("qdet_coaction", qdet_coaction(model.t, *wedge, n), *det_value);
      return r;
    });
  }
  if (det_value) {
    guarded("f_of_D", [&] { return compare_matrices("f_of_D", f_of_D_image(tw, k1, k2), *det_value); });
  }
  if (det_value) rep.info["D"] = matrix_json(*det_value);
  rep.ms = sw.ms();
  return rep;
}

}  // namespace qdq
