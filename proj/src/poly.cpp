#include "qdq/poly.hpp"

#include <algorithm>

#include "qdq/errors.hpp"

namespace qdq {

Poly::Poly(const BigRational& c) {
  if (!qdq::is_zero(c)) {
    c_.push_back(c);
    c_.back().canonicalize();
  }
}

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

Poly Poly::monomial(const BigRational& c, std::size_t degree) {
  Poly p;
  if (qdq::is_zero(c)) return p;
  p.c_.assign(degree + 1, BigRational(0));
  p.c_[degree] = c;
  p.c_[degree].canonicalize();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && qdq::is_zero(c_.back())) c_.pop_back();
}

bool Poly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
    if (!qdq::is_zero(c_[k])) return false;
  }
  return true;
}

std::size_t Poly::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && qdq::is_zero(c_[k])) ++k;
  return c_.empty() ? 0 : k;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRational& k) {
  if (qdq::is_zero(k)) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= k;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (qdq::is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (qdq::is_zero(b.c_[j])) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  r.trim();
  return r;
}

Poly Poly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(k, BigRational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::shifted_down(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroInverse();
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly(), rem};
  Poly quo;
  quo.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), BigRational(0));
  BigRational inv_lead = 1 / b.lead();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree()) - db;
    BigRational f = rem.lead() * inv_lead;
    quo.c_[shift] = f;
    for (std::size_t k = 0; k <= db; ++k) {
      if (!qdq::is_zero(b.c_[k])) rem.c_[shift + k] -= f * b.c_[k];
    }
    rem.c_.pop_back();  // the leading term cancels exactly
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  if (b.is_monomial()) {
    Poly r = a.shifted_down(static_cast<std::size_t>(b.degree()));
    if (b.lead() != 1) r *= 1 / b.lead();
    return r;
  }
  return divmod(a, b).first;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  Poly r = *this;
  r *= 1 / lead();
  return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(BigRational(1));
  if (a.is_monomial() || b.is_monomial()) {
    std::size_t k = std::min(a.valuation(), b.valuation());
    return monomial(1, k);
  }
  // Pull out the common power of s first; it is the common case here.
  std::size_t k = std::min(a.valuation(), b.valuation());
  Poly x = a.shifted_down(k).monic();
  Poly y = b.shifted_down(k).monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.shifted_up(k);
}

BigRational Poly::eval(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace qdq
