#include "qdq/ratfunc.hpp"

#include <sstream>

#include "qdq/errors.hpp"

namespace qdq {

namespace {

std::uint32_t merge_tags(std::uint32_t a, std::uint32_t b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw FieldMismatch("values from fields with root orders " + std::to_string(a) +
                      " and " + std::to_string(b) + " combined");
}

std::string poly_str(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    BigRational c = p.coeff(static_cast<std::size_t>(k));
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    BigRational a = neg ? BigRational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || k == 0) os << a.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << "s";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

ScalarField::ScalarField(std::uint32_t m) : root_order(m) {
  if (m == 0) throw InvalidArgument("root order must be positive");
}

RatFunc::RatFunc(const BigRational& c) : num_(c) {}

RatFunc RatFunc::fraction(Poly num, Poly den, ScalarField field) {
  if (den.is_zero()) throw ZeroInverse();
  RatFunc r;
  if (num.is_zero()) return r;
  Poly g = Poly::gcd(num, den);
  if (!g.is_one()) {
    num = Poly::exact_div(num, g);
    den = Poly::exact_div(den, g);
  }
  if (den.lead() != 1) {
    BigRational inv = 1 / den.lead();
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.retag(field.root_order);
  return r;
}

RatFunc RatFunc::s(ScalarField field) {
  RatFunc r;
  r.num_ = Poly::monomial(1, 1);
  r.tag_ = field.root_order;
  return r;
}

RatFunc RatFunc::q(ScalarField field) { return q_power(1, field); }

BigRational RatFunc::constant_value() const {
  if (!is_constant()) throw InvalidArgument("not a constant: " + str());
  if (num_.is_zero()) return 0;
  return num_.coeff(0) / den_.coeff(0);
}

void RatFunc::retag(std::uint32_t merged) { tag_ = is_constant() ? 0 : merged; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  const std::uint32_t t = merge_tags(tag_, o.tag_);
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      *this = RatFunc();
      return *this;
    }
    if (!den_.is_one()) {
      Poly g = Poly::gcd(num_, den_);
      if (!g.is_one()) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
      }
    }
    retag(t);
    return *this;
  }
  // Henrici: only the common factor g of the denominators can cancel.
  Poly g = Poly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    Poly b = Poly::exact_div(den_, g);
    Poly d = Poly::exact_div(o.den_, g);
    num_ = num_ * d + o.num_ * b;
    den_ = den_ * d;
    if (num_.is_zero()) {
      *this = RatFunc();
      return *this;
    }
    Poly h = Poly::gcd(num_, g);
    if (!h.is_one()) {
      num_ = Poly::exact_div(num_, h);
      den_ = Poly::exact_div(den_, h);
    }
  }
  if (num_.is_zero()) {
    *this = RatFunc();
    return *this;
  }
  retag(t);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  const std::uint32_t t = merge_tags(a.tag_, b.tag_);
  RatFunc r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
  } else {
    Poly g1 = Poly::gcd(a.num_, b.den_);
    Poly g2 = Poly::gcd(b.num_, a.den_);
    Poly an = g1.is_one() ? a.num_ : Poly::exact_div(a.num_, g1);
    Poly bd = g1.is_one() ? b.den_ : Poly::exact_div(b.den_, g1);
    Poly bn = g2.is_one() ? b.num_ : Poly::exact_div(b.num_, g2);
    Poly ad = g2.is_one() ? a.den_ : Poly::exact_div(a.den_, g2);
    r.num_ = an * bn;
    r.den_ = ad * bd;
  }
  r.retag(t);
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = *this * o;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  merge_tags(a.tag_, b.tag_);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroInverse();
  RatFunc r;
  BigRational inv = 1 / num_.lead();
  r.num_ = den_ * inv;
  r.den_ = num_ * inv;
  r.tag_ = tag_;
  return r;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BigRational RatFunc::eval(const BigRational& x) const {
  BigRational d = den_.eval(x);
  if (qdq::is_zero(d)) throw ZeroInverse();
  return num_.eval(x) / d;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

RatFunc q_power(const BigRational& r, ScalarField field) {
  BigRational e = r * field.root_order;
  if (e.get_den() != 1) {
    throw NonRepresentableExponent("q^" + to_string(r) + " needs a root order divisible by " +
                                   r.get_den().get_str() + ", have " +
                                   std::to_string(field.root_order));
  }
  if (!e.get_num().fits_slong_p()) throw NonRepresentableExponent("exponent too large");
  long k = e.get_num().get_si();
  if (k == 0) return RatFunc(1);
  Poly mono = Poly::monomial(1, static_cast<std::size_t>(k > 0 ? k : -k));
  if (k > 0) return RatFunc::fraction(mono, Poly(BigRational(1)), field);
  return RatFunc::fraction(Poly(BigRational(1)), mono, field);
}

}  // namespace qdq
