#include "qdq/rational.hpp"

#include "qdq/errors.hpp"

namespace qdq {

std::string to_string(const BigRational& x) {
  BigRational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return InvalidArgument("not a rational number: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto valid_int = [](const std::string& t) {
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num), d(den);
  if (d == 0) throw bad();
  BigRational r(n, d);
  r.canonicalize();
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt common_denominator(const std::vector<BigRational>& xs) {
  BigInt acc = 1;
  for (const auto& x : xs) acc = lcm(acc, x.get_den());
  return acc;
}

}  // namespace qdq
