#include "incmon/scalar.hpp"

#include <stdexcept>

namespace incmon {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r = 1;
  if (k > n - k) k = n - k;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const Integer& x) { return x.str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  auto check = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check(s)) throw std::invalid_argument("bad rational: " + s);
    return Rational(Integer(s.c_str()));
  }
  std::string p = s.substr(0, slash), q = s.substr(slash + 1);
  if (!check(p) || !check(q)) throw std::invalid_argument("bad rational: " + s);
  Integer den(q.c_str());
  if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(Integer(p.c_str()), den);
}

}  // namespace incmon
