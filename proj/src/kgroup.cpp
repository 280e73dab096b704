#include "incmon/kgroup.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace incmon {

KElement::KElement(const Word& w, Integer c) {
  if (c != 0) terms_.emplace(w, std::move(c));
}

Integer KElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

void KElement::add_term(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

KElement& KElement::operator+=(const KElement& y) {
  for (const auto& [w, c] : y.terms_) add_term(w, c);
  return *this;
}

KElement& KElement::operator-=(const KElement& y) {
  for (const auto& [w, c] : y.terms_) add_term(w, -c);
  return *this;
}

KElement operator-(const KElement& x) {
  KElement r = x;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

KElement operator*(const KElement& x, const KElement& y) {
  KElement r;
  for (const auto& [u, c] : x.terms_)
    for (const auto& [v, d] : y.terms_) r.add_term(u + v, c * d);
  return r;
}

KElement operator*(const Integer& n, const KElement& x) {
  if (n == 0) return {};
  KElement r = x;
  for (auto& [w, c] : r.terms_) c *= n;
  return r;
}

std::vector<std::pair<Word, Integer>> KElement::ordered_terms() const {
  std::vector<std::pair<Word, Integer>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& p, const auto& q) {
    std::size_t rp = word::rank(p.first), rq = word::rank(q.first);
    if (rp != rq) return rp > rq;
    if (p.first.length() != q.first.length()) return p.first.length() > q.first.length();
    return p.first < q.first;
  });
  return v;
}

std::string KElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : ordered_terms()) {
    bool neg = c < 0;
    Integer m = neg ? Integer(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (w.empty())
      out += m.str();
    else if (m == 1)
      out += w.pretty();
    else
      out += m.str() + "*" + w.pretty();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const KElement& x) { return os << x.str(); }

namespace kgroup {

KElement add(const KElement& x, const KElement& y) { return x + y; }
KElement scale(const Integer& n, const KElement& x) { return n * x; }
KElement mul(const KElement& x, const KElement& y) { return x * y; }
Integer coefficient(const KElement& x, const Word& w) { return x.coefficient(w); }

KElement linear(const KElement& x, const std::function<KElement(const Word&)>& on_word) {
  KElement r;
  for (const auto& [w, c] : x.terms()) r += c * on_word(w);
  return r;
}

namespace {

// Splits w = mu a^n with mu empty or ending in b.
std::pair<Word, std::size_t> trailing_a(const Word& w) {
  std::size_t n = 0;
  while (n < w.length() && w[w.length() - 1 - n] == Letter::a) ++n;
  return {w.slice(0, w.length() - n), n};
}

KElement a_block_sum(const Word& mu, std::size_t upto) {
  KElement r;
  Word cur = mu;
  for (std::size_t i = 0; i < upto; ++i) {
    r.add_term(cur, 1);
    cur.push_back(Letter::a);
  }
  return r;
}

}  // namespace

KElement transpose(const KElement& x) {
  return linear(x, [](const Word& w) { return KElement(word::reverse(w)); });
}

KElement psi(const KElement& x) {
  return linear(x, [](const Word& w) {
    if (w.empty() || w.back() == Letter::b) return KElement();
    return KElement(w.slice(0, w.length() - 1));
  });
}

KElement gamma(const KElement& x) {
  return linear(x, [](const Word& w) { return KElement(w + Word{Letter::a}); });
}

KElement xi(const KElement& x) {
  return linear(x, [](const Word& w) {
    auto [mu, n] = trailing_a(w);
    return a_block_sum(mu, n + 1);
  });
}

KElement xires(const KElement& x) {
  return linear(x, [](const Word& w) {
    auto [mu, n] = trailing_a(w);
    return a_block_sum(mu, n);
  });
}

KElement xicor(const KElement& x) { return xires(x); }

KElement sigma(const KElement& x) {
  return linear(x, [](const Word& w) {
    if (w.empty()) return KElement();
    Word rest = w.slice(1);
    if (w.front() == Letter::a) return KElement(w) + KElement(rest);
    return KElement(rest);
  });
}

KElement dual(const KElement& x) {
  return linear(x, [](const Word& w) {
    return KElement(word::conjugate(w), w.length() % 2 ? Integer(-1) : Integer(1));
  });
}

KElement pi(const KElement& x) {
  return linear(x, [](const Word& w) {
    return !w.empty() && w.front() == Letter::a ? KElement(w) : KElement();
  });
}

KElement kappa(const KElement& x) { return transpose(xi(psi(transpose(x)))); }

KElement beta_a(const KElement& x) {
  return linear(x, [](const Word& w) {
    return !w.empty() && w.front() == Letter::a ? KElement(w.slice(1)) : KElement();
  });
}

KElement beta_b(const KElement& x) {
  return linear(x, [](const Word& w) {
    return !w.empty() && w.front() == Letter::b ? KElement(w.slice(1)) : KElement();
  });
}

KElement beta_word(const Word& w, const KElement& x) {
  KElement r = x;
  for (Letter l : w.letters()) r = l == Letter::a ? beta_a(r) : beta_b(r);
  return r;
}

KElement jclass(std::size_t n) {
  if (n == 0) return KElement::unit();
  KElement r;
  for (std::size_t i = 0; i < n; ++i)
    r.add_term(Word::power(Letter::b, i + 1), binomial(long(n) - 1, long(i)));
  return r;
}

KElement injective_class(const Word& lambda) {
  auto gaps = word::gap_decomposition(lambda);
  KElement r = jclass(gaps[0]);
  for (std::size_t k = 1; k < gaps.size(); ++k) r = r * KElement(Word{Letter::a}) * jclass(gaps[k]);
  return r;
}

KElement std_local_cohomology(const Word& lambda, long s) {
  return s >= long(word::rank(lambda)) ? KElement(lambda) : KElement();
}

KElement std_saturation(const Word& lambda, long s) {
  return s < long(word::rank(lambda)) ? KElement(lambda) : KElement();
}

std::function<KElement(const KElement&)> unary_op(const std::string& name) {
  static const std::map<std::string, KElement (*)(const KElement&)> ops = {
      {"transpose", &transpose}, {"psi", &psi},     {"gamma", &gamma},   {"xi", &xi},
      {"xires", &xires},         {"xicor", &xicor}, {"sigma", &sigma},   {"dual", &dual},
      {"pi", &pi},               {"kappa", &kappa}, {"beta_a", &beta_a}, {"beta_b", &beta_b},
  };
  auto it = ops.find(name);
  if (it == ops.end()) return {};
  return it->second;
}

}  // namespace kgroup
}  // namespace incmon
