#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "incmon/scalar.hpp"
#include "incmon/word.hpp"

namespace incmon {

// Integer combination of words; an element of Z{a,b}. Zero coefficients are never stored.
class KElement {
 public:
  using Map = std::map<Word, Integer>;

  KElement() = default;
  KElement(const Word& w) { terms_.emplace(w, Integer(1)); }  // NOLINT
  KElement(const Word& w, Integer c);
  static KElement unit() { return KElement(Word{}); }
  static KElement constant(Integer c) { return KElement(Word{}, std::move(c)); }
  static KElement parse_word(const std::string& w) { return KElement(Word::parse(w)); }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Word& w) const;

  // Adds c*w in place, dropping the entry if it cancels.
  void add_term(const Word& w, const Integer& c);

  KElement& operator+=(const KElement& y);
  KElement& operator-=(const KElement& y);
  friend KElement operator+(KElement x, const KElement& y) { return x += y; }
  friend KElement operator-(KElement x, const KElement& y) { return x -= y; }
  friend KElement operator-(const KElement& x);
  friend KElement operator*(const KElement& x, const KElement& y);
  friend KElement operator*(const Integer& n, const KElement& x);
  friend bool operator==(const KElement&, const KElement&) = default;

  // Terms in print order: rank, then length, then word, all descending except the word.
  std::vector<std::pair<Word, Integer>> ordered_terms() const;
  std::string str() const;

 private:
  Map terms_;
};

std::ostream& operator<<(std::ostream& os, const KElement& x);

namespace kgroup {

KElement add(const KElement& x, const KElement& y);
KElement scale(const Integer& n, const KElement& x);
KElement mul(const KElement& x, const KElement& y);
Integer coefficient(const KElement& x, const Word& w);

// Extends a word-level map to a linear map.
KElement linear(const KElement& x, const std::function<KElement(const Word&)>& on_word);

KElement transpose(const KElement& x);
KElement psi(const KElement& x);
KElement gamma(const KElement& x);
KElement xi(const KElement& x);
KElement xires(const KElement& x);
KElement xicor(const KElement& x);
KElement sigma(const KElement& x);
KElement dual(const KElement& x);
KElement pi(const KElement& x);
KElement kappa(const KElement& x);
KElement beta_a(const KElement& x);
KElement beta_b(const KElement& x);
// beta_{l_k} o ... o beta_{l_1} for w = l_1...l_k, so that beta_word(w, w) = 1.
KElement beta_word(const Word& w, const KElement& x);

KElement injective_class(const Word& lambda);
KElement jclass(std::size_t n);
KElement std_local_cohomology(const Word& lambda, long s);
KElement std_saturation(const Word& lambda, long s);

// Named operator lookup for the command line; empty function if unknown.
std::function<KElement(const KElement&)> unary_op(const std::string& name);

}  // namespace kgroup
}  // namespace incmon
