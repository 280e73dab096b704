#pragma once

#include <map>
#include <string>
#include <vector>

#include "incmon/scalar.hpp"
#include "incmon/word.hpp"

namespace incmon {

// Integer polynomial in one variable, coefficients from degree 0 upward, no trailing zeros.
using Poly = std::vector<Integer>;

// numerator(b) / ((1-b)^dm (1+b)^dp), always kept normalized.
class RationalFactor {
 public:
  RationalFactor() = default;  // zero
  RationalFactor(Poly numerator, unsigned dm = 0, unsigned dp = 0);
  RationalFactor(long c) : RationalFactor(Poly{Integer(c)}) {}  // NOLINT

  static RationalFactor one() { return RationalFactor(1); }
  static RationalFactor var() { return RationalFactor(Poly{0, 1}); }
  static RationalFactor monomial(unsigned k, Integer c = 1);
  // Factors in the recurrences.
  static RationalFactor b_over_one_minus_b() { return RationalFactor(Poly{0, 1}, 1, 0); }
  static RationalFactor b_over_one_plus_b() { return RationalFactor(Poly{0, 1}, 0, 1); }

  const Poly& numerator() const { return num_; }
  unsigned dm() const { return dm_; }
  unsigned dp() const { return dp_; }
  bool is_zero() const { return num_.empty(); }
  long num_degree() const { return long(num_.size()) - 1; }

  // Coefficient of b^c in the power series expansion.
  Integer coeff(unsigned c) const;
  // Coefficients of b^0 .. b^n.
  std::vector<Integer> coeffs(unsigned n) const;

  friend RationalFactor operator+(const RationalFactor& f, const RationalFactor& g);
  friend RationalFactor operator-(const RationalFactor& f, const RationalFactor& g);
  friend RationalFactor operator*(const RationalFactor& f, const RationalFactor& g);
  friend RationalFactor operator-(const RationalFactor& f);
  friend bool operator==(const RationalFactor&, const RationalFactor&) = default;

  // e.g. "b^2/(1-b)", "(1 + b)/(1-b)^2/(1+b)"; var names the indeterminate.
  std::string str(char var = 'b') const;

 private:
  void normalize();
  Poly num_;
  unsigned dm_ = 0, dp_ = 0;
};

unsigned pole_order_at_one(const RationalFactor& f);
Integer rf_coeff(const RationalFactor& f, unsigned c);

// f_0 a f_1 a ... a f_k
struct NCTerm {
  std::vector<RationalFactor> factors;
  std::size_t a_count() const { return factors.size() - 1; }
  bool is_zero() const;
  friend bool operator==(const NCTerm&, const NCTerm&) = default;
};

class NCSeries {
 public:
  NCSeries() = default;
  explicit NCSeries(RationalFactor f);
  static NCSeries one() { return NCSeries(RationalFactor::one()); }
  static NCSeries zero() { return {}; }
  // The series of a single word with coefficient 1.
  static NCSeries of_word(const Word& w);
  static NCSeries of_term(NCTerm t);

  const std::vector<NCTerm>& terms() const { return terms_; }
  // Appends t, merging with an existing term when the two differ in at most one slot.
  void add_term(NCTerm t);

  NCSeries& operator+=(const NCSeries& s);
  friend NCSeries operator+(NCSeries x, const NCSeries& y) { return x += y; }
  friend NCSeries operator-(const NCSeries& x, const NCSeries& y);
  friend NCSeries operator*(const NCSeries& x, const NCSeries& y);

  std::string str() const;

 private:
  std::vector<NCTerm> terms_;
};

namespace ncseries {

NCSeries series_add(const NCSeries& s1, const NCSeries& s2);
NCSeries series_scale(const Integer& n, const NCSeries& s);
NCSeries left_mul_a(const NCSeries& s);
NCSeries right_mul_a(const NCSeries& s);
NCSeries left_mul_rf(const RationalFactor& f, const NCSeries& s);
NCSeries right_mul_rf(const RationalFactor& f, const NCSeries& s);

Integer word_coefficient(const NCSeries& s, const Word& w);
// Nonzero coefficients of all words of length <= max_length.
std::map<Word, Integer> expand(const NCSeries& s, std::size_t max_length);
// Per-slot coefficient bound used by equals for a-count k.
std::vector<unsigned> equality_bounds(const NCSeries& s, std::size_t k);
bool equals(const NCSeries& s1, const NCSeries& s2);
// Sum of the a-free terms.
RationalFactor hilbert_specialize(const NCSeries& s);

}  // namespace ncseries
}  // namespace incmon
