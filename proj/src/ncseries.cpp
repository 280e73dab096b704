#include "incmon/ncseries.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace incmon {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& p, const Poly& q) {
  Poly r(std::max(p.size(), q.size()));
  for (std::size_t i = 0; i < p.size(); ++i) r[i] += p[i];
  for (std::size_t i = 0; i < q.size(); ++i) r[i] += q[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly r(p.size() + q.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  trim(r);
  return r;
}

// p * (1 + s b)^k, s = +-1
Poly times_linear(Poly p, int s, unsigned k) {
  for (unsigned e = 0; e < k; ++e) {
    Poly r(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      r[i] += p[i];
      r[i + 1] += s * p[i];
    }
    trim(r);
    p = std::move(r);
  }
  return p;
}

Integer eval_at(const Poly& p, int x) {
  Integer v = 0, pw = 1;
  for (const Integer& c : p) {
    v += c * pw;
    pw *= x;
  }
  return v;
}

// Exact quotient p / (1 + s b); caller checks divisibility.
Poly divide_linear(const Poly& p, int s) {
  if (p.empty()) return {};
  Poly q(p.size() - 1);
  Integer prev = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    prev = p[i] - s * prev;
    q[i] = prev;
  }
  trim(q);
  return q;
}

// Coefficient of b^k in (1 - s b)^{-d}.
Integer inv_power_coeff(unsigned d, unsigned k, int s) {
  if (d == 0) return k == 0 ? Integer(1) : Integer(0);
  Integer c = binomial(long(k) + d - 1, long(d) - 1);
  return (s < 0 && (k % 2)) ? Integer(-c) : c;
}

std::string poly_str(const Poly& p, char var) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    bool neg = p[i] < 0;
    Integer m = neg ? Integer(-p[i]) : p[i];
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono = i == 0 ? "" : (i == 1 ? std::string(1, var) : std::string(1, var) + "^" + std::to_string(i));
    if (i == 0)
      out += m.str();
    else if (m == 1)
      out += mono;
    else
      out += m.str() + "*" + mono;
  }
  return out;
}

}  // namespace

RationalFactor::RationalFactor(Poly numerator, unsigned dm, unsigned dp)
    : num_(std::move(numerator)), dm_(dm), dp_(dp) {
  normalize();
}

RationalFactor RationalFactor::monomial(unsigned k, Integer c) {
  Poly p(k + 1);
  p[k] = std::move(c);
  return RationalFactor(std::move(p));
}

void RationalFactor::normalize() {
  trim(num_);
  if (num_.empty()) {
    dm_ = dp_ = 0;
    return;
  }
  while (dm_ > 0 && eval_at(num_, 1) == 0) {
    num_ = divide_linear(num_, -1);
    --dm_;
  }
  while (dp_ > 0 && eval_at(num_, -1) == 0) {
    num_ = divide_linear(num_, 1);
    --dp_;
  }
}

Integer RationalFactor::coeff(unsigned c) const {
  Integer total = 0;
  for (std::size_t i = 0; i < num_.size() && i <= c; ++i) {
    if (num_[i] == 0) continue;
    unsigned k = c - unsigned(i);
    Integer s = 0;
    for (unsigned j = 0; j <= k; ++j) s += inv_power_coeff(dm_, j, 1) * inv_power_coeff(dp_, k - j, -1);
    total += num_[i] * s;
  }
  return total;
}

std::vector<Integer> RationalFactor::coeffs(unsigned n) const {
  // Expand by repeated division: multiply the numerator series by each geometric factor.
  std::vector<Integer> s(n + 1);
  for (std::size_t i = 0; i < num_.size() && i <= n; ++i) s[i] = num_[i];
  for (unsigned e = 0; e < dm_; ++e)
    for (unsigned i = 1; i <= n; ++i) s[i] += s[i - 1];
  for (unsigned e = 0; e < dp_; ++e)
    for (unsigned i = 1; i <= n; ++i) s[i] -= s[i - 1];
  return s;
}

RationalFactor operator+(const RationalFactor& f, const RationalFactor& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  unsigned dm = std::max(f.dm_, g.dm_), dp = std::max(f.dp_, g.dp_);
  Poly pf = times_linear(times_linear(f.num_, -1, dm - f.dm_), 1, dp - f.dp_);
  Poly pg = times_linear(times_linear(g.num_, -1, dm - g.dm_), 1, dp - g.dp_);
  return RationalFactor(poly_add(pf, pg), dm, dp);
}

RationalFactor operator-(const RationalFactor& f) {
  RationalFactor r = f;
  for (Integer& c : r.num_) c = -c;
  return r;
}

RationalFactor operator-(const RationalFactor& f, const RationalFactor& g) { return f + (-g); }

RationalFactor operator*(const RationalFactor& f, const RationalFactor& g) {
  if (f.is_zero() || g.is_zero()) return {};
  return RationalFactor(poly_mul(f.num_, g.num_), f.dm_ + g.dm_, f.dp_ + g.dp_);
}

std::string RationalFactor::str(char var) const {
  std::string n = poly_str(num_, var);
  if (dm_ == 0 && dp_ == 0) return n;
  std::size_t nonzero = std::count_if(num_.begin(), num_.end(), [](const Integer& c) { return c != 0; });
  std::string out = nonzero > 1 ? "(" + n + ")" : n;
  std::string v(1, var);
  if (dm_) out += "/(1-" + v + ")" + (dm_ > 1 ? "^" + std::to_string(dm_) : "");
  if (dp_) out += "/(1+" + v + ")" + (dp_ > 1 ? "^" + std::to_string(dp_) : "");
  return out;
}

unsigned pole_order_at_one(const RationalFactor& f) { return f.dm(); }
Integer rf_coeff(const RationalFactor& f, unsigned c) { return f.coeff(c); }

bool NCTerm::is_zero() const {
  return std::any_of(factors.begin(), factors.end(), [](const RationalFactor& f) { return f.is_zero(); });
}

NCSeries::NCSeries(RationalFactor f) {
  if (!f.is_zero()) terms_.push_back(NCTerm{{std::move(f)}});
}

NCSeries NCSeries::of_word(const Word& w) {
  NCTerm t;
  auto gaps = word::gap_decomposition(w);
  for (std::size_t g : gaps) t.factors.push_back(RationalFactor::monomial(unsigned(g)));
  return of_term(std::move(t));
}

NCSeries NCSeries::of_term(NCTerm t) {
  NCSeries s;
  s.add_term(std::move(t));
  return s;
}

void NCSeries::add_term(NCTerm t) {
  if (t.factors.empty()) throw std::invalid_argument("term without factors");
  if (t.is_zero()) return;
  for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
    NCTerm& u = terms_[idx];
    if (u.factors.size() != t.factors.size()) continue;
    std::size_t diff = 0, slot = 0;
    for (std::size_t i = 0; i < u.factors.size() && diff < 2; ++i)
      if (!(u.factors[i] == t.factors[i])) {
        ++diff;
        slot = i;
      }
    if (diff >= 2) continue;
    // diff == 0 means equal terms; doubling slot 0 is the same merge.
    u.factors[slot] = u.factors[slot] + t.factors[slot];
    if (u.factors[slot].is_zero()) terms_.erase(terms_.begin() + long(idx));
    return;
  }
  terms_.push_back(std::move(t));
}

NCSeries& NCSeries::operator+=(const NCSeries& s) {
  for (const NCTerm& t : s.terms_) add_term(t);
  return *this;
}

NCSeries operator-(const NCSeries& x, const NCSeries& y) {
  return x + ncseries::series_scale(Integer(-1), y);
}

NCSeries operator*(const NCSeries& x, const NCSeries& y) {
  NCSeries r;
  for (const NCTerm& t : x.terms_)
    for (const NCTerm& u : y.terms_) {
      NCTerm p;
      p.factors.assign(t.factors.begin(), t.factors.end() - 1);
      p.factors.push_back(t.factors.back() * u.factors.front());
      p.factors.insert(p.factors.end(), u.factors.begin() + 1, u.factors.end());
      r.add_term(std::move(p));
    }
  return r;
}

std::string NCSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) out += " + ";
    const auto& fs = terms_[k].factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i) out += "a";
      out += "(" + fs[i].str() + ")";
    }
  }
  return out;
}

namespace ncseries {

NCSeries series_add(const NCSeries& s1, const NCSeries& s2) { return s1 + s2; }

NCSeries series_scale(const Integer& n, const NCSeries& s) {
  NCSeries r;
  if (n == 0) return r;
  for (NCTerm t : s.terms()) {
    t.factors[0] = RationalFactor(Poly{n}) * t.factors[0];
    r.add_term(std::move(t));
  }
  return r;
}

NCSeries left_mul_a(const NCSeries& s) {
  NCSeries r;
  for (NCTerm t : s.terms()) {
    t.factors.insert(t.factors.begin(), RationalFactor::one());
    r.add_term(std::move(t));
  }
  return r;
}

NCSeries right_mul_a(const NCSeries& s) {
  NCSeries r;
  for (NCTerm t : s.terms()) {
    t.factors.push_back(RationalFactor::one());
    r.add_term(std::move(t));
  }
  return r;
}

NCSeries left_mul_rf(const RationalFactor& f, const NCSeries& s) {
  NCSeries r;
  for (NCTerm t : s.terms()) {
    t.factors.front() = f * t.factors.front();
    r.add_term(std::move(t));
  }
  return r;
}

NCSeries right_mul_rf(const RationalFactor& f, const NCSeries& s) {
  NCSeries r;
  for (NCTerm t : s.terms()) {
    t.factors.back() = t.factors.back() * f;
    r.add_term(std::move(t));
  }
  return r;
}

Integer word_coefficient(const NCSeries& s, const Word& w) {
  auto gaps = word::gap_decomposition(w);
  Integer total = 0;
  for (const NCTerm& t : s.terms()) {
    if (t.factors.size() != gaps.size()) continue;
    Integer p = 1;
    for (std::size_t i = 0; i < gaps.size() && p != 0; ++i) p *= t.factors[i].coeff(unsigned(gaps[i]));
    total += p;
  }
  return total;
}

std::map<Word, Integer> expand(const NCSeries& s, std::size_t max_length) {
  std::map<Word, Integer> out;
  // Cache coefficient vectors per term slot instead of recomputing per word.
  std::vector<std::vector<std::vector<Integer>>> cache;
  for (const NCTerm& t : s.terms()) {
    std::vector<std::vector<Integer>> slots;
    for (const RationalFactor& f : t.factors) slots.push_back(f.coeffs(unsigned(max_length)));
    cache.push_back(std::move(slots));
  }
  for (const Word& w : word::all_words_up_to(max_length)) {
    auto gaps = word::gap_decomposition(w);
    Integer total = 0;
    for (std::size_t k = 0; k < s.terms().size(); ++k) {
      if (cache[k].size() != gaps.size()) continue;
      Integer p = 1;
      for (std::size_t i = 0; i < gaps.size() && p != 0; ++i) p *= cache[k][i][gaps[i]];
      total += p;
    }
    if (total != 0) out.emplace(w, std::move(total));
  }
  return out;
}

std::vector<unsigned> equality_bounds(const NCSeries& s, std::size_t k) {
  // Global bound: max(deg num + dm + dp) + 1 over every factor.
  long global = 0;
  for (const NCTerm& t : s.terms())
    for (const RationalFactor& f : t.factors)
      global = std::max(global, f.num_degree() + long(f.dm()) + long(f.dp()) + 1);
  // Per slot: numerator degree over the common denominator of that slot. A series
  // in one slot with vanishing coefficients up to this degree is zero.
  std::vector<unsigned> bounds(k + 1, unsigned(global));
  for (std::size_t i = 0; i <= k; ++i) {
    unsigned dm = 0, dp = 0;
    for (const NCTerm& t : s.terms())
      if (t.factors.size() == k + 1) {
        dm = std::max(dm, t.factors[i].dm());
        dp = std::max(dp, t.factors[i].dp());
      }
    long deg = 0;
    for (const NCTerm& t : s.terms())
      if (t.factors.size() == k + 1) {
        const RationalFactor& f = t.factors[i];
        deg = std::max(deg, f.num_degree() + long(dm - f.dm()) + long(dp - f.dp()));
      }
    bounds[i] = std::max(bounds[i], unsigned(deg));
  }
  return bounds;
}

bool equals(const NCSeries& s1, const NCSeries& s2) {
  NCSeries d = s1 - s2;
  std::map<std::size_t, std::vector<const NCTerm*>> by_k;
  for (const NCTerm& t : d.terms()) by_k[t.a_count()].push_back(&t);
  for (const auto& [k, ts] : by_k) {
    std::vector<unsigned> bounds = equality_bounds(d, k);
    std::vector<std::vector<std::vector<Integer>>> cache;
    for (const NCTerm* t : ts) {
      std::vector<std::vector<Integer>> slots;
      for (std::size_t i = 0; i <= k; ++i) slots.push_back(t->factors[i].coeffs(bounds[i]));
      cache.push_back(std::move(slots));
    }
    std::vector<unsigned> c(k + 1, 0);
    while (true) {
      Integer total = 0;
      for (const auto& slots : cache) {
        Integer p = 1;
        for (std::size_t i = 0; i <= k && p != 0; ++i) p *= slots[i][c[i]];
        total += p;
      }
      if (total != 0) return false;
      std::size_t i = 0;
      while (i <= k && c[i] == bounds[i]) c[i++] = 0;
      if (i > k) break;
      ++c[i];
    }
  }
  return true;
}

RationalFactor hilbert_specialize(const NCSeries& s) {
  RationalFactor h;
  for (const NCTerm& t : s.terms())
    if (t.a_count() == 0) h = h + t.factors[0];
  return h;
}

}  // namespace ncseries
}  // namespace incmon
