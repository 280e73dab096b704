#include "incmon/invariants.hpp"

namespace incmon {

NCSeries InvariantEngine::eval(Kind kind, const Word& w) {
  auto& memo = kind == Kind::G ? g_memo_ : f_memo_;
  {
    std::lock_guard lock(mu_);
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    ++evaluations_;
  }

  NCSeries result;
  if (w.empty()) {
    result = NCSeries::one();
  } else if (w.front() == Letter::b) {
    RationalFactor f = kind == Kind::G ? RationalFactor::var() : RationalFactor::b_over_one_plus_b();
    result = ncseries::left_mul_rf(f, eval(kind, w.slice(1)));
  } else {
    std::size_t n = 0;
    while (n < w.length() && w[n] == Letter::a) ++n;
    Word x = w.slice(n);
    // a * X_{(1 + a + ... + a^{n-1}) x}
    NCSeries head;
    Word ax = x;
    for (std::size_t i = 0; i < n; ++i) {
      head += eval(kind, ax);
      ax = Word{Letter::a} + ax;
    }
    RationalFactor f = kind == Kind::G ? RationalFactor::b_over_one_minus_b() : RationalFactor::var();
    result = ncseries::left_mul_a(head) +
             ncseries::left_mul_rf(f, eval(kind, Word::power(Letter::a, n - 1) + x));
  }

  std::lock_guard lock(mu_);
  memo.emplace(w, result);
  return result;
}

NCSeries InvariantEngine::eval_linear(Kind kind, const KElement& x) {
  NCSeries s;
  for (const auto& [w, c] : x.terms()) s += ncseries::series_scale(c, eval(kind, w));
  return s;
}

NCSeries InvariantEngine::gser(const KElement& x) { return eval_linear(Kind::G, x); }
NCSeries InvariantEngine::gser_smooth(const KElement& x) { return gser(kgroup::xi(x)); }
NCSeries InvariantEngine::fser(const KElement& x) { return eval_linear(Kind::F, x); }
NCSeries InvariantEngine::fser_smooth(const KElement& x) { return fser(kgroup::xi(x)); }
NCSeries InvariantEngine::gser_word(const Word& w) { return eval(Kind::G, w); }
NCSeries InvariantEngine::fser_word(const Word& w) { return eval(Kind::F, w); }

Integer InvariantEngine::pair_right(const KElement& x, const Word& lambda, bool smooth) {
  return ncseries::word_coefficient(smooth ? fser_smooth(x) : fser(x), lambda);
}

Integer InvariantEngine::pair_left(const Word& lambda, const KElement& x, bool smooth) {
  KElement y = smooth ? kgroup::transpose(kgroup::sigma(kgroup::transpose(kgroup::gamma(x)))) : x;
  Integer c = ncseries::word_coefficient(fser(kgroup::dual(y)), word::conjugate(lambda));
  return lambda.length() % 2 ? Integer(-c) : c;
}

Integer InvariantEngine::pair(const KElement& x, const KElement& y, bool smooth) {
  NCSeries f = smooth ? fser_smooth(x) : fser(x);
  Integer total = 0;
  for (const auto& [w, c] : y.terms()) total += c * ncseries::word_coefficient(f, w);
  return total;
}

Integer InvariantEngine::mult(const KElement& x, const Word& lambda, bool smooth) {
  return ncseries::word_coefficient(smooth ? gser_smooth(x) : gser(x), lambda);
}

HilbertResult InvariantEngine::hilbert(const KElement& x, bool smooth) {
  KElement y = smooth ? kgroup::xi(x) : x;
  RationalFactor h;
  for (const auto& [w, c] : y.terms()) {
    Poly num(w.length() + 1);
    num[w.length()] = c;
    h = h + RationalFactor(std::move(num), unsigned(word::rank(w)), 0);
  }
  return {h, pole_order_at_one(h)};
}

EffectivityVerdict InvariantEngine::effective(const KElement& x, std::size_t bound, bool smooth) {
  auto coeffs = ncseries::expand(smooth ? gser_smooth(x) : gser(x), bound);
  for (const Word& w : word::all_words_up_to(bound)) {
    auto it = coeffs.find(w);
    if (it != coeffs.end() && it->second < 0) return NotEffective{w, it->second};
  }
  return EffectiveUpTo{bound};
}

namespace invariants {

long level_upper(const KElement& x) {
  long lev = kMinusInfinity;
  for (const auto& [w, c] : x.terms()) lev = std::max(lev, long(word::rank(w)));
  return lev;
}

InvariantEngine& shared_engine() {
  static InvariantEngine engine;
  return engine;
}

NCSeries gser(const KElement& x) { return shared_engine().gser(x); }
NCSeries gser_smooth(const KElement& x) { return shared_engine().gser_smooth(x); }
NCSeries fser(const KElement& x) { return shared_engine().fser(x); }
NCSeries fser_smooth(const KElement& x) { return shared_engine().fser_smooth(x); }
Integer pair_right(const KElement& x, const Word& l, bool s) { return shared_engine().pair_right(x, l, s); }
Integer pair_left(const Word& l, const KElement& x, bool s) { return shared_engine().pair_left(l, x, s); }
Integer pair(const KElement& x, const KElement& y, bool s) { return shared_engine().pair(x, y, s); }
Integer mult(const KElement& x, const Word& l, bool s) { return shared_engine().mult(x, l, s); }
HilbertResult hilbert(const KElement& x, bool s) { return shared_engine().hilbert(x, s); }
EffectivityVerdict effective(const KElement& x, std::size_t b, bool s) {
  return shared_engine().effective(x, b, s);
}

}  // namespace invariants
}  // namespace incmon
