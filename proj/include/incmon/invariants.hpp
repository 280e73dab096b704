#pragma once

#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <variant>

#include "incmon/kgroup.hpp"
#include "incmon/ncseries.hpp"

namespace incmon {

struct EffectiveUpTo {
  std::size_t bound;
  friend bool operator==(const EffectiveUpTo&, const EffectiveUpTo&) = default;
};

struct NotEffective {
  Word witness;
  Integer coefficient;  // < 0
  friend bool operator==(const NotEffective&, const NotEffective&) = default;
};

using EffectivityVerdict = std::variant<EffectiveUpTo, NotEffective>;

struct HilbertResult {
  RationalFactor series;  // in t
  unsigned pole_order;
};

// Level of the zero class.
inline constexpr long kMinusInfinity = std::numeric_limits<long>::min();

// Recurrence engine. The memo tables are guarded, so one instance may be shared.
class InvariantEngine {
 public:
  NCSeries gser(const KElement& x);
  NCSeries gser_smooth(const KElement& x);
  NCSeries fser(const KElement& x);
  NCSeries fser_smooth(const KElement& x);

  NCSeries gser_word(const Word& w);
  NCSeries fser_word(const Word& w);

  Integer pair_right(const KElement& x, const Word& lambda, bool smooth);
  Integer pair_left(const Word& lambda, const KElement& x, bool smooth);
  Integer pair(const KElement& x, const KElement& y, bool smooth);
  Integer mult(const KElement& x, const Word& lambda, bool smooth);
  HilbertResult hilbert(const KElement& x, bool smooth);
  EffectivityVerdict effective(const KElement& x, std::size_t bound, bool smooth);

  // Number of recursive evaluations performed so far (memo misses).
  std::size_t evaluations() const { return evaluations_; }

 private:
  enum class Kind { G, F };
  NCSeries eval(Kind kind, const Word& w);
  NCSeries eval_linear(Kind kind, const KElement& x);

  std::mutex mu_;
  std::unordered_map<Word, NCSeries, WordHash> g_memo_, f_memo_;
  std::size_t evaluations_ = 0;
};

namespace invariants {

// Max rank of a word with nonzero coefficient, kMinusInfinity for 0.
long level_upper(const KElement& x);

// Convenience wrappers over a process-wide engine.
NCSeries gser(const KElement& x);
NCSeries gser_smooth(const KElement& x);
NCSeries fser(const KElement& x);
NCSeries fser_smooth(const KElement& x);
Integer pair_right(const KElement& x, const Word& lambda, bool smooth = false);
Integer pair_left(const Word& lambda, const KElement& x, bool smooth = false);
Integer pair(const KElement& x, const KElement& y, bool smooth = false);
Integer mult(const KElement& x, const Word& lambda, bool smooth = false);
HilbertResult hilbert(const KElement& x, bool smooth = false);
EffectivityVerdict effective(const KElement& x, std::size_t bound, bool smooth = false);

InvariantEngine& shared_engine();

}  // namespace invariants
}  // namespace incmon
