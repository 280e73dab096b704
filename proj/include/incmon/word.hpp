#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace incmon {

enum class Letter : char { a = 'a', b = 'b' };

// A finite string over {a, b}. Letters are kept as a plain sequence.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> ls) : letters_(ls) {}
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}

  // Accepts only [ab]*; throws std::invalid_argument otherwise.
  static Word parse(std::string_view s);
  static Word power(Letter l, std::size_t n) { return Word(std::vector<Letter>(n, l)); }

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Substring [pos, pos+len).
  Word slice(std::size_t pos, std::size_t len = std::string::npos) const;

  // Plain lowercase string, "" for the empty word.
  std::string str() const;
  // Ring-context form: "1" for the empty word and runs compressed, e.g. "ab^2a".
  std::string pretty() const;

  friend Word operator+(const Word& x, const Word& y);
  Word& operator+=(const Word& y);
  Word& push_back(Letter l) {
    letters_.push_back(l);
    return *this;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

namespace word {

std::size_t rank(const Word& w);
// (a_0, ..., a_r) with w = b^{a_0} a b^{a_1} ... a b^{a_r}.
std::vector<std::size_t> gap_decomposition(const Word& w);
Word from_gaps(const std::vector<std::size_t>& gaps);
Word conjugate(const Word& w);
Word reverse(const Word& w);
Word concat(const Word& w1, const Word& w2);

// Every word of the given length, in lexicographic order with a < b.
std::vector<Word> all_words(std::size_t length);
// Every word of length <= max_length, by length then lexicographic.
std::vector<Word> all_words_up_to(std::size_t max_length);

}  // namespace word

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace incmon
