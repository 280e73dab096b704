#include "incmon/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace incmon {

Word Word::parse(std::string_view s) {
  std::vector<Letter> ls;
  ls.reserve(s.size());
  for (char c : s) {
    if (c == 'a')
      ls.push_back(Letter::a);
    else if (c == 'b')
      ls.push_back(Letter::b);
    else
      throw std::invalid_argument("not a word over {a,b}: '" + std::string(s) + "'");
  }
  return Word(std::move(ls));
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  if (pos >= letters_.size()) return {};
  std::size_t end = len == std::string::npos ? letters_.size()
                                              : std::min(letters_.size(), pos + len);
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + end));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(static_cast<char>(l));
  return s;
}

std::string Word::pretty() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size();) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    s.push_back(static_cast<char>(letters_[i]));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

Word operator+(const Word& x, const Word& y) {
  Word r = x;
  r += y;
  return r;
}

Word& Word::operator+=(const Word& y) {
  letters_.insert(letters_.end(), y.letters_.begin(), y.letters_.end());
  return *this;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.length() * 0x9e3779b97f4a7c15ULL;
  for (Letter l : w.letters()) h = (h << 1) ^ (h >> 61) ^ (l == Letter::b ? 0x5bd1e995 : 0x27d4eb2d);
  return h;
}

namespace word {

std::size_t rank(const Word& w) {
  return static_cast<std::size_t>(std::count(w.letters().begin(), w.letters().end(), Letter::a));
}

std::vector<std::size_t> gap_decomposition(const Word& w) {
  std::vector<std::size_t> gaps{0};
  for (Letter l : w.letters()) {
    if (l == Letter::a)
      gaps.push_back(0);
    else
      ++gaps.back();
  }
  return gaps;
}

Word from_gaps(const std::vector<std::size_t>& gaps) {
  Word w;
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    if (k) w.push_back(Letter::a);
    for (std::size_t j = 0; j < gaps[k]; ++j) w.push_back(Letter::b);
  }
  return w;
}

Word conjugate(const Word& w) {
  std::vector<Letter> ls = w.letters();
  for (Letter& l : ls) l = l == Letter::a ? Letter::b : Letter::a;
  return Word(std::move(ls));
}

Word reverse(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::reverse(ls.begin(), ls.end());
  return Word(std::move(ls));
}

Word concat(const Word& w1, const Word& w2) { return w1 + w2; }

std::vector<Word> all_words(std::size_t length) {
  std::vector<Word> out;
  std::size_t n = std::size_t(1) << length;
  out.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Letter> ls(length);
    for (std::size_t i = 0; i < length; ++i)
      ls[i] = (m >> (length - 1 - i)) & 1 ? Letter::b : Letter::a;
    out.emplace_back(std::move(ls));
  }
  return out;
}

std::vector<Word> all_words_up_to(std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t l = 0; l <= max_length; ++l) {
    auto ws = all_words(l);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace word
}  // namespace incmon
