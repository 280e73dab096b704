#include "incmon/monomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace incmon::monomial {

bool is_valid_tuple(const MonomialTuple& t) {
  int prev = 0;
  for (int x : t) {
    if (x <= prev) return false;
    prev = x;
  }
  return true;
}

ExponentVector tuple_to_exponents(const MonomialTuple& t) {
  if (!is_valid_tuple(t)) throw std::invalid_argument("tuple must be strictly increasing and positive");
  ExponentVector e;
  int prev = 0;
  for (int x : t) {
    e.push_back(x - prev - 1);
    prev = x;
  }
  return e;
}

MonomialTuple exponents_to_tuple(const ExponentVector& e) {
  MonomialTuple t;
  int prev = 0;
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("exponents must be non-negative");
    prev += x + 1;
    t.push_back(prev);
  }
  return t;
}

bool submodule_member(const std::vector<MonomialTuple>& gens, const MonomialTuple& t) {
  ExponentVector et = tuple_to_exponents(t);
  for (const auto& g : gens)
    if (g.size() != t.size()) throw std::invalid_argument("generators and tuple differ in length");
  for (const auto& g : gens) {
    ExponentVector eg = tuple_to_exponents(g);
    bool divides = true;
    for (std::size_t k = 0; k < et.size() && divides; ++k) divides = et[k] >= eg[k];
    if (divides) return true;
  }
  return false;
}

bool lex_less(const MonomialTuple& s, const MonomialTuple& t) {
  return std::lexicographical_compare(s.rbegin(), s.rend(), t.rbegin(), t.rend());
}

MonomialTuple initial_tuple(const TupleCombination& v) {
  const MonomialTuple* best = nullptr;
  for (const auto& [t, c] : v) {
    if (c.is_zero()) continue;
    if (best && best->size() != t.size()) throw std::invalid_argument("inhomogeneous combination");
    if (!best || lex_less(*best, t)) best = &t;
  }
  if (!best) throw std::invalid_argument("initial term of zero");
  return *best;
}

MonomialTuple apply_alpha(int i, const MonomialTuple& t) {
  MonomialTuple u = t;
  for (int& x : u)
    if (x >= i) ++x;
  return u;
}

TupleCombination apply_alpha(int i, const TupleCombination& v) {
  TupleCombination r;
  for (const auto& [t, c] : v)
    if (!c.is_zero()) r[apply_alpha(i, t)] += c;
  return r;
}

std::optional<std::size_t> chain_stabilizes(const std::vector<std::vector<MonomialTuple>>& chain) {
  if (chain.empty()) return std::nullopt;
  auto contained = [](const std::vector<MonomialTuple>& a, const std::vector<MonomialTuple>& b) {
    return std::all_of(a.begin(), a.end(), [&](const MonomialTuple& t) { return submodule_member(b, t); });
  };
  auto same = [&](std::size_t i, std::size_t j) {
    return contained(chain[i], chain[j]) && contained(chain[j], chain[i]);
  };
  // Stabilization must be witnessed by at least one later set.
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    bool ok = true;
    for (std::size_t j = k + 1; j < chain.size() && ok; ++j) ok = same(k, j);
    if (ok) return k;
  }
  return chain.size() == 1 ? std::optional<std::size_t>(0) : std::nullopt;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
    int x = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    v.push_back(x);
  }
  return v;
}

std::string format_int_list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace incmon::monomial
