#include "incmon/linalg.hpp"

#include <algorithm>

#include <boost/multiprecision/integer.hpp>

namespace incmon::linalg {

namespace {

bool is_zero(const Integer& x) { return x == 0; }

// sa*a + sb*b
template <class S>
SparseVec<S> combine(const S& sa, const SparseVec<S>& a, const S& sb, const SparseVec<S>& b) {
  SparseVec<S> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.emplace_back(a[i].first, sa * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, sb * b[j].second);
      ++j;
    } else {
      S v = sa * a[i].second + sb * b[j].second;
      if (!is_zero(v)) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

void normalize(SparseVec<Integer>& row) {
  Integer g = 0;
  for (const auto& e : row) {
    g = boost::multiprecision::gcd(g, e.second);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& e : row) e.second /= g;
}

void normalize(SparseVec<F32003>& row) {
  F32003 inv = row.front().second.inverse();
  for (auto& e : row) e.second *= inv;
}

void eliminate(SparseVec<Integer>& row, const SparseVec<Integer>& p) {
  Integer x = row.front().second, y = p.front().second;
  Integer g = boost::multiprecision::gcd(x, y);
  row = combine(Integer(y / g), row, Integer(-x / g), p);
}

void eliminate(SparseVec<F32003>& row, const SparseVec<F32003>& p) {
  row = combine(F32003(1), row, -row.front().second, p);
}

}  // namespace

template <class S>
Echelon<S>::Echelon(std::size_t ncols) : pivot_of_col_(ncols, -1) {}

template <class S>
bool Echelon<S>::add(SparseVec<S> row) {
  std::erase_if(row, [](const auto& e) { return is_zero(e.second); });
  while (!row.empty()) {
    int c = row.front().first;
    if (std::size_t(c) >= pivot_of_col_.size()) pivot_of_col_.resize(std::size_t(c) + 1, -1);
    int p = pivot_of_col_[std::size_t(c)];
    if (p < 0) {
      normalize(row);
      pivot_of_col_[std::size_t(c)] = int(pivots_.size());
      pivots_.push_back(std::move(row));
      ++rank_;
      return true;
    }
    eliminate(row, pivots_[std::size_t(p)]);
  }
  return false;
}

bool Echelon<Rational>::add(const SparseVec<Rational>& row) {
  Integer l = 1;
  for (const auto& e : row) l = boost::multiprecision::lcm(l, Integer(denominator(e.second)));
  SparseVec<Integer> r;
  r.reserve(row.size());
  for (const auto& e : row)
    if (!e.second.is_zero()) r.emplace_back(e.first, Integer(numerator(e.second) * (l / denominator(e.second))));
  return inner_.add(std::move(r));
}

template <class S>
std::size_t rank(std::vector<SparseVec<S>> rows, std::size_t ncols) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  Echelon<S> e(ncols);
  for (auto& r : rows) {
    if (r.empty()) continue;
    e.add(std::move(r));
  }
  return e.rank();
}

template class Echelon<Integer>;
template class Echelon<F32003>;
template std::size_t rank<Integer>(std::vector<SparseVec<Integer>>, std::size_t);
template std::size_t rank<Rational>(std::vector<SparseVec<Rational>>, std::size_t);
template std::size_t rank<F32003>(std::vector<SparseVec<F32003>>, std::size_t);

}  // namespace incmon::linalg
