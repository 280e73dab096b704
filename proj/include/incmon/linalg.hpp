#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "incmon/scalar.hpp"

namespace incmon {

// Sorted by index, no explicit zeros.
template <class S>
using SparseVec = std::vector<std::pair<int, S>>;

namespace linalg {

// Incremental row echelon form. Rows over Q are cleared to primitive integer rows and
// eliminated fraction-free; over F_p rows are scaled to a unit leading entry.
template <class S>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols = 0);
  // Returns true if the row was independent of those already added.
  bool add(SparseVec<S> row);
  std::size_t rank() const { return rank_; }

 private:
  std::vector<int> pivot_of_col_;
  std::vector<SparseVec<S>> pivots_;
  std::size_t rank_ = 0;
};

template <>
class Echelon<Rational> {
 public:
  explicit Echelon(std::size_t ncols = 0) : inner_(ncols) {}
  bool add(const SparseVec<Rational>& row);
  std::size_t rank() const { return inner_.rank(); }

 private:
  Echelon<Integer> inner_;
};

// Rank of the span of the given vectors; shorter vectors are inserted first.
template <class S>
std::size_t rank(std::vector<SparseVec<S>> rows, std::size_t ncols);

extern template class Echelon<Integer>;
extern template class Echelon<F32003>;
extern template std::size_t rank<Integer>(std::vector<SparseVec<Integer>>, std::size_t);
extern template std::size_t rank<Rational>(std::vector<SparseVec<Rational>>, std::size_t);
extern template std::size_t rank<F32003>(std::vector<SparseVec<F32003>>, std::size_t);

}  // namespace linalg
}  // namespace incmon
