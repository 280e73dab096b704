#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "incmon/kgroup.hpp"
#include "incmon/linalg.hpp"
#include "incmon/scalar.hpp"
#include "incmon/word.hpp"

namespace incmon {

// Graded module truncated at degree D. alpha(n, i) : M_n -> M_{n+1} is stored for
// 0 <= n < D and 1 <= i <= n; for i > n the generator acts by the identity.
template <class Scalar>
class TruncatedModule {
 public:
  using Matrix = Eigen::SparseMatrix<Scalar>;

  TruncatedModule() = default;
  TruncatedModule(int D, std::vector<int> dims);

  int D() const { return D_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int n) const { return n < 0 || n > D_ ? 0 : dims_[std::size_t(n)]; }
  long total_dim() const;

  const Matrix& alpha(int n, int i) const { return alpha_[std::size_t(n)][std::size_t(i - 1)]; }
  void set_alpha(int n, int i, Matrix m) { alpha_[std::size_t(n)][std::size_t(i - 1)] = std::move(m); }

  // alpha_i applied to basis vector j of M_n, with the identity convention for i > n.
  SparseVec<Scalar> apply(int n, int i, int j) const;

 private:
  int D_ = 0;
  std::vector<int> dims_{0};
  std::vector<std::vector<Matrix>> alpha_{{}};
};

struct BettiTable {
  std::map<std::pair<int, int>, long> entries;  // (row i, column j), nonzero only
  int reliable_degree = -1;                     // entries certified for i + j <= this
  long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct HomResult {
  long dim = 0;
  bool reliable = false;
  int generator_degree = 0;
  int relation_degree = 0;
};

// Dimensions per degree with the largest degree that is certified.
struct GradedDims {
  std::vector<long> dims;
  int reliable_degree = -1;
};

namespace modengine {

template <class S> TruncatedModule<S> zero_module(int D);
template <class S> TruncatedModule<S> std_module(const Word& lambda, int D);
template <class S> TruncatedModule<S> simple(int n, int D);
template <class S> TruncatedModule<S> principal(int r, int D);
template <class S> TruncatedModule<S> trivial(int D);

template <class S> TruncatedModule<S> direct_sum(const TruncatedModule<S>& M, const TruncatedModule<S>& N);
template <class S> TruncatedModule<S> concat(const TruncatedModule<S>& M, const TruncatedModule<S>& N);
// Graded shift: degree n of the result is M_{n+1}; D drops by one.
template <class S> TruncatedModule<S> shift(const TruncatedModule<S>& M);
// Shift as an ungraded module: the graded shift plus M_0 as trivial summands.
template <class S> TruncatedModule<S> smooth_shift(const TruncatedModule<S>& M);
template <class S> TruncatedModule<S> transpose(const TruncatedModule<S>& M);
template <class S> TruncatedModule<S> coinduction(const TruncatedModule<S>& M);
template <class S> TruncatedModule<S> induction(const TruncatedModule<S>& M);
// Positive-degree part M_+.
template <class S> TruncatedModule<S> positive_part(const TruncatedModule<S>& M);
// Same module with a smaller truncation degree.
template <class S> TruncatedModule<S> truncate(const TruncatedModule<S>& M, int D);

// J^n: J^0 trivial, J^n the (n-1)-fold coinduction of the simple in degree 1.
template <class S> TruncatedModule<S> jmodule(int n, int D);
template <class S> TruncatedModule<S> injective_module(const Word& lambda, int D);

template <class S> std::vector<long> t_functor(const TruncatedModule<S>& M);
template <class S> BettiTable koszul_betti(const TruncatedModule<S>& M);
// dim H^{-m}(K(M))_n for all n <= D, indexed [m][n].
template <class S> std::vector<std::vector<long>> koszul_homology(const TruncatedModule<S>& M);
// d o d == 0 on every stored degree.
template <class S> bool koszul_square_zero(const TruncatedModule<S>& M);

template <class S> HomResult hom_dim(const TruncatedModule<S>& M, const TruncatedModule<S>& N);

// Total dimension of tau^{<r}(M); r = 0 gives 0.
template <class S> long tau_dim(const TruncatedModule<S>& M, int r);
// Canonically graded pieces G_0 .. G_{r-1} of tau^{<r}(M).
template <class S> GradedDims canonical_grading_pieces(const TruncatedModule<S>& M, int r);
template <class S> GradedDims xi_truncated(const TruncatedModule<S>& M);
// Largest degree carrying a generator (max n with T(M)_n != 0), -1 for zero.
template <class S> int generator_degree(const TruncatedModule<S>& M);

template <class S> long saturation_rank(const TruncatedModule<S>& M, int n);

template <class S> std::vector<std::string> verify_module(const TruncatedModule<S>& M);

// Class sum dim(M_n) b^n; meaningful for modules of finite length inside the truncation.
template <class S> KElement finite_length_class(const TruncatedModule<S>& M);

TruncatedModule<F32003> to_prime_field(const TruncatedModule<Rational>& M);

}  // namespace modengine

#define INCMON_MODENGINE_EXTERN(S) extern template class TruncatedModule<S>;
INCMON_MODENGINE_EXTERN(Rational)
INCMON_MODENGINE_EXTERN(F32003)
#undef INCMON_MODENGINE_EXTERN

using Module = TruncatedModule<Rational>;

}  // namespace incmon
