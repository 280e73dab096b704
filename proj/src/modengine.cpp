#include "incmon/modengine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace incmon {

template <class S>
TruncatedModule<S>::TruncatedModule(int D, std::vector<int> dims) : D_(D), dims_(std::move(dims)) {
  if (D < 0) throw std::domain_error("negative truncation degree");
  if (dims_.size() != std::size_t(D) + 1) throw std::invalid_argument("dims must have D+1 entries");
  alpha_.resize(std::size_t(D) + 1);
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) alpha_[std::size_t(n)].emplace_back(dims_[std::size_t(n) + 1], dims_[std::size_t(n)]);
}

template <class S>
long TruncatedModule<S>::total_dim() const {
  long t = 0;
  for (int d : dims_) t += d;
  return t;
}

template <class S>
SparseVec<S> TruncatedModule<S>::apply(int n, int i, int j) const {
  SparseVec<S> v;
  if (i > n) {
    v.emplace_back(j, S(1));
    return v;
  }
  const Matrix& m = alpha(n, i);
  for (typename Matrix::InnerIterator it(m, j); it; ++it)
    if (!is_zero(it.value())) v.emplace_back(int(it.row()), it.value());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

namespace modengine {

namespace {

template <class S>
using Mat = typename TruncatedModule<S>::Matrix;

template <class S>
Mat<S> from_columns(int rows, const std::vector<SparseVec<S>>& cols) {
  std::vector<Eigen::Triplet<S>> trips;
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) trips.emplace_back(r, int(c), v);
  Mat<S> m(rows, int(cols.size()));
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

template <class S>
void accumulate(std::map<int, S>& acc, int idx, const S& v) {
  auto [it, fresh] = acc.try_emplace(idx, v);
  if (!fresh) {
    it->second += v;
    if (is_zero(it->second)) acc.erase(it);
  }
}

template <class S>
SparseVec<S> to_vec(const std::map<int, S>& acc) {
  return SparseVec<S>(acc.begin(), acc.end());
}

template <class S>
TruncatedModule<S> std_module_impl(const Word& lambda, int D) {
  const int k = int(lambda.length());
  std::vector<std::vector<std::vector<int>>> basis(std::size_t(D) + 1);
  std::vector<std::map<std::vector<int>, int>> index(std::size_t(D) + 1);
  if (k == 0) {
    basis[0].push_back({});
  } else {
    std::vector<int> t;
    std::function<void(int, int)> fill = [&](int pos, int prev) {
      if (pos == k) {
        basis[std::size_t(t.back())].push_back(t);
        return;
      }
      int lo = prev + 1, hi = lambda[std::size_t(pos)] == Letter::b ? prev + 1 : D;
      for (int x = lo; x <= std::min(hi, D); ++x) {
        t.push_back(x);
        fill(pos + 1, x);
        t.pop_back();
      }
    };
    fill(0, 0);
  }
  std::vector<int> dims(std::size_t(D) + 1);
  for (int n = 0; n <= D; ++n) {
    std::sort(basis[std::size_t(n)].begin(), basis[std::size_t(n)].end());
    dims[std::size_t(n)] = int(basis[std::size_t(n)].size());
    for (std::size_t j = 0; j < basis[std::size_t(n)].size(); ++j) index[std::size_t(n)][basis[std::size_t(n)][j]] = int(j);
  }
  TruncatedModule<S> M(D, dims);
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<SparseVec<S>> cols;
      for (const auto& t : basis[std::size_t(n)]) {
        std::vector<int> u = t;
        for (int& x : u)
          if (x >= i) ++x;
        bool ok = true;
        for (int p = 0; p < k && ok; ++p)
          if (lambda[std::size_t(p)] == Letter::b) ok = u[std::size_t(p)] - (p ? u[std::size_t(p) - 1] : 0) == 1;
        SparseVec<S> col;
        if (ok) col.emplace_back(index[std::size_t(n) + 1].at(u), S(1));
        cols.push_back(std::move(col));
      }
      M.set_alpha(n, i, from_columns<S>(dims[std::size_t(n) + 1], cols));
    }
  return M;
}

template <class S>
std::vector<std::size_t> offsets(const TruncatedModule<S>& M) {
  std::vector<std::size_t> off(std::size_t(M.D()) + 2, 0);
  for (int n = 0; n <= M.D(); ++n) off[std::size_t(n) + 1] = off[std::size_t(n)] + std::size_t(M.dim(n));
  return off;
}

// Subsets of {1..n} of size m, increasing, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m < 0 || m > n) return out;
  std::vector<int> s(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) s[std::size_t(i)] = i + 1;
  while (true) {
    out.push_back(s);
    int i = m - 1;
    while (i >= 0 && s[std::size_t(i)] == n - m + i + 1) --i;
    if (i < 0) break;
    ++s[std::size_t(i)];
    for (int j = i + 1; j < m; ++j) s[std::size_t(j)] = s[std::size_t(j) - 1] + 1;
  }
  return out;
}

// Columns of d : K^{-m}(M)_n -> K^{-(m-1)}(M)_n, in basis order (subset, x).
template <class S>
std::vector<SparseVec<S>> koszul_differential(const TruncatedModule<S>& M, int n, int m) {
  std::vector<SparseVec<S>> cols;
  if (m < 1 || n < 1 || m > n - 1) return cols;
  auto src = subsets(n - 1, m), dst = subsets(n - 1, m - 1);
  std::map<std::vector<int>, int> dst_index;
  for (std::size_t k = 0; k < dst.size(); ++k) dst_index[dst[k]] = int(k);
  const int dx = M.dim(n - m), dy = M.dim(n - m + 1);
  for (const auto& A : src)
    for (int x = 0; x < dx; ++x) {
      std::map<int, S> acc;
      for (int j = 1; j <= m; ++j) {
        int a = A[std::size_t(j) - 1];
        std::vector<int> B = A;
        B.erase(B.begin() + (j - 1));
        int base = dst_index.at(B) * dy;
        S sign = (j % 2 == 1) ? S(1) : S(-1);
        for (const auto& [y, v] : M.apply(n - m, a - j + 1, x)) accumulate(acc, base + y, S(sign * v));
      }
      cols.push_back(to_vec(acc));
    }
  return cols;
}

template <class S>
long koszul_term_dim(const TruncatedModule<S>& M, int n, int m) {
  if (n == 0) return m == 0 ? M.dim(0) : 0;
  return long(binomial(n - 1, m).template convert_to<long>()) * M.dim(n - m);
}

// H^{-m}_n for 0 <= m <= max_m.
template <class S>
std::vector<long> koszul_homology_at(const TruncatedModule<S>& M, int n, int max_m) {
  std::vector<long> ranks(std::size_t(max_m) + 2, 0);
  for (int m = 1; m <= max_m + 1; ++m) {
    auto cols = koszul_differential(M, n, m);
    long rows = koszul_term_dim(M, n, m - 1);
    ranks[std::size_t(m)] = long(linalg::rank(std::move(cols), std::size_t(rows)));
  }
  std::vector<long> h(std::size_t(max_m) + 1);
  for (int m = 0; m <= max_m; ++m)
    h[std::size_t(m)] = koszul_term_dim(M, n, m) - ranks[std::size_t(m)] - ranks[std::size_t(m) + 1];
  return h;
}

// Largest n <= D with H^{-1}(K(M))_n != 0, i.e. the top degree of a minimal relation; 0 if none.
template <class S>
int relation_degree(const TruncatedModule<S>& M) {
  for (int n = M.D(); n >= 2; --n)
    if (koszul_homology_at(M, n, 1)[1] != 0) return n;
  return 0;
}

// tau^{<r} computed inside the truncation is exact once D >= r + presentation_degree - 1.
template <class S>
int presentation_degree(const TruncatedModule<S>& M) {
  return std::max({0, generator_degree(M), relation_degree(M)});
}

template <class S>
void require_same_degree(const TruncatedModule<S>& M, const TruncatedModule<S>& N) {
  if (M.D() != N.D()) throw std::domain_error("modules must share the truncation degree");
}

}  // namespace

template <class S>
TruncatedModule<S> zero_module(int D) {
  return TruncatedModule<S>(D, std::vector<int>(std::size_t(D) + 1, 0));
}

template <class S>
TruncatedModule<S> std_module(const Word& lambda, int D) {
  if (D < 0) throw std::domain_error("negative truncation degree");
  return std_module_impl<S>(lambda, D);
}

template <class S>
TruncatedModule<S> simple(int n, int D) {
  if (n < 0 || n > D) throw std::domain_error("simple: degree exceeds truncation");
  return std_module_impl<S>(Word::power(Letter::b, std::size_t(n)), D);
}

template <class S>
TruncatedModule<S> principal(int r, int D) {
  if (r < 0 || r > D) throw std::domain_error("principal: rank exceeds truncation");
  return std_module_impl<S>(Word::power(Letter::a, std::size_t(r)), D);
}

template <class S>
TruncatedModule<S> trivial(int D) {
  return std_module<S>(Word{}, D);
}

template <class S>
TruncatedModule<S> direct_sum(const TruncatedModule<S>& M, const TruncatedModule<S>& N) {
  require_same_degree(M, N);
  const int D = M.D();
  std::vector<int> dims(std::size_t(D) + 1);
  for (int n = 0; n <= D; ++n) dims[std::size_t(n)] = M.dim(n) + N.dim(n);
  TruncatedModule<S> R(D, dims);
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<SparseVec<S>> cols;
      for (int j = 0; j < M.dim(n); ++j) cols.push_back(M.apply(n, i, j));
      for (int j = 0; j < N.dim(n); ++j) {
        auto v = N.apply(n, i, j);
        for (auto& e : v) e.first += M.dim(n + 1);
        cols.push_back(std::move(v));
      }
      R.set_alpha(n, i, from_columns<S>(dims[std::size_t(n) + 1], cols));
    }
  return R;
}

template <class S>
TruncatedModule<S> concat(const TruncatedModule<S>& M, const TruncatedModule<S>& N) {
  require_same_degree(M, N);
  const int D = M.D();
  // offset[n][i]: start of M_i (x) N_{n-i} inside degree n
  std::vector<std::vector<int>> off(std::size_t(D) + 1);
  std::vector<int> dims(std::size_t(D) + 1);
  for (int n = 0; n <= D; ++n) {
    int acc = 0;
    for (int i = 0; i <= n; ++i) {
      off[std::size_t(n)].push_back(acc);
      acc += M.dim(i) * N.dim(n - i);
    }
    dims[std::size_t(n)] = acc;
  }
  TruncatedModule<S> R(D, dims);
  for (int n = 0; n < D; ++n)
    for (int k = 1; k <= n; ++k) {
      std::vector<SparseVec<S>> cols;
      for (int i = 0; i <= n; ++i) {
        const int j = n - i;
        for (int p = 0; p < M.dim(i); ++p)
          for (int q = 0; q < N.dim(j); ++q) {
            SparseVec<S> col;
            if (k <= i) {
              for (const auto& [p2, v] : M.apply(i, k, p))
                col.emplace_back(off[std::size_t(n) + 1][std::size_t(i) + 1] + p2 * N.dim(j) + q, v);
            } else {
              for (const auto& [q2, v] : N.apply(j, k - i, q))
                col.emplace_back(off[std::size_t(n) + 1][std::size_t(i)] + p * N.dim(j + 1) + q2, v);
            }
            cols.push_back(std::move(col));
          }
      }
      R.set_alpha(n, k, from_columns<S>(dims[std::size_t(n) + 1], cols));
    }
  return R;
}

template <class S>
TruncatedModule<S> shift(const TruncatedModule<S>& M) {
  if (M.D() < 1) throw std::domain_error("shift needs truncation degree >= 1");
  const int D = M.D() - 1;
  std::vector<int> dims(std::size_t(D) + 1);
  for (int n = 0; n <= D; ++n) dims[std::size_t(n)] = M.dim(n + 1);
  TruncatedModule<S> R(D, dims);
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) R.set_alpha(n, i, M.alpha(n + 1, i + 1));
  return R;
}

template <class S>
TruncatedModule<S> smooth_shift(const TruncatedModule<S>& M) {
  TruncatedModule<S> R = shift(M);
  for (int c = 0; c < M.dim(0); ++c) R = direct_sum(R, trivial<S>(R.D()));
  return R;
}

template <class S>
TruncatedModule<S> transpose(const TruncatedModule<S>& M) {
  TruncatedModule<S> R(M.D(), M.dims());
  for (int n = 0; n < M.D(); ++n)
    for (int i = 1; i <= n; ++i) R.set_alpha(n, i, M.alpha(n, n + 1 - i));
  return R;
}

template <class S>
TruncatedModule<S> coinduction(const TruncatedModule<S>& M) {
  const int D = M.D();
  std::vector<int> dims(std::size_t(D) + 1);
  for (int n = 0; n <= D; ++n) dims[std::size_t(n)] = M.dim(n) + M.dim(n - 1);
  TruncatedModule<S> R(D, dims);
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<SparseVec<S>> cols;
      const int top = M.dim(n + 1);  // [M_{n+1}]_0 comes first in degree n+1
      for (int j = 0; j < M.dim(n); ++j) {
        SparseVec<S> col = M.apply(n, i, j);
        if (i == 1) col.emplace_back(top + j, S(1));
        cols.push_back(std::move(col));
      }
      for (int j = 0; j < M.dim(n - 1); ++j) {
        SparseVec<S> col;
        if (i >= 2)
          for (const auto& [y, v] : M.apply(n - 1, i - 1, j)) col.emplace_back(top + y, v);
        cols.push_back(std::move(col));
      }
      R.set_alpha(n, i, from_columns<S>(dims[std::size_t(n) + 1], cols));
    }
  return R;
}

template <class S>
TruncatedModule<S> induction(const TruncatedModule<S>& M) {
  const int D = M.D();
  // degree m holds blocks {M_{m-1-k}}_k for k = 0..m-1
  auto block_off = [&](int m, int k) {
    int acc = 0;
    for (int kk = 0; kk < k; ++kk) acc += M.dim(m - 1 - kk);
    return acc;
  };
  std::vector<int> dims(std::size_t(D) + 1);
  for (int m = 0; m <= D; ++m) dims[std::size_t(m)] = block_off(m, m);
  TruncatedModule<S> R(D, dims);
  for (int m = 0; m < D; ++m)
    for (int i = 1; i <= m; ++i) {
      std::vector<SparseVec<S>> cols;
      for (int k = 0; k < m; ++k) {
        const int n = m - 1 - k;
        for (int j = 0; j < M.dim(n); ++j) {
          SparseVec<S> col;
          if (i <= k + 1) {
            col.emplace_back(block_off(m + 1, k + 1) + j, S(1));
          } else {
            int base = block_off(m + 1, k);
            for (const auto& [y, v] : M.apply(n, i - k - 1, j)) col.emplace_back(base + y, v);
          }
          cols.push_back(std::move(col));
        }
      }
      R.set_alpha(m, i, from_columns<S>(dims[std::size_t(m) + 1], cols));
    }
  return R;
}

template <class S>
TruncatedModule<S> positive_part(const TruncatedModule<S>& M) {
  std::vector<int> dims = M.dims();
  dims[0] = 0;
  TruncatedModule<S> R(M.D(), dims);
  for (int n = 1; n < M.D(); ++n)
    for (int i = 1; i <= n; ++i) R.set_alpha(n, i, M.alpha(n, i));
  return R;
}

template <class S>
TruncatedModule<S> truncate(const TruncatedModule<S>& M, int D) {
  if (D < 0 || D > M.D()) throw std::domain_error("truncate: degree out of range");
  std::vector<int> dims(M.dims().begin(), M.dims().begin() + D + 1);
  TruncatedModule<S> R(D, dims);
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) R.set_alpha(n, i, M.alpha(n, i));
  return R;
}

template <class S>
TruncatedModule<S> jmodule(int n, int D) {
  if (n < 0) throw std::domain_error("J: negative index");
  if (n == 0) return trivial<S>(D);
  TruncatedModule<S> M = std_module_impl<S>(Word{Letter::b}, D);
  for (int k = 1; k < n; ++k) M = coinduction(M);
  return M;
}

template <class S>
TruncatedModule<S> injective_module(const Word& lambda, int D) {
  auto gaps = word::gap_decomposition(lambda);
  TruncatedModule<S> M = jmodule<S>(int(gaps[0]), D);
  TruncatedModule<S> A1 = std_module_impl<S>(Word{Letter::a}, D);
  for (std::size_t k = 1; k < gaps.size(); ++k) M = concat(concat(M, A1), jmodule<S>(int(gaps[k]), D));
  return M;
}

template <class S>
std::vector<long> t_functor(const TruncatedModule<S>& M) {
  std::vector<long> t(std::size_t(M.D()) + 1);
  t[0] = M.dim(0);
  for (int n = 1; n <= M.D(); ++n) {
    std::vector<SparseVec<S>> cols;
    for (int k = 1; k <= n - 1; ++k)
      for (int j = 0; j < M.dim(n - 1); ++j) cols.push_back(M.apply(n - 1, k, j));
    t[std::size_t(n)] = M.dim(n) - long(linalg::rank(std::move(cols), std::size_t(M.dim(n))));
  }
  return t;
}

template <class S>
int generator_degree(const TruncatedModule<S>& M) {
  auto t = t_functor(M);
  for (int n = M.D(); n >= 0; --n)
    if (t[std::size_t(n)] != 0) return n;
  return -1;
}

template <class S>
std::vector<std::vector<long>> koszul_homology(const TruncatedModule<S>& M) {
  const int D = M.D();
  std::vector<std::vector<long>> h(std::size_t(D) + 1, std::vector<long>(std::size_t(D) + 1, 0));
  for (int n = 0; n <= D; ++n) {
    int max_m = std::max(0, n - 1);
    auto hn = koszul_homology_at(M, n, max_m);
    for (int m = 0; m <= max_m; ++m) h[std::size_t(m)][std::size_t(n)] = hn[std::size_t(m)];
  }
  return h;
}

template <class S>
bool koszul_square_zero(const TruncatedModule<S>& M) {
  for (int n = 2; n <= M.D(); ++n)
    for (int m = 2; m <= n - 1; ++m) {
      auto hi = koszul_differential(M, n, m), lo = koszul_differential(M, n, m - 1);
      Mat<S> A = from_columns<S>(int(koszul_term_dim(M, n, m - 1)), hi);
      Mat<S> B = from_columns<S>(int(koszul_term_dim(M, n, m - 2)), lo);
      Mat<S> P = B * A;
      for (int k = 0; k < P.outerSize(); ++k)
        for (typename Mat<S>::InnerIterator it(P, k); it; ++it)
          if (!is_zero(it.value())) return false;
    }
  return true;
}

template <class S>
BettiTable koszul_betti(const TruncatedModule<S>& M) {
  BettiTable b;
  b.reliable_degree = M.D() - 1;
  auto h = koszul_homology(M);
  for (int n = 0; n <= b.reliable_degree; ++n)
    for (int j = 0; j <= n; ++j) {
      long v = h[std::size_t(j)][std::size_t(n)];
      if (v != 0) b.entries[{n - j, j}] = v;
    }
  return b;
}

template <class S>
HomResult hom_dim(const TruncatedModule<S>& M, const TruncatedModule<S>& N) {
  require_same_degree(M, N);
  const int D = M.D();
  std::vector<long> var_off(std::size_t(D) + 2, 0);
  for (int n = 0; n <= D; ++n) var_off[std::size_t(n) + 1] = var_off[std::size_t(n)] + long(M.dim(n)) * N.dim(n);
  // f_n[p][q] for p in N_n, q in M_n
  auto var = [&](int n, int p, int q) { return int(var_off[std::size_t(n)] + long(p) * M.dim(n) + q); };
  linalg::Echelon<S> ech(std::size_t(var_off.back()));
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto& an = N.alpha(n, i);
      for (int q = 0; q < M.dim(n); ++q) {
        // equation (p', q) of f_{n+1} alpha^M - alpha^N f_n
        std::vector<std::map<int, S>> rows(std::size_t(N.dim(n + 1)));
        auto colM = M.apply(n, i, q);
        for (int p2 = 0; p2 < N.dim(n + 1); ++p2)
          for (const auto& [k, v] : colM) accumulate(rows[std::size_t(p2)], var(n + 1, p2, k), v);
        for (int k = 0; k < N.dim(n); ++k)
          for (typename Mat<S>::InnerIterator it(an, k); it; ++it)
            accumulate(rows[std::size_t(it.row())], var(n, k, q), S(-it.value()));
        for (auto& r : rows)
          if (!r.empty()) ech.add(to_vec(r));
      }
    }
  HomResult res;
  res.dim = var_off.back() - long(ech.rank());
  res.generator_degree = std::max(0, generator_degree(M));
  res.relation_degree = relation_degree(M);
  res.reliable = D >= res.generator_degree + res.relation_degree;
  return res;
}

template <class S>
long tau_dim(const TruncatedModule<S>& M, int r) {
  if (r <= 0) return 0;
  auto off = offsets(M);
  std::vector<SparseVec<S>> rows;
  for (int n = 0; n < M.D(); ++n)
    for (int i = std::max(r, 1); i <= n; ++i)
      for (int j = 0; j < M.dim(n); ++j) {
        SparseVec<S> v;
        v.emplace_back(int(off[std::size_t(n)]) + j, S(-1));
        for (const auto& [y, c] : M.apply(n, i, j)) v.emplace_back(int(off[std::size_t(n) + 1]) + y, c);
        rows.push_back(std::move(v));
      }
  return M.total_dim() - long(linalg::rank(std::move(rows), off.back()));
}

template <class S>
GradedDims canonical_grading_pieces(const TruncatedModule<S>& M, int r) {
  if (r < 0 || r > M.D()) throw std::domain_error("tau: r must lie in [0, D]");
  GradedDims g;
  long prev = 0;
  for (int s = 0; s < r; ++s) {
    long cur = tau_dim(M, s + 1);
    g.dims.push_back(cur - prev);
    prev = cur;
  }
  g.reliable_degree = std::min(r - 1, M.D() - presentation_degree(M));
  return g;
}

template <class S>
GradedDims xi_truncated(const TruncatedModule<S>& M) {
  return canonical_grading_pieces(M, M.D());
}

template <class S>
long saturation_rank(const TruncatedModule<S>& M, int n) {
  if (n < 1 || n >= M.D()) throw std::domain_error("saturation_rank: need 1 <= n < D");
  Mat<S> P = M.alpha(n, n);
  for (int k = n + 1; k < M.D(); ++k) P = Mat<S>(M.alpha(k, k) * P);
  std::vector<SparseVec<S>> cols;
  for (int j = 0; j < P.outerSize(); ++j) {
    SparseVec<S> v;
    for (typename Mat<S>::InnerIterator it(P, j); it; ++it)
      if (!is_zero(it.value())) v.emplace_back(int(it.row()), it.value());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    cols.push_back(std::move(v));
  }
  return long(linalg::rank(std::move(cols), std::size_t(M.dim(M.D()))));
}

template <class S>
std::vector<std::string> verify_module(const TruncatedModule<S>& M) {
  std::vector<std::string> bad;
  const int D = M.D();
  if (M.dims().size() != std::size_t(D) + 1) bad.push_back("dims length != D+1");
  for (int n = 0; n <= D; ++n)
    if (M.dim(n) < 0) bad.push_back("negative dimension in degree " + std::to_string(n));
  if (!bad.empty()) return bad;
  for (int n = 0; n < D; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto& a = M.alpha(n, i);
      if (a.rows() != M.dim(n + 1) || a.cols() != M.dim(n))
        bad.push_back("alpha[" + std::to_string(n) + "][" + std::to_string(i) + "] has wrong shape");
    }
  if (!bad.empty()) return bad;
  // alpha_j alpha_i = alpha_i alpha_{j-1} on M_n for i < j <= n+1
  for (int n = 0; n + 2 <= D; ++n)
    for (int j = 2; j <= n + 1; ++j)
      for (int i = 1; i < j; ++i) {
        Mat<S> lhs = M.alpha(n + 1, j) * M.alpha(n, i);
        Mat<S> rhs = M.alpha(n + 1, i) * M.alpha(n, j - 1);
        Mat<S> diff = lhs - rhs;
        bool zero = true;
        for (int k = 0; k < diff.outerSize() && zero; ++k)
          for (typename Mat<S>::InnerIterator it(diff, k); it; ++it)
            if (!is_zero(it.value())) {
              zero = false;
              break;
            }
        if (!zero)
          bad.push_back("relation a" + std::to_string(j) + " a" + std::to_string(i) + " = a" + std::to_string(i) +
                        " a" + std::to_string(j - 1) + " fails on degree " + std::to_string(n));
      }
  return bad;
}

template <class S>
KElement finite_length_class(const TruncatedModule<S>& M) {
  KElement k;
  for (int n = 0; n <= M.D(); ++n) k.add_term(Word::power(Letter::b, std::size_t(n)), Integer(M.dim(n)));
  return k;
}

TruncatedModule<F32003> to_prime_field(const TruncatedModule<Rational>& M) {
  TruncatedModule<F32003> R(M.D(), M.dims());
  auto conv = [](const Rational& q) {
    Integer p = F32003::modulus;
    long num = static_cast<long>(Integer(numerator(q) % p).convert_to<long>());
    long den = static_cast<long>(Integer(denominator(q) % p).convert_to<long>());
    return F32003(num) / F32003(den);
  };
  for (int n = 0; n < M.D(); ++n)
    for (int i = 1; i <= n; ++i) {
      const auto& a = M.alpha(n, i);
      std::vector<Eigen::Triplet<F32003>> trips;
      for (int k = 0; k < a.outerSize(); ++k)
        for (Mat<Rational>::InnerIterator it(a, k); it; ++it) trips.emplace_back(int(it.row()), int(it.col()), conv(it.value()));
      Mat<F32003> m(a.rows(), a.cols());
      m.setFromTriplets(trips.begin(), trips.end());
      R.set_alpha(n, i, std::move(m));
    }
  return R;
}

#define INCMON_INSTANTIATE(S)                                                                        \
  template TruncatedModule<S> zero_module<S>(int);                                                   \
  template TruncatedModule<S> std_module<S>(const Word&, int);                                       \
  template TruncatedModule<S> simple<S>(int, int);                                                   \
  template TruncatedModule<S> principal<S>(int, int);                                                \
  template TruncatedModule<S> trivial<S>(int);                                                       \
  template TruncatedModule<S> direct_sum<S>(const TruncatedModule<S>&, const TruncatedModule<S>&);   \
  template TruncatedModule<S> concat<S>(const TruncatedModule<S>&, const TruncatedModule<S>&);       \
  template TruncatedModule<S> shift<S>(const TruncatedModule<S>&);                                   \
  template TruncatedModule<S> smooth_shift<S>(const TruncatedModule<S>&);                            \
  template TruncatedModule<S> transpose<S>(const TruncatedModule<S>&);                               \
  template TruncatedModule<S> coinduction<S>(const TruncatedModule<S>&);                             \
  template TruncatedModule<S> induction<S>(const TruncatedModule<S>&);                               \
  template TruncatedModule<S> positive_part<S>(const TruncatedModule<S>&);                           \
  template TruncatedModule<S> truncate<S>(const TruncatedModule<S>&, int);                           \
  template TruncatedModule<S> jmodule<S>(int, int);                                                  \
  template TruncatedModule<S> injective_module<S>(const Word&, int);                                 \
  template std::vector<long> t_functor<S>(const TruncatedModule<S>&);                                \
  template BettiTable koszul_betti<S>(const TruncatedModule<S>&);                                    \
  template std::vector<std::vector<long>> koszul_homology<S>(const TruncatedModule<S>&);             \
  template bool koszul_square_zero<S>(const TruncatedModule<S>&);                                    \
  template HomResult hom_dim<S>(const TruncatedModule<S>&, const TruncatedModule<S>&);               \
  template long tau_dim<S>(const TruncatedModule<S>&, int);                                          \
  template GradedDims canonical_grading_pieces<S>(const TruncatedModule<S>&, int);                   \
  template GradedDims xi_truncated<S>(const TruncatedModule<S>&);                                    \
  template int generator_degree<S>(const TruncatedModule<S>&);                                       \
  template long saturation_rank<S>(const TruncatedModule<S>&, int);                                  \
  template std::vector<std::string> verify_module<S>(const TruncatedModule<S>&);                     \
  template KElement finite_length_class<S>(const TruncatedModule<S>&);

INCMON_INSTANTIATE(Rational)
INCMON_INSTANTIATE(F32003)
#undef INCMON_INSTANTIATE

}  // namespace modengine

template class TruncatedModule<Rational>;
template class TruncatedModule<F32003>;

}  // namespace incmon
