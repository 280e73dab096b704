#include <doctest.h>

#include <random>

#include "incmon/invariants.hpp"
#include "incmon/kgroup.hpp"
#include "incmon/modengine.hpp"
#include "oracle_values.hpp"

using namespace incmon;
namespace me = incmon::modengine;

namespace {

Word W(const char* s) { return Word::parse(s); }
Module Std(const char* s, int D) { return me::std_module<Rational>(W(s), D); }
Module Prin(int r, int D) { return me::principal<Rational>(r, D); }
Module Simple(int n, int D) { return me::simple<Rational>(n, D); }
Module Triv(int D) { return me::trivial<Rational>(D); }

std::vector<int> V(std::initializer_list<int> l) { return l; }

std::vector<int> series_dims(const KElement& x, int D) {
  auto coeffs = invariants::hilbert(x).series.coeffs(unsigned(D));
  std::vector<int> d;
  for (const auto& c : coeffs) d.push_back(int(c));
  return d;
}

bool same_matrices(const Module& M, const Module& N) {
  if (M.D() != N.D() || M.dims() != N.dims()) return false;
  for (int n = 0; n < M.D(); ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < M.dim(n); ++j)
        if (M.apply(n, i, j) != N.apply(n, i, j)) return false;
  return true;
}

// Isomorphism invariants strong enough to separate the modules compared below.
void check_isomorphic(const Module& M, const Module& N) {
  REQUIRE(M.D() == N.D());
  CHECK(M.dims() == N.dims());
  CHECK(me::t_functor(M) == me::t_functor(N));
  CHECK(me::koszul_homology(M) == me::koszul_homology(N));
  for (int r = 0; r <= std::min(3, M.D()); ++r) CHECK(me::tau_dim(M, r) == me::tau_dim(N, r));
  long mm = me::hom_dim(M, M).dim;
  CHECK(me::hom_dim(M, N).dim == mm);
  CHECK(me::hom_dim(N, M).dim == mm);
  CHECK(me::hom_dim(N, N).dim == mm);
}

}  // namespace

TEST_CASE("standard module dims") {
  CHECK(Std("a", 4).dims() == V({0, 1, 1, 1, 1}));
  CHECK(Std("ab", 4).dims() == V({0, 0, 1, 1, 1}));
  CHECK(Std("bb", 4).dims() == V({0, 0, 1, 0, 0}));
  CHECK(Prin(2, 5).dims() == V({0, 0, 1, 2, 3, 4}));
  CHECK(Simple(0, 3).dims() == V({1, 0, 0, 0}));
  CHECK(same_matrices(Triv(3), Simple(0, 3)));
  CHECK_THROWS_AS(Simple(5, 3), std::domain_error);
  CHECK_THROWS_AS(Prin(4, 3), std::domain_error);
}

TEST_CASE("oracle: standard module dims by tuple enumeration") {
  for (const auto& [w, dims] : oracle::kStdDims) {
    auto M = Std(w, oracle::kStdDegree);
    std::vector<long> got(M.dims().begin(), M.dims().end());
    INFO(w);
    CHECK(got == dims);
  }
}

TEST_CASE("concat") {
  const int D = 7;
  check_isomorphic(me::concat(Simple(1, D), Simple(1, D)), Std("bb", D));
  check_isomorphic(me::concat(Triv(D), Std("aba", D)), Std("aba", D));
  check_isomorphic(me::concat(Std("a", D), Std("b", D)), Std("ab", D));
  check_isomorphic(me::concat(Std("ab", D), Std("ba", D)), Std("abba", D));
}

TEST_CASE("shift") {
  const int D = 8;
  for (int n = 1; n <= 4; ++n)
    check_isomorphic(me::shift(Std(Word::power(Letter::b, std::size_t(n)).str().c_str(), D)),
                     Simple(n - 1, D - 1));
  check_isomorphic(me::shift(Std("a", D)), me::direct_sum(Std("a", D - 1), Triv(D - 1)));
  check_isomorphic(me::shift(Std("ab", D)), me::direct_sum(Std("ab", D - 1), Std("b", D - 1)));
  CHECK(me::shift(Triv(D)).total_dim() == 0);
}

TEST_CASE("transpose") {
  const int D = 7;
  check_isomorphic(me::transpose(Std("aab", D)), Std("baa", D));
  auto M = me::concat(Std("ab", D), Prin(1, D));
  CHECK(same_matrices(me::transpose(me::transpose(M)), M));
  check_isomorphic(me::transpose(Prin(1, D)), Prin(1, D));
}

TEST_CASE("coinduction and induction") {
  const int D = 7;
  check_isomorphic(me::coinduction(Triv(D)), me::direct_sum(Triv(D), Simple(1, D)));
  auto M = Std("aba", D);
  auto C = me::coinduction(M);
  for (int n = 0; n <= D; ++n) CHECK(C.dim(n) == M.dim(n) + M.dim(n - 1));
  auto J3 = me::coinduction(me::coinduction(Simple(1, D)));
  CHECK(me::finite_length_class(J3) == kgroup::jclass(3));
  check_isomorphic(me::induction(Triv(D)), Prin(1, D));
  auto I = me::induction(M);
  for (int m = 0; m <= D; ++m) {
    int expect = 0;
    for (int k = 0; k < m; ++k) expect += M.dim(m - 1 - k);
    CHECK(I.dim(m) == expect);
  }
}

TEST_CASE("injective modules") {
  const int D = 7;
  auto I = me::injective_module<Rational>(W("bbb"), D);
  std::vector<int> expect(std::size_t(D) + 1, 0);
  for (int i = 0; i <= 2; ++i) expect[std::size_t(i) + 1] += int(binomial(2, i));
  CHECK(I.dims() == expect);
  for (int r = 0; r <= 3; ++r)
    check_isomorphic(me::injective_module<Rational>(Word::power(Letter::a, std::size_t(r)), D), Prin(r, D));
  check_isomorphic(me::injective_module<Rational>(W(""), D), Triv(D));
  for (const Word& w : word::all_words_up_to(3)) {
    auto J = me::injective_module<Rational>(w, D);
    if (word::rank(w) == 0) CHECK(me::finite_length_class(J) == kgroup::injective_class(w));
  }
}

TEST_CASE("hom_dim") {
  const int D = 8;
  std::vector<Module> targets = {Std("ab", D), Std("bab", D), Prin(2, D), me::injective_module<Rational>(W("bba"), D)};
  for (int r = 0; r <= 3; ++r)
    for (const auto& N : targets) {
      auto h = me::hom_dim(Prin(r, D), N);
      CHECK(h.reliable);
      CHECK(h.dim == N.dim(r));
    }
  auto h = me::hom_dim(Std("ab", D), me::injective_module<Rational>(W("ab"), D));
  CHECK(h.reliable);
  CHECK(h.dim == 1);
  h = me::hom_dim(Simple(1, D), me::injective_module<Rational>(W("bb"), D));
  CHECK(h.reliable);
  CHECK(h.dim == 0);
  CHECK_THROWS_AS(me::hom_dim(Prin(1, 5), Prin(1, 6)), std::domain_error);
}

TEST_CASE("hom reliability flag reflects presentation degrees") {
  // std("bb") is generated in degree 2 with relations starting in degree 3
  auto h = me::hom_dim(Std("bb", 4), Std("bb", 4));
  CHECK(h.generator_degree == 2);
  CHECK(h.relation_degree >= 3);
  CHECK(h.reliable == (4 >= h.generator_degree + h.relation_degree));
}

TEST_CASE("t_functor") {
  const int D = 7;
  for (int r = 0; r <= 4; ++r) {
    std::vector<long> e(std::size_t(D) + 1, 0);
    e[std::size_t(r)] = 1;
    CHECK(me::t_functor(Prin(r, D)) == e);
  }
  std::vector<long> e(std::size_t(D) + 1, 0);
  e[2] = 1;
  CHECK(me::t_functor(Std("ab", D)) == e);
  CHECK(me::t_functor(me::zero_module<Rational>(D)) == std::vector<long>(std::size_t(D) + 1, 0));
}

TEST_CASE("truncations") {
  const int D = 8;
  for (int r = 0; r <= 4; ++r) CHECK(me::tau_dim(Prin(r, D), 1) == 1);
  for (int n = 0; n <= 4; ++n)
    for (int r = 1; r <= 5; ++r) {
      auto g = me::canonical_grading_pieces(Simple(n, D), r);
      std::vector<long> e(std::size_t(r), 0);
      if (n < r) e[std::size_t(n)] = 1;
      CHECK(g.dims == e);
    }
  auto g = me::canonical_grading_pieces(Std("b", D), 2);
  CHECK(g.dims == std::vector<long>{0, 1});
  CHECK(me::tau_dim(Prin(2, D), 0) == 0);
}

TEST_CASE("oracle: truncation dimensions") {
  for (const auto& t : oracle::kTau) {
    INFO(t.word, " D=", t.D, " r=", t.r);
    CHECK(me::tau_dim(Std(t.word, t.D), t.r) == t.dim);
  }
}

TEST_CASE("xi_truncated") {
  const int D = 10;
  for (int n = 0; n <= 4; ++n) {
    auto g = me::xi_truncated(Prin(n, D));
    REQUIRE(g.reliable_degree >= std::min(D - 1, D - n));
    for (int d = 0; d <= g.reliable_degree; ++d) {
      long expect = 0;
      for (int k = 0; k <= n; ++k) expect += Prin(k, D).dim(d);
      CHECK(g.dims[std::size_t(d)] == expect);
    }
  }
  auto g = me::xi_truncated(Std("ba", D));
  for (int d = 0; d <= g.reliable_degree; ++d)
    CHECK(g.dims[std::size_t(d)] == Std("b", D).dim(d) + Std("ba", D).dim(d));
  for (int n = 0; n <= 3; ++n) {
    g = me::xi_truncated(Simple(n, D));
    for (int d = 0; d <= g.reliable_degree; ++d) CHECK(g.dims[std::size_t(d)] == Simple(n, D).dim(d));
  }
}

TEST_CASE("xi_truncated stabilizes as the truncation grows") {
  // principal(2): every degree reported reliable at D agrees with the value at D + 3
  for (int D = 6; D <= 9; ++D) {
    auto lo = me::xi_truncated(Prin(2, D)), hi = me::xi_truncated(Prin(2, D + 3));
    for (int d = 0; d <= lo.reliable_degree; ++d) CHECK(lo.dims[std::size_t(d)] == hi.dims[std::size_t(d)]);
  }
}

TEST_CASE("saturation_rank") {
  CHECK(me::saturation_rank(Std("ba", 6), 3) == 1);
  CHECK(me::saturation_rank(Simple(2, 6), 2) == 0);
  for (int n = 1; n < 6; ++n) CHECK(me::saturation_rank(Prin(1, 6), n) == 1);
  CHECK_THROWS_AS(me::saturation_rank(Prin(1, 6), 6), std::domain_error);
}

TEST_CASE("Koszul Betti tables") {
  const int D = 8;
  for (int r = 0; r <= 4; ++r) {
    auto b = me::koszul_betti(Prin(r, D));
    CHECK(b.reliable_degree == D - 1);
    CHECK(b.entries == std::map<std::pair<int, int>, long>{{{r, 0}, 1}});
  }
  auto b = me::koszul_betti(Simple(1, D));
  for (int j = 0; j + 1 <= b.reliable_degree; ++j) CHECK(b.at(1, j) == 1);
  CHECK(b.entries.size() == std::size_t(b.reliable_degree));
}

TEST_CASE("oracle: Betti tables from independent homology") {
  for (const auto& [w, D, entries] : oracle::kBetti) {
    auto b = me::koszul_betti(Std(w, D));
    std::map<std::pair<int, int>, long> e(entries.begin(), entries.end());
    INFO(w);
    CHECK(b.entries == e);
  }
}

TEST_CASE("verify_module") {
  CHECK(me::verify_module(me::zero_module<Rational>(5)).empty());
  auto M = Prin(1, 4);
  M.set_alpha(2, 1, Module::Matrix(1, 1));
  CHECK_FALSE(me::verify_module(M).empty());
  auto N = Prin(1, 4);
  N.set_alpha(1, 1, Module::Matrix(2, 1));
  CHECK_FALSE(me::verify_module(N).empty());
}

TEST_CASE("property: every constructor output passes verify_module") {
  const int D = 6;
  std::vector<Module> ms;
  for (const Word& w : word::all_words_up_to(3)) {
    ms.push_back(me::std_module<Rational>(w, D));
    ms.push_back(me::injective_module<Rational>(w, D));
  }
  std::vector<Module> derived;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const Module& M = ms[k];
    derived.push_back(me::shift(M));
    derived.push_back(me::smooth_shift(M));
    derived.push_back(me::transpose(M));
    derived.push_back(me::coinduction(M));
    derived.push_back(me::induction(M));
    derived.push_back(me::positive_part(M));
    derived.push_back(me::truncate(M, D - 2));
    derived.push_back(me::concat(M, ms[(k * 7 + 3) % ms.size()]));
    derived.push_back(me::direct_sum(M, ms[(k * 5 + 1) % ms.size()]));
  }
  for (int n = 0; n <= 4; ++n) derived.push_back(me::jmodule<Rational>(n, D));
  for (const auto& M : ms) REQUIRE(me::verify_module(M).empty());
  for (const auto& M : derived) REQUIRE(me::verify_module(M).empty());
}

TEST_CASE("property: Koszul differential squares to zero") {
  const int D = 7;
  for (const Word& w : word::all_words_up_to(3)) {
    CHECK(me::koszul_square_zero(me::std_module<Rational>(w, D)));
    CHECK(me::koszul_square_zero(me::injective_module<Rational>(w, D)));
  }
  CHECK(me::koszul_square_zero(me::coinduction(Std("ab", D))));
}

TEST_CASE("property: prime field backend agrees with the rationals") {
  const int D = 7;
  for (const Word& w : word::all_words_up_to(3)) {
    auto M = me::injective_module<Rational>(w, D);
    auto P = me::to_prime_field(M);
    REQUIRE(me::verify_module(P).empty());
    CHECK(me::koszul_betti(P) == me::koszul_betti(M));
    CHECK(me::t_functor(P) == me::t_functor(M));
    for (int r = 1; r <= 3; ++r) CHECK(me::tau_dim(P, r) == me::tau_dim(M, r));
    auto S = me::std_module<Rational>(w, D);
    CHECK(me::hom_dim(me::to_prime_field(S), P).dim == me::hom_dim(S, M).dim);
    CHECK(me::std_module<F32003>(w, D).dims() == S.dims());
  }
}

TEST_CASE("property: standard module dims follow the Hilbert series (length <= 5, D = 10)") {
  const int D = 10;
  for (const Word& w : word::all_words_up_to(5)) {
    auto M = me::std_module<Rational>(w, D);
    REQUIRE(M.dims() == series_dims(KElement(w), D));
  }
}

TEST_CASE("property: shift, completion and saturation match the K-group operators") {
  const int D = 9;
  for (const Word& w : word::all_words_up_to(4)) {
    auto M = me::std_module<Rational>(w, D);
    INFO(w.str());
    CHECK(me::shift(M).dims() == series_dims(kgroup::sigma(KElement(w)), D - 1));
    auto xi = me::xi_truncated(M);
    auto expect = series_dims(kgroup::xi(KElement(w)), D);
    for (int d = 0; d <= xi.reliable_degree; ++d) CHECK(xi.dims[std::size_t(d)] == expect[std::size_t(d)]);
    KElement gp = kgroup::gamma(kgroup::psi(KElement(w)));
    auto sat = series_dims(gp, D);
    for (int n = 1; n < D; ++n) CHECK(me::saturation_rank(M, n) == sat[std::size_t(n)]);
  }
}

TEST_CASE("property: coinvariants multiply under concatenation (finite length)") {
  const int D = 9;
  std::vector<Module> fin;
  for (const Word& w : word::all_words_up_to(3))
    if (word::rank(w) == 0) fin.push_back(me::injective_module<Rational>(w, D));
  fin.push_back(me::coinduction(Simple(2, D)));
  for (const auto& N : fin)
    for (const auto& M : fin) CHECK(me::tau_dim(me::concat(N, M), 1) == me::tau_dim(N, 1) * me::tau_dim(M, 1));
}

TEST_CASE("property: shift of a concatenation") {
  const int D = 8;
  std::vector<Module> ms = {Std("a", D), Std("ab", D), Std("ba", D), Prin(2, D),
                            me::direct_sum(Triv(D), Std("b", D)), me::coinduction(Triv(D))};
  for (const auto& M : ms)
    for (const auto& N : ms) {
      auto lhs = me::shift(me::concat(M, N));
      auto rhs = me::concat(me::shift(me::positive_part(M)), me::truncate(N, D - 1));
      auto sn = me::shift(N);
      for (int n = 0; n <= D - 1; ++n) CHECK(lhs.dim(n) == rhs.dim(n) + M.dim(0) * sn.dim(n));
    }
}

TEST_CASE("property: coinvariants of iterated shifts count low-degree multiplicities") {
  const int D = 9;
  std::vector<Module> fin = {Simple(2, D), me::jmodule<Rational>(3, D), me::direct_sum(Triv(D), Simple(3, D)),
                             me::concat(Simple(1, D), me::jmodule<Rational>(2, D))};
  for (const auto& M : fin) {
    Module S = M;
    long acc = 0;
    for (int n = 0; n <= 4; ++n) {
      acc += M.dim(n);
      if (n > 0) S = me::smooth_shift(S);
      CHECK(me::tau_dim(S, 1) == acc);
    }
  }
}

TEST_CASE("truncation reliability accounts for relation degrees") {
  // std("ab"): generator in degree 2, relation in degree 3; at D = 9 degree 7 is not yet exact
  auto g = me::xi_truncated(Std("ab", 9));
  CHECK(g.reliable_degree == 6);
  for (int d = 0; d <= 6; ++d) CHECK(g.dims[std::size_t(d)] == Std("ab", 9).dim(d));
}

TEST_CASE("property: reliable completion degrees never change as D grows (length <= 3)") {
  for (const Word& w : word::all_words_up_to(3)) {
    auto lo = me::xi_truncated(me::std_module<Rational>(w, 7));
    auto hi = me::xi_truncated(me::std_module<Rational>(w, 11));
    INFO(w.str());
    REQUIRE(hi.reliable_degree >= lo.reliable_degree);
    for (int d = 0; d <= lo.reliable_degree; ++d) CHECK(lo.dims[std::size_t(d)] == hi.dims[std::size_t(d)]);
  }
}

TEST_CASE("property: truncations of principal modules follow the binomial closed form") {
  // dim tau^{<r}(A^k) = sum_{i <= k} C(r-1, i), exact once D >= r + k - 1
  for (int k = 0; k <= 3; ++k)
    for (int r = 1; r <= 6; ++r) {
      long expect = 0;
      for (int i = 0; i <= k; ++i) expect += long(binomial(r - 1, i));
      CHECK(me::tau_dim(Prin(k, std::max(k, r + k - 1)), r) == expect);
    }
}
