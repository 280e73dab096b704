#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "incmon/scalar.hpp"

namespace incmon {

// 1 <= i_1 < ... < i_r; stands for the basis element e_{i_1,...,i_r} of A^r.
using MonomialTuple = std::vector<int>;
// Exponents of x_1 .. x_r.
using ExponentVector = std::vector<int>;
// Rational combination of tuples of one common length.
using TupleCombination = std::map<MonomialTuple, Rational>;

namespace monomial {

bool is_valid_tuple(const MonomialTuple& t);
ExponentVector tuple_to_exponents(const MonomialTuple& t);
MonomialTuple exponents_to_tuple(const ExponentVector& e);

bool submodule_member(const std::vector<MonomialTuple>& gens, const MonomialTuple& t);

// Lex order comparing the last entry first.
bool lex_less(const MonomialTuple& s, const MonomialTuple& t);
MonomialTuple initial_tuple(const TupleCombination& v);

// alpha_i acting on a tuple: entries >= i move up by one.
MonomialTuple apply_alpha(int i, const MonomialTuple& t);
TupleCombination apply_alpha(int i, const TupleCombination& v);

// Smallest k such that every later set generates the same submodule as set k.
std::optional<std::size_t> chain_stabilizes(const std::vector<std::vector<MonomialTuple>>& chain);

// "2,3,5" style lists.
std::vector<int> parse_int_list(const std::string& s);
std::string format_int_list(const std::vector<int>& v);

}  // namespace monomial
}  // namespace incmon
