#!/usr/bin/env python3
"""Independent oracle for the frozen values in tests/oracle_values.hpp.

Shares no code with the C++ library: standard modules are enumerated tuple by tuple,
G and F series are expanded as truncated word series straight from the recurrences,
and homology ranks come from sympy over QQ.

    python3 tests/oracle/oracle.py > tests/oracle_values.hpp
"""
import itertools
import sys

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def words(max_len):
    out = [""]
    for n in range(1, max_len + 1):
        out += ["".join(p) for p in itertools.product("ab", repeat=n)]
    return out


# ---------------------------------------------------------------- standard modules

def admissible(lam, t):
    prev = 0
    for letter, x in zip(lam, t):
        if x <= prev:
            return False
        if letter == "b" and x - prev != 1:
            return False
        prev = x
    return True


def std_basis(lam, D):
    """basis[n] = sorted admissible tuples with last entry n."""
    basis = [[] for _ in range(D + 1)]
    if not lam:
        basis[0].append(())
        return basis
    for t in itertools.combinations(range(1, D + 1), len(lam)):
        if admissible(lam, t):
            basis[t[-1]].append(t)
    return basis


def std_module(lam, D):
    basis = std_basis(lam, D)
    index = [{t: j for j, t in enumerate(b)} for b in basis]

    def act(n, i, j):
        # alpha_i on basis vector j of degree n; returns {row: coeff}
        if i > n:
            return {j: 1}
        t = basis[n][j]
        u = tuple(x + 1 if x >= i else x for x in t)
        if not admissible(lam, u):
            return {}
        return {index[n + 1][u]: 1}

    return [len(b) for b in basis], act


def rank(rows, ncols):
    if not rows or ncols == 0:
        return 0
    m = DomainMatrix([[QQ(v) for v in r] for r in rows], (len(rows), ncols), QQ)
    return m.rank()


# ---------------------------------------------------------------- Koszul complex

def koszul_homology(dims, act, D, n, m):
    """dim H^{-m} in internal degree n."""
    def term(n, m):
        if n == 0:
            return [((), x) for x in range(dims[0])] if m == 0 else []
        if n - m < 0:
            return []
        return [(A, x) for A in itertools.combinations(range(1, n), m) for x in range(dims[n - m])]

    def diff_rank(n, m):
        if m < 1:
            return 0
        src, dst = term(n, m), term(n, m - 1)
        if not src or not dst:
            return 0
        pos = {b: k for k, b in enumerate(dst)}
        rows = []
        for A, x in src:
            row = [0] * len(dst)
            for j in range(1, m + 1):
                a = A[j - 1]
                B = A[: j - 1] + A[j:]
                for y, c in act(n - m, a - j + 1, x).items():
                    row[pos[(B, y)]] += (-1) ** (j + 1) * c
            rows.append(row)
        return rank(rows, len(dst))

    return len(term(n, m)) - diff_rank(n, m) - diff_rank(n, m + 1)


def betti(lam, D):
    dims, act = std_module(lam, D)
    out = {}
    for n in range(D):  # reliable through D-1
        for m in range(0, n + 1):
            h = koszul_homology(dims, act, D, n, m)
            if h:
                out[(n - m, m)] = h
    return out


# ---------------------------------------------------------------- truncations

def tau_dim(dims, act, D, r):
    if r == 0:
        return 0
    off = [0]
    for d in dims:
        off.append(off[-1] + d)
    total = off[-1]
    rows = []
    for n in range(D):
        for i in range(max(r, 1), n + 1):
            for x in range(dims[n]):
                row = [0] * total
                row[off[n] + x] -= 1
                for y, c in act(n, i, x).items():
                    row[off[n + 1] + y] += c
                if any(row):
                    rows.append(row)
    return total - rank(rows, total)


# ---------------------------------------------------------------- series as truncated word sums

def s_add(s, t, c=1):
    r = dict(s)
    for w, v in t.items():
        r[w] = r.get(w, 0) + c * v
        if r[w] == 0:
            del r[w]
    return r


def s_left(prefix_coeffs, s, L):
    """sum_k prefix_coeffs[k] * b^k * s, truncated at length L."""
    r = {}
    for k, c in enumerate(prefix_coeffs):
        if c == 0:
            continue
        for w, v in s.items():
            if k + len(w) <= L:
                r = s_add(r, {"b" * k + w: c * v})
    return r


def s_a(s, L):
    return {"a" + w: v for w, v in s.items() if len(w) + 1 <= L}


def make_series(kind, L):
    if kind == "G":
        b_rule = [0, 1]                          # G_{bx} = b G_x
        a_tail = [0] + [1] * L                   # b/(1-b)
    else:
        b_rule = [0] + [(-1) ** (k - 1) for k in range(1, L + 1)]  # b/(1+b)
        a_tail = [0, 1]                          # b
    memo = {}

    def ser(w):
        if w in memo:
            return memo[w]
        if w == "":
            r = {"": 1}
        elif w[0] == "b":
            r = s_left(b_rule, ser(w[1:]), L)
        else:
            n = len(w) - len(w.lstrip("a"))
            rest = w[n:]
            acc = {}
            for i in range(n):
                acc = s_add(acc, ser("a" * i + rest))
            r = s_add(s_a(acc, L), s_left(a_tail, ser("a" * (n - 1) + rest), L))
        memo[w] = r
        return r

    return ser


# ---------------------------------------------------------------- emit

def cstr(w):
    return '"' + w + '"'


def main():
    L = 6
    G = make_series("G", L)
    F = make_series("F", L)
    o = sys.stdout
    o.write("// Generated by tests/oracle/oracle.py. Do not edit by hand.\n#pragma once\n\n")
    o.write("#include <utility>\n#include <vector>\n\nnamespace oracle {\n\n")
    o.write("struct Expansion {\n  const char* word;\n  std::vector<std::pair<const char*, long>> coeffs;\n};\n\n")
    o.write("struct Dims {\n  const char* word;\n  std::vector<long> dims;\n};\n\n")
    o.write("struct Betti {\n  const char* word;\n  int D;\n  std::vector<std::pair<std::pair<int, int>, long>> entries;\n};\n\n")
    o.write("struct Tau {\n  const char* word;\n  int D;\n  int r;\n  long dim;\n};\n\n")

    o.write(f"inline constexpr int kSeriesLength = {L};\n\n")
    for name, ser in (("kGExpansions", G), ("kFExpansions", F)):
        o.write(f"inline const std::vector<Expansion> {name} = {{\n")
        for w in words(4):
            items = sorted(ser(w).items(), key=lambda p: (len(p[0]), p[0]))
            body = ", ".join(f"{{{cstr(k)}, {v}}}" for k, v in items)
            o.write(f"    {{{cstr(w)}, {{{body}}}}},\n")
        o.write("};\n\n")

    D = 9
    o.write(f"inline constexpr int kStdDegree = {D};\n")
    o.write("inline const std::vector<Dims> kStdDims = {\n")
    for w in words(4):
        dims, _ = std_module(w, D)
        o.write(f"    {{{cstr(w)}, {{{', '.join(map(str, dims))}}}}},\n")
    o.write("};\n\n")

    o.write("inline const std::vector<Betti> kBetti = {\n")
    for w, D in (("", 6), ("a", 7), ("aa", 7), ("b", 7), ("bb", 7), ("ab", 7), ("ba", 7), ("aba", 7), ("bab", 7)):
        ent = betti(w, D)
        body = ", ".join(f"{{{{{i}, {j}}}, {v}}}" for (i, j), v in sorted(ent.items()))
        o.write(f"    {{{cstr(w)}, {D}, {{{body}}}}},\n")
    o.write("};\n\n")

    o.write("inline const std::vector<Tau> kTau = {\n")
    for w in ("", "a", "aa", "aaa", "b", "ba", "ab", "baa", "aba"):
        for D in (7, 10):
            dims, act = std_module(w, D)
            for r in range(0, 5):
                o.write(f"    {{{cstr(w)}, {D}, {r}, {tau_dim(dims, act, D, r)}}},\n")
    o.write("};\n\n}  // namespace oracle\n")


if __name__ == "__main__":
    main()
