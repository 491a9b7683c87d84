"""Independent reference computations used to freeze expected values.

Nothing here touches the Newton/log-exp path or the structure-constant
kernel: series come from sympy's own expansion, symmetric functions are
recovered by brute-force linear solving over explicit formal roots, and
the graded ring oracle multiplies words of generators by bubble sort.
"""

from fractions import Fraction
from itertools import product as iproduct

import sympy as sp

x = sp.Symbol("x")


def series_coeffs(expr, order):
    s = sp.series(expr, x, 0, order + 1).removeO()
    return [Fraction(str(sp.Rational(s.coeff(x, k)))) for k in range(order + 1)]


def todd_coeffs(order):
    return series_coeffs(x / (1 - sp.exp(-x)), order)


def l_coeffs(order):
    return series_coeffs(x / sp.tanh(x), order)


def ahat_coeffs(order):
    return series_coeffs((x / 2) / sp.sinh(x / 2), order)


def _partitions(k, largest=None):
    if k == 0:
        yield ()
        return
    largest = k if largest is None else min(largest, k)
    for first in range(largest, 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def symmetrize_weight(coeffs, weight, roots=4):
    """Coefficients of ``prod_i Q(t_i)`` in degree ``weight`` on products of ``c_j``.

    ``coeffs`` are the coefficients of ``Q``.  Returns ``{partition: value}``
    where partition ``(j1, j2, ...)`` stands for ``c_j1 * c_j2 * ...``.
    """
    ts = sp.symbols(f"t1:{roots + 1}")
    Q = lambda t: sum(sp.Rational(c.numerator, c.denominator) * t**k
                      for k, c in enumerate(coeffs[: weight + 1]))
    full = sp.expand(sp.prod([Q(t) for t in ts]))
    poly = sp.Poly(full, *ts)
    target = {m: c for m, c in poly.terms() if sum(m) == weight}
    es = [sp.Integer(1)] + [
        sp.expand(sum(sp.prod(c) for c in _combos(ts, j))) for j in range(1, roots + 1)
    ]
    parts = [p for p in _partitions(weight) if all(j <= roots for j in p)]
    unknowns = sp.symbols(f"a0:{len(parts)}")
    combo = sp.expand(sum(u * sp.prod([es[j] for j in p]) for u, p in zip(unknowns, parts)))
    cpoly = sp.Poly(combo, *ts)
    monos = set(target) | {m for m, _ in cpoly.terms()}
    eqs = [sp.Eq(cpoly.coeff_monomial(m), target.get(m, 0)) for m in monos]
    sol = sp.solve(eqs, unknowns, dict=True)[0]
    return {p: Fraction(str(sol[u])) for u, p in zip(unknowns, parts)}


def _combos(items, r):
    from itertools import combinations
    return combinations(items, r)


def power_sum_in_elementary(m, roots=3):
    """``t1^m + ... + t_r^m`` written on products of elementary symmetric functions."""
    coeffs = None
    ts = sp.symbols(f"t1:{roots + 1}")
    target_expr = sum(t**m for t in ts)
    es = [sp.Integer(1)] + [
        sp.expand(sum(sp.prod(c) for c in _combos(ts, j))) for j in range(1, roots + 1)
    ]
    parts = [p for p in _partitions(m) if all(j <= roots for j in p)]
    unknowns = sp.symbols(f"a0:{len(parts)}")
    combo = sp.expand(sum(u * sp.prod([es[j] for j in p]) for u, p in zip(unknowns, parts)))
    diff = sp.Poly(sp.expand(combo - target_expr), *ts)
    sol = sp.solve(diff.coeffs(), unknowns, dict=True)[0]
    coeffs = {p: Fraction(str(sol[u])) for u, p in zip(unknowns, parts)}
    return {p: c for p, c in coeffs.items() if c}


def brute_partition_count(k):
    """Number of multisets of positive integers summing to k, by enumeration."""
    seen = set()
    for n in range(1, k + 1):
        for combo in iproduct(range(1, k + 1), repeat=n):
            if sum(combo) == k:
                seen.add(tuple(sorted(combo)))
    return len(seen)


class WordAlgebra:
    """Graded-commutative multiplication of generator words by bubble sort.

    ``gens`` maps a name to ``(degree, power_bound)``; a power bound of
    ``None`` means only the top degree truncates.  Elements are dicts from
    sorted name tuples to Fractions.
    """

    def __init__(self, gens, order, top):
        self.gens = gens
        self.order = {n: i for i, n in enumerate(order)}
        self.top = top

    def degree(self, word):
        return sum(self.gens[n][0] for n in word)

    def normalize_word(self, word):
        word = list(word)
        sign = 1
        for i in range(len(word)):
            for j in range(len(word) - 1 - i):
                a, b = word[j], word[j + 1]
                if self.order[a] > self.order[b]:
                    word[j], word[j + 1] = b, a
                    if self.gens[a][0] % 2 and self.gens[b][0] % 2:
                        sign = -sign
        for n in set(word):
            deg, bound = self.gens[n]
            count = word.count(n)
            if deg % 2 and count > 1:
                return None, 0
            if bound is not None and count >= bound:
                return None, 0
        if self.degree(word) > self.top:
            return None, 0
        return tuple(word), sign

    def mul(self, a, b):
        out = {}
        for wa, ca in a.items():
            for wb, cb in b.items():
                w, s = self.normalize_word(wa + wb)
                if w is None:
                    continue
                out[w] = out.get(w, 0) + s * ca * cb
        return {w: c for w, c in out.items() if c}
