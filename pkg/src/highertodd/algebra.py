"""Finite-dimensional graded-commutative algebras over the rationals.

An algebra is a list of generators with degrees, a basis of normalized
monomials (exponent vectors over the generators) and a table of structure
constants.  Everything is exact: coefficients are :class:`fractions.Fraction`
and products landing above the top degree are truncated to zero.

A basis monomial always equals the product of its generators taken in the
fixed generator order, so ``x1*x2`` and ``x2*x1`` differ by the Koszul sign.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import (
    AlgebraMismatch,
    DegreeOutOfRange,
    InvalidPresentation,
    NoFundamentalClass,
    TooLarge,
)

Monomial = tuple  # exponent vector, one entry per generator

DEFAULT_MAX_BASIS = 100_000


def max_basis_size() -> int:
    """Basis size limit, overridable through ``HIGHERTODD_MAX_BASIS``."""
    raw = os.environ.get("HIGHERTODD_MAX_BASIS")
    if raw is None:
        return DEFAULT_MAX_BASIS
    try:
        value = int(raw)
    except ValueError:
        raise TooLarge(f"HIGHERTODD_MAX_BASIS must be an integer, got {raw!r}")
    if value < 1:
        raise TooLarge("HIGHERTODD_MAX_BASIS must be positive")
    return value


def _check_size(n: int) -> None:
    limit = max_basis_size()
    if n > limit:
        raise TooLarge(f"basis of size {n} exceeds the limit of {limit}")


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


def _monomial_degree(gens: Sequence[Generator], m: Monomial) -> int:
    return sum(e * g.degree for e, g in zip(m, gens))


def _koszul_sign(gens: Sequence[Generator], m1: Monomial, m2: Monomial) -> int:
    # moving each odd factor of m2 left past the odd factors of m1 sitting
    # at later generator positions
    odd1 = [i for i, g in enumerate(gens) if g.odd and m1[i]]
    odd2 = [j for j, g in enumerate(gens) if g.odd and m2[j]]
    swaps = sum(1 for i in odd1 for j in odd2 if j < i)
    return -1 if swaps % 2 else 1


def _basis_sort_key(gens, m):
    return (_monomial_degree(gens, m), sum(m), tuple(-e for e in m))


def monomial_name(gens: Sequence[Generator], m: Monomial) -> str:
    factors = []
    for e, g in zip(m, gens):
        if e == 1:
            factors.append(g.name)
        elif e > 1:
            factors.append(f"{g.name}^{e}")
    return "*".join(factors) if factors else "1"


class GradedAlgebra:
    """A graded-commutative algebra given by basis and structure constants.

    ``table`` maps a pair of basis indices to a tuple of ``(index, coeff)``
    pairs; pairs whose product vanishes are simply absent.  Instances are
    treated as immutable.
    """

    def __init__(
        self,
        generators: Sequence[Generator],
        basis: Sequence[Monomial],
        table: Mapping[tuple, tuple],
        top_degree: int,
        fundamental_index: int | None = None,
        validate: bool = False,
    ):
        self.generators = tuple(generators)
        self.basis = tuple(tuple(m) for m in basis)
        self.top_degree = top_degree
        self.fundamental_index = fundamental_index
        self._table = dict(table)
        self.degrees = tuple(_monomial_degree(self.generators, m) for m in self.basis)
        self._index = {m: i for i, m in enumerate(self.basis)}
        if len(self._index) != len(self.basis):
            raise InvalidPresentation("repeated basis monomial")
        if len({g.name for g in self.generators}) != len(self.generators):
            raise InvalidPresentation("repeated generator name")
        unit = (0,) * len(self.generators)
        if unit not in self._index:
            raise InvalidPresentation("basis does not contain the unit")
        self.unit_index = self._index[unit]
        if validate:
            self.validate()

    # -- basic access ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebra([{gens}], dim={len(self)}, top={self.top_degree})"

    @property
    def generator_names(self) -> tuple:
        return tuple(g.name for g in self.generators)

    def index_of(self, m: Monomial) -> int | None:
        return self._index.get(tuple(m))

    def basis_name(self, i: int) -> str:
        return monomial_name(self.generators, self.basis[i])

    def structure_constants(self, i: int, j: int) -> tuple:
        return self._table.get((i, j), ())

    def table_items(self):
        return self._table.items()

    def euler_characteristic(self) -> int:
        return sum(-1 if d % 2 else 1 for d in self.degrees)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def unit(self) -> AlgebraElement:
        return AlgebraElement(self, {self.unit_index: Fraction(1)})

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {i: Fraction(1)})

    def element(self, coeffs: Mapping[int, object]) -> AlgebraElement:
        return AlgebraElement(self, coeffs)

    def fundamental(self) -> AlgebraElement:
        if self.fundamental_index is None:
            raise NoFundamentalClass("algebra has no fundamental class")
        return self.basis_element(self.fundamental_index)

    def generator_position(self, name: str) -> int:
        for pos, g in enumerate(self.generators):
            if g.name == name:
                return pos
        raise KeyError(name)

    def gen(self, name: str) -> AlgebraElement:
        """The class of generator ``name`` (zero if truncated away)."""
        pos = self.generator_position(name)
        m = [0] * len(self.generators)
        m[pos] = 1
        i = self._index.get(tuple(m))
        return self.zero() if i is None else self.basis_element(i)

    def monomial(self, name: str) -> AlgebraElement:
        """Parse ``"x1*x2*y^2"`` into the product of its factors, in order."""
        result = self.unit()
        if name.strip() == "1":
            return result
        for factor in name.split("*"):
            base, _, exp = factor.strip().partition("^")
            e = int(exp) if exp else 1
            for _ in range(e):
                result = result * self.gen(base.strip())
        return result

    def renamed(self, mapping: Mapping[str, str]) -> GradedAlgebra:
        gens = [Generator(mapping.get(g.name, g.name), g.degree) for g in self.generators]
        return GradedAlgebra(gens, self.basis, self._table, self.top_degree,
                             self.fundamental_index)

    # -- multiplication on basis ----------------------------------------

    def _mul_basis(self, i: int, j: int) -> tuple:
        return self._table.get((i, j), ())

    # -- validation -----------------------------------------------------

    def validate(self, full_associativity: bool = False) -> None:
        """Check the algebra invariants, raising InvalidPresentation."""
        if self.top_degree < 0 or self.top_degree % 2:
            raise InvalidPresentation("top degree must be a non-negative even integer")
        for g in self.generators:
            if g.degree < 1:
                raise InvalidPresentation(f"generator {g.name} must have positive degree")
        for i, d in enumerate(self.degrees):
            if d > self.top_degree:
                raise InvalidPresentation(f"basis class {self.basis_name(i)} above top degree")
        if self.fundamental_index is not None:
            if self.degrees[self.fundamental_index] != self.top_degree:
                raise InvalidPresentation("fundamental class is not of top degree")
        n = len(self)
        for (i, j), terms in self._table.items():
            want = self.degrees[i] + self.degrees[j]
            for k, c in terms:
                if c == 0 or self.degrees[k] != want:
                    raise InvalidPresentation(
                        f"product {self.basis_name(i)}*{self.basis_name(j)} is not homogeneous")
        for i in range(n):
            if self._mul_basis(self.unit_index, i) != ((i, Fraction(1)),) or \
                    self._mul_basis(i, self.unit_index) != ((i, Fraction(1)),):
                raise InvalidPresentation(f"unit does not act trivially on {self.basis_name(i)}")
        for i in range(n):
            for j in range(i, n):
                sign = -1 if (self.degrees[i] * self.degrees[j]) % 2 else 1
                lhs = self.basis_element(i) * self.basis_element(j)
                rhs = self.basis_element(j) * self.basis_element(i)
                if lhs != rhs * sign:
                    raise InvalidPresentation(
                        f"graded commutativity fails for {self.basis_name(i)}, {self.basis_name(j)}")
        for pos, g in enumerate(self.generators):
            if g.odd:
                x = self.gen(g.name)
                if not (x * x).is_zero():
                    raise InvalidPresentation(f"odd generator {g.name} has nonzero square")
        # left multiplication by generators suffices: every basis monomial is
        # the ordered product of its generators
        if full_associativity:
            lefts = range(n)
        else:
            lefts = [k for k in (self.index_of(_unit_vector(len(self.generators), p))
                                 for p in range(len(self.generators))) if k is not None]
        for a in lefts:
            ea = self.basis_element(a)
            for b in range(n):
                eab = ea * self.basis_element(b)
                for c in range(n):
                    ec = self.basis_element(c)
                    if eab * ec != ea * (self.basis_element(b) * ec):
                        raise InvalidPresentation(
                            f"associativity fails on {self.basis_name(a)}, "
                            f"{self.basis_name(b)}, {self.basis_name(c)}")
        for i, m in enumerate(self.basis):
            prod = self.unit()
            for pos, e in enumerate(m):
                for _ in range(e):
                    prod = prod * self.gen(self.generators[pos].name)
            if prod != self.basis_element(i):
                raise InvalidPresentation(
                    f"basis monomial {self.basis_name(i)} is not the ordered product of its generators")


def _unit_vector(n: int, pos: int) -> Monomial:
    v = [0] * n
    v[pos] = 1
    return tuple(v)


def _normalize(coeffs: Mapping[int, object]) -> dict:
    out = {}
    for k, c in coeffs.items():
        c = Fraction(c)
        if c:
            out[k] = c
    return out


class AlgebraElement:
    """An exact-rational combination of basis classes of one algebra."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: GradedAlgebra, coeffs: Mapping[int, object]):
        self.algebra = algebra
        self.coeffs = _normalize(coeffs)

    def _check(self, other: AlgebraElement) -> None:
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements live in different algebras")

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.unit() * Fraction(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return AlgebraElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            return AlgebraElement(self.algebra, {k: c * s for k, c in self.coeffs.items()})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        table = self.algebra._table
        out: dict = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                for k, c in table.get((i, j), ()):
                    out[k] = out.get(k, 0) + a * b * c
        return AlgebraElement(self.algebra, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, e: int):
        result = self.algebra.unit()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.unit() * Fraction(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return other.algebra is self.algebra and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs.get(i, Fraction(0))

    def terms(self) -> list:
        """``(monomial name, coefficient)`` pairs in basis order."""
        return [(self.algebra.basis_name(i), self.coeffs[i]) for i in sorted(self.coeffs)]

    def degrees(self) -> set:
        return {self.algebra.degrees[i] for i in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for name, c in self.terms():
            mag = abs(c)
            if name == "1":
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}*{name}"
            parts.append(("-" if c < 0 else "+", body))
        head_sign, head = parts[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


# ----------------------------------------------------------------------
# kernel operations


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    return a + b


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._check(b)
    return a * b


def component(a: AlgebraElement, d: int) -> AlgebraElement:
    """Projection of ``a`` onto the degree-``d`` span."""
    A = a.algebra
    if d < 0 or d > A.top_degree:
        raise DegreeOutOfRange(f"degree {d} outside 0..{A.top_degree}")
    return AlgebraElement(A, {i: c for i, c in a.coeffs.items() if A.degrees[i] == d})


def pair_top(a: AlgebraElement) -> Fraction:
    """Kronecker pairing with the fundamental class."""
    A = a.algebra
    if A.fundamental_index is None:
        raise NoFundamentalClass("algebra has no fundamental class")
    return a.coefficient(A.fundamental_index)


# ----------------------------------------------------------------------
# constructions


def _free_basis(gens: Sequence[Generator], bounds: Sequence[int | None], top: int) -> list:
    """Exponent vectors with e_i < bound_i and total degree <= top."""
    ranges = []
    for g, b in zip(gens, bounds):
        cap = top // g.degree
        if g.odd:
            cap = min(cap, 1)
        if b is not None:
            cap = min(cap, b - 1)
        ranges.append(range(cap + 1))
    out = []
    limit = max_basis_size()

    def rec(pos, deg, acc):
        if pos == len(gens):
            out.append(tuple(acc))
            if len(out) > limit:
                raise TooLarge(f"basis exceeds the limit of {limit}")
            return
        for e in ranges[pos]:
            d = deg + e * gens[pos].degree
            if d > top:
                break
            acc.append(e)
            rec(pos + 1, d, acc)
            acc.pop()

    rec(0, 0, [])
    out.sort(key=lambda m: _basis_sort_key(gens, m))
    return out


def _free_product(gens, index, m1, m2, top):
    m = tuple(a + b for a, b in zip(m1, m2))
    k = index.get(m)
    if k is None:
        return ()
    return ((k, Fraction(_koszul_sign(gens, m1, m2))),)


@dataclass
class Presentation:
    """Generators and relations for :func:`build_algebra`.

    ``generators`` are ``(name, degree)`` pairs.  Odd-degree generators are
    exterior.  ``truncations`` gives ``k`` with ``g**k == 0`` for even ones
    (absent means only the top degree truncates).  ``extras`` are further
    generators whose products are listed in ``table`` as ``(a, b, rhs)``
    with ``rhs`` a mapping from monomial names to coefficients; products of
    an extra generator that are not listed are zero.  ``fundamental`` names
    the top-degree basis monomial.
    """

    generators: list
    top_degree: int
    truncations: dict = None
    extras: list = None
    table: list = None
    fundamental: str | None = None
    squares: dict = None  # declared squares of free generators, checked only


def build_algebra(p: Presentation) -> GradedAlgebra:
    """Compile a presentation into a validated :class:`GradedAlgebra`."""
    truncations = dict(p.truncations or {})
    extras = list(p.extras or [])
    free_gens = [Generator(n, d) for n, d in p.generators]
    extra_gens = [Generator(n, d) for n, d in extras]
    gens = free_gens + extra_gens
    names = [g.name for g in gens]
    if len(set(names)) != len(names):
        raise InvalidPresentation("repeated generator name")
    for g in gens:
        if g.degree < 1:
            raise InvalidPresentation(f"generator {g.name} must have positive degree")
    unknown = set(truncations) - {g.name for g in free_gens}
    if unknown:
        raise InvalidPresentation(f"truncation for unknown generator(s) {sorted(unknown)}")
    for name, sq in (p.squares or {}).items():
        g = gens[names.index(name)] if name in names else None
        if g is None:
            raise InvalidPresentation(f"square declared for unknown generator {name}")
        if g.odd and any(Fraction(c) for c in sq.values()):
            raise InvalidPresentation(f"odd generator {name} must square to zero")

    nfree = len(free_gens)
    bounds = [truncations.get(g.name) for g in free_gens]
    free_basis = _free_basis(free_gens, bounds, p.top_degree)
    pad = (0,) * len(extra_gens)
    basis = [m + pad for m in free_basis]
    for pos, g in enumerate(extra_gens):
        if g.degree <= p.top_degree:
            basis.append(_unit_vector(len(gens), nfree + pos))
    _check_size(len(basis))
    index = {m: i for i, m in enumerate(basis)}
    degree = {i: _monomial_degree(gens, m) for i, m in enumerate(basis)}

    def parse_rhs(rhs) -> dict:
        out = {}
        for name, c in rhs.items():
            c = Fraction(c)
            if not c:
                continue
            m = [0] * len(gens)
            if name.strip() != "1":
                for factor in name.split("*"):
                    base, _, exp = factor.strip().partition("^")
                    if base not in names:
                        raise InvalidPresentation(f"unknown generator {base!r} in table")
                    m[names.index(base)] += int(exp) if exp else 1
            k = index.get(tuple(m))
            if k is None:
                raise InvalidPresentation(f"{name} is not a basis monomial")
            out[k] = out.get(k, 0) + c
        return {k: c for k, c in out.items() if c}

    # declared products of extras, both orders filled in by graded commutativity
    declared: dict = {}
    for a, b, rhs in p.table or []:
        if a not in names or b not in names:
            raise InvalidPresentation(f"table entry for unknown generator(s) {a}, {b}")
        ia, ib = names.index(a), names.index(b)
        if ia < nfree and ib < nfree:
            raise InvalidPresentation("table entries must involve an extra generator")
        value = parse_rhs(rhs)
        want = gens[ia].degree + gens[ib].degree
        if any(degree[k] != want for k in value):
            raise InvalidPresentation(f"table entry {a}*{b} is not homogeneous of degree {want}")
        sign = -1 if (gens[ia].degree * gens[ib].degree) % 2 else 1
        for key, val in (((ia, ib), value), ((ib, ia), {k: sign * c for k, c in value.items()})):
            if key in declared and declared[key] != val:
                raise InvalidPresentation(f"contradictory table entries for {a}*{b}")
            declared[key] = val
        if ia == ib and gens[ia].odd and value:
            raise InvalidPresentation(f"odd generator {a} must square to zero")

    def gen_index(pos):
        return index.get(_unit_vector(len(gens), pos))

    cache: dict = {}

    def times_generator(i: int, pos: int) -> dict:
        """basis[i] * generator[pos] as a coefficient dict."""
        key = (i, pos)
        if key in cache:
            return cache[key]
        m = basis[i]
        g = gens[pos]
        if degree[i] + g.degree > p.top_degree:
            result = {}
        elif all(e == 0 for e in m[nfree:]):
            if pos < nfree:
                gm = _unit_vector(len(gens), pos)
                result = dict(_free_product(gens, index, m, gm, p.top_degree))
            else:
                # free monomial times extra: commute the extra to the front
                sign = -1 if (degree[i] * g.degree) % 2 else 1
                zi = gen_index(pos)
                result = {k: sign * c for k, c in left_extra(pos, i).items()} if zi is not None else {}
        else:
            epos = next(q for q in range(nfree, len(gens)) if m[q])
            result = dict(declared.get((epos, pos), {}))
        cache[key] = result
        return result

    def left_extra(epos: int, j: int) -> dict:
        """extra generator times basis[j], multiplying through j's factors."""
        acc = {gen_index(epos): Fraction(1)}
        for pos, e in enumerate(basis[j]):
            for _ in range(e):
                nxt: dict = {}
                for k, c in acc.items():
                    for k2, c2 in times_generator(k, pos).items():
                        nxt[k2] = nxt.get(k2, 0) + c * c2
                acc = {k: c for k, c in nxt.items() if c}
        return acc

    table = {}
    n = len(basis)
    for i in range(n):
        for j in range(n):
            if degree[i] + degree[j] > p.top_degree:
                continue
            mi, mj = basis[i], basis[j]
            if all(e == 0 for e in mi[nfree:]) and all(e == 0 for e in mj[nfree:]):
                terms = _free_product(gens, index, mi, mj, p.top_degree)
            elif any(mi[nfree:]):
                epos = next(q for q in range(nfree, len(gens)) if mi[q])
                terms = tuple(sorted(left_extra(epos, j).items()))
            else:
                epos = next(q for q in range(nfree, len(gens)) if mj[q])
                sign = -1 if (degree[i] * degree[j]) % 2 else 1
                terms = tuple(sorted((k, sign * c) for k, c in left_extra(epos, i).items()))
            terms = tuple((k, c) for k, c in terms if c)
            if terms:
                table[(i, j)] = terms

    fundamental_index = None
    if p.fundamental is not None:
        fund = parse_rhs({p.fundamental: 1})
        if len(fund) != 1 or next(iter(fund.values())) != 1:
            raise InvalidPresentation(f"{p.fundamental} is not a basis monomial")
        fundamental_index = next(iter(fund))
    A = GradedAlgebra(gens, basis, table, p.top_degree, fundamental_index)
    A.validate()
    return A


def truncated_polynomial(name: str, degree: int, power: int, top_degree: int | None = None,
                         fundamental: bool = True) -> GradedAlgebra:
    """``Q[g]/(g**power)``, with fundamental class ``g**(power-1)``."""
    top = degree * (power - 1) if top_degree is None else top_degree
    fund = None
    if fundamental:
        fund = "1" if power == 1 else (name if power == 2 else f"{name}^{power - 1}")
    return build_algebra(Presentation([(name, degree)], top, {name: power}, fundamental=fund))


def exterior(names: Sequence[str], degree: int = 1) -> GradedAlgebra:
    """Exterior algebra on odd generators, fundamental class their ordered product."""
    if degree % 2 == 0:
        raise InvalidPresentation("exterior generators must have odd degree")
    top = degree * len(names)
    fund = "*".join(names) if names else "1"
    return build_algebra(Presentation([(n, degree) for n in names], top, fundamental=fund))


def point_algebra() -> GradedAlgebra:
    return GradedAlgebra([], [()], {(0, 0): ((0, Fraction(1)),)}, 0, 0)


def tensor_with_maps(A: GradedAlgebra, B: GradedAlgebra):
    """Graded tensor product together with the basis-index inclusions.

    Returns ``(AB, left, right)`` where ``left[i]`` is the index of
    ``basis_i (x) 1`` and ``right[j]`` the index of ``1 (x) basis_j``.
    """
    if (A.fundamental_index is None) != (B.fundamental_index is None):
        raise InvalidPresentation("both factors need a fundamental class, or neither")
    clash = set(A.generator_names) & set(B.generator_names)
    if clash:
        raise InvalidPresentation(f"generator names shared by both factors: {sorted(clash)}")
    _check_size(len(A) * len(B))
    gens = A.generators + B.generators
    pairs = sorted(
        itertools.product(range(len(A)), range(len(B))),
        key=lambda ij: _basis_sort_key(gens, A.basis[ij[0]] + B.basis[ij[1]]),
    )
    where = {ij: k for k, ij in enumerate(pairs)}
    basis = [A.basis[i] + B.basis[j] for i, j in pairs]

    a_rows: dict = {}
    for (i, i2), terms in A.table_items():
        a_rows.setdefault(i, []).append((i2, terms))
    b_rows: dict = {}
    for (j, j2), terms in B.table_items():
        b_rows.setdefault(j, []).append((j2, terms))

    table = {}
    for (i, j), k in where.items():
        for i2, ta in a_rows.get(i, ()):
            for j2, tb in b_rows.get(j, ()):
                # (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'
                sign = -1 if (B.degrees[j] * A.degrees[i2]) % 2 else 1
                terms = []
                for ka, ca in ta:
                    for kb, cb in tb:
                        terms.append((where[(ka, kb)], sign * ca * cb))
                terms.sort()
                table[(k, where[(i2, j2)])] = tuple(terms)
    fund = None
    if A.fundamental_index is not None:
        fund = where[(A.fundamental_index, B.fundamental_index)]
    AB = GradedAlgebra(gens, basis, table, A.top_degree + B.top_degree, fund)
    left = [where[(i, B.unit_index)] for i in range(len(A))]
    right = [where[(A.unit_index, j)] for j in range(len(B))]
    return AB, left, right


def tensor(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    return tensor_with_maps(A, B)[0]


def push(element: AlgebraElement, target: GradedAlgebra, index_map: Sequence[int]) -> AlgebraElement:
    """Transport an element along a basis-index map into ``target``."""
    return AlgebraElement(target, {index_map[i]: c for i, c in element.coeffs.items()})


def adjoin_nilpotent(A: GradedAlgebra, name: str, degree: int,
                     square: AlgebraElement) -> tuple:
    """Adjoin a class that kills every positive-degree class of ``A``.

    The new generator ``name`` satisfies ``name * a = 0`` for ``deg a > 0``
    and ``name**2 = square``.  Returns ``(B, index_map)`` where ``index_map``
    embeds ``A``'s basis into ``B``'s (indices are preserved).
    """
    if name in A.generator_names:
        raise InvalidPresentation(f"generator {name} already present")
    if square.algebra is not A:
        raise AlgebraMismatch("square must live in the algebra being extended")
    if degree > A.top_degree:
        raise InvalidPresentation("adjoined class above top degree")
    if any(d != 2 * degree for d in square.degrees()):
        raise InvalidPresentation("square must be homogeneous of twice the degree")
    if degree % 2 and not square.is_zero():
        raise InvalidPresentation(f"odd generator {name} must square to zero")
    gens = A.generators + (Generator(name, degree),)
    basis = [m + (0,) for m in A.basis] + [(0,) * len(A.generators) + (1,)]
    z = len(basis) - 1
    table = dict(A.table_items())
    one = Fraction(1)
    table[(A.unit_index, z)] = ((z, one),)
    table[(z, A.unit_index)] = ((z, one),)
    if not square.is_zero():
        table[(z, z)] = tuple(sorted(square.coeffs.items()))
    B = GradedAlgebra(gens, basis, table, A.top_degree, A.fundamental_index)
    return B, list(range(len(A)))


def random_element(A: GradedAlgebra, rng, density: float = 0.5, span: int = 5) -> AlgebraElement:
    """Random element with small integer-ratio coefficients (testing helper)."""
    coeffs = {}
    for i in range(len(A)):
        if rng.random() < density:
            coeffs[i] = Fraction(rng.randint(-span, span), rng.randint(1, span))
    return AlgebraElement(A, coeffs)


def iter_basis(A: GradedAlgebra) -> Iterator[AlgebraElement]:
    for i in range(len(A)):
        yield A.basis_element(i)

