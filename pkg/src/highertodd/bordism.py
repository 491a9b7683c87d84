"""A desk-scale model of rational complex bordism of ``B(Z^2g)``.

``Omega^U_{2k} (x) Q`` has the basis of products ``P^{j1} x ... x P^{jr}``
indexed by partitions of ``k``.  With a torus ``B(Z^2g)`` attached, the
generators become pairs ``(S, lambda)``: ``S`` a coordinate subtorus of even
dimension ``2m`` (realised by an abelian variety mapping onto it) and
``lambda`` a partition of the remaining weight.

The oriented variant replaces ``P^j`` by ``P^{2j}`` and the Todd genus by
the L-genus; bordism degrees are then counted in complex dimension of the
representatives, so ``k`` stands for real dimension ``2k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from . import genera, linalg
from .algebra import AlgebraElement, GradedAlgebra, exterior, pair_top, point_algebra
from .errors import NotInvariant
from .varieties import VarietyModel, abelian_variety, point, product, projective_space, with_pi_classes

UNITARY = "unitary"
ORIENTED = "oriented"

_GENUS_FOR = {UNITARY: "todd", ORIENTED: "l"}
_FIBER_WEIGHT = {UNITARY: 1, ORIENTED: 2}


def partitions(k: int, largest: int | None = None) -> list:
    """Partitions of ``k`` as weakly decreasing tuples, reverse-lexicographic."""
    if k == 0:
        return [()]
    largest = k if largest is None else min(largest, k)
    out = []
    for first in range(largest, 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return out


def canonical_partition(parts: Iterable[int]) -> tuple:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    return parts


def unitary_basis(k: int) -> list:
    if k < 0:
        raise ValueError("k must be non-negative")
    return partitions(k)


# ----------------------------------------------------------------------
# the classifying space


class TorusModel:
    """``B(Z^2g)``, a torus with cohomology the exterior algebra on ``x1..x2g``."""

    def __init__(self, g: int):
        if g < 0:
            raise ValueError("g must be non-negative")
        self.g = g
        self.names = tuple(f"x{i}" for i in range(1, 2 * g + 1))
        self.algebra: GradedAlgebra = exterior(self.names) if g else point_algebra()

    def __repr__(self):
        return f"TorusModel(Z^{2 * self.g})"

    @classmethod
    def parse(cls, text: str) -> TorusModel:
        """``"Z^4"`` -> ``TorusModel(2)``; ``"1"`` or ``"Z^0"`` is the trivial group."""
        t = text.replace(" ", "")
        if t in ("1", "Z^0", "0"):
            return cls(0)
        if not t.startswith("Z^") or not t[2:].isdigit():
            raise ValueError(f"expected a group of the form Z^<2g>, got {text!r}")
        rank = int(t[2:])
        if rank % 2:
            raise ValueError("only even-rank free abelian groups are supported")
        return cls(rank // 2)

    def label(self, subset) -> str:
        return "*".join(self.names[i] for i in sorted(subset)) or "1"

    def subsets(self, size: int) -> list:
        return [tuple(c) for c in itertools.combinations(range(2 * self.g), size)]

    def cohomology_labels(self, max_degree: int) -> list:
        """Exterior basis monomials of degree at most ``max_degree``."""
        out = []
        for d in range(0, min(max_degree, 2 * self.g) + 1):
            out.extend(self.label(s) for s in self.subsets(d))
        return out

    def cohomology_class(self, label: str) -> AlgebraElement:
        return self.algebra.monomial(label)


# ----------------------------------------------------------------------
# generators and elements


@dataclass(frozen=True, order=True)
class BordismGenerator:
    homology_label: str  # coordinate subtorus, as a monomial in x1..x2g
    fiber: tuple         # partition

    def __str__(self):
        fib = ",".join(str(j) for j in self.fiber)
        return f"[{self.homology_label} | ({fib})]"


def generators(k: int, pi_model: TorusModel, kind: str = UNITARY) -> list:
    """Basis of the degree-``k`` bordism group of ``B pi``, by subtorus then partition."""
    w = _FIBER_WEIGHT[kind]
    out = []
    for m in range(0, min(pi_model.g, k) + 1):
        rest = k - m
        if rest % w:
            continue
        for s in pi_model.subsets(2 * m):
            for lam in partitions(rest // w):
                out.append(BordismGenerator(pi_model.label(s), lam))
    return out


class BordismElement:
    """A rational combination of bordism generators of one degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping):
        out = {}
        for gen, c in coeffs.items():
            if not isinstance(gen, BordismGenerator):
                gen = BordismGenerator("1", canonical_partition(gen))
            c = Fraction(c)
            if c:
                out[gen] = out.get(gen, 0) + c
        self.coeffs = {g: c for g, c in out.items() if c}

    @classmethod
    def of(cls, gen) -> BordismElement:
        return cls({gen: 1})

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, c in other.coeffs.items():
            out[g] = out.get(g, 0) + c
        return BordismElement(out)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BordismElement({g: c * other for g, c in self.coeffs.items()})
        if isinstance(other, tuple):
            # product with a projective-space product: concatenate fibers
            return BordismElement({
                BordismGenerator(g.homology_label, canonical_partition(g.fiber + other)): c
                for g, c in self.coeffs.items()
            })
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, BordismElement) and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self, basis: list) -> list:
        return [self.coeffs.get(g, Fraction(0)) for g in basis]

    def __repr__(self):
        if not self.coeffs:
            return "BordismElement(0)"
        return "BordismElement(" + " + ".join(f"{c}*{g}" for g, c in sorted(self.coeffs.items())) + ")"


def _as_element(e) -> BordismElement:
    if isinstance(e, BordismElement):
        return e
    if isinstance(e, BordismGenerator):
        return BordismElement.of(e)
    return BordismElement.of(BordismGenerator("1", canonical_partition(e)))


# ----------------------------------------------------------------------
# functionals


@dataclass(frozen=True)
class GenusFunctional:
    """A linear functional given by its values on generators (absent means zero)."""

    values: Mapping = field(default_factory=dict)

    def __call__(self, e) -> Fraction:
        e = _as_element(e)
        return sum((c * Fraction(self.values.get(g, 0)) for g, c in e.coeffs.items()), Fraction(0))

    def value(self, gen: BordismGenerator) -> Fraction:
        return Fraction(self.values.get(gen, 0))


@lru_cache(maxsize=None)
def _projective_genus(j: int, genus: str) -> Fraction:
    return genera.genus_number(projective_space(j), genus)


def todd_functional(e) -> Fraction:
    """Todd genus, extended linearly; a product of projective spaces has Todd genus 1.

    Generators over a nontrivial subtorus carry an abelian-variety factor and
    so have Todd genus 0.
    """
    e = _as_element(e)
    total = Fraction(0)
    for gen, c in e.coeffs.items():
        if gen.homology_label != "1":
            continue
        value = Fraction(1)
        for j in gen.fiber:
            value *= _projective_genus(j, "todd")
        total += c * value
    return total


@lru_cache(maxsize=None)
def representative(gen: BordismGenerator, pi_model_g: int, kind: str = UNITARY) -> VarietyModel:
    """``M x N -> B pi``: an abelian variety onto the subtorus times projective spaces.

    Pi-classes of the model are the pullbacks of ``x1..x2g``: the coordinate
    classes of the subtorus, zero for the others.
    """
    pi_model = TorusModel(pi_model_g)
    names = [] if gen.homology_label == "1" else gen.homology_label.split("*")
    V = abelian_variety(len(names) // 2, names) if names else point()
    w = _FIBER_WEIGHT[kind]
    for idx, j in enumerate(gen.fiber, start=1):
        V = product(V, projective_space(w * j, name=f"h{idx}"))
    classes = {nm: (V.algebra.gen(nm) if nm in names else V.algebra.zero())
               for nm in pi_model.names}
    return with_pi_classes(V, classes)


def higher_genus_functional(x, k: int, pi_model: TorusModel, kind: str = UNITARY) -> GenusFunctional:
    """``xi(M -> B pi) = <u*(x) T(M), [M]>`` on the generator basis.

    ``x`` is a label expression in ``x1..x2g`` such as ``"1 + x1*x2"``.
    """
    genus = _GENUS_FOR[kind]
    values = {}
    for gen in generators(k, pi_model, kind):
        V = representative(gen, pi_model.g, kind)
        values[gen] = genera.higher_genus(V, genus, x)
    return GenusFunctional(values)


# ----------------------------------------------------------------------
# the birational ideal


@dataclass(frozen=True)
class IdealSpan:
    k: int
    basis: tuple          # partitions of k, coordinate order
    vectors: tuple        # reduced spanning vectors of the ideal in degree k
    dimension: int

    @property
    def codimension(self) -> int:
        return len(self.basis) - self.dimension

    def contains(self, e) -> bool:
        v = _as_element(e).vector([BordismGenerator("1", p) for p in self.basis])
        return linalg.in_span(v, list(self.vectors))


def _differences(k: int) -> list:
    parts = partitions(k)
    return [BordismElement({p: 1, q: -1}) for p, q in itertools.combinations(parts, 2)]


@lru_cache(maxsize=None)
def birational_ideal_span(k: int) -> IdealSpan:
    """Span of ``[N] - [N']`` for birational ``N, N'`` in degree ``k``.

    Birational products of projective spaces are those of equal weight, so
    the span is generated by differences of partitions of ``k`` together
    with products of lower-degree differences with arbitrary partitions.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    basis = tuple(partitions(k))
    coords = [BordismGenerator("1", p) for p in basis]
    rows = [d.vector(coords) for d in _differences(k)]
    for a in range(1, k):
        for d in _differences(a):
            for mu in partitions(k - a):
                rows.append((d * mu).vector(coords))
    reduced, _ = linalg.rref(rows) if rows else ([], [])
    return IdealSpan(k, basis, tuple(tuple(r) for r in reduced), len(reduced))


def quotient_report(k: int) -> dict:
    """Dimension data for ``Omega^U_{2k} / I_{2k}`` and how the Todd genus sees it."""
    span = birational_ideal_span(k)
    todd_on_span = [todd_functional(BordismElement(dict(zip(span.basis, v))))
                    for v in span.vectors]
    return {
        "k": k,
        "dimension": len(span.basis),
        "ideal_dimension": span.dimension,
        "codimension": span.codimension,
        "todd_vanishes_on_ideal": all(t == 0 for t in todd_on_span),
        "todd_on_quotient_generator": todd_functional(span.basis[0]) if span.basis else Fraction(0),
    }


def ideal_closure_failures(max_k: int) -> list:
    """Products ``v * mu`` (``v`` spanning ``I_a``, ``mu`` of weight ``b``) escaping ``I_(a+b)``."""
    failures = []
    for a in range(1, max_k + 1):
        span = birational_ideal_span(a)
        for v in span.vectors:
            e = BordismElement(dict(zip(span.basis, v)))
            for b in range(0, max_k - a + 1):
                target = birational_ideal_span(a + b)
                for mu in partitions(b):
                    prod = e * mu
                    if not target.contains(prod):
                        failures.append((a, b, e, mu))
    return failures


# ----------------------------------------------------------------------
# invariance and decomposition


@dataclass(frozen=True)
class InvarianceCheck:
    ok: bool
    witness: BordismElement | None = None

    def __bool__(self):
        return self.ok


def is_invariant(xi: GenusFunctional, k: int, pi_model: TorusModel, kind: str = UNITARY) -> InvarianceCheck:
    """Does ``xi`` agree on birational generators (same subtorus, any fiber)?"""
    by_label: dict = {}
    for gen in generators(k, pi_model, kind):
        by_label.setdefault(gen.homology_label, []).append(gen)
    for gens in by_label.values():
        first = gens[0]
        for other in gens[1:]:
            if xi.value(first) != xi.value(other):
                witness = BordismElement({first: 1, other: -1})
                return InvarianceCheck(False, witness)
    return InvarianceCheck(True)


def decompose_functional(xi: GenusFunctional, k: int, pi_model: TorusModel,
                         kind: str = UNITARY) -> AlgebraElement:
    """A class ``x`` in ``H*(B pi)`` with ``xi = <u*(x) T(M), [M]>`` on every generator.

    For the oriented kind the L-class replaces the Todd class.  Among the
    solutions, free coordinates (later basis classes) are set to zero.
    """
    check = is_invariant(xi, k, pi_model, kind)
    if not check:
        raise NotInvariant(f"functional is not birationally invariant; witness {check.witness}",
                           check.witness)
    genus = _GENUS_FOR[kind]
    gens = generators(k, pi_model, kind)
    labels = pi_model.cohomology_labels(2 * k)
    matrix = []
    for gen in gens:
        V = representative(gen, pi_model.g, kind)
        cls = genera.genus_class(V, genus)
        row = []
        for label in labels:
            ux = V.pi_class(label)
            row.append(pair_top(cls * ux))
        matrix.append(row)
    rhs = [xi.value(gen) for gen in gens]
    x = linalg.solve(matrix, rhs) if gens else [Fraction(0)] * len(labels)
    assert x is not None, "invariant functional produced an inconsistent system"
    A = pi_model.algebra
    result = A.zero()
    for label, c in zip(labels, x):
        if c:
            result = result + pi_model.cohomology_class(label) * c
    return result


def functional_of_class(x: AlgebraElement, k: int, pi_model: TorusModel,
                        kind: str = UNITARY) -> GenusFunctional:
    """The functional induced by a class of ``H*(B pi)`` given as an element."""
    terms = []
    for i, c in x.coeffs.items():
        terms.append(f"({c.numerator}/{c.denominator})*{x.algebra.basis_name(i)}")
    expr = " + ".join(terms) if terms else "0"
    return higher_genus_functional(expr, k, pi_model, kind)
