"""Hirzebruch multiplicative sequences and characteristic numbers.

A genus is a characteristic power series ``Q`` with ``Q(0) = 1``.  Its
multiplicative class on a total class ``1 + k_1 + k_2 + ...`` (Chern or
Pontrjagin) is ``prod_i Q(t_i)`` over formal roots ``t_i``, computed without
splitting as ``exp(sum_m a_m s_m)`` where ``log Q = sum_m a_m t^m`` and the
power sums ``s_m`` come from Newton's identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from . import series as ps
from .algebra import (
    AlgebraElement,
    GradedAlgebra,
    Presentation,
    build_algebra,
    component,
    pair_top,
)
from .errors import NotATotalClass, UnknownPiClass
from .expr import evaluate

CHERN = "chern"
PONTRJAGIN = "pontrjagin"


@dataclass(frozen=True)
class GenusSpec:
    """A characteristic series in the variable of its own kind.

    For ``pontrjagin`` genera the series is in ``y = t**2``, e.g. the L-genus
    uses ``sqrt(y)/tanh(sqrt(y)) = 1 + y/3 - y^2/45 + ...``.
    """

    name: str
    series: ps.PowerSeries1
    variable_kind: str = CHERN

    def __post_init__(self):
        if self.variable_kind not in (CHERN, PONTRJAGIN):
            raise ValueError(f"unknown variable kind {self.variable_kind!r}")

    @property
    def degree_step(self) -> int:
        return 2 if self.variable_kind == CHERN else 4


def todd_genus(order: int) -> GenusSpec:
    return GenusSpec("todd", ps.todd_series(order), CHERN)


def l_genus(order: int) -> GenusSpec:
    return GenusSpec("l", ps.l_series(2 * order).even_part(), PONTRJAGIN)


def ahat_genus(order: int) -> GenusSpec:
    return GenusSpec("ahat", ps.ahat_series(2 * order).even_part(), PONTRJAGIN)


STANDARD_GENERA = {"todd": todd_genus, "l": l_genus, "ahat": ahat_genus}


def standard_genus(name: str, order: int) -> GenusSpec:
    try:
        return STANDARD_GENERA[name](order)
    except KeyError:
        raise ValueError(f"unknown genus {name!r}; expected one of {sorted(STANDARD_GENERA)}")


def _weight(V, g: GenusSpec) -> int:
    return V.dim_c if g.variable_kind == CHERN else V.dim_c // 2


def _resolve_spec(V, g, order: int | None = None) -> GenusSpec:
    if isinstance(g, GenusSpec):
        return g
    w = V.dim_c if g == "todd" else V.dim_c // 2
    return standard_genus(g, w if order is None else order)


# ----------------------------------------------------------------------
# universal rings


def universal_chern_ring(n: int) -> GradedAlgebra:
    """``Q[c_1..c_n]`` (``c_i`` in degree ``2i``) truncated above degree ``2n``."""
    gens = [(f"c{i}", 2 * i) for i in range(1, n + 1)]
    return build_algebra(Presentation(gens, 2 * n))


def universal_pontrjagin_ring(m: int) -> GradedAlgebra:
    """``Q[p_1..p_m]`` (``p_i`` in degree ``4i``) truncated above degree ``4m``."""
    gens = [(f"p{i}", 4 * i) for i in range(1, m + 1)]
    return build_algebra(Presentation(gens, 4 * m))


def universal_total(A: GradedAlgebra, prefix: str = "c") -> AlgebraElement:
    total = A.unit()
    for name in A.generator_names:
        if name.startswith(prefix):
            total = total + A.gen(name)
    return total


# ----------------------------------------------------------------------
# Newton identities


def power_sums(elementary: Sequence[AlgebraElement], n: int) -> list:
    """Power sums ``s_1..s_n`` from elementary classes ``e_1, e_2, ...``.

    ``s_m = sum_{i<m} (-1)^(i-1) e_i s_(m-i) + (-1)^(m-1) m e_m``.
    """
    if not elementary:
        raise ValueError("need at least the zero-th algebra to work in")
    A = elementary[0].algebra
    e = [A.zero()] + list(elementary) + [A.zero()] * max(0, n - len(elementary))
    s = [A.zero()] * (n + 1)
    for m in range(1, n + 1):
        acc = e[m] * ((-1) ** (m - 1) * m)
        for i in range(1, m):
            term = e[i] * s[m - i]
            acc = acc + term if i % 2 == 1 else acc - term
        s[m] = acc
    return s[1:]


def newton_power_sums(n: int) -> list:
    """Power sums of ``n`` formal roots written in ``c_1..c_n``."""
    A = universal_chern_ring(n)
    return power_sums([A.gen(f"c{i}") for i in range(1, n + 1)], n)


# ----------------------------------------------------------------------
# multiplicative classes


def _total_components(total: AlgebraElement, step: int) -> list:
    A = total.algebra
    if total.coefficient(A.unit_index) != 1 or not component(total, 0) == A.unit():
        raise NotATotalClass("total class must have constant term 1")
    stray = [d for d in total.degrees() if d % step]
    if stray:
        raise NotATotalClass(f"total class has components in degrees {sorted(stray)} "
                             f"not divisible by {step}")
    return [component(total, step * i) for i in range(1, A.top_degree // step + 1)]


def _exp_nilpotent(u: AlgebraElement, n: int) -> AlgebraElement:
    # u has no degree-0 part, so u^(j) vanishes once 2j exceeds the top degree
    A = u.algebra
    result = A.unit()
    power = A.unit()
    for j in range(1, n + 1):
        power = power * u
        if power.is_zero():
            break
        result = result + power * Fraction(1, factorial(j))
    return result


def multiplicative_class(g: GenusSpec, total: AlgebraElement, n: int) -> AlgebraElement:
    """``prod Q(t_i)`` over the formal roots of ``total``, up to weight ``n``."""
    ks = _total_components(total, g.degree_step)
    if n <= 0:
        return total.algebra.unit()
    log_q = ps.series_log(g.series.truncate(n))
    sums = power_sums(ks or [total.algebra.zero()], n)
    u = total.algebra.zero()
    for m in range(1, n + 1):
        if log_q[m]:
            u = u + sums[m - 1] * log_q[m]
    return _exp_nilpotent(u, n)


def chern_to_pontrjagin(total_chern: AlgebraElement, n: int | None = None) -> AlgebraElement:
    """Total Pontrjagin class ``1 + p_1 + p_2 + ...`` of a total Chern class.

    Uses ``c(-) * c = sum_k (-1)^k p_k`` where ``c(-) = sum_i (-1)^i c_i``.
    """
    A = total_chern.algebra
    cs = _total_components(total_chern, 2)
    signed = A.unit()
    for i, c in enumerate(cs, start=1):
        signed = signed + c * (-1) ** i
    prod = signed * total_chern
    top = A.top_degree if n is None else min(A.top_degree, 2 * n)
    result = A.unit()
    for k in range(1, top // 4 + 1):
        result = result + component(prod, 4 * k) * (-1) ** k
    return result


def chern_class(V, i: int) -> AlgebraElement:
    if 2 * i > V.algebra.top_degree:
        return V.algebra.zero()
    return component(V.total_chern, 2 * i)


def pontrjagin_total(V) -> AlgebraElement:
    return chern_to_pontrjagin(V.total_chern, V.dim_c)


def pontrjagin_class(V, k: int) -> AlgebraElement:
    if 4 * k > V.algebra.top_degree:
        return V.algebra.zero()
    return component(pontrjagin_total(V), 4 * k)


def genus_class(V, g, order: int | None = None) -> AlgebraElement:
    """The multiplicative class of ``g`` on ``V`` (e.g. the total Todd class)."""
    g = _resolve_spec(V, g, order)
    if g.variable_kind == CHERN:
        total = V.total_chern
    else:
        total = pontrjagin_total(V)
    return multiplicative_class(g, total, _weight(V, g))


def todd_class(V, order: int | None = None) -> AlgebraElement:
    return genus_class(V, "todd", order)


def genus_number(V, g, order: int | None = None) -> Fraction:
    """``<Q-class(V), [V]>``; for Todd this is the arithmetic genus."""
    return pair_top(genus_class(V, g, order))


def higher_genus(V, g, x, order: int | None = None) -> Fraction:
    """``<Q-class(V) u*(x), [V]>`` for a pi-class label ``x``."""
    ux = x if isinstance(x, AlgebraElement) else V.pi_class(x)
    return pair_top(genus_class(V, g, order) * ux)


def signature(V) -> Fraction:
    return genus_number(V, "l")


def euler_number(V) -> Fraction:
    return pair_top(chern_class(V, V.dim_c))


def _class_resolver(V):
    A = V.algebra

    def resolve(name: str) -> AlgebraElement:
        if len(name) > 1 and name[0] in "cp" and name[1:].isdigit():
            i = int(name[1:])
            if name[0] == "c":
                return chern_class(V, i) if i > 0 else A.unit()
            return pontrjagin_class(V, i) if i > 0 else A.unit()
        try:
            return V.pi_class(name)
        except UnknownPiClass:
            raise UnknownPiClass(f"unknown class {name!r}: not a Chern/Pontrjagin class "
                                 f"or pi-class label of {V.name}")

    return resolve


def characteristic_class(V, expr: str) -> AlgebraElement:
    """Evaluate a polynomial in ``c_i``, ``p_i`` and pi-class labels in ``V``'s ring."""
    return evaluate(expr, _class_resolver(V), V.algebra.unit)


def char_number(V, expr: str) -> Fraction:
    """``<expr, [V]>``; zero when the expression misses the top degree."""
    return pair_top(characteristic_class(V, expr))
