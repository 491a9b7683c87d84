"""Model varieties: projective spaces, abelian varieties, products, point blow-ups.

A :class:`VarietyModel` bundles a rational cohomology ring with its total
Chern class and the images ``u*(x)`` of classes pulled back from a
classifying space.  The latter are stored as *atomic* pi-classes; any
product of atomic labels (``"x1*x2"``) is a pi-class as well.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import genera
from .algebra import (
    AlgebraElement,
    GradedAlgebra,
    adjoin_nilpotent,
    component,
    exterior,
    pair_top,
    point_algebra,
    push,
    tensor_with_maps,
    truncated_polynomial,
)
from .errors import (
    CorrespondenceError,
    ExprError,
    TransportError,
    UnknownPiClass,
    UnsupportedDimension,
)
from .expr import evaluate


@dataclass(frozen=True)
class VarietyModel:
    name: str
    dim_c: int
    algebra: GradedAlgebra
    total_chern: AlgebraElement
    pi_generators: tuple = ()  # ((label, element), ...)
    provenance: str = ""

    @property
    def pi_labels(self) -> tuple:
        return tuple(label for label, _ in self.pi_generators)

    def pi_generator(self, label: str) -> AlgebraElement:
        for lab, e in self.pi_generators:
            if lab == label:
                return e
        raise UnknownPiClass(f"{label!r} is not a pi-class label of {self.name}")

    def pi_class(self, label: str) -> AlgebraElement:
        """``u*(x)`` for a label such as ``"1"``, ``"x1"`` or ``"x1*x2"``."""
        if label.strip() == "1":
            return self.algebra.unit()
        try:
            return evaluate(label, self.pi_generator, self.algebra.unit)
        except ExprError as exc:
            raise UnknownPiClass(f"malformed pi-class label {label!r}: {exc}")

    def pi_monomials(self) -> list:
        """Every product of atomic pi-classes of degree at most ``2n``, as labels.

        Odd atomic classes appear at most once; the unit label is ``"1"``.
        """
        top = self.algebra.top_degree
        degs = []
        for label, e in self.pi_generators:
            ds = e.degrees()
            degs.append(ds.pop() if len(ds) == 1 else None)
        ranges = []
        for d in degs:
            if d is None or d == 0:
                ranges.append(range(2))
            elif d % 2:
                ranges.append(range(2))
            else:
                ranges.append(range(top // d + 1))
        found = []
        for exps in itertools.product(*ranges):
            deg = sum(e * (d or 0) for e, d in zip(exps, degs))
            if deg <= top:
                found.append((deg, tuple(-e for e in exps)))
        found.sort()
        return [_label(self.pi_labels, [-e for e in exps]) for _, exps in found]

    def euler_characteristic(self) -> int:
        return self.algebra.euler_characteristic()

    def check_invariants(self) -> list:
        """Violated model invariants, as human-readable strings."""
        problems = []
        A = self.algebra
        if A.top_degree != 2 * self.dim_c:
            problems.append("top degree is not twice the complex dimension")
        if A.fundamental_index is None:
            problems.append("no fundamental class")
        if component(self.total_chern, 0) != A.unit():
            problems.append("total Chern class does not start with 1")
        if any(d % 2 for d in self.total_chern.degrees()):
            problems.append("total Chern class has odd-degree components")
        for label, e in self.pi_generators:
            if e.algebra is not A:
                problems.append(f"pi-class {label} lives in another algebra")
            elif not e.is_homogeneous():
                problems.append(f"pi-class {label} is not homogeneous")
        if A.fundamental_index is not None and \
                genera.euler_number(self) != self.euler_characteristic():
            problems.append("top Chern number differs from the Euler characteristic")
        return problems


def _label(labels: Sequence[str], exps: Sequence[int]) -> str:
    parts = []
    for lab, e in zip(labels, exps):
        if e == 1:
            parts.append(lab)
        elif e > 1:
            parts.append(f"{lab}^{e}")
    return "*".join(parts) if parts else "1"


# ----------------------------------------------------------------------
# builders


def point() -> VarietyModel:
    A = point_algebra()
    return VarietyModel("pt", 0, A, A.unit(), (), "point")


def projective_space(n: int, name: str = "h") -> VarietyModel:
    """``P^n``: ``Q[h]/h^(n+1)``, total Chern class ``(1+h)^(n+1)``."""
    if n < 0:
        raise UnsupportedDimension("projective space needs n >= 0")
    if n == 0:
        V = point()
        return VarietyModel("P(0)", 0, V.algebra, V.total_chern, (), "P(0)")
    A = truncated_polynomial(name, 2, n + 1)
    total = (A.unit() + A.gen(name)) ** (n + 1)
    return VarietyModel(f"P({n})", n, A, total, (), f"P({n})")


def abelian_variety(g: int, names: Sequence[str] | None = None) -> VarietyModel:
    """A ``g``-dimensional abelian variety with ``u`` the identity to ``B(Z^2g)``."""
    if g < 1:
        raise UnsupportedDimension("abelian variety needs g >= 1")
    names = list(names) if names is not None else [f"x{i}" for i in range(1, 2 * g + 1)]
    if len(names) != 2 * g:
        raise ValueError(f"need {2 * g} generator names, got {len(names)}")
    A = exterior(names)
    pis = tuple((nm, A.gen(nm)) for nm in names)
    return VarietyModel(f"A({g})", g, A, A.unit(), pis, f"A({g})")


def with_pi_classes(V: VarietyModel, classes: Mapping[str, object]) -> VarietyModel:
    """Replace ``V``'s atomic pi-classes.

    Values are elements of ``V``'s ring or expressions in its generator
    names, e.g. ``{"a": "x1 + x2", "b": "x2"}``.
    """
    A = V.algebra
    pis = []
    for label, value in classes.items():
        if isinstance(value, str):
            value = evaluate(value, A.gen, A.unit)
        pis.append((label, value))
    return VarietyModel(V.name, V.dim_c, A, V.total_chern, tuple(pis),
                        V.provenance + " [relabeled pi]")


def _fresh(name: str, taken: set) -> str:
    candidate = name
    while candidate in taken:
        candidate += "'"
    return candidate


def product(V: VarietyModel, W: VarietyModel) -> VarietyModel:
    """``V x W`` with Kunneth ring, Whitney total Chern class and merged pi-classes.

    Generator names and pi-labels of ``W`` colliding with ``V``'s get primes
    appended.
    """
    taken = set(V.algebra.generator_names)
    renames = {}
    for nm in W.algebra.generator_names:
        new = _fresh(nm, taken)
        taken.add(new)
        if new != nm:
            renames[nm] = new
    B = W.algebra.renamed(renames) if renames else W.algebra
    AB, left, right = tensor_with_maps(V.algebra, B)
    total = push(V.total_chern, AB, left) * push(W.total_chern, AB, right)
    labels_taken = set(V.pi_labels)
    pis = [(lab, push(e, AB, left)) for lab, e in V.pi_generators]
    for lab, e in W.pi_generators:
        new = _fresh(renames.get(lab, lab), labels_taken)
        labels_taken.add(new)
        pis.append((new, push(e, AB, right)))
    return VarietyModel(f"{V.name} x {W.name}", V.dim_c + W.dim_c, AB, total, tuple(pis),
                        f"product({V.provenance}, {W.provenance})")


@dataclass(frozen=True)
class BlowupPair:
    base: VarietyModel
    blown: VarietyModel
    pi_transport: Mapping[str, str] = field(default_factory=dict)


def blow_up_point(V: VarietyModel, name: str | None = None) -> BlowupPair:
    """Blow up a point of a surface.

    Adds a degree-2 class ``z`` with ``z^2 = -[pt]`` and ``z * a = 0`` for
    every positive-degree class ``a`` of ``V``; the total Chern class
    becomes ``c_1 + z`` and ``c_2 - z^2``.  Pi-classes carry over unchanged.
    """
    if V.dim_c != 2:
        raise UnsupportedDimension(f"point blow-ups need a surface, got dimension {V.dim_c}")
    A = V.algebra
    if name is None:
        k = 1
        while f"z{k}" in A.generator_names:
            k += 1
        name = f"z{k}"
    B, embed = adjoin_nilpotent(A, name, 2, -A.fundamental())
    z = B.gen(name)
    total = push(V.total_chern, B, embed) + z - z * z
    pis = tuple((lab, push(e, B, embed)) for lab, e in V.pi_generators)
    blown = VarietyModel(f"blowup({V.name})", 2, B, total, pis, f"blowup({V.provenance})")
    return BlowupPair(V, blown, {lab: lab for lab in V.pi_labels})


# ----------------------------------------------------------------------
# invariance verification


@dataclass(frozen=True)
class LabelRow:
    label: str
    blown_label: str
    base_value: Fraction
    blown_value: Fraction

    @property
    def equal(self) -> bool:
        return self.base_value == self.blown_value


@dataclass(frozen=True)
class InvarianceReport:
    genus: str
    rows: tuple

    @property
    def verdict(self) -> str:
        return "PASS" if all(r.equal for r in self.rows) else "FAIL"

    @property
    def failures(self) -> list:
        return [r for r in self.rows if not r.equal]


def _transport_label(label: str, transport: Mapping[str, str]) -> str:
    if label == "1":
        return label
    out = []
    for factor in label.split("*"):
        base, hat, exp = factor.partition("^")
        out.append(transport[base] + hat + exp)
    return "*".join(out)


def verify_blowup_invariance(pair: BlowupPair, g="todd") -> InvarianceReport:
    """Compare every higher genus of the base with its transport to the blow-up."""
    base, blown, transport = pair.base, pair.blown, dict(pair.pi_transport)
    if set(transport) != set(base.pi_labels):
        raise TransportError("pi transport must cover exactly the base's pi-labels")
    if sorted(transport.values()) != sorted(blown.pi_labels):
        raise TransportError("pi transport must be a bijection onto the blow-up's pi-labels")
    for src, dst in transport.items():
        if base.pi_generator(src).degrees() != blown.pi_generator(dst).degrees():
            raise TransportError(f"pi transport changes the degree of {src}")
    if base.dim_c != blown.dim_c:
        raise TransportError("base and blow-up differ in dimension")
    spec_base = genera._resolve_spec(base, g)
    spec_blown = genera._resolve_spec(blown, g)
    cls_base = genera.genus_class(base, spec_base)
    cls_blown = genera.genus_class(blown, spec_blown)
    rows = []
    for label in base.pi_monomials():
        other = _transport_label(label, transport)
        rows.append(LabelRow(
            label, other,
            pair_top(cls_base * base.pi_class(label)),
            pair_top(cls_blown * blown.pi_class(other)),
        ))
    return InvarianceReport(spec_base.name, tuple(rows))


# ----------------------------------------------------------------------
# Chern class comparison


@dataclass(frozen=True)
class ChernComparison:
    chern: tuple           # ((i, agree), ...)
    pontrjagin: tuple      # ((k, agree), ...)
    todd: tuple            # ((degree, agree), ...)
    higher_todd: tuple     # ((label, value_V, value_W), ...)
    euler: tuple           # (chi_V, chi_W)
    derived: tuple         # ((class, reason), ...) equalities implied by the agreeing data

    def agrees(self, kind: str, key) -> bool:
        return dict(getattr(self, kind))[key]


def _correspondence_map(V: VarietyModel, W: VarietyModel, correspondence):
    A, B = V.algebra, W.algebra
    if correspondence is None:
        if A is not B:
            raise CorrespondenceError("an explicit correspondence is needed for distinct algebras")
        return lambda e: e
    images = {}
    for g in A.generators:
        if g.name not in correspondence:
            raise CorrespondenceError(f"no image given for generator {g.name}")
        img = correspondence[g.name]
        if isinstance(img, str):
            img = B.monomial(img) if img.strip() != "0" else B.zero()
        if img.algebra is not B:
            raise CorrespondenceError(f"image of {g.name} is not in the target algebra")
        if not img.is_zero() and img.degrees() != {g.degree}:
            raise CorrespondenceError(f"image of {g.name} is not of degree {g.degree}")
        images[g.name] = img
    basis_images = []
    for m in A.basis:
        img = B.unit()
        for pos, e in enumerate(m):
            for _ in range(e):
                img = img * images[A.generators[pos].name]
        basis_images.append(img)

    def phi(e: AlgebraElement) -> AlgebraElement:
        out = B.zero()
        for i, c in e.coeffs.items():
            out = out + basis_images[i] * c
        return out

    for i in range(len(A)):
        for j in range(len(A)):
            prod = A.basis_element(i) * A.basis_element(j)
            if phi(prod) != basis_images[i] * basis_images[j]:
                raise CorrespondenceError(
                    f"not a ring map: {A.basis_name(i)}*{A.basis_name(j)} is not preserved")
    for label, e in V.pi_generators:
        try:
            target = W.pi_generator(label)
        except UnknownPiClass:
            raise CorrespondenceError(f"pi-class {label} has no counterpart")
        if phi(e) != target:
            raise CorrespondenceError(f"pi-class {label} is not carried to its counterpart")
    return phi


def compare_chern_reports(V: VarietyModel, W: VarietyModel, correspondence=None) -> ChernComparison:
    """Which characteristic data of ``V`` and ``W`` agree under a ring identification.

    ``correspondence`` maps each generator name of ``V``'s ring to its image
    in ``W``'s ring (an element or a monomial name); it may be omitted when
    both share one algebra.
    """
    if V.dim_c != W.dim_c:
        raise CorrespondenceError("varieties of different dimension")
    phi = _correspondence_map(V, W, correspondence)
    n = V.dim_c
    chern = tuple((i, phi(genera.chern_class(V, i)) == genera.chern_class(W, i))
                  for i in range(1, n + 1))
    pont = tuple((k, phi(genera.pontrjagin_class(V, k)) == genera.pontrjagin_class(W, k))
                 for k in range(1, n // 2 + 1))
    tv, tw = genera.todd_class(V), genera.todd_class(W)
    todd = tuple((d, phi(component(tv, d)) == component(tw, d))
                 for d in range(2, 2 * n + 1, 2))
    higher = tuple((label, pair_top(tv * V.pi_class(label)), pair_top(tw * W.pi_class(label)))
                   for label in V.pi_monomials())
    euler = (genera.euler_number(V), genera.euler_number(W))

    derived = []
    if n <= 3:
        c1_ok = dict(todd).get(2, False)
        if c1_ok:
            derived.append(("c1", "degree-2 part of the Todd class is c1/2"))
        if n >= 2 and c1_ok and dict(pont).get(1, False):
            derived.append(("c2", "2*c2 = c1^2 - p1"))
        if n == 3 and euler[0] == euler[1]:
            derived.append(("c3", "top Chern class is the Euler class"))
    return ChernComparison(chern, pont, todd, higher, euler, tuple(derived))
