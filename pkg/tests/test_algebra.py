from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from highertodd.algebra import (
    AlgebraElement,
    Presentation,
    add,
    build_algebra,
    component,
    exterior,
    mul,
    pair_top,
    point_algebra,
    random_element,
    tensor,
    tensor_with_maps,
    truncated_polynomial,
)
from highertodd.errors import (
    AlgebraMismatch,
    DegreeOutOfRange,
    InvalidPresentation,
    NoFundamentalClass,
    TooLarge,
)
from highertodd.varieties import blow_up_point

from oracles import WordAlgebra
from conftest import build, word_of


def e_times_p1():
    return tensor(exterior(["x1", "x2"]), truncated_polynomial("y", 2, 2))


def blown_e_p1_presentation():
    return Presentation(
        generators=[("x1", 1), ("x2", 1), ("y", 2)],
        top_degree=4,
        truncations={"y": 2},
        extras=[("z", 2)],
        table=[("z", "z", {"x1*x2*y": -1})],
        fundamental="x1*x2*y",
    )


# -- mul ------------------------------------------------------------------

def test_exterior_sign_rule():
    A = e_times_p1()
    x1, x2 = A.gen("x1"), A.gen("x2")
    assert x1 * x2 == A.monomial("x1*x2")
    assert x2 * x1 == -A.monomial("x1*x2")
    assert x1 * x1 == A.zero()


def test_blown_up_relations():
    B = blow_up_point(build("E x P(1)")).blown.algebra
    z = B.gen("z1")
    assert z * z == -B.monomial("x1*x2*y")
    assert (z * B.gen("x1")).is_zero()
    assert (z * B.gen("x2")).is_zero()
    assert (z * B.gen("y")).is_zero()


def test_mul_rejects_mixed_algebras():
    A, B = e_times_p1(), e_times_p1()
    with pytest.raises(AlgebraMismatch):
        mul(A.unit(), B.unit())
    with pytest.raises(AlgebraMismatch):
        add(A.unit(), B.unit())


# -- component ------------------------------------------------------------

def test_component_examples():
    P2 = truncated_polynomial("h", 2, 3)
    h = P2.gen("h")
    t = P2.unit() + Fraction(3, 2) * h + h * h
    assert component(t, 2) == Fraction(3, 2) * h
    assert component(h * h, 4) == h * h
    assert component(P2.unit(), 2).is_zero()
    with pytest.raises(DegreeOutOfRange):
        component(t, 5)
    with pytest.raises(DegreeOutOfRange):
        component(t, -1)


# -- pair_top -------------------------------------------------------------

def test_pair_top_examples():
    A = e_times_p1()
    assert pair_top(A.gen("x1") * A.gen("x2") * (2 * A.gen("y"))) == 2
    assert pair_top(A.unit()) == 0
    P2 = truncated_polynomial("h", 2, 3)
    assert pair_top(P2.gen("h") ** 2) == 1


def test_pair_top_needs_fundamental():
    A = truncated_polynomial("h", 2, 3, fundamental=False)
    with pytest.raises(NoFundamentalClass):
        pair_top(A.unit())


# -- tensor ---------------------------------------------------------------

def test_tensor_e_p1_basis():
    A = e_times_p1()
    names = {A.basis_name(i) for i in range(len(A))}
    assert names == {"1", "x1", "x2", "y", "x1*x2", "x1*y", "x2*y", "x1*x2*y"}
    assert A.basis_name(A.fundamental_index) == "x1*x2*y"


def test_tensor_unit_law():
    A = e_times_p1()
    AP, left, _ = tensor_with_maps(A, point_algebra())
    assert len(AP) == len(A)
    for i in range(len(A)):
        for j in range(len(A)):
            lhs = mul(A.basis_element(i), A.basis_element(j))
            rhs = mul(AP.basis_element(left[i]), AP.basis_element(left[j]))
            assert {left[k]: c for k, c in lhs.coeffs.items()} == rhs.coeffs


def test_tensor_p1_p1():
    A = tensor(truncated_polynomial("h1", 2, 2), truncated_polynomial("h2", 2, 2))
    h1, h2 = A.gen("h1"), A.gen("h2")
    assert (h1 * h1).is_zero() and (h2 * h2).is_zero()
    assert ((h1 * h2) ** 2).is_zero()
    assert pair_top(h1 * h2) == 1


def test_tensor_name_clash():
    with pytest.raises(InvalidPresentation):
        tensor(truncated_polynomial("h", 2, 2), truncated_polynomial("h", 2, 2))


def test_tensor_associative_on_pairing():
    A = exterior(["a1", "a2"])
    B = exterior(["b1", "b2"], degree=3)
    C = truncated_polynomial("c", 2, 3)
    left = tensor(tensor(A, B), C)
    right = tensor(A, tensor(B, C))
    rng = random.Random(7)
    for _ in range(50):
        words = []
        for _ in range(rng.randint(1, 4)):
            words.append(rng.choice(["a1", "a2", "b1", "b2", "c"]))
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        el = left.unit()
        er = right.unit()
        for w in words:
            el = el * left.gen(w)
            er = er * right.gen(w)
        assert pair_top(coeff * el) == pair_top(coeff * er)


# -- build_algebra --------------------------------------------------------

@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_projective_presentation(n):
    A = truncated_polynomial("h", 2, n + 1)
    assert len(A) == n + 1


def test_blown_up_presentation():
    A = build_algebra(blown_e_p1_presentation())
    # 8 classes from E x P(1) plus z; see the decisions ledger for the count.
    assert len(A) == 9
    assert A.gen("z") * A.gen("z") == -A.fundamental()
    assert (A.gen("z") * A.gen("x1")).is_zero()
    assert A.euler_characteristic() == 1


def test_contradictory_table():
    p = blown_e_p1_presentation()
    p.table = p.table + [("z", "x1", {}), ("z", "x1", {"y": 1})]
    with pytest.raises(InvalidPresentation):
        build_algebra(p)


def test_odd_square_rejected():
    p = Presentation([("x", 1), ("w", 1)], 2, squares={"x": {"x*w": 1}})
    with pytest.raises(InvalidPresentation):
        build_algebra(p)


def test_non_homogeneous_rejected():
    p = blown_e_p1_presentation()
    p.table = [("z", "z", {"y": 1})]
    with pytest.raises(InvalidPresentation):
        build_algebra(p)


def test_basis_limit(monkeypatch):
    monkeypatch.setenv("HIGHERTODD_MAX_BASIS", "10")
    with pytest.raises(TooLarge):
        exterior([f"a{i}" for i in range(4)])


# -- properties against the word oracle ----------------------------------

KERNEL_CASES = {
    "E x P(1)": (e_times_p1, {"x1": (1, None), "x2": (1, None), "y": (2, 2)}, 4),
    "A(2)": (lambda: exterior(["x1", "x2", "x3", "x4"]),
             {f"x{i}": (1, None) for i in range(1, 5)}, 4),
    "P(2) x odd": (lambda: tensor(truncated_polynomial("h", 2, 3), exterior(["u", "v"], degree=3)),
                   {"h": (2, 3), "u": (3, None), "v": (3, None)}, 10),
}


def _to_words(e):
    return {word_of(e.algebra, i): c for i, c in e.coeffs.items()}


@pytest.mark.parametrize("case", sorted(KERNEL_CASES))
def test_kernel_matches_word_oracle(case):
    make, gens, top = KERNEL_CASES[case]
    A = make()
    oracle = WordAlgebra(gens, list(A.generator_names), top)
    rng = random.Random(case)
    for _ in range(60):
        a, b = random_element(A, rng), random_element(A, rng)
        assert _to_words(a * b) == oracle.mul(_to_words(a), _to_words(b))


ALGEBRAS = [e_times_p1(), build_algebra(blown_e_p1_presentation()),
            tensor(truncated_polynomial("h", 2, 3), exterior(["u", "v"], degree=3))]


@st.composite
def homogeneous(draw, A):
    i = draw(st.integers(0, len(A) - 1))
    d = A.degrees[i]
    idx = [j for j in range(len(A)) if A.degrees[j] == d]
    coeffs = {j: Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 5))) for j in idx}
    return AlgebraElement(A, coeffs), d


@pytest.mark.parametrize("A", ALGEBRAS, ids=["ExP1", "blown", "P2xodd"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_graded_commutativity(A, data):
    (a, da), (b, db) = data.draw(homogeneous(A)), data.draw(homogeneous(A))
    sign = -1 if da * db % 2 else 1
    assert a * b == sign * (b * a)


@pytest.mark.parametrize("A", ALGEBRAS, ids=["ExP1", "blown", "P2xodd"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_associativity(A, data):
    a, b, c = (data.draw(homogeneous(A))[0] for _ in range(3))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("A", ALGEBRAS, ids=["ExP1", "blown", "P2xodd"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_truncation(A, data):
    (a, da), (b, db) = data.draw(homogeneous(A)), data.draw(homogeneous(A))
    if da + db > A.top_degree:
        assert (a * b).is_zero()
    else:
        assert (a * b).degrees() <= {da + db}


@pytest.mark.parametrize("A", ALGEBRAS, ids=["ExP1", "blown", "P2xodd"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_pair_top_linear_and_degree_sensitive(A, data):
    (a, da), (b, _) = data.draw(homogeneous(A)), data.draw(homogeneous(A))
    q = Fraction(data.draw(st.integers(-6, 6)), data.draw(st.integers(1, 6)))
    assert pair_top(a + q * b) == pair_top(a) + q * pair_top(b)
    if da < A.top_degree:
        assert pair_top(a) == 0


def test_full_validation_of_test_rings():
    for A in ALGEBRAS:
        A.validate(full_associativity=True)
