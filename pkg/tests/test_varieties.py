from dataclasses import replace
from fractions import Fraction as F

import pytest

from highertodd import genera, varieties
from highertodd.errors import (
    CorrespondenceError,
    TooLarge,
    TransportError,
    UnsupportedDimension,
)
from highertodd.genera import char_number, genus_number, higher_genus
from highertodd.varieties import (
    BlowupPair,
    abelian_variety,
    blow_up_point,
    compare_chern_reports,
    product,
    projective_space,
    verify_blowup_invariance,
)

from conftest import build, relabeled_a1_p1

SURFACES = ["P(2)", "E x P(1)", "P(1) x P(1)", "E x E", "blowup(P(2))", "blowup(E x P(1))"]


def test_projective_examples():
    P1 = projective_space(1)
    assert genera.chern_class(P1, 1) == P1.algebra.gen("h") * 2
    assert genus_number(P1, "todd") == 1
    P2 = projective_space(2)
    assert P2.euler_characteristic() == 3
    assert genera.signature(P2) == 1
    P0 = projective_space(0)
    assert P0.dim_c == 0 and genus_number(P0, "todd") == 1


def test_abelian_examples():
    E = abelian_variety(1)
    assert genera.chern_class(E, 1).is_zero()
    assert genus_number(E, "todd") == 0
    assert higher_genus(E, "todd", "x1*x2") == 1
    A2 = abelian_variety(2)
    assert A2.euler_characteristic() == 0
    assert len(A2.algebra) == 16
    assert A2.total_chern == A2.algebra.unit()


def test_abelian_higher_genera_vanish_below_top():
    A2 = abelian_variety(2)
    for label in A2.pi_monomials():
        value = higher_genus(A2, "todd", label)
        if label.count("*") == 3:
            assert value == genera.pair_top(A2.pi_class(label)) == 1
        else:
            assert value == 0


def test_product_e_p1():
    V = product(abelian_variety(1), projective_space(1, "y"))
    y = V.algebra.gen("y")
    assert genera.chern_class(V, 1) == y * 2
    assert genera.chern_class(V, 2).is_zero()
    assert genus_number(V, "todd") == 0


def test_product_with_point_and_collisions():
    P2 = projective_space(2)
    V = product(P2, varieties.point())
    assert len(V.algebra) == 3 and V.dim_c == 2
    W = product(projective_space(1), projective_space(1))
    assert W.algebra.generator_names == ("h", "h'")
    assert genus_number(W, "todd") == 1
    EE = product(abelian_variety(1), abelian_variety(1))
    assert EE.pi_labels == ("x1", "x2", "x1'", "x2'")


def test_product_size_limit(monkeypatch):
    monkeypatch.setenv("HIGHERTODD_MAX_BASIS", "20")
    with pytest.raises(TooLarge):
        product(abelian_variety(2), abelian_variety(1))


def test_product_commutes_on_characteristic_numbers():
    V, W = build("E"), build("P(1)")
    VW, WV = product(V, W), product(W, V)
    for poly in ["c1*x1*x2", "c2", "c1^2", "p1"]:
        assert char_number(VW, poly) == char_number(WV, poly)
    VW, WV = product(build("P(2)"), build("P(1)")), product(build("P(1)"), build("P(2)"))
    for poly in ["c1^3", "c1*c2", "c3"]:
        assert char_number(VW, poly) == char_number(WV, poly)


def test_blowup_e_p1():
    pair = blow_up_point(build("E x P(1)"))
    B = pair.blown
    y, z = B.algebra.gen("y"), B.algebra.gen("z1")
    assert genera.chern_class(B, 1) == y * 2 + z
    assert genera.chern_class(B, 2) == -(z * z)
    assert B.euler_characteristic() == 1
    assert genera.signature(B) == -1
    assert char_number(B, "c1*x1*x2") == 2
    assert char_number(B, "c1^2") == -1
    assert char_number(B, "c2") == 1


def test_blowup_p2():
    B = blow_up_point(build("P(2)")).blown
    assert B.euler_characteristic() == 4
    assert char_number(B, "c1^2") == 8
    assert genus_number(B, "todd") == 1


def test_blowup_needs_surface():
    with pytest.raises(UnsupportedDimension):
        blow_up_point(build("P(3)"))
    with pytest.raises(UnsupportedDimension):
        blow_up_point(build("E"))


def test_iterated_blowup_names():
    B = build("blowup(blowup(E x P(1)))")
    assert B.algebra.generator_names[-2:] == ("z1", "z2")
    assert B.euler_characteristic() == 2


@pytest.mark.parametrize("source", SURFACES)
def test_surface_blowup_properties(source):
    V = build(source)
    pair = blow_up_point(V)
    B = pair.blown
    assert not B.check_invariants()
    assert genus_number(B, "todd") == genus_number(V, "todd")
    assert B.euler_characteristic() == V.euler_characteristic() + 1
    assert genera.signature(B) == genera.signature(V) - 1
    assert char_number(B, "c1^2 + c2") == char_number(V, "c1^2 + c2")
    assert verify_blowup_invariance(pair).verdict == "PASS"


def test_verify_e_p1_table():
    report = verify_blowup_invariance(blow_up_point(build("E x P(1)")))
    assert report.verdict == "PASS"
    values = {r.label: r.base_value for r in report.rows}
    assert values == {"1": 0, "x1": 0, "x2": 0, "x1*x2": 1}
    assert all(r.label == r.blown_label for r in report.rows)


def test_verify_relabeled():
    report = verify_blowup_invariance(blow_up_point(relabeled_a1_p1()))
    assert report.verdict == "PASS"
    assert {r.label: r.blown_value for r in report.rows}["a*b"] == 1


def _tamper(pair, total):
    return BlowupPair(pair.base, replace(pair.blown, total_chern=total), pair.pi_transport)


def test_adversarial_c1_two_y():
    pair = blow_up_point(build("E x P(1)"))
    A = pair.blown.algebra
    y, z = A.gen("y"), A.gen("z1")
    report = verify_blowup_invariance(_tamper(pair, A.unit() + y * 2 - z * z))
    assert report.verdict == "FAIL"
    # z kills x1*x2, so the damage shows in the plain Todd genus
    assert [r.label for r in report.failures] == ["1"]
    assert report.failures[0].blown_value == F(1, 12)


def test_adversarial_detected_on_top_class():
    pair = blow_up_point(build("E x P(1)"))
    A = pair.blown.algebra
    y, z = A.gen("y"), A.gen("z1")
    report = verify_blowup_invariance(_tamper(pair, A.unit() + y * 4 + z - z * z))
    assert report.verdict == "FAIL"
    assert "x1*x2" in [r.label for r in report.failures]


def test_transport_errors():
    pair = blow_up_point(build("E x P(1)"))
    with pytest.raises(TransportError):
        verify_blowup_invariance(BlowupPair(pair.base, pair.blown, {"x1": "x1"}))
    with pytest.raises(TransportError):
        verify_blowup_invariance(BlowupPair(pair.base, pair.blown, {"x1": "x1", "x2": "x1"}))


def test_compare_identity():
    V = build("blowup(E x P(1))")
    rep = compare_chern_reports(V, V)
    assert all(ok for _, ok in rep.chern)
    assert rep.euler == (1, 1)


def test_compare_three_folds_derive_c2():
    V, W = build("P(3)"), build("P(3)")
    rep = compare_chern_reports(V, W, {"h": "h"})
    assert all(ok for _, ok in rep.todd)
    assert ("c2", "2*c2 = c1^2 - p1") in rep.derived
    assert rep.agrees("chern", 2)


def test_compare_equal_todd_different_euler():
    V = build("P(3)")
    h = V.algebra.gen("h")
    W = replace(V, total_chern=V.total_chern + h**3)
    rep = compare_chern_reports(V, W)
    assert all(ok for _, ok in rep.todd)
    assert rep.euler == (4, 5)
    assert not rep.agrees("chern", 3)
    assert "c3" not in dict(rep.derived)


def test_compare_needs_ring_map():
    V, W = build("E x P(1)"), build("E x P(1)")
    with pytest.raises(CorrespondenceError):
        compare_chern_reports(V, W)
    B = build("blowup(E x P(1))")
    with pytest.raises(CorrespondenceError):
        # z1^2 is nonzero while y^2 vanishes
        compare_chern_reports(B, B, {"x1": "x1", "x2": "x2", "y": "y", "z1": "y"})
    with pytest.raises(CorrespondenceError):
        compare_chern_reports(V, W, {"x1": "x2", "x2": "x1", "y": "y"})
    rep = compare_chern_reports(V, W, {"x1": "x1", "x2": "x2", "y": "y"})
    assert all(ok for _, ok in rep.chern)


def test_test_varieties_satisfy_invariants(test_varieties):
    for V in test_varieties.values():
        assert V.check_invariants() == []
