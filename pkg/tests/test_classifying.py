import os
import random

import pytest
from hypothesis import given, settings, strategies as st

from mtcalc.classifying import (
    apply_ring_map,
    cohomology_presentation,
    detection_map,
    identity_map,
    j_restriction,
    parse_coefficient,
    pin_structures,
    rp_tangent_sw,
    standard_restriction,
    su_restriction,
    u_selfmap,
)
from mtcalc.errors import ContextMismatch, DegreeError, UnsupportedError
from mtcalc.oracles import j_image_by_expansion, resubstitute, sigma_by_subsets
from mtcalc.poly import Poly, indexed_context, symmetrize_reduce
from mtcalc.series import polynomial_series


def names(pres):
    return [(v.name, v.degree) for v in pres.generators]


def test_parse_coefficient():
    assert parse_coefficient("f2") == 2
    assert parse_coefficient("fp:5") == 5
    assert parse_coefficient("q") == 0
    assert parse_coefficient(3) == 3
    for bad in ("f4", "zz", 1):
        with pytest.raises(UnsupportedError):
            parse_coefficient(bad)


def test_presentations():
    assert names(cohomology_presentation("O", 2, "f2")) == [("w_1", 1), ("w_2", 2)]
    assert names(cohomology_presentation("SO", 3, "f2")) == [("w_2", 2), ("w_3", 3)]
    assert names(cohomology_presentation("U", 2, "q")) == [("c_1", 2), ("c_2", 4)]
    assert names(cohomology_presentation("SU", 3, 5)) == [("c_2", 4), ("c_3", 6)]
    assert names(cohomology_presentation("Sp", 2, 3)) == [("p_1", 4), ("p_2", 8)]
    assert names(cohomology_presentation("O", 5, 3)) == [("p_1", 4), ("p_2", 8)]
    assert names(cohomology_presentation("SO", 5, "q")) == [("p_1", 4), ("p_2", 8)]


def test_euler_class_relation():
    pres = cohomology_presentation("SO", 4, "q")
    assert names(pres) == [("p_1", 4), ("p_2", 8), ("chi", 4)]
    assert pres.relation_texts() == ["chi^2 = p_2"]
    assert str(pres) == "H^*(BSO(4);Q) = Q[p_1,p_2,chi]/(chi^2 = p_2)"
    assert pres.poincare_series(8).dims(0, 8) == [1, 0, 0, 0, 2, 0, 0, 0, 3]


def test_rank_zero():
    pres = cohomology_presentation("O", 0, "f2")
    assert pres.poincare_series(5).dims(0, 5) == [1, 0, 0, 0, 0, 0]
    assert cohomology_presentation("SO", 0, "f2").notes


def test_bad_presentations():
    with pytest.raises(UnsupportedError):
        cohomology_presentation("G2", 1, "f2")
    with pytest.raises(DegreeError):
        cohomology_presentation("U", -1, "q")


@pytest.mark.parametrize("family", ["O", "SO", "U", "SU", "Sp"])
@pytest.mark.parametrize("coeff", ["f2", "f3", "q"])
def test_series_matches_generators(family, coeff):
    for n in range(0, 7):
        pres = cohomology_presentation(family, n, coeff)
        degs = [v.degree for v in pres.generators]
        if pres.relations:
            # k[p_1..p_m] * (1 + t^{2m})
            base = polynomial_series(degs[:-1], 30)
            want = [base[d] + (base[d - degs[-1]] if d >= degs[-1] else 0) for d in range(31)]
        else:
            want = polynomial_series(degs, 30).dims(0, 30)
        assert pres.poincare_series(30).dims(0, 30) == want


def test_detection_examples():
    m = detection_map("O", 2, "f2")
    assert [im.to_text() for im in m.images] == ["t_1 + t_2", "t_1*t_2"]
    assert detection_map("U", 1, 5).images[0].to_text() == "t_1"
    sp = detection_map("Sp", 2, "q")
    assert [v.degree for v in sp.target.generators] == [4, 4]
    assert sp.image("p_2").to_text() == "t_1*t_2"
    with pytest.raises(UnsupportedError):
        detection_map("SO", 2, "f2")
    with pytest.raises(UnsupportedError):
        detection_map("O", 2, "q")


def test_standard_restriction():
    m = standard_restriction("O", 3, "f2")
    assert [im.to_text() for im in m.images] == ["w_1", "w_2", "0"]
    assert standard_restriction("U", 1, 5).images[0].is_zero()
    twice = standard_restriction("O", 2, "f2").compose(m)
    assert [im.to_text() for im in twice.images] == ["w_1", "0", "0"]


def test_apply_rejects_foreign_polynomial():
    m = standard_restriction("O", 3, "f2")
    stray = Poly.var(2, cohomology_presentation("O", 2, "f2").generators, 0)
    with pytest.raises(KeyError):
        apply_ring_map(m, stray)


def test_j_restriction_examples():
    m1 = j_restriction(1)
    assert m1.image("w_2").to_text() == "w_1^2 + w_2"
    assert m1.image("w_3").to_text() == "w_1*w_2"
    assert j_restriction(2).image("w_2").to_text() == "w_2"
    w2, w3 = m1.source.gens()
    assert m1(w2 * w3).to_text() == "w_1^3*w_2 + w_1*w_2^2"


@pytest.mark.parametrize("n", range(1, 13))
def test_w2_law(n):
    m = j_restriction(n)
    w = m.target.gens()
    assert m.image("w_2") == w[1] + (w[0] * w[0]).scale(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_j_restriction_all_classes_by_expansion(n):
    m = j_restriction(n)
    for k in range(2, 2 * n + 2):
        assert resubstitute(m.images[k - 2], 2 * n) == j_image_by_expansion(n, k)


@pytest.mark.skipif(not os.environ.get("MTCALC_SLOW"), reason="about a minute; set MTCALC_SLOW=1")
def test_j_restriction_all_classes_n5():
    m = j_restriction(5)
    for k in range(2, 12):
        assert resubstitute(m.images[k - 2], 10) == j_image_by_expansion(5, k)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_closed_and_reduce_routes_agree(n):
    assert j_restriction(n).images == j_restriction(n, method="reduce").images
    for coeff in (0, 3):
        assert su_restriction(n, coeff).images == su_restriction(n, coeff, method="reduce").images
    for p in (3, 5, 7):
        for sign in (1, -1):
            assert (u_selfmap(n, p, sign).map.images
                    == u_selfmap(n, p, sign, method="reduce").map.images)


def test_su_restriction_examples():
    m1 = su_restriction(1, "q")
    assert m1.image("c_2").to_text() == "-c_1^2"
    m2 = su_restriction(2, "q")
    t = indexed_context("t", 2, lambda i: 2)
    t1, t2 = Poly.gens(0, t)
    direct = sigma_by_subsets([t1, t2, -(t1 + t2)], 2)
    assert m2.image("c_2") == symmetrize_reduce(direct, m2.target.generators)
    assert m2.image("c_2").to_text() == "-c_1^2 + c_2"
    for n in range(1, 5):
        m = su_restriction(n, 3)
        for v, im in zip(m.source.generators, m.images):
            assert im.is_zero() or im.degree() == v.degree


def test_u_selfmap_examples():
    r = u_selfmap(2, 3)
    assert r.c1_coefficient == 0 and not r.invertible
    r = u_selfmap(3, 3)
    assert r.c1_coefficient == 1 and r.invertible
    r = u_selfmap(1, 5)
    assert r.c1_coefficient == 2 and r.invertible
    assert u_selfmap(2, 3, sign=-1).c1_coefficient == 2
    with pytest.raises(UnsupportedError):
        u_selfmap(2, 2)


def test_rp_tangent():
    assert rp_tangent_sw(2) == (1, 1)
    assert rp_tangent_sw(4) == (1, 0)
    assert rp_tangent_sw(3) == (0, 0)
    assert rp_tangent_sw(1) == (0, 0)
    with pytest.raises(DegreeError):
        rp_tangent_sw(0)


def test_pin_examples():
    assert (pin_structures(4).pin_plus, pin_structures(4).pin_minus) == (True, False)
    assert (pin_structures(6).pin_plus, pin_structures(6).pin_minus) == (False, True)
    assert (pin_structures(2).pin_plus, pin_structures(2).pin_minus) == (False, True)


@st.composite
def map_and_pair(draw):
    kind = draw(st.sampled_from(["j", "su", "u", "detect"]))
    n = draw(st.integers(1, 3))
    if kind == "j":
        m = j_restriction(n)
    elif kind == "su":
        m = su_restriction(n, draw(st.sampled_from([0, 3, 5])))
    elif kind == "u":
        m = u_selfmap(n, draw(st.sampled_from([3, 5, 7]))).map
    else:
        m = detection_map(draw(st.sampled_from(["O", "U", "Sp"])), n, 2)
    rng = random.Random(draw(st.integers(0, 2 ** 32)))

    def random_poly():
        gens = m.source.gens()
        P = m.source.zero()
        for _ in range(rng.randint(0, 3)):
            term = m.source.one().scale(rng.randint(-3, 3))
            for _ in range(rng.randint(0, 3)):
                term = term * rng.choice(gens)
            P = P + term
        return P

    return m, random_poly(), random_poly()


@settings(max_examples=100)
@given(map_and_pair())
def test_ring_maps_are_multiplicative(case):
    m, a, b = case
    assert m(a * b) == m(a) * m(b)
    assert m(a + b) == m(a) + m(b)
    assert m(m.source.one()) == m.target.one()


def test_identity_and_composition_checks():
    pres = cohomology_presentation("U", 2, 3)
    u = u_selfmap(2, 5).map
    assert identity_map(pres).compose(identity_map(pres)).images == tuple(pres.gens())
    with pytest.raises(ContextMismatch):
        u.compose(identity_map(pres))
