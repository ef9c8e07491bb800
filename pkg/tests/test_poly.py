from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from mtcalc.errors import ContextMismatch, DegreeError, SymmetryViolation
from mtcalc.poly import (
    Poly,
    brute_symmetric,
    elementary_context,
    elementary_in_variables,
    elementary_symmetric,
    indexed_context,
    is_symmetric,
    make_context,
    substitute_elementary,
    symmetrize_reduce,
)

W = make_context([("w_1", 1), ("w_2", 2), ("w_3", 3)])


def test_text_is_graded_lex_descending():
    w1, w2, w3 = Poly.gens(2, W)
    assert (w3 + w1 * w1 * w2).to_text() == "w_1^2*w_2 + w_3"
    assert (w1 + w2 + 1).to_text() == "w_2 + w_1 + 1"


def test_integer_coefficients_print_signs():
    x, y = Poly.gens(0, indexed_context("x", 2, lambda i: 1))
    assert (x * x - y.scale(3) * x + 2).to_text() == "x_1^2 - 3*x_1*x_2 + 2"


def test_mod_p_arithmetic():
    x, = Poly.gens(3, indexed_context("x", 1, lambda i: 2))
    assert (x + x + x).is_zero()
    assert ((x + 1) ** 3) == x ** 3 + 1
    assert (x ** 2).degree() == 4


def test_context_mismatch():
    a = Poly.var(2, W, "w_1")
    b = Poly.var(3, W, "w_1")
    with pytest.raises(ContextMismatch):
        a + b
    other = Poly.var(2, make_context([("x", 1)]), 0)
    with pytest.raises(ContextMismatch):
        a * other


def test_bad_inputs():
    with pytest.raises(ValueError):
        Poly(4, W)
    with pytest.raises(ContextMismatch):
        Poly(2, W, {(1, 0): 1})
    with pytest.raises(ValueError):
        Poly(2, W, {(-1, 0, 0): 1})
    with pytest.raises(OverflowError):
        Poly(2, W, {(2 ** 16, 0, 0): 1})
    with pytest.raises(DegreeError):
        make_context([("x", 0)])
    with pytest.raises(ValueError):
        make_context([("x", 1), ("x", 2)])


def test_degree_and_homogeneity():
    w1, w2, _ = Poly.gens(2, W)
    assert (w1 * w1 + w2).degree() == 2
    assert Poly.zero(2, W).degree() is None
    with pytest.raises(DegreeError):
        (w1 + w2).degree()
    assert (w1 + w2).leading_term() == ((0, 1, 0), 1)


def test_json_roundtrip():
    w1, w2, w3 = Poly.gens(5, W)
    p = w1 * w2.scale(3) + w3.scale(4)
    data = p.to_json()
    assert data["terms"][0] == [[1, 1, 0], 3]
    assert Poly.from_json(data) == p


def test_substitute_and_permute():
    t = indexed_context("t", 2, lambda i: 1)
    t1, t2 = Poly.gens(2, t)
    w1, w2, w3 = Poly.gens(2, W)
    assert (w1 * w2).substitute([t1 + t2, t1 * t2, Poly.zero(2, t)]) == t1 * t1 * t2 + t1 * t2 * t2
    assert (t1 * t1 * t2).permute([1, 0]) == t1 * t2 * t2


def test_elementary_routes_agree():
    t = indexed_context("t", 4, lambda i: 1)
    gens = Poly.gens(0, t)
    for k in range(0, 5):
        assert elementary_symmetric(gens, k) == elementary_in_variables(0, t, k)


def test_symmetrize_examples():
    t = indexed_context("t", 2, lambda i: 1)
    t1, t2 = Poly.gens(0, t)
    q = symmetrize_reduce(t1 * t1 + t2 * t2)
    assert q.to_text() == "e_1^2 - 2*e_2"
    assert symmetrize_reduce(t1 * t2 * (t1 + t2)).to_text() == "e_1*e_2"


def test_symmetrize_rejects_asymmetric():
    t = indexed_context("t", 3, lambda i: 1)
    t1, t2, t3 = Poly.gens(2, t)
    with pytest.raises(SymmetryViolation) as info:
        symmetrize_reduce(t1 * t1 + t2)
    assert info.value.witness == ("t_1", "t_2")


def test_symmetrize_rejects_mixed_degrees():
    ctx = make_context([("a", 1), ("b", 2)])
    with pytest.raises(DegreeError):
        symmetrize_reduce(Poly.var(2, ctx, 0))


def monomial_symmetric(modulus, ctx, exps, c):
    """Sum over the S_n-orbit of one monomial."""
    orbit = {tuple(exps[i] for i in perm) for perm in permutations(range(len(exps)))}
    return Poly(modulus, ctx, {e: c for e in orbit})


@st.composite
def symmetric_polys(draw):
    modulus = draw(st.sampled_from([0, 2, 3, 5, 7]))
    n = draw(st.integers(1, 4))
    d = draw(st.sampled_from([1, 2, 4]))
    ctx = indexed_context("t", n, lambda i: d)
    P = Poly.zero(modulus, ctx)
    for _ in range(draw(st.integers(0, 4))):
        exps = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
        c = draw(st.integers(-6, 6))
        P = P + monomial_symmetric(modulus, ctx, exps, c)
    return P


@settings(max_examples=100)
@given(symmetric_polys())
def test_symmetric_reduction_roundtrip(P):
    assert brute_symmetric(P)
    Q = symmetrize_reduce(P)
    assert Q.variables == elementary_context(len(P.variables), P.variables[0].degree)
    assert substitute_elementary(Q, P.variables) == P


@given(symmetric_polys())
def test_symmetry_check_matches_brute_force(P):
    t = P.variables
    x = Poly.var(P.modulus, t, 0)
    for candidate in (P, P + x):
        assert is_symmetric(candidate) == brute_symmetric(candidate)


@given(st.integers(1, 5), st.integers(0, 5))
def test_elementary_polynomials_reduce_to_generators(n, k):
    t = indexed_context("t", n, lambda i: 2)
    e = elementary_context(n, 2)
    sigma = elementary_in_variables(2, t, k)
    expected = Poly.constant(2, e, 1) if k == 0 else (Poly.var(2, e, k - 1) if k <= n else Poly.zero(2, e))
    assert symmetrize_reduce(sigma) == expected
