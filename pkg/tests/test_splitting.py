import pytest

from mtcalc.errors import DegreeError, UnsupportedError
from mtcalc.splitting import (
    PAIRS,
    S0_FAMILIES,
    HomogeneousSpace,
    euler_char,
    nonexact_explore,
    odd_p_consistency,
    s0_split_verdict,
    splitting_verdict,
)

PRIMES = (2, 3, 5, 7)


def test_euler_catalog():
    assert euler_char(HomogeneousSpace("Sphere", 4)) == 2
    assert euler_char(HomogeneousSpace("Sphere", 5)) == 0
    assert euler_char(HomogeneousSpace("RealProj", 6)) == 1
    assert euler_char(HomogeneousSpace("RealProj", 7)) == 0
    assert euler_char(HomogeneousSpace("ComplexProj", 3)) == 4
    assert euler_char(HomogeneousSpace("QuatProj", 3)) == 4
    with pytest.raises(UnsupportedError):
        HomogeneousSpace("Torus", 2)


def test_verdict_examples():
    v = splitting_verdict("O2n_in_SO2n1", 2, 2)
    assert v.splits and v.euler == 1 and str(v.quotient) == "RP^4"
    assert "BSO(5)_+ splits off MTO(4)" in v.statement
    v = splitting_verdict("SO2n_in_SO2n1", 3, 2)
    assert v.verdict == "inconclusive" and v.chi_mod_p == 0
    v = splitting_verdict("Un_in_SUn1", 2, 3)
    assert v.verdict == "inconclusive" and v.euler == 3


def test_wedge_statement_only_at_odd_primes():
    assert "∨" in splitting_verdict("SO2n-SO2n1", 2, 3).statement
    assert "∨" not in splitting_verdict("SO2n-SO2n1", 2, 2).statement
    assert "BO(4)_+" in splitting_verdict("O2n_in_O2n1", 2, 5).statement


def test_pin_parity():
    assert splitting_verdict("PinPlus4n_in_Spin4n1", 1, 2, dimension=8).n == 2
    assert splitting_verdict("PinMinus4n2_in_Spin4n3", 0, 2, dimension=6).n == 1
    with pytest.raises(UnsupportedError):
        splitting_verdict("PinPlus4n_in_Spin4n1", 1, 2, dimension=6)
    with pytest.raises(UnsupportedError):
        splitting_verdict("PinMinus4n2_in_Spin4n3", 1, 2, dimension=8)
    with pytest.raises(UnsupportedError):
        s0_split_verdict("Pin+", 1, 3, dimension=2)


def test_bad_requests():
    with pytest.raises(UnsupportedError):
        splitting_verdict("bogus", 1, 2)
    with pytest.raises(UnsupportedError):
        splitting_verdict("Un_in_SUn1", 1, 4)
    with pytest.raises(DegreeError):
        splitting_verdict("Un_in_SUn1", 0, 3)


def test_s0_examples():
    for n in range(1, 5):
        for p in PRIMES:
            assert s0_split_verdict("O", n, p).splits
    assert s0_split_verdict("Sp", 3, 2).verdict == "inconclusive"
    assert s0_split_verdict("SO", 1, 3).splits


def expected_pair(pair, n, p):
    if pair in ("SO2n_in_SO2n1", "O2n_in_O2n1"):
        return p % 2 == 1
    if pair == "Un_in_SUn1":
        return (n + 1) % p != 0
    return True


def expected_s0(family, n, p):
    if family == "SO":
        return p % 2 == 1
    if family in ("U", "Sp"):
        return (n + 1) % p != 0
    return True


@pytest.mark.parametrize("pair", sorted(PAIRS))
def test_theorem_fixtures(pair):
    for n in range(1, 11):
        for p in PRIMES:
            v = splitting_verdict(pair, n, p)
            assert v.splits == expected_pair(pair, n, p)
            assert v.splits == (v.chi_mod_p != 0)
            assert v.verdict in ("splits", "inconclusive")


@pytest.mark.parametrize("family", sorted(S0_FAMILIES))
def test_s0_fixtures(family):
    for n in range(1, 11):
        for p in PRIMES:
            assert s0_split_verdict(family, n, p).splits == expected_s0(family, n, p)


def test_odd_p_consistency():
    r = odd_p_consistency(1, 3, 12)
    for dims in r.series.values():
        assert dims == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1]
    assert odd_p_consistency(2, 5, 40).passed
    for n in range(0, 6):
        for p in (3, 5):
            assert odd_p_consistency(n, p, 40).passed
    with pytest.raises(UnsupportedError):
        odd_p_consistency(1, 2, 10)


def test_nonexact_explorer():
    r = nonexact_explore(2, 20)
    assert r.bo_dims[0] == r.bso_dims[0] == 1
    assert (r.bo_dims[1], r.bso_dims[1]) == (2, 1)
    assert r.verdict
    assert set(r.to_json()) >= {"bo_side", "bso_side", "verdict", "witnesses"}
    with pytest.raises(UnsupportedError):
        nonexact_explore(3, 10)
