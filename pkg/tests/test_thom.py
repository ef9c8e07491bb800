import pytest

from mtcalc.errors import DegreeError, UnsupportedError
from mtcalc.oracles import multiset_counts
from mtcalc.thom import (
    ThomModule,
    direct_sum_series,
    mt_direct_sum_check,
    mt_poincare_series,
    mt_restriction_map,
    verify_ses_dimensions,
)


def test_mto2_low_degrees():
    s = mt_poincare_series("O", 2, "f2", 2)
    assert s.min_degree == -2
    assert s.dims(-2, 2) == [1, 1, 2, 2, 3]


def test_mtu1_and_mtsu1():
    assert mt_poincare_series("U", 1, "q", 4).dims(-2, 4) == [1, 0, 1, 0, 1, 0, 1]
    assert mt_poincare_series("SU", 1, "q", 4).dims(-2, 4) == [1, 0, 0, 0, 0, 0, 0]


def test_module_basis_counts_monomials():
    for family, n in [("U", 3), ("Sp", 2), ("SU", 3), ("O", 4)]:
        module = ThomModule(family, n, 2)
        degs = [module.d * i for i in module.generator_indices]
        counts = multiset_counts(degs, 30 - module.bottom_degree)
        series = module.poincare_series(30)
        for k in range(module.bottom_degree, 31):
            assert series[k] == counts[k - module.bottom_degree]


def test_module_json():
    data = ThomModule("SU", 3, 0).to_json()
    assert data["presentation"] == "z_3^-1 * k[z_2,z_3]"
    assert data["bottom_degree"] == -6
    assert "Thom class" in ThomModule("SU", 1, 0).to_json()["presentation"]


def test_unsupported():
    with pytest.raises(UnsupportedError):
        ThomModule("O", 2, 0)
    with pytest.raises(UnsupportedError):
        ThomModule("SO", 2, 2)
    with pytest.raises(DegreeError):
        verify_ses_dimensions("U", 0, "q")


def test_restriction_map_shape():
    r = mt_restriction_map("U", 2, "q", 10)
    assert r.surjective and r.kernel_matches_bg
    assert r.kernel_dims[0] == 1
    base = mt_restriction_map("SU", 1, "q", 10)
    assert base.surjective and base.base_case
    assert base.target_dims == {-2: 1}


@pytest.mark.parametrize("family,ns,coeffs", [
    ("U", range(1, 6), ("q", "f2")),
    ("Sp", range(1, 5), ("q", "f2")),
    ("SU", range(1, 6), ("q", "f2")),
    ("O", range(1, 7), ("f2",)),
])
def test_ses_and_direct_sum(family, ns, coeffs):
    for n in ns:
        for c in coeffs:
            ses = verify_ses_dimensions(family, n, c, 40)
            assert ses.passed, (n, c, ses.first_violation)
            ds = mt_direct_sum_check(family, n, c, 40)
            assert ds.passed, (n, c, ds.first_violation)


def test_direct_sum_uses_complementary_shift():
    # MTU(1) = Σ^{-2}S^0 ⊕ BU(1): bottom class in degree -2, then BU(1) from 0
    s = direct_sum_series("U", 1, "q", 6)
    assert s.dims(-2, 6) == [1, 0, 1, 0, 1, 0, 1, 0, 1]


def test_ses_report_rows():
    rep = verify_ses_dimensions("O", 2, "f2", 4)
    assert rep.rows[0] == {"bg": 0, "degree": -2, "lower": 1, "mt": 1, "ok": True}
    assert rep.to_json()["check"] == "ses"
