"""Oracle comparisons and fixtures run by ``mtcalc selftest``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import oracles
from .charclasses import (
    count_independent_nu,
    format_mu_sum,
    nu_square_check,
    nu_to_mu,
    parse_mu_sum,
    reproduce_table,
    xi_subalgebra_series,
)
from .classifying import j_restriction, pin_structures, su_restriction, u_selfmap
from .loopspace import admissible_words, q0s0_series, q_homology_series
from .series import PoincareSeries, ps_mul
from .splitting import PAIRS, S0_FAMILIES, odd_p_consistency, s0_split_verdict, splitting_verdict
from .thom import mt_direct_sum_check, verify_ses_dimensions

PRIMES = (2, 3, 5, 7)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"detail": self.detail, "name": self.name, "passed": self.passed}


def _series_product():
    a = PoincareSeries.geometric(1, 6)
    b = PoincareSeries.geometric(2, 6)
    got = ps_mul(a, b).dims(0, 6)
    return got == [1, 1, 2, 2, 3, 3, 4], f"dims {got}"


def _partitions():
    got = xi_subalgebra_series(2, 20).dims(0, 20)
    return got == oracles.partition_counts(20), "ξ series vs listed partitions, N = 20"


def _admissible():
    for g in range(0, 5):
        for N in range(0, 21):
            fast = [w.indices for w in admissible_words(g, N) if w.indices]
            if sorted(fast) != oracles.brute_admissible_words(g, N):
                return False, f"mismatch at generator degree {g}, N = {N}"
    return True, "generator degrees 0..4, N <= 20"


def _q_homology():
    s1 = q_homology_series([1], 30).dims(0, 30)
    s0 = q0s0_series(30).dims(0, 30)
    ok = (s1 == oracles.brute_q_homology_dims([1], 30) and s0 == oracles.brute_q0s0_dims(30)
          and s1[:6] == [1, 1, 1, 2, 3, 4] and s0[:4] == [1, 1, 2, 4])
    return ok, f"S^1 {s1[:6]}, Q_0S^0 {s0[:4]}, enumeration to degree 30"


def _j_law():
    for n in range(1, 7):
        m = j_restriction(n)
        w = m.target.gens()
        expected = w[1] + (w[0] * w[0]).scale(n)
        image = m.image("w_2")
        if image != expected:
            return False, f"n = {n}: got {image}"
        if oracles.resubstitute(image, 2 * n) != oracles.j_image_by_expansion(n, 2):
            return False, f"n = {n}: re-substitution disagrees"
    return True, "Bj^*(w_2) = w_2 + n w_1^2 for n = 1..6"


def _routes_agree():
    for n in range(1, 4):
        if j_restriction(n).images != j_restriction(n, method="reduce").images:
            return False, f"j_restriction({n})"
        if su_restriction(n, 0).images != su_restriction(n, 0, method="reduce").images:
            return False, f"su_restriction({n})"
        for p in (3, 5):
            if u_selfmap(n, p).map.images != u_selfmap(n, p, method="reduce").map.images:
                return False, f"u_selfmap({n}, {p})"
    return True, "closed form and symmetric reduction agree for n <= 3"


THOM_GRID = ([("U", n, c) for n in range(1, 6) for c in ("q", "f2")]
             + [("Sp", n, c) for n in range(1, 5) for c in ("q", "f2")]
             + [("SU", n, c) for n in range(1, 6) for c in ("q", "f2")]
             + [("O", n, "f2") for n in range(1, 7)])


def _thom():
    for family, n, c in THOM_GRID:
        ses = verify_ses_dimensions(family, n, c, 40)
        ds = mt_direct_sum_check(family, n, c, 40)
        if not (ses.passed and ds.passed):
            return False, f"{family}({n}) over {c}: ses {ses.first_violation}, sum {ds.first_violation}"
    return True, f"{len(THOM_GRID)} (family, n, coefficient) cases to degree 40"


def expected_split(pair: str, n: int, p: int) -> bool:
    if pair in ("O2n_in_SO2n1", "PinPlus4n_in_Spin4n1", "PinMinus4n2_in_Spin4n3"):
        return True
    if pair in ("SO2n_in_SO2n1", "O2n_in_O2n1"):
        return p != 2
    if pair == "Un_in_SUn1":
        return (n + 1) % p != 0
    raise KeyError(pair)


def expected_s0_split(family: str, n: int, p: int) -> bool:
    if family in ("O", "Pin+", "Pin-"):
        return True
    if family == "SO":
        return p != 2
    return (n + 1) % p != 0


def _splitting():
    for n in range(1, 11):
        for p in PRIMES:
            for pair in PAIRS:
                if splitting_verdict(pair, n, p).splits != expected_split(pair, n, p):
                    return False, f"{pair}, n = {n}, p = {p}"
            for family in S0_FAMILIES:
                if s0_split_verdict(family, n, p).splits != expected_s0_split(family, n, p):
                    return False, f"S^0 / {family}, n = {n}, p = {p}"
    return True, "n <= 10, p in {2, 3, 5, 7}"


def _pin():
    for n in range(2, 201, 2):
        v = pin_structures(n)
        if v.pin_plus != (n % 4 == 0) or v.pin_minus != (n % 4 == 2):
            return False, f"RP^{n}"
    return True, "even n <= 200"


def _u_selfmap():
    for n in range(1, 11):
        for p in (3, 5, 7):
            r = u_selfmap(n, p)
            if r.invertible != ((n + 1) % p != 0) or r.c1_coefficient != (1 + n) % p:
                return False, f"n = {n}, p = {p}"
    return True, "n <= 10, p in {3, 5, 7}"


def _odd_p():
    for n in range(0, 6):
        for p in (3, 5):
            r = odd_p_consistency(n, p, 40)
            if not r.passed:
                return False, f"n = {n}, p = {p}, degree {r.first_violation}"
    return True, "n <= 5, p in {3, 5}, N = 40"


TABLE_EXPECTED = {
    2: ["μ_{0,1}+μ_{1,0}^2"],
    3: ["μ_{1,1}"],
    5: ["μ_{1,2}+μ_{3,1}"],
    6: ["μ_{0,3}+μ_{1,1}^2+μ_{4,1}+μ_{3,0}^2"],
    7: ["μ_{1,3}+μ_{5,1}"],
    8: ["μ_{2,3}+μ_{2,1}^2"],
    9: ["μ_{1,4}+μ_{3,3}+μ_{5,2}+μ_{7,1}", "μ_{3,3}"],
}


def _table():
    for row in reproduce_table(2):
        want = sorted(format_mu_sum(parse_mu_sum(s)) for s in TABLE_EXPECTED.get(row.degree, []))
        got = sorted(mu for _, mu in row.entries)
        if got != want:
            return False, f"degree {row.degree}: {got}"
    counts = [count_independent_nu(2, d) for d in range(2, 10)]
    return counts == [1, 1, 0, 1, 1, 1, 1, 2], f"counts {counts}"


def _nu_square():
    vectors = [(m, e) for m in (2, 4) for e in
               ([(1, 0), (0, 1), (1, 1), (2, 1)] if m == 2 else [(1, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1)])]
    ok = all(nu_square_check(m, e) for m, e in vectors)
    return ok and format_mu_sum(nu_to_mu(2, (1, 0))) == "μ_{0,1}+μ_{1,0}^2", f"{len(vectors)} vectors"


CHECKS: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("series-product", _series_product),
    ("partition-oracle", _partitions),
    ("admissible-word-oracle", _admissible),
    ("dyer-lashof-series-oracle", _q_homology),
    ("w2-pullback-law", _j_law),
    ("restriction-routes-agree", _routes_agree),
    ("thom-dimension-identities", _thom),
    ("splitting-fixtures", _splitting),
    ("pin-verdicts", _pin),
    ("unitary-self-map", _u_selfmap),
    ("odd-prime-consistency", _odd_p),
    ("nu-table", _table),
    ("nu-squaring", _nu_square),
]


def run_checks() -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash inside a check is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail))
    return results
