"""Transfer splitting rules: a summand splits off at p when p ∤ χ(fibre).

The rule is sufficient, not necessary, so a verdict is either "splits" or
"inconclusive"; nothing here ever claims that a splitting fails.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classifying import cohomology_presentation
from .errors import DegreeError, UnsupportedError
from .loopspace import HomologyInput, q0_plus_series
from .series import polynomial_series

SPACE_KINDS = ("Sphere", "RealProj", "ComplexProj", "QuatProj")
_SPACE_SYMBOL = {"Sphere": "S", "RealProj": "RP", "ComplexProj": "CP", "QuatProj": "HP"}


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class HomogeneousSpace:
    kind: str
    dim: int

    def __post_init__(self):
        if self.kind not in SPACE_KINDS:
            raise UnsupportedError(f"unknown homogeneous space {self.kind!r}")
        if self.dim < 0:
            raise DegreeError("dimension parameter must be >= 0")

    @property
    def euler(self) -> int:
        return euler_char(self)

    def __str__(self):
        return f"{_SPACE_SYMBOL[self.kind]}^{self.dim}"


def euler_char(space: HomogeneousSpace) -> int:
    m = space.dim
    if space.kind == "Sphere":
        return 2 if m % 2 == 0 else 0
    if space.kind == "RealProj":
        return 1 if m % 2 == 0 else 0
    if space.kind in ("ComplexProj", "QuatProj"):
        return m + 1
    raise UnsupportedError(f"unknown homogeneous space {space.kind!r}")


@dataclass
class SplittingVerdict:
    pair: str
    n: int
    p: int
    quotient: HomogeneousSpace
    euler: int
    chi_mod_p: int
    verdict: str
    statement: str
    rule: str
    warnings: list[str] = field(default_factory=list)

    @property
    def splits(self) -> bool:
        return self.verdict == "splits"

    def to_json(self) -> dict:
        return {
            "chi_mod_p": self.chi_mod_p,
            "euler": self.euler,
            "n": self.n,
            "pair": self.pair,
            "prime": self.p,
            "quotient": str(self.quotient),
            "statement": self.statement,
            "rule": self.rule,
            "verdict": self.verdict,
        }


RP_TYPO_WARNING = ("quotient taken as RP^{2n} (χ = 1); an identification of "
                   "Spin(2n+1)/Pin^±(2n) with RP^{2n+1} is treated as a typo, since "
                   "SO(2n+1)/O(2n) is RP^{2n}")

# pair tag -> (quotient builder, K, G, rule tag, wedge decomposition or None)
PAIRS = {
    "O2n_in_SO2n1": (lambda n: HomogeneousSpace("RealProj", 2 * n),
                     lambda n: f"O({2 * n})", lambda n: f"SO({2 * n + 1})",
                     "bg-summand-all-p", None),
    "PinPlus4n_in_Spin4n1": (lambda n: HomogeneousSpace("RealProj", 4 * n),
                             lambda n: f"Pin+({4 * n})", lambda n: f"Spin({4 * n + 1})",
                             "bg-summand-all-p", None),
    "PinMinus4n2_in_Spin4n3": (lambda n: HomogeneousSpace("RealProj", 4 * n + 2),
                               lambda n: f"Pin-({4 * n + 2})", lambda n: f"Spin({4 * n + 3})",
                               "bg-summand-all-p", None),
    "SO2n_in_SO2n1": (lambda n: HomogeneousSpace("Sphere", 2 * n),
                      lambda n: f"SO({2 * n})", lambda n: f"SO({2 * n + 1})",
                      "wedge-odd-p",
                      lambda n: f"MTSO({2 * n}) ≃ BSO({2 * n + 1})_+ ∨ ΣMTSO({2 * n + 1})"),
    "O2n_in_O2n1": (lambda n: HomogeneousSpace("Sphere", 2 * n),
                    lambda n: f"O({2 * n})", lambda n: f"O({2 * n + 1})",
                    "wedge-odd-p",
                    lambda n: (f"MTO({2 * n}) ≃ BO({2 * n + 1})_+ ∨ ΣMTO({2 * n + 1}); "
                               f"reduces to MTO({2 * n}) ≃ BO({2 * n})_+, MTO({2 * n - 1}) ≃ *")),
    "Un_in_SUn1": (lambda n: HomogeneousSpace("ComplexProj", n),
                   lambda n: f"U({n})", lambda n: f"SU({n + 1})",
                   "unitary-in-special-unitary", None),
}

PAIR_ALIASES = {
    "O2n-SO2n1": "O2n_in_SO2n1",
    "PinPlus4n-Spin4n1": "PinPlus4n_in_Spin4n1",
    "PinMinus4n2-Spin4n3": "PinMinus4n2_in_Spin4n3",
    "SO2n-SO2n1": "SO2n_in_SO2n1",
    "O2n-O2n1": "O2n_in_O2n1",
    "Un-SUn1": "Un_in_SUn1",
}


def _canonical_pair(pair: str) -> str:
    pair = PAIR_ALIASES.get(pair, pair)
    if pair not in PAIRS:
        raise UnsupportedError(f"unknown pair {pair!r}; expected one of {sorted(PAIRS)}")
    return pair


def _pin_n(kind: str, n: int, dimension: int | None) -> int:
    """Translate an explicit Pin dimension into the family index n, enforcing parity."""
    if dimension is None:
        return n
    if kind == "+":
        if dimension % 4 != 0 or dimension < 4:
            raise UnsupportedError(f"Pin+ needs dimension 4n with n >= 1, got {dimension}")
        return dimension // 4
    if dimension % 4 != 2:
        raise UnsupportedError(f"Pin- needs dimension 4n+2, got {dimension}")
    return (dimension - 2) // 4


def _verdict(pair, n, p, quotient, statement, rule, warnings=()):
    chi = euler_char(quotient)
    r = chi % p
    verdict = "splits" if r != 0 else "inconclusive"
    if verdict == "inconclusive":
        statement = f"undecided by the Euler characteristic rule (p = {p} divides χ({quotient}) = {chi}) whether {statement}"
    return SplittingVerdict(pair, n, p, quotient, chi, r, verdict, statement, rule, list(warnings))


def splitting_verdict(pair: str, n: int, p: int, dimension: int | None = None) -> SplittingVerdict:
    pair = _canonical_pair(pair)
    if not _is_prime(p):
        raise UnsupportedError(f"{p} is not prime")
    if pair == "PinPlus4n_in_Spin4n1":
        n = _pin_n("+", n, dimension)
    elif pair == "PinMinus4n2_in_Spin4n3":
        n = _pin_n("-", n, dimension)
    elif dimension is not None:
        raise UnsupportedError("an explicit dimension is only meaningful for Pin pairs")
    lowest = 0 if pair == "PinMinus4n2_in_Spin4n3" else 1
    if n < lowest:
        raise DegreeError(f"n must be >= {lowest} for {pair}")
    quot, K, G, rule, wedge = PAIRS[pair]
    statement = f"B{G(n)}_+ splits off MT{K(n)} at p = {p}"
    if wedge is not None and p != 2:
        statement += "; " + wedge(n)
    warnings = [RP_TYPO_WARNING] if pair in ("O2n_in_SO2n1", "PinPlus4n_in_Spin4n1",
                                             "PinMinus4n2_in_Spin4n3") else []
    return _verdict(pair, n, p, quot(n), statement, rule, warnings)


# family -> (witness manifold, K label, clause)
S0_FAMILIES = {
    "O": (lambda n: HomogeneousSpace("RealProj", 2 * n), lambda n: f"O({2 * n})", "s0-real-projective-witness"),
    "Pin+": (lambda n: HomogeneousSpace("RealProj", 4 * n), lambda n: f"Pin+({4 * n})", "s0-real-projective-witness"),
    "Pin-": (lambda n: HomogeneousSpace("RealProj", 4 * n + 2), lambda n: f"Pin-({4 * n + 2})",
             "s0-real-projective-witness"),
    "SO": (lambda n: HomogeneousSpace("Sphere", 2 * n), lambda n: f"SO({2 * n})", "s0-sphere-witness"),
    "U": (lambda n: HomogeneousSpace("ComplexProj", n), lambda n: f"U({n})", "s0-projective-witness"),
    "Sp": (lambda n: HomogeneousSpace("QuatProj", n), lambda n: f"Sp({n})", "s0-projective-witness"),
}


def s0_split_verdict(family: str, n: int, p: int, dimension: int | None = None) -> SplittingVerdict:
    """S^0 splits off MTK at p when p ∤ χ(M) for the witness K-manifold M.

    ``n`` follows the family's indexing: K = O(2n), SO(2n), Pin+(4n),
    Pin-(4n+2), U(n) or Sp(n).
    """
    if family not in S0_FAMILIES:
        raise UnsupportedError(f"unknown family {family!r}; expected one of {sorted(S0_FAMILIES)}")
    if not _is_prime(p):
        raise UnsupportedError(f"{p} is not prime")
    if family in ("Pin+", "Pin-"):
        n = _pin_n(family[-1], n, dimension)
    elif dimension is not None:
        raise UnsupportedError("an explicit dimension is only meaningful for Pin families")
    lowest = 0 if family == "Pin-" else 1
    if n < lowest:
        raise DegreeError(f"n must be >= {lowest} for {family}")
    witness, K, clause = S0_FAMILIES[family]
    M = witness(n)
    statement = f"S^0 splits off MT{K(n)} at p = {p} (witness {M}, χ = {euler_char(M)})"
    return _verdict(f"S0:{family}", n, p, M, statement, clause)


@dataclass
class ConsistencyReport:
    n: int
    p: int
    N: int
    passed: bool
    first_violation: int | None
    series: dict[str, list[int]]

    def to_json(self) -> dict:
        return {"first_violation": self.first_violation, "n": self.n, "passed": self.passed,
                "prime": self.p, "series": self.series, "trunc_degree": self.N}


def odd_p_consistency(n: int, p: int, N: int = 40) -> ConsistencyReport:
    """Series equalities forced by MTO(2n) ≃ BO(2n)_+ ≃ BSO(2n+1)_+ ≃ BSp(n)_+ at odd p."""
    if p == 2 or not _is_prime(p):
        raise UnsupportedError(f"odd_p_consistency needs an odd prime, got {p}")
    if n < 0:
        raise DegreeError("n must be >= 0")
    named = {
        f"BO({2 * n})": cohomology_presentation("O", 2 * n, p).poincare_series(N),
        f"BSO({2 * n + 1})": cohomology_presentation("SO", 2 * n + 1, p).poincare_series(N),
        f"BSp({n})": cohomology_presentation("Sp", n, p).poincare_series(N),
        f"BO({2 * n + 1})": cohomology_presentation("O", 2 * n + 1, p).poincare_series(N),
        "Pontryagin": polynomial_series([4 * i for i in range(1, n + 1)], N),
    }
    ref = named["Pontryagin"]
    first = None
    for k in range(0, N + 1):
        if any(s[k] != ref[k] for s in named.values()):
            first = k
            break
    return ConsistencyReport(n, p, N, first is None, first,
                             {k: s.dims(0, N) for k, s in named.items()})


@dataclass
class NonexactReport:
    m: int
    N: int
    bo_dims: list[int]
    bso_dims: list[int]
    witnesses: list[int]
    verdict: str

    def to_json(self) -> dict:
        return {"bo_side": self.bo_dims, "bso_side": self.bso_dims, "m": self.m,
                "trunc_degree": self.N, "verdict": self.verdict, "witnesses": self.witnesses}


def nonexact_explore(m: int, N: int = 20) -> NonexactReport:
    """Compare H_*(Q_0BO(m+1)_+) with its forced tensor factor H_*(Q_0BSO(m+1)_+).

    Exactness would make the first surject onto a space containing the
    second as a tensor factor; a degree where the first is smaller is a
    witness against exactness.
    """
    if m % 2 or m < 0:
        raise UnsupportedError(f"m must be even and >= 0, got {m}")
    bo = HomologyInput.from_series(cohomology_presentation("O", m + 1, 2).poincare_series(N))
    bso = HomologyInput.from_series(cohomology_presentation("SO", m + 1, 2).poincare_series(N))
    a = q0_plus_series(bo, N).dims(0, N)
    b = q0_plus_series(bso, N).dims(0, N)
    witnesses = [d for d in range(N + 1) if a[d] < b[d]]
    if witnesses:
        verdict = f"not short exact: dimension witness in degree {witnesses[0]}"
    else:
        verdict = "inconclusive: the non-exactness argument goes through the homology suspension, not dimensions"
    return NonexactReport(m, N, a, b, witnesses, verdict)
