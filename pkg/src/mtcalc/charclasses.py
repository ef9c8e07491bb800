"""Universally defined characteristic classes in the formal μ-calculus.

ν-classes come from H^*(BSO(m+1); F2), μ-classes from H^*(BO(m); F2).  A
ν-class is pulled back along j, expanded into monomials in w_1..w_m, and
each monomial w^e is written as μ_{e'}^{2^k} with e = 2^k e' and e' having
an odd entry.  The only relation imposed on μ-classes is μ_e^2 = μ_{2e}.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .classifying import j_restriction
from .errors import DegreeError, UnsupportedError
from .series import GeneratorSpec, PoincareSeries, free_commutative_series


@dataclass(frozen=True, order=True)
class MuMonomial:
    """μ_base^(2^power), kept in canonical form (base has an odd entry)."""
    power: int
    base: tuple[int, ...]

    @classmethod
    def from_exponents(cls, exps: Sequence[int]) -> "MuMonomial":
        exps = tuple(exps)
        if not any(exps):
            return cls(0, exps)
        k = 0
        while all(e % 2 == 0 for e in exps):
            exps = tuple(e // 2 for e in exps)
            k += 1
        return cls(k, exps)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e << self.power for e in self.base)

    @property
    def degree(self) -> int:
        return sum(e * i for i, e in enumerate(self.exponents, start=1))

    def squared(self) -> "MuMonomial":
        return MuMonomial(self.power + 1, self.base)

    def __str__(self):
        body = "μ_{" + ",".join(map(str, self.base)) + "}"
        return body if self.power == 0 else f"{body}^{2 ** self.power}"


MuSum = tuple[MuMonomial, ...]


def format_mu_sum(terms: Iterable[MuMonomial]) -> str:
    terms = sorted(terms)
    return "+".join(str(t) for t in terms) if terms else "0"


_MU_TERM = re.compile(r"μ_\{([0-9,\s]+)\}(?:\^(\d+)|(²|⁴))?")
_SUPERSCRIPTS = {"²": 2, "⁴": 4}


def parse_mu_sum(text: str) -> MuSum:
    """Parse 'μ_{0,1}+μ_{1,0}^2' (or with ² / ⁴) into canonical form."""
    text = text.replace(" ", "")
    terms: set[MuMonomial] = set()
    for piece in text.split("+"):
        match = _MU_TERM.fullmatch(piece)
        if not match:
            raise ValueError(f"cannot parse μ-monomial {piece!r}")
        base = tuple(int(x) for x in match.group(1).split(","))
        exponent = int(match.group(2)) if match.group(2) else _SUPERSCRIPTS.get(match.group(3), 1)
        if exponent & (exponent - 1):
            raise ValueError(f"μ powers must be powers of two, got {exponent}")
        mono = MuMonomial.from_exponents(tuple(e * exponent for e in base))
        terms ^= {mono}
    return tuple(sorted(terms))


@dataclass(frozen=True)
class NuClass:
    m: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        _check_m(self.m)
        if len(self.exponents) != self.m:
            raise DegreeError(f"ν-class for m = {self.m} needs {self.m} exponents (on w_2..w_{self.m + 1})")
        if any(e < 0 for e in self.exponents):
            raise DegreeError("exponents must be >= 0")
        if self.degree == 0:
            raise DegreeError("the unit is not a ν-class")

    @property
    def degree(self) -> int:
        return sum(k * e for k, e in enumerate(self.exponents, start=2))

    @property
    def has_odd_entry(self) -> bool:
        return any(e % 2 for e in self.exponents)

    def label(self) -> str:
        return "ν_{" + ",".join(map(str, self.exponents)) + "}"


def _check_m(m: int):
    if m < 2 or m % 2:
        raise UnsupportedError(f"m must be even and >= 2, got {m}")


@lru_cache(maxsize=None)
def _j_images(m: int):
    return j_restriction(m // 2).images


def nu_to_mu(m: int, exponents: Sequence[int]) -> MuSum:
    """Canonical F2-sum of μ-monomials representing ν_exponents."""
    nu = NuClass(m, tuple(exponents))
    images = _j_images(m)
    P = images[0].constant(images[0].modulus, images[0].variables)
    for img, e in zip(images, nu.exponents):
        if e:
            P = P * img ** e
    return tuple(sorted(MuMonomial.from_exponents(exps) for exps in P.terms))


def square_mu_sum(terms: Iterable[MuMonomial]) -> MuSum:
    # Frobenius over F2: (Σ a)^2 = Σ a^2
    return tuple(sorted(t.squared() for t in terms))


def nu_square_check(m: int, exponents: Sequence[int]) -> bool:
    return square_mu_sum(nu_to_mu(m, exponents)) == nu_to_mu(m, [2 * e for e in exponents])


def nu_exponent_vectors(m: int, d: int) -> list[tuple[int, ...]]:
    """All (i_2..i_{m+1}) with Σ k·i_k = d, in lex-descending order."""
    _check_m(m)
    out: list[tuple[int, ...]] = []

    def rec(k, remaining, prefix):
        if k == m + 2:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for i in range(remaining // k, -1, -1):
            prefix.append(i)
            rec(k + 1, remaining - k * i, prefix)
            prefix.pop()

    rec(2, d, [])
    return out


def independent_nu_vectors(m: int, d: int) -> list[tuple[int, ...]]:
    return [e for e in nu_exponent_vectors(m, d) if any(x % 2 for x in e)]


def count_independent_nu(m: int, d: int) -> int:
    if d < 1:
        raise DegreeError("degree must be >= 1")
    return len(independent_nu_vectors(m, d))


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a GF(2) matrix given as integer bitmask rows."""
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            if top not in pivots:
                pivots[top] = row
                rank += 1
                break
            row ^= pivots[top]
    return rank


@dataclass
class IndependenceReport:
    m: int
    degree: int
    classes: int
    rank: int
    distinct_leading: int

    @property
    def independent(self) -> bool:
        return self.rank == self.classes

    def to_json(self) -> dict:
        return {"classes": self.classes, "degree": self.degree, "distinct_leading": self.distinct_leading,
                "independent": self.independent, "m": self.m, "rank": self.rank}


def independence_report(m: int, d: int) -> IndependenceReport:
    """Rank of the degree-d ν-rewritings (odd-entry vectors) in the μ-monomial basis."""
    sums = [nu_to_mu(m, e) for e in independent_nu_vectors(m, d)]
    columns = sorted({t for s in sums for t in s})
    index = {t: i for i, t in enumerate(columns)}
    rows = [sum(1 << index[t] for t in s) for s in sums]
    leading = {max(s) for s in sums if s}
    return IndependenceReport(m, d, len(sums), gf2_rank(rows), len(leading))


def xi_subalgebra_series(p: int, N: int) -> PoincareSeries:
    """Series of the polynomial subalgebra on ξ-classes (p = 2) or E(1)-classes (p odd)."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise UnsupportedError(f"{p} is not prime")
    if p == 2:
        gens = [GeneratorSpec(i) for i in range(1, N + 1)]
    else:
        step = 2 * (p - 1)
        gens = [GeneratorSpec(d) for d in range(step, N + 1, step)]
    # all generators sit in even degree for odd p, so characteristic 2 gives the polynomial series
    return free_commutative_series(gens, 2, N)


# -- the worked table in degrees 2..9 for m = 2 -------------------------------

TABLE_DEGREES = range(2, 10)

# Degrees where the reference table disagrees with the derived expansion.
TABLE_DISCREPANCIES = {
    7: ("the reference table lists 'μ_{2,3}+μ_{2,1}^2' in degree 7 under ν_{1,2}; "
        "ν_{2,1} has degree 7 and expands to μ_{1,3}+μ_{5,1}"),
    8: ("the reference table lists 'μ_{2,3}+μ_{2,1}^2' in degree 8 under ν_{2,1}; "
        "ν_{1,2} has degree 8 and expands to μ_{2,3}+μ_{2,1}^2"),
}


@dataclass
class TableRow:
    degree: int
    entries: list[tuple[str, str]]
    warning: str | None = None

    @property
    def not_applicable(self) -> bool:
        return not self.entries

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "entries": [{"mu": mu, "nu": nu} for nu, mu in self.entries],
            "not_applicable": self.not_applicable,
            "warning": self.warning,
        }


def reproduce_table(m: int = 2, degrees: Iterable[int] = TABLE_DEGREES) -> list[TableRow]:
    rows = []
    for d in degrees:
        entries = [(NuClass(m, e).label(), format_mu_sum(nu_to_mu(m, e)))
                   for e in independent_nu_vectors(m, d)]
        warning = TABLE_DISCREPANCIES.get(d) if m == 2 else None
        rows.append(TableRow(d, entries, warning))
    return rows
