"""Mod 2 homology of Q-spaces as free algebras on Dyer–Lashof words.

For connected Y with homology basis {y_a}, H_*(QY; F2) is polynomial on
Q^I y_a with I admissible (i_j <= 2 i_{j+1}) and positive excess
i_1 - (i_2 + ... + i_s + |y_a|).  Only graded dimensions are modelled.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeError, MtcalcError
from .series import GeneratorSpec, PoincareSeries, free_commutative_series, ps_mul


@dataclass(frozen=True, order=True)
class AdmissibleWord:
    degree: int
    indices: tuple[int, ...]
    generator_degree: int

    @classmethod
    def make(cls, indices: Sequence[int], generator_degree: int) -> "AdmissibleWord":
        indices = tuple(indices)
        return cls(sum(indices) + generator_degree, indices, generator_degree)

    @property
    def excess(self) -> float:
        if not self.indices:
            return math.inf
        return self.indices[0] - (sum(self.indices[1:]) + self.generator_degree)

    @property
    def is_admissible(self) -> bool:
        I = self.indices
        return all(I[j] <= 2 * I[j + 1] for j in range(len(I) - 1))

    @property
    def retained(self) -> bool:
        return self.is_admissible and all(i >= 1 for i in self.indices) and self.excess > 0

    def label(self, generator: str = "y") -> str:
        if not self.indices:
            return generator
        return "Q^(" + ",".join(map(str, self.indices)) + ")" + generator

    def to_json(self) -> dict:
        excess = self.excess
        return {
            "degree": self.degree,
            "excess": None if excess == math.inf else excess,
            "generator_degree": self.generator_degree,
            "indices": list(self.indices),
        }


def admissible_words(generator_degree: int, max_degree: int) -> list[AdmissibleWord]:
    """Empty word plus every admissible positive-excess word of degree <= max_degree.

    Words are grown from the right: a suffix with index sum S (including the
    generator) and first index f accepts a new leading index i with
    S < i <= 2f.  Positive excess of a word forces it on every suffix.
    """
    if generator_degree < 0:
        raise DegreeError("generator degree must be >= 0")
    if max_degree < generator_degree:
        return []
    words = [AdmissibleWord.make((), generator_degree)]
    # stack of (indices, running degree)
    stack: list[tuple[tuple[int, ...], int]] = [((), generator_degree)]
    while stack:
        suffix, total = stack.pop()
        hi = max_degree - total
        if suffix:
            hi = min(hi, 2 * suffix[0])
        for i in range(total + 1, hi + 1):
            word = (i,) + suffix
            words.append(AdmissibleWord.make(word, generator_degree))
            stack.append((word, total + i))
    words.sort()
    return words


@dataclass(frozen=True)
class HomologyInput:
    """Generators of reduced homology (or positive-degree rational homology)."""
    generators: tuple[GeneratorSpec, ...]

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "HomologyInput":
        counts: dict[int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        return cls(tuple(GeneratorSpec.graded(d, m) for d, m in sorted(counts.items())))

    @classmethod
    def from_series(cls, series: PoincareSeries, N: int | None = None) -> "HomologyInput":
        """Reduced part (degrees >= 1) of a space's Poincaré series."""
        top = series.trunc_degree if N is None else min(N, series.trunc_degree)
        gens = [GeneratorSpec.graded(d, series[d]) for d in range(1, top + 1) if series[d] > 0]
        return cls(tuple(gens))

    def degree_list(self) -> list[int]:
        return [g.degree for g in self.generators for _ in range(g.multiplicity)]

    def to_json(self) -> list:
        return [[g.degree, g.parity, g.multiplicity] for g in self.generators]


def _as_input(value) -> HomologyInput:
    if isinstance(value, HomologyInput):
        return value
    return HomologyInput.from_degrees(value)


def retained_generators(inp, N: int) -> list[tuple[int, AdmissibleWord]]:
    """(generator index, word) pairs that are polynomial generators of degree <= N."""
    inp = _as_input(inp)
    out = []
    for idx, deg in enumerate(inp.degree_list()):
        if deg < 1:
            raise DegreeError("connected Y needs generator degrees >= 1")
        for w in admissible_words(deg, N):
            out.append((idx, w))
    return out


def q_homology_series(inp, N: int) -> PoincareSeries:
    inp = _as_input(inp)
    for g in inp.generators:
        if g.degree < 1:
            raise DegreeError("degree-0 generators are only allowed for Q S^0 (use q0s0_series)")
    words: dict[int, int] = {}
    for _, w in retained_generators(inp, N):
        words[w.degree] = words.get(w.degree, 0) + 1
    gens = [GeneratorSpec(d, "even", m) for d, m in sorted(words.items())]
    return free_commutative_series(gens, 2, N)


def q0s0_generators(N: int) -> list[AdmissibleWord]:
    return [w for w in admissible_words(0, N) if w.indices]


def q0s0_series(N: int) -> PoincareSeries:
    """H_*(Q_0S^0; F2): polynomial on classes x_I, I admissible of positive excess."""
    counts: dict[int, int] = {}
    for w in q0s0_generators(N):
        counts[w.degree] = counts.get(w.degree, 0) + 1
    return free_commutative_series([GeneratorSpec(d, "even", m) for d, m in counts.items()], 2, N)


def q0_plus_series(inp, N: int) -> PoincareSeries:
    """H_*(Q_0(Y_+); F2) = H_*(QY) ⊗ H_*(Q_0S^0) for connected Y."""
    return ps_mul(q_homology_series(inp, N), q0s0_series(N))


def rational_omega_series(inp, N: int) -> PoincareSeries:
    inp = _as_input(inp)
    return free_commutative_series(inp.generators, 0, N)


# -- basis monomials and the stable homology suspension -----------------------

@dataclass(frozen=True)
class FreeMonomial:
    """A product of Dyer–Lashof generators: ((generator index, word), exponent) pairs."""
    factors: tuple[tuple[tuple[int, AdmissibleWord], int], ...]

    @property
    def degree(self) -> int:
        return sum(w.degree * e for (_, w), e in self.factors)

    @property
    def length(self) -> int:
        return sum(e for _, e in self.factors)

    def label(self) -> str:
        parts = []
        for (g, w), e in self.factors:
            s = w.label(f"y{g}")
            parts.append(s if e == 1 else f"({s})^{e}")
        return "*".join(parts) if parts else "1"


def basis_monomials(inp, degree: int) -> list[FreeMonomial]:
    """All basis monomials of H_degree(QY; F2), explicitly listed."""
    gens = sorted(retained_generators(inp, degree), key=lambda gw: (gw[1].degree, gw[0], gw[1].indices))
    out: list[FreeMonomial] = []

    def rec(i, remaining, acc):
        if remaining == 0:
            out.append(FreeMonomial(tuple(acc)))
            return
        if i == len(gens):
            return
        dg = gens[i][1].degree
        for e in range(remaining // dg, -1, -1):
            if e:
                acc.append((gens[i], e))
            rec(i + 1, remaining - e * dg, acc)
            if e:
                acc.pop()

    rec(0, degree, [])
    return out


class MalformedMonomial(MtcalcError, ValueError):
    pass


def suspension_projection(monomial: FreeMonomial, num_generators: int | None = None):
    """Stable homology suspension on a basis monomial.

    Returns the generator index for an unadorned single generator, else None
    (zero): products of length >= 2 are decomposable and nonempty words
    vanish under the projection onto H̃_*(Y).
    """
    if not monomial.factors:
        raise MalformedMonomial("the unit is not in reduced homology")
    for (g, w), e in monomial.factors:
        if e < 1:
            raise MalformedMonomial(f"nonpositive exponent {e}")
        if not w.retained:
            raise MalformedMonomial(f"word {w.indices} is not admissible with positive excess")
        if num_generators is not None and not 0 <= g < num_generators:
            raise MalformedMonomial(f"unknown generator index {g}")
    if monomial.length == 1:
        (g, w), _ = monomial.factors[0]
        if not w.indices:
            return g
    return None
