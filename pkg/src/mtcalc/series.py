"""Truncated, bounded-below integer series for graded dimension counts.

A :class:`PoincareSeries` stores the coefficients of ``t^d`` for
``min_degree <= d <= trunc_degree``.  Everything above ``trunc_degree`` is
unknown, so binary operations truncate at the smaller bound.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegreeError

DEFAULT_MAX_DEGREE = 40


def default_max_degree() -> int:
    """Default truncation, overridable through ``MTCALC_MAX_DEGREE``."""
    raw = os.environ.get("MTCALC_MAX_DEGREE")
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise DegreeError(f"MTCALC_MAX_DEGREE must be an integer, got {raw!r}")
    if value < 0:
        raise DegreeError("MTCALC_MAX_DEGREE must be >= 0")
    return value


@dataclass(frozen=True)
class PoincareSeries:
    min_degree: int
    trunc_degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.trunc_degree < self.min_degree:
            raise DegreeError(
                f"trunc_degree {self.trunc_degree} < min_degree {self.min_degree}")
        coeffs = tuple(int(c) for c in self.coefficients)
        expected = self.trunc_degree - self.min_degree + 1
        if len(coeffs) != expected:
            raise DegreeError(f"expected {expected} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)

    # -- construction -------------------------------------------------
    @classmethod
    def from_dict(cls, dims: dict[int, int], N: int, min_degree: int | None = None):
        if min_degree is None:
            min_degree = min(dims, default=0)
            min_degree = min(min_degree, N)
        return cls(min_degree, N, tuple(dims.get(d, 0) for d in range(min_degree, N + 1)))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[int], N: int | None = None, min_degree: int = 0):
        """Series whose coefficient at ``min_degree + i`` is ``coeffs[i]``, zero-padded to N."""
        coeffs = list(coeffs)
        if N is None:
            N = min_degree + len(coeffs) - 1
        width = N - min_degree + 1
        coeffs = (coeffs + [0] * width)[:width]
        return cls(min_degree, N, tuple(coeffs))

    @classmethod
    def zero(cls, N: int = DEFAULT_MAX_DEGREE):
        return cls(0, N, (0,) * (N + 1))

    @classmethod
    def one(cls, N: int = DEFAULT_MAX_DEGREE):
        return cls.monomial(0, N)

    @classmethod
    def monomial(cls, degree: int, N: int, coefficient: int = 1):
        """``coefficient * t^degree``; empty above N is allowed (then it is zero)."""
        lo = min(degree, N)
        coeffs = [0] * (N - lo + 1)
        if degree <= N:
            coeffs[degree - lo] = coefficient
        return cls(lo, N, tuple(coeffs))

    @classmethod
    def geometric(cls, degree: int, N: int):
        """``1/(1 - t^degree)`` for a positive degree."""
        if degree <= 0:
            raise DegreeError(f"geometric series needs a positive degree, got {degree}")
        return cls(0, N, tuple(1 if d % degree == 0 else 0 for d in range(N + 1)))

    # -- access -------------------------------------------------------
    def __getitem__(self, degree: int) -> int:
        if degree > self.trunc_degree:
            raise IndexError(f"degree {degree} beyond truncation {self.trunc_degree}")
        if degree < self.min_degree:
            return 0
        return self.coefficients[degree - self.min_degree]

    def degrees(self) -> range:
        return range(self.min_degree, self.trunc_degree + 1)

    def items(self):
        return zip(self.degrees(), self.coefficients)

    def dims(self, lo: int, hi: int) -> list[int]:
        return [self[d] for d in range(lo, hi + 1)]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def truncate(self, N: int) -> "PoincareSeries":
        if N >= self.trunc_degree:
            return self
        lo = min(self.min_degree, N)
        return PoincareSeries(lo, N, tuple(self[d] for d in range(lo, N + 1)))

    def __eq__(self, other):
        if not isinstance(other, PoincareSeries):
            return NotImplemented
        top = min(self.trunc_degree, other.trunc_degree)
        lo = min(self.min_degree, other.min_degree)
        return all(self[d] == other[d] for d in range(lo, top + 1))

    def __hash__(self):
        return hash((self.trunc_degree, self.coefficients))

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_add(self, ps_scale(other, -1))

    def __mul__(self, other):
        return ps_mul(self, other)

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "min_degree": self.min_degree,
            "trunc_degree": self.trunc_degree,
        }

    @classmethod
    def from_json(cls, data: dict) -> "PoincareSeries":
        return cls(int(data["min_degree"]), int(data["trunc_degree"]),
                   tuple(int(c) for c in data["coefficients"]))

    def __str__(self):
        terms = []
        for d, c in self.items():
            if c == 0:
                continue
            if d == 0:
                mon = ""
            elif d == 1:
                mon = "t"
            else:
                mon = f"t^{d}"
            if mon and c == 1:
                terms.append(mon)
            elif mon:
                terms.append(f"{c}{mon}")
            else:
                terms.append(str(c))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(t^{self.trunc_degree + 1})"


def ps_add(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    N = min(a.trunc_degree, b.trunc_degree)
    lo = min(a.min_degree, b.min_degree, N)
    return PoincareSeries(lo, N, tuple(a[d] + b[d] for d in range(lo, N + 1)))


def ps_scale(a: PoincareSeries, k: int) -> PoincareSeries:
    return PoincareSeries(a.min_degree, a.trunc_degree, tuple(k * c for c in a.coefficients))


def ps_mul(a: PoincareSeries, b: PoincareSeries) -> PoincareSeries:
    """Truncated convolution.

    Each factor is only known up to its own bound, so the product is known up
    to ``min(a.trunc + b.min, b.trunc + a.min)``; the shared truncation bound
    is the smaller of that and the inputs' bounds.
    """
    N = min(a.trunc_degree, b.trunc_degree,
            a.trunc_degree + b.min_degree, b.trunc_degree + a.min_degree)
    lo = a.min_degree + b.min_degree
    if N < lo:
        return PoincareSeries(N, N, (0,))
    out = [0] * (N - lo + 1)
    for i, ca in a.items():
        if ca == 0:
            continue
        if i + b.min_degree > N:
            break
        for j, cb in b.items():
            if i + j > N:
                break
            if cb:
                out[i + j - lo] += ca * cb
    return PoincareSeries(lo, N, tuple(out))


def ps_shift(a: PoincareSeries, k: int) -> PoincareSeries:
    """Multiply by ``t^k``; the truncation bound moves with the series."""
    return PoincareSeries(a.min_degree + k, a.trunc_degree + k, a.coefficients)


def ps_product(factors: Iterable[PoincareSeries], N: int) -> PoincareSeries:
    result = PoincareSeries.one(N)
    for f in factors:
        result = ps_mul(result, f)
    return result


@dataclass(frozen=True)
class GeneratorSpec:
    """A free generator: degree, parity (used only rationally), multiplicity."""
    degree: int
    parity: str = "even"
    multiplicity: int = 1

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")

    @classmethod
    def graded(cls, degree: int, multiplicity: int = 1):
        """Parity from the degree, as for generators of a graded-commutative algebra."""
        return cls(degree, "odd" if degree % 2 else "even", multiplicity)


def _times_geometric(a: list[int], d: int) -> None:
    # in-place a <- a / (1 - t^d) on a list indexed from degree 0
    for i in range(d, len(a)):
        a[i] += a[i - d]


def _times_exterior(a: list[int], d: int) -> None:
    # in-place a <- a * (1 + t^d)
    for i in range(len(a) - 1, d - 1, -1):
        a[i] += a[i - d]


def free_commutative_series(gens: Iterable[GeneratorSpec], characteristic: int,
                            N: int = DEFAULT_MAX_DEGREE) -> PoincareSeries:
    """Poincaré series of the free graded-commutative algebra on ``gens``.

    In characteristic 2 every generator is polynomial.  In characteristic 0
    odd generators are exterior.
    """
    if characteristic not in (0, 2):
        raise ValueError(f"characteristic must be 0 or 2, got {characteristic}")
    gens = list(gens)
    for g in gens:
        if g.degree <= 0:
            raise DegreeError(f"free generators need positive degree, got {g.degree}")
    coeffs = [0] * (N + 1)
    coeffs[0] = 1
    for g in gens:
        if g.degree > N:
            continue
        for _ in range(g.multiplicity):
            if characteristic == 0 and g.parity == "odd":
                _times_exterior(coeffs, g.degree)
            else:
                _times_geometric(coeffs, g.degree)
    return PoincareSeries(0, N, tuple(coeffs))


def polynomial_series(degrees: Iterable[int], N: int = DEFAULT_MAX_DEGREE) -> PoincareSeries:
    """Series of a polynomial algebra on generators of the given degrees."""
    return free_commutative_series([GeneratorSpec(d) for d in degrees], 2, N)
