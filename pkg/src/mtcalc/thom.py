"""Cohomology of Madsen–Tillmann spectra MTG(n) through the Thom isomorphism.

H^*(MTG(n); k) is the free rank-one module ``z_n^{-1} k[z_i..z_n]`` with
``deg z_m = d*m`` and bottom class in degree ``-d*n``.  Basis elements are
exponent vectors on the generators; the restriction to Σ^{-d}MTG(n-1) sets
``z_n = 0``.

Suspension convention: ``dim_k Σ^{-d} X = dim_{k+d} X``.

SU is special in low rank: BSU(1) is a point and there is no z_1, so the
module for MTSU(1) is the single Thom class and the restriction at n = 1
maps it isomorphically onto the shifted sphere Σ^{-2}S^0.  The SU recursion
therefore starts at n = 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classifying import FAMILY_D, cohomology_presentation, coefficient_name, parse_coefficient
from .errors import DegreeError, UnsupportedError
from .series import PoincareSeries, ps_add, ps_shift

THOM_FAMILIES = ("O", "U", "SU", "Sp")


def _check_pair(family: str, modulus: int):
    if family not in THOM_FAMILIES:
        raise UnsupportedError(f"no Thom module for family {family!r}; expected {THOM_FAMILIES}")
    if family == "O" and modulus != 2:
        raise UnsupportedError("MTO(n) is only modelled with characteristic 2 coefficients")


@dataclass(frozen=True)
class ThomModule:
    family: str
    n: int
    modulus: int
    generator_indices: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        _check_pair(self.family, self.modulus)
        if self.n < 0:
            raise DegreeError("rank must be >= 0")
        start = 2 if self.family == "SU" else 1
        object.__setattr__(self, "generator_indices", tuple(range(start, self.n + 1)))

    @property
    def d(self) -> int:
        return FAMILY_D[self.family]

    @property
    def bottom_degree(self) -> int:
        return -self.d * self.n

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(self.d * i for i in self.generator_indices)

    def basis(self, N: int):
        """Yield (exponents, degree) for every basis element of degree <= N."""
        degs = self.generator_degrees
        budget = N - self.bottom_degree
        if budget < 0:
            return

        def rec(i, remaining, prefix):
            if i == len(degs):
                yield tuple(prefix), N - remaining
                return
            for k in range(remaining // degs[i] + 1):
                prefix.append(k)
                yield from rec(i + 1, remaining - k * degs[i], prefix)
                prefix.pop()

        for exps, _ in rec(0, budget, []):
            deg = self.bottom_degree + sum(e * g for e, g in zip(exps, degs))
            yield exps, deg

    def poincare_series(self, N: int) -> PoincareSeries:
        dims: dict[int, int] = {}
        for _, deg in self.basis(N):
            dims[deg] = dims.get(deg, 0) + 1
        return PoincareSeries.from_dict(dims, N, min(self.bottom_degree, N))

    def to_json(self) -> dict:
        gens = ",".join(f"z_{i}" for i in self.generator_indices)
        if self.generator_indices:
            presentation = f"z_{self.n}^-1 * k[{gens}]"
        else:
            presentation = f"k * u (Thom class in degree {self.bottom_degree})"
        return {
            "bottom_degree": self.bottom_degree,
            "coefficient": coefficient_name(self.modulus),
            "d": self.d,
            "family": self.family,
            "n": self.n,
            "presentation": presentation,
        }


def bg_series(family: str, n: int, modulus: int, N: int) -> PoincareSeries:
    if family == "O":
        return cohomology_presentation("O", n, 2).poincare_series(N)
    return cohomology_presentation(family, n, modulus).poincare_series(N)


def mt_poincare_series(family: str, n: int, coefficient, N: int) -> PoincareSeries:
    """Series of H^*(MTG(n); k), i.e. the Thom shift of BG(n) by -d*n."""
    modulus = parse_coefficient(coefficient)
    _check_pair(family, modulus)
    d = FAMILY_D[family]
    shifted = ps_shift(bg_series(family, n, modulus, N + d * n), -d * n)
    return shifted.truncate(N)


@dataclass
class RestrictionData:
    family: str
    n: int
    N: int
    kernel_dims: dict[int, int]
    image_dims: dict[int, int]
    target_dims: dict[int, int]
    surjective: bool
    kernel_matches_bg: bool
    base_case: str | None = None

    def to_json(self) -> dict:
        def keyed(d):
            return {str(k): v for k, v in sorted(d.items())}
        return {
            "base_case": self.base_case,
            "family": self.family,
            "image_dims": keyed(self.image_dims),
            "kernel_dims": keyed(self.kernel_dims),
            "kernel_matches_bg": self.kernel_matches_bg,
            "n": self.n,
            "surjective": self.surjective,
            "target_dims": keyed(self.target_dims),
            "trunc_degree": self.N,
        }


def mt_restriction_map(family: str, n: int, coefficient=2, N: int = 40) -> RestrictionData:
    """Basis-level map z_n^{-1} f(z_1..z_n) ↦ σ^{-1} z_{n-1}^{-1} f(z_1..z_{n-1}, 0)."""
    modulus = parse_coefficient(coefficient)
    if n < 1:
        raise DegreeError("mt_restriction_map needs n >= 1")
    src = ThomModule(family, n, modulus)
    tgt = ThomModule(family, n - 1, modulus) if not (family == "SU" and n == 1) else None
    d = src.d
    has_zn = bool(src.generator_indices) and src.generator_indices[-1] == n

    kernel: dict[int, int] = {}
    image: dict[int, set] = {}
    for exps, deg in src.basis(N):
        if has_zn and exps[-1] > 0:
            kernel[deg] = kernel.get(deg, 0) + 1
        else:
            reduced = exps[:-1] if has_zn else exps
            image.setdefault(deg, set()).add(reduced)

    # target: Σ^{-d} of MTG(n-1), or Σ^{-2}S^0 for the SU base case
    target: dict[int, int] = {}
    if tgt is None:
        if -d <= N:
            target[-d] = 1
        base_case = "MTSU(1) is the Thom class alone; it maps onto Σ^{-2}S^0"
    else:
        for _, deg in tgt.basis(N + d):
            if deg - d <= N:
                target[deg - d] = target.get(deg - d, 0) + 1
        base_case = None
    image_dims = {k: len(v) for k, v in image.items()}
    surjective = image_dims == target

    if tgt is None:
        kernel_ok = not kernel
    else:
        bg = bg_series(family, n, modulus, N)
        kernel_ok = all(kernel.get(k, 0) == bg[k] for k in range(min(bg.min_degree, -d * n), N + 1))
    return RestrictionData(family, n, N, kernel, image_dims, target, surjective, kernel_ok, base_case)


@dataclass
class DimensionReport:
    check: str
    family: str
    n: int
    coefficient: str
    N: int
    passed: bool
    first_violation: int | None
    rows: list[dict]
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "coefficient": self.coefficient,
            "family": self.family,
            "first_violation": self.first_violation,
            "n": self.n,
            "notes": self.notes,
            "passed": self.passed,
            "rows": self.rows,
            "trunc_degree": self.N,
        }


def verify_ses_dimensions(family: str, n: int, coefficient, N: int = 40) -> DimensionReport:
    """dim H^k MTG(n) = dim H^k BG(n)_+ + dim H^{k+d} MTG(n-1) for all k <= N.

    Both sides come from the basis model: kernel of the restriction is
    checked against H^*(BG(n)) and the image against Σ^{-d}MTG(n-1).
    """
    modulus = parse_coefficient(coefficient)
    _check_pair(family, modulus)
    if n < 1:
        raise DegreeError("verify_ses_dimensions needs n >= 1")
    d = FAMILY_D[family]
    mt = mt_poincare_series(family, n, modulus, N)
    notes: list[str] = []
    if family == "SU" and n == 1:
        bg = PoincareSeries.zero(N)
        lower = PoincareSeries.monomial(-d, N)
        notes.append("SU base case: the BSU(1)_+ term is absent; complement is Σ^{-2}S^0")
    else:
        bg = bg_series(family, n, modulus, N)
        lower = ps_shift(_mt_or_sphere(family, n - 1, modulus, N + d), -d).truncate(N)
    restriction = mt_restriction_map(family, n, modulus, N)

    rows = []
    first = None
    for k in range(-d * n, N + 1):
        lhs = mt[k]
        rhs_bg = bg[k]
        rhs_lower = lower[k]
        ok = (lhs == rhs_bg + rhs_lower
              and restriction.kernel_dims.get(k, 0) == rhs_bg
              and restriction.image_dims.get(k, 0) == rhs_lower)
        rows.append({"bg": rhs_bg, "degree": k, "lower": rhs_lower, "mt": lhs, "ok": ok})
        if not ok and first is None:
            first = k
    passed = first is None and restriction.surjective
    return DimensionReport("ses", family, n, coefficient_name(modulus), N, passed, first, rows, notes)


def _mt_or_sphere(family: str, n: int, modulus: int, N: int) -> PoincareSeries:
    # MTG(0) = S^0 for O, U, Sp; for SU only reached with n >= 1
    if n == 0:
        return PoincareSeries.one(N)
    return mt_poincare_series(family, n, modulus, N)


def direct_sum_series(family: str, n: int, coefficient, N: int) -> PoincareSeries:
    """Σ_j t^{-d(n-j)} PS(BG(j)); for SU the j = 1 slot is MTSU(1) = S^{-2} shifted."""
    modulus = parse_coefficient(coefficient)
    _check_pair(family, modulus)
    d = FAMILY_D[family]
    total = PoincareSeries.zero(N)
    for j in range(0, n + 1):
        shift = -d * (n - j)
        if family == "SU" and j == 0:
            continue
        if family == "SU" and j == 1:
            piece = PoincareSeries.monomial(-d, N - shift)
        else:
            piece = bg_series(family, j, modulus, N - shift)
        total = ps_add(total, ps_shift(piece, shift).truncate(N))
    return total


def mt_direct_sum_check(family: str, n: int, coefficient, N: int = 40) -> DimensionReport:
    modulus = parse_coefficient(coefficient)
    if n < 1 and family == "SU":
        raise DegreeError("the SU direct-sum check starts at n = 1")
    if n < 0:
        raise DegreeError("rank must be >= 0")
    mt = mt_poincare_series(family, n, modulus, N)
    ds = direct_sum_series(family, n, modulus, N)
    rows = []
    first = None
    for k in range(mt.min_degree, N + 1):
        ok = mt[k] == ds[k]
        rows.append({"degree": k, "direct_sum": ds[k], "mt": mt[k], "ok": ok})
        if not ok and first is None:
            first = k
    notes = ["SU: MTSU(1) = S^{-2} is the base summand"] if family == "SU" else []
    return DimensionReport("direct_sum", family, n, coefficient_name(modulus), N, first is None,
                           first, rows, notes)
