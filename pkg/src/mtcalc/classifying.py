"""Cohomology of BG(n) for the classical families and the maps between them.

Presentations are polynomial (one relation for BSO(2m) away from 2).  The
integral torsion summand is never modelled.  Restriction maps are built
from the splitting principle: a map of maximal tori (or of O(1)^n) acts on
the total class ``prod (1 + t_i)`` and the result is read off in the
elementary symmetric basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import ContextMismatch, DegreeError, UnsupportedError
from .poly import (
    Poly,
    VariableSpec,
    elementary_symmetric,
    indexed_context,
    make_context,
    symmetrize_reduce,
)
from .series import PoincareSeries, ps_mul, polynomial_series

FAMILIES = ("O", "SO", "U", "SU", "Sp")
# families of the detection targets and the spaces they stand for
DETECTION_SPACES = {"ElemAbelian2": "BO(1)", "Torus": "BU(1)", "Sp1Power": "BSp(1)"}
# degree multiplier of the defining representation's generators
FAMILY_D = {"O": 1, "SO": 1, "U": 2, "SU": 2, "Sp": 4}

# Grassmannian-model values in rank 0 that differ from the group's classifying space.
RANK_ZERO_NOTES = {
    "SO": "BSO(0) is S^0 in the Grassmannian model; no ring structure is recorded",
    "SU": "BSU(0) is S^1 in the Grassmannian model; no ring structure is recorded",
}


def parse_coefficient(coeff) -> int:
    """Map 'f2', 'f3', 'fp:5', 'q', 2, 0, ... to a modulus (0 means Q)."""
    if isinstance(coeff, int):
        modulus = coeff
    else:
        text = str(coeff).strip().lower().replace("z/", "f").replace("_", "")
        if text in ("q", "qq", "rational", "0"):
            modulus = 0
        elif text.startswith("fp:"):
            modulus = int(text[3:])
        elif text.startswith("f") and text[1:].isdigit():
            modulus = int(text[1:])
        elif text.isdigit():
            modulus = int(text)
        else:
            raise UnsupportedError(f"unrecognised coefficient {coeff!r}")
    if modulus == 0:
        return 0
    if modulus < 2 or any(modulus % q == 0 for q in range(2, int(modulus ** 0.5) + 1)):
        raise UnsupportedError(f"coefficient field F_{modulus} needs a prime")
    return modulus


def coefficient_name(modulus: int) -> str:
    return "Q" if modulus == 0 else f"F{modulus}"


@dataclass(frozen=True)
class RingPresentation:
    family: str
    n: int
    modulus: int
    generators: tuple[VariableSpec, ...]
    relations: tuple[Poly, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def coefficient(self) -> str:
        return coefficient_name(self.modulus)

    @property
    def label(self) -> str:
        space = DETECTION_SPACES.get(self.family)
        space = f"{space}^{self.n}" if space else f"B{self.family}({self.n})"
        return f"H^*({space};{self.coefficient})"

    def gen(self, name) -> Poly:
        return Poly.var(self.modulus, self.generators, name)

    def gens(self) -> list[Poly]:
        return Poly.gens(self.modulus, self.generators)

    def one(self) -> Poly:
        return Poly.constant(self.modulus, self.generators, 1)

    def zero(self) -> Poly:
        return Poly.zero(self.modulus, self.generators)

    def poincare_series(self, N: int) -> PoincareSeries:
        if not self.relations:
            return polynomial_series([v.degree for v in self.generators], N)
        # single relation chi^2 = p_m: basis is k[p_1..p_m] * {1, chi}
        chi = self.generators[-1]
        base = polynomial_series([v.degree for v in self.generators[:-1]], N)
        return ps_mul(base, PoincareSeries.from_dict({0: 1, chi.degree: 1}, N, 0))

    def to_json(self) -> dict:
        return {
            "coefficient": self.coefficient,
            "family": self.family,
            "generators": [[v.name, v.degree] for v in self.generators],
            "n": self.n,
            "notes": list(self.notes),
            "relations": self.relation_texts(),
        }

    def relation_texts(self) -> list[str]:
        if not self.relations:
            return []
        chi, top = self.generators[-1], self.generators[-2]
        return [f"{chi.name}^2 = {top.name}"]

    def __str__(self):
        gens = ",".join(v.name for v in self.generators)
        ring = f"{self.coefficient}[{gens}]"
        if self.relations:
            ring += "/(" + ", ".join(self.relation_texts()) + ")"
        return f"{self.label} = {ring}"


def _presentation(family, n, modulus, names_degrees, relations=(), notes=()):
    ctx = make_context(names_degrees)
    return RingPresentation(family, n, modulus, ctx, tuple(relations), tuple(notes))


def cohomology_presentation(family: str, n: int, coefficient) -> RingPresentation:
    """H^*(BG(n); k) for G in O, SO, U, SU, Sp; torsion-free part only."""
    modulus = parse_coefficient(coefficient)
    if family not in FAMILIES:
        raise UnsupportedError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 0:
        raise DegreeError(f"rank must be >= 0, got {n}")
    notes = []
    if n == 0 and family in RANK_ZERO_NOTES:
        notes.append(RANK_ZERO_NOTES[family])

    if family == "U":
        return _presentation("U", n, modulus, [(f"c_{i}", 2 * i) for i in range(1, n + 1)], notes=notes)
    if family == "SU":
        return _presentation("SU", n, modulus, [(f"c_{i}", 2 * i) for i in range(2, n + 1)], notes=notes)
    if family == "Sp":
        return _presentation("Sp", n, modulus, [(f"p_{i}", 4 * i) for i in range(1, n + 1)], notes=notes)

    if modulus == 2:
        start = 1 if family == "O" else 2
        return _presentation(family, n, modulus, [(f"w_{i}", i) for i in range(start, n + 1)], notes=notes)
    # 2 invertible: Pontryagin classes, plus the Euler class for SO(2m)
    m = n // 2
    pont = [(f"p_{i}", 4 * i) for i in range(1, m + 1)]
    if family == "SO" and n % 2 == 0 and m >= 1:
        pres = _presentation("SO", n, modulus, pont + [("chi", 2 * m)], notes=notes)
        chi = pres.gen("chi")
        relation = chi * chi - pres.gen(f"p_{m}")
        return RingPresentation(pres.family, n, modulus, pres.generators, (relation,), pres.notes)
    return _presentation(family, n, modulus, pont, notes=notes)


def detection_target(family: str, n: int, modulus: int) -> RingPresentation:
    """H^*(BG(1)^n): the torus (U), O(1)^n (O) or Sp(1)^n (Sp)."""
    d = FAMILY_D[family]
    label = {"O": "ElemAbelian2", "U": "Torus", "Sp": "Sp1Power"}[family]
    ctx = indexed_context("t", n, lambda i: d)
    return RingPresentation(label, n, modulus, ctx)


@dataclass(frozen=True)
class RingMap:
    source: RingPresentation
    target: RingPresentation
    images: tuple[Poly, ...]
    name: str = ""

    def __post_init__(self):
        if len(self.images) != len(self.source.generators):
            raise ContextMismatch(
                f"{len(self.source.generators)} source generators but {len(self.images)} images")
        for v, im in zip(self.source.generators, self.images):
            if im.variables != self.target.generators or im.modulus != self.target.modulus:
                raise ContextMismatch(f"image of {v.name} is not in the target ring")
            if im and im.degree() != v.degree:
                raise DegreeError(
                    f"image of {v.name} has degree {im.degree()}, expected {v.degree}")

    def image(self, name: str) -> Poly:
        for v, im in zip(self.source.generators, self.images):
            if v.name == name:
                return im
        raise KeyError(f"unknown variable {name!r}")

    def __call__(self, P: Poly) -> Poly:
        return apply_ring_map(self, P)

    def compose(self, other: "RingMap") -> "RingMap":
        """``self ∘ other``: apply ``other`` first."""
        if other.target.generators != self.source.generators:
            raise ContextMismatch("maps are not composable")
        return RingMap(other.source, self.target,
                       tuple(apply_ring_map(self, im) for im in other.images),
                       name=f"{self.name}∘{other.name}")

    def to_json(self) -> dict:
        return {
            "images": {v.name: im.to_text() for v, im in zip(self.source.generators, self.images)},
            "name": self.name,
            "source": self.source.to_json(),
            "target": self.target.to_json(),
        }


def apply_ring_map(m: RingMap, P: Poly) -> Poly:
    if P.variables != m.source.generators:
        names = [v.name for v in P.variables]
        raise KeyError(f"polynomial in variables {names} does not live in {m.source.label}")
    if P.modulus != m.source.modulus:
        raise ContextMismatch("modulus mismatch")
    if not m.images:
        c = P.coefficient(())
        return Poly.constant(m.target.modulus, m.target.generators, c)
    return P.substitute(list(m.images))


def identity_map(pres: RingPresentation) -> RingMap:
    return RingMap(pres, pres, tuple(pres.gens()), name="id")


def detection_map(family: str, n: int, coefficient) -> RingMap:
    modulus = parse_coefficient(coefficient)
    if family not in ("O", "U", "Sp"):
        raise UnsupportedError(f"no detection map for family {family!r}")
    if family == "O" and modulus != 2:
        raise UnsupportedError("detection for O needs F2 coefficients")
    source = cohomology_presentation(family, n, modulus)
    target = detection_target(family, n, modulus)
    images = tuple(elementary_symmetric(target.gens(), i) for i in range(1, n + 1))
    return RingMap(source, target, images, name=f"detect_{family}({n})")


def standard_restriction(family: str, n: int, coefficient) -> RingMap:
    """Restriction along G(n-1) ⊂ G(n): generators missing downstairs go to 0."""
    if n < 1:
        raise DegreeError("standard restriction needs n >= 1")
    source = cohomology_presentation(family, n, coefficient)
    target = cohomology_presentation(family, n - 1, coefficient)
    names = {v.name for v in target.generators}
    images = tuple(target.gen(v.name) if v.name in names else target.zero()
                   for v in source.generators)
    return RingMap(source, target, images, name=f"res_{family}({n - 1})")


# -- maps from the splitting principle ---------------------------------------

def _shift_coefficients(nvars: int, shift: int, extra: Sequence[int], k: int, j: int) -> int:
    """Coefficient of x^(k-j) in (1 + shift*x)^(nvars-j) * prod(1 + b*x for b in extra)."""
    if j > nvars or k < j:
        return 0
    poly = [comb(nvars - j, i) * shift ** i for i in range(nvars - j + 1)]
    for b in extra:
        poly = [a + (b * poly[i - 1] if i else 0) for i, a in enumerate(poly + [0])]
    r = k - j
    return poly[r] if r < len(poly) else 0


def shifted_elementary_image(target: RingPresentation, k: int, shift: int,
                             extra: Sequence[int]) -> Poly:
    """σ_k(t_1 + s·e_1, ..., t_n + s·e_1, b_1·e_1, ...) in the basis e_1..e_n of ``target``.

    Uses the total-class identity ``prod (u + t_i) = sum_j u^(n-j) e_j``.
    """
    n = len(target.generators)
    e = [target.one()] + target.gens()
    out = target.zero()
    for j in range(0, min(k, n) + 1):
        c = _shift_coefficients(n, shift, extra, k, j)
        if c:
            if n == 0:
                term = target.one() if k == j else target.zero()
            else:
                term = e[1] ** (k - j) * e[j]
            out = out + term.scale(c)
    return out


def _reduce_route_image(target: RingPresentation, k: int, shift: int, extra: Sequence[int]) -> Poly:
    """Same image by explicit expansion in t-variables and symmetric reduction."""
    n = len(target.generators)
    d = target.generators[0].degree
    tctx = indexed_context("t", n, lambda i: d)
    ts = Poly.gens(target.modulus, tctx)
    s1 = sum(ts[1:], ts[0])
    forms = [t + s1.scale(shift) for t in ts] + [s1.scale(b) for b in extra]
    sigma = elementary_symmetric(forms, k)
    return symmetrize_reduce(sigma, target.generators)


def _image(target, k, shift, extra, method):
    if method == "closed":
        return shifted_elementary_image(target, k, shift, extra)
    if method == "reduce":
        return _reduce_route_image(target, k, shift, extra)
    raise ValueError(f"unknown method {method!r}")


def j_restriction(n: int, method: str = "closed") -> RingMap:
    """Bj^*: H^*(BSO(2n+1);F2) → H^*(BO(2n);F2) for j(X) = det(X)(X ⊕ 1)."""
    if n < 1:
        raise DegreeError("j_restriction needs n >= 1")
    source = cohomology_presentation("SO", 2 * n + 1, 2)
    target = cohomology_presentation("O", 2 * n, 2)
    images = tuple(_image(target, k, 1, [1], method) for k in range(2, 2 * n + 2))
    return RingMap(source, target, images, name=f"Bj*({n})")


def su_restriction(n: int, coefficient, method: str = "closed") -> RingMap:
    """H^*(BSU(n+1)) → H^*(BU(n)) for X ↦ X ⊕ det(X)^{-1}."""
    if n < 1:
        raise DegreeError("su_restriction needs n >= 1")
    modulus = parse_coefficient(coefficient)
    source = cohomology_presentation("SU", n + 1, modulus)
    target = cohomology_presentation("U", n, modulus)
    images = tuple(_image(target, k, 0, [-1], method) for k in range(2, n + 2))
    return RingMap(source, target, images, name=f"su_res({n})")


@dataclass(frozen=True)
class SelfMapResult:
    map: RingMap
    invertible: bool
    c1_coefficient: int
    divisibility_rule: bool
    sign: int


def u_selfmap(n: int, p: int, sign: int = 1, method: str = "closed") -> SelfMapResult:
    """Effect on H^*(BU(n);F_p) of A ↦ det(A)^{-1}A via t_i ↦ t_i + sign·c_1.

    ``sign=+1`` follows the torus computation (c_1 ↦ (1+n)c_1); ``sign=-1``
    follows the literal formula for the homomorphism.
    """
    if n < 1:
        raise DegreeError("u_selfmap needs n >= 1")
    if p == 2 or parse_coefficient(p) == 0:
        raise UnsupportedError(f"u_selfmap needs an odd prime, got {p}")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    pres = cohomology_presentation("U", n, p)
    images = tuple(_image(pres, k, sign, [], method) for k in range(1, n + 1))
    m = RingMap(pres, pres, images, name=f"Bphi*({n})")
    # linear part on indecomposables: c_1 ↦ λ c_1, c_k ↦ c_k + decomposables
    exps = [0] * n
    exps[0] = 1
    lam = images[0].coefficient(tuple(exps))
    triangular = all(
        images[k].coefficient(tuple(1 if i == k else 0 for i in range(n))) == 1
        for k in range(1, n))
    invertible = bool(lam % p) and triangular
    return SelfMapResult(m, invertible, lam, (n + 1) % p != 0, sign)


# -- real projective space ---------------------------------------------------

@dataclass(frozen=True)
class PinVerdict:
    n: int
    w1: int
    w2: int
    pin_plus: bool
    pin_minus: bool

    def to_json(self) -> dict:
        return {"n": self.n, "pin_minus": self.pin_minus, "pin_plus": self.pin_plus,
                "w1": self.w1, "w2": self.w2}


def rp_tangent_sw(n: int) -> tuple[int, int]:
    """(w_1, w_2) of T(RP^n) as coefficients of x, x^2 in F2[x]/(x^{n+1})."""
    if n < 1:
        raise DegreeError("RP^n needs n >= 1")
    w1 = (n + 1) % 2
    w2 = comb(n + 1, 2) % 2 if n >= 2 else 0
    return w1, w2


def pin_structures(n: int) -> PinVerdict:
    w1, w2 = rp_tangent_sw(n)
    w1_squared = w1 if n >= 2 else 0
    return PinVerdict(n, w1, w2, pin_plus=(w2 == 0), pin_minus=((w2 + w1_squared) % 2 == 0))
