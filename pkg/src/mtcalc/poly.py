"""Sparse multivariate polynomials with weighted variable degrees.

Coefficients live in F_p for a prime ``modulus``, or in the integers when
``modulus == 0`` (used for rational presentations, where every map the
catalog needs is integral).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatch, DegreeError, SymmetryViolation

MAX_EXPONENT = 2 ** 16

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class VariableSpec:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree <= 0:
            raise DegreeError(f"variable {self.name} needs positive degree, got {self.degree}")
        if not self.name.isidentifier():
            raise ValueError(f"variable name {self.name!r} is not an identifier")


def make_context(names_and_degrees: Iterable[tuple[str, int]]) -> tuple[VariableSpec, ...]:
    ctx = tuple(VariableSpec(n, d) for n, d in names_and_degrees)
    names = [v.name for v in ctx]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    return ctx


def indexed_context(prefix: str, count: int, degree_of, start: int = 1):
    """Variables ``prefix_i`` for i = start .. start+count-1 with degree ``degree_of(i)``."""
    return make_context((f"{prefix}_{i}", degree_of(i)) for i in range(start, start + count))


def _check_modulus(p: int) -> int:
    if p < 0 or p == 1:
        raise ValueError(f"modulus must be 0 or a prime, got {p}")
    if p > 1 and any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"modulus {p} is not prime")
    return p


class Poly:
    """Immutable sparse polynomial.

    ``terms`` maps exponent tuples to nonzero coefficients.  Iteration order
    is graded-lex descending, so text and JSON output are stable.
    """

    __slots__ = ("modulus", "variables", "_terms")

    def __init__(self, modulus: int, variables: Sequence[VariableSpec],
                 terms: Mapping[Exponents, int] | None = None):
        self.modulus = _check_modulus(modulus)
        self.variables = tuple(variables)
        nvars = len(self.variables)
        clean: dict[Exponents, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ContextMismatch(f"exponent vector {exps} has wrong length for {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if any(e >= MAX_EXPONENT for e in exps):
                raise OverflowError(f"exponent in {exps} exceeds {MAX_EXPONENT - 1}")
            c = self._reduce(c + clean.get(exps, 0))
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self._terms = clean

    @classmethod
    def _raw(cls, modulus, variables, terms):
        # trusted constructor; terms already normalized
        obj = cls.__new__(cls)
        obj.modulus = modulus
        obj.variables = variables
        obj._terms = terms
        return obj

    def _reduce(self, c: int) -> int:
        return c % self.modulus if self.modulus else c

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, modulus, variables):
        return cls(modulus, variables)

    @classmethod
    def constant(cls, modulus, variables, c: int = 1):
        return cls(modulus, variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, modulus, variables, name_or_index):
        variables = tuple(variables)
        idx = _index_of(variables, name_or_index)
        exps = [0] * len(variables)
        exps[idx] = 1
        return cls(modulus, variables, {tuple(exps): 1})

    @classmethod
    def gens(cls, modulus, variables):
        return [cls.var(modulus, variables, i) for i in range(len(variables))]

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def term_degree(self, exps: Exponents) -> int:
        return sum(e * v.degree for e, v in zip(exps, self.variables))

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self._terms.items(),
                      key=lambda kv: (self.term_degree(kv[0]), kv[0]), reverse=True)

    def degrees(self) -> set[int]:
        return {self.term_degree(e) for e in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int | None:
        """Weighted degree of a homogeneous polynomial; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise DegreeError(f"polynomial is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def coefficient(self, exps: Exponents) -> int:
        return self._terms.get(tuple(exps), 0)

    def leading_term(self) -> tuple[Exponents, int]:
        """Largest term in weighted-degree-then-lex order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self._terms, key=lambda e: (self.term_degree(e), e))
        return exps, self._terms[exps]

    def variable_names(self) -> list[str]:
        return [v.name for v in self.variables]

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: "Poly"):
        if self.modulus != other.modulus:
            raise ContextMismatch(f"modulus mismatch: {self.modulus} vs {other.modulus}")
        if self.variables != other.variables:
            raise ContextMismatch(
                f"variable context mismatch: {self.variable_names()} vs {other.variable_names()}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.constant(self.modulus, self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for e, c in other._terms.items():
            s = self._reduce(terms.get(e, 0) + c)
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(self.modulus, self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.modulus, self.variables,
                         {e: self._reduce(-c) for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "Poly":
        terms = {}
        for e, c in self._terms.items():
            s = self._reduce(c * k)
            if s:
                terms[e] = s
        return Poly._raw(self.modulus, self.variables, terms)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        out = {}
        for e, c in terms.items():
            c = self._reduce(c)
            if c:
                if max(e, default=0) >= MAX_EXPONENT:
                    raise OverflowError(f"exponent overflow in {e}")
                out[e] = c
        return Poly._raw(self.modulus, self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = Poly.constant(self.modulus, self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.constant(self.modulus, self.variables, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.modulus == other.modulus and self.variables == other.variables
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.modulus, self.variables, frozenset(self._terms.items())))

    def homogeneous_part(self, degree: int) -> "Poly":
        return Poly._raw(self.modulus, self.variables,
                         {e: c for e, c in self._terms.items() if self.term_degree(e) == degree})

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Evaluate with variable i replaced by ``images[i]`` (all in one target context)."""
        if len(images) != len(self.variables):
            raise ContextMismatch(f"need {len(self.variables)} images, got {len(images)}")
        if not images:
            return self
        target = images[0]
        for im in images[1:]:
            target._check(im)
        if target.modulus != self.modulus:
            raise ContextMismatch("substitution must preserve the modulus")
        power_cache: dict[tuple[int, int], Poly] = {}

        def power(i, k):
            key = (i, k)
            if key not in power_cache:
                power_cache[key] = images[i] ** k
            return power_cache[key]

        result = Poly.zero(self.modulus, target.variables)
        one = Poly.constant(self.modulus, target.variables, 1)
        for exps, c in self._terms.items():
            term = one
            for i, k in enumerate(exps):
                if k:
                    term = term * power(i, k)
            result = result + term.scale(c)
        return result

    def permute(self, perm: Sequence[int]) -> "Poly":
        """Exponent of variable ``perm[i]`` in the result is exponent of variable i here."""
        n = len(self.variables)
        terms = {}
        for e, c in self._terms.items():
            new = [0] * n
            for i, k in enumerate(e):
                new[perm[i]] = k
            terms[tuple(new)] = c
        return Poly._raw(self.modulus, self.variables, terms)

    # -- output -------------------------------------------------------
    def _format_monomial(self, exps: Exponents) -> str:
        parts = []
        for e, v in zip(exps, self.variables):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exps, c in self.sorted_terms():
            mono = self._format_monomial(exps)
            neg = self.modulus == 0 and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    __str__ = to_text

    def __repr__(self):
        mod = f"F_{self.modulus}" if self.modulus else "Z"
        return f"Poly[{mod}]({self.to_text()})"

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "terms": [[list(e), c] for e, c in self.sorted_terms()],
            "variables": [[v.name, v.degree] for v in self.variables],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        ctx = make_context((n, d) for n, d in data["variables"])
        return cls(int(data["modulus"]), ctx, {tuple(e): c for e, c in data["terms"]})


def _index_of(variables: Sequence[VariableSpec], key) -> int:
    if isinstance(key, int):
        if not 0 <= key < len(variables):
            raise KeyError(f"variable index {key} out of range")
        return key
    for i, v in enumerate(variables):
        if v.name == key:
            return i
    raise KeyError(f"unknown variable {key!r}")


def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def poly_pow(a: Poly, k: int) -> Poly:
    return a ** k


# -- elementary symmetric polynomials ----------------------------------------

def elementary_symmetric(polys: Sequence[Poly], k: int) -> Poly:
    """σ_k of a list of polynomials sharing one context, by the product recursion."""
    if not polys:
        raise ValueError("need at least one polynomial")
    p0 = polys[0]
    one = Poly.constant(p0.modulus, p0.variables, 1)
    zero = Poly.zero(p0.modulus, p0.variables)
    # e[j] = σ_j of the prefix processed so far
    e = [one] + [zero] * k
    for x in polys:
        for j in range(k, 0, -1):
            e[j] = e[j] + e[j - 1] * x
    return e[k]


def elementary_in_variables(modulus: int, variables: Sequence[VariableSpec], k: int) -> Poly:
    """σ_k(x_1, ..., x_n) of the context's variables, built directly from subsets."""
    n = len(variables)
    terms = {}
    for subset in combinations(range(n), k):
        exps = [0] * n
        for i in subset:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Poly(modulus, variables, terms)


def is_symmetric(P: Poly) -> bool:
    return symmetry_witness(P) is None


def symmetry_witness(P: Poly) -> tuple[int, int] | None:
    """First adjacent transposition (i, i+1) that changes P, or None."""
    n = len(P.variables)
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = i + 1, i
        if P.permute(perm) != P:
            return (i, i + 1)
    return None


def elementary_context(n: int, degree: int, prefix: str = "e"):
    """Context e_1..e_n with e_i of degree i*degree."""
    return indexed_context(prefix, n, lambda i: i * degree)


def symmetrize_reduce(P: Poly, target: Sequence[VariableSpec] | None = None) -> Poly:
    """Rewrite a symmetric polynomial in the elementary symmetric basis.

    Repeatedly strips the leading monomial ``t^a`` (a_1 >= ... >= a_n) by
    subtracting ``c * e_1^(a_1-a_2) ... e_n^(a_n)``.  Returns a polynomial in
    ``target`` (default e_1..e_n, deg e_i = i * deg t).
    """
    n = len(P.variables)
    if n == 0:
        raise ValueError("need at least one variable")
    tdeg = P.variables[0].degree
    if any(v.degree != tdeg for v in P.variables):
        raise DegreeError("symmetric reduction needs variables of equal degree")
    witness = symmetry_witness(P)
    if witness is not None:
        i, j = witness
        names = P.variable_names()
        raise SymmetryViolation(
            f"polynomial is not symmetric: swapping {names[i]} and {names[j]} changes it",
            witness=(names[i], names[j]))
    if target is None:
        target = elementary_context(n, tdeg)
    target = tuple(target)
    if len(target) != n:
        raise ContextMismatch(f"target context needs {n} variables")
    for i, v in enumerate(target, start=1):
        if v.degree != i * tdeg:
            raise DegreeError(f"target variable {v.name} should have degree {i * tdeg}")

    sigmas = [elementary_in_variables(P.modulus, P.variables, k) for k in range(1, n + 1)]
    cache: dict[tuple[int, int], Poly] = {}

    def sigma_power(i, k):
        if (i, k) not in cache:
            cache[(i, k)] = sigmas[i] ** k
        return cache[(i, k)]

    remaining = P
    result: dict[Exponents, int] = {}
    while remaining:
        lead, c = max(remaining._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        # symmetric + lex-leading forces a weakly decreasing exponent vector
        exps = tuple(lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n))
        if any(e < 0 for e in exps):
            raise SymmetryViolation("leading monomial not weakly decreasing; input not symmetric")
        product = Poly.constant(P.modulus, P.variables, c)
        for i, k in enumerate(exps):
            if k:
                product = product * sigma_power(i, k)
        remaining = remaining - product
        result[exps] = result.get(exps, 0) + c
    return Poly(P.modulus, target, result)


def brute_symmetric(P: Poly) -> bool:
    """Full permutation-group check; only for tiny variable counts."""
    n = len(P.variables)
    return all(P.permute(perm) == P for perm in permutations(range(n)))


def substitute_elementary(Q: Poly, variables: Sequence[VariableSpec]) -> Poly:
    """Evaluate Q(e_1..e_n) at e_i = σ_i of ``variables``."""
    n = len(Q.variables)
    sigmas = [elementary_in_variables(Q.modulus, variables, k) for k in range(1, n + 1)]
    return Q.substitute(sigmas)


def linear_form_sum(polys: Iterable[Poly]) -> Poly:
    return reduce(lambda a, b: a + b, polys)
