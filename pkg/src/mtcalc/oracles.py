"""Independent brute-force oracles for the derived values.

Every function here recomputes something the main modules produce, by a
different and deliberately naive route: explicit enumeration instead of
generating functions, left-to-right search instead of constructive
growth, direct expansion instead of closed forms.
"""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .poly import Poly, indexed_context, substitute_elementary


def partition_counts(N: int) -> list[int]:
    """Number of integer partitions of 0..N, by listing them."""
    counts = [0] * (N + 1)

    def rec(remaining, largest, total):
        counts[total] += 1
        for part in range(min(remaining, largest), 0, -1):
            rec(remaining - part, part, total + part)

    rec(N, N, 0)
    return counts


def multiset_counts(degrees: Sequence[int], N: int) -> list[int]:
    """Count commutative monomials in labelled generators of the given degrees.

    Monomials are enumerated one at a time as exponent vectors.
    """
    counts = [0] * (N + 1)
    order = sorted(range(len(degrees)), key=lambda i: degrees[i])

    def rec(pos, total):
        # generators are visited by increasing degree, so once one no longer
        # fits every later exponent is zero and the monomial is complete
        if pos == len(order) or total + degrees[order[pos]] > N:
            counts[total] += 1
            return
        d = degrees[order[pos]]
        k = 0
        while total + k * d <= N:
            rec(pos + 1, total + k * d)
            k += 1

    rec(0, 0)
    return counts


def exterior_counts(even: Sequence[int], odd: Sequence[int], N: int) -> list[int]:
    """Graded-commutative monomials over Q: odd generators appear at most once."""
    counts = [0] * (N + 1)
    base = multiset_counts(even, N)
    for r in range(len(odd) + 1):
        for subset in combinations(odd, r):
            s = sum(subset)
            for k in range(0, N - s + 1):
                counts[k + s] += base[k]
    return counts


def brute_admissible_words(generator_degree: int, N: int) -> list[tuple[int, ...]]:
    """Nonempty admissible words of positive excess with degree <= N.

    Searches left to right; the only pruning is the budget for the tail,
    which positive excess bounds by i_1 - |y| - 1.
    """
    found = []
    budget = N - generator_degree

    def extend(word, remaining):
        last = word[-1]
        for i in range((last + 1) // 2, remaining + 1):
            candidate = word + (i,)
            found.append(candidate)
            extend(candidate, remaining - i)

    for first in range(1, budget + 1):
        found.append((first,))
        tail = min(budget - first, first - generator_degree - 1)
        if tail > 0:
            extend((first,), tail)

    def admissible(I):
        return all(I[j] <= 2 * I[j + 1] for j in range(len(I) - 1))

    def excess(I):
        return I[0] - sum(I[1:]) - generator_degree

    return sorted(w for w in found if admissible(w) and excess(w) > 0 and min(w) >= 1)


def brute_q_homology_dims(generator_degrees: Sequence[int], N: int) -> list[int]:
    """dim H_d(QY; F2) for d <= N by listing monomials in Q^I y words."""
    word_degrees = []
    for g in generator_degrees:
        word_degrees.append(g)
        word_degrees.extend(g + sum(w) for w in brute_admissible_words(g, N))
    return multiset_counts([d for d in word_degrees if d <= N], N)


def brute_q0s0_dims(N: int) -> list[int]:
    return multiset_counts([sum(w) for w in brute_admissible_words(0, N)], N)


def sigma_by_subsets(forms: Sequence[Poly], k: int) -> Poly:
    """σ_k as an explicit sum over k-subsets."""
    total = Poly.zero(forms[0].modulus, forms[0].variables)
    for subset in combinations(forms, k):
        term = Poly.constant(forms[0].modulus, forms[0].variables, 1)
        for f in subset:
            term = term * f
        total = total + term
    return total


def j_forms(n: int) -> list[Poly]:
    """The 2n+1 formal mod-2 roots t + t_i (i <= 2n) and t, with t = t_1 + ... + t_2n, over F2."""
    ctx = indexed_context("t", 2 * n, lambda i: 1)
    ts = Poly.gens(2, ctx)
    s = ts[0]
    for t in ts[1:]:
        s = s + t
    return [t + s for t in ts] + [s]


def j_image_by_expansion(n: int, k: int) -> Poly:
    """Bj^*(w_k) expanded in the roots t_1..t_2n."""
    return sigma_by_subsets(j_forms(n), k)


def resubstitute(w_poly: Poly, n_roots: int) -> Poly:
    """Evaluate a polynomial in w_1..w_r at w_i = σ_i(t_1..t_n_roots)."""
    ctx = indexed_context("t", n_roots, lambda i: w_poly.variables[0].degree)
    return substitute_elementary(w_poly, ctx)
