"""Macaulay representations, M-sequences and realizable lambda-sequences.

The lambda-sequence of a chordal d-uniform clutter on [n] is governed
by an arithmetic ladder: a fixed alpha-sequence depending only on
(n, d), and a varying part that is exactly the m-vector (generator
counts by largest variable index) of a squarefree strongly stable ideal
generated in degree d.  A candidate lambda is realizable precisely when
the l-sequence recovered from it is an M-sequence whose second entry is
at most d.  This module implements both directions of that translation,
the classical Macaulay growth bound behind "M-sequence", the extremal
profiles attaining the per-index maximum, and the generator-count
identity used to cross-check strongly stable ideals.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from .clutter import (
    Clutter,
    SquarefreeIdeal,
    Vertices,
    clutter_from_masks,
    ideal_from_masks,
    mask_of,
    verts_of,
)
from .polynomials import IntPolynomial, binom

LSequence = tuple[int, ...]


# ----- Macaulay representation and growth bound ------------------------------


def macaulay_representation(a: int, i: int) -> tuple[tuple[int, int], ...]:
    """Greedy binomial expansion of a at index i.

    Returns ((a_i, i), (a_{i-1}, i-1), ...) with a = sum C(a_k, k),
    a_i > a_{i-1} > ... and every a_k >= k >= 1.  The greedy choice is
    the unique such representation.  Requires a >= 1 and i >= 1.
    """
    if a < 1:
        raise ValueError(f"positive integer expected, got {a}")
    if i < 1:
        raise ValueError(f"positive index expected, got {i}")
    rep = []
    rest = a
    idx = i
    while rest > 0:
        # largest top with C(top, idx) <= rest
        top = idx
        while math.comb(top + 1, idx) <= rest:
            top += 1
        rep.append((top, idx))
        rest -= math.comb(top, idx)
        idx -= 1
    return tuple(rep)


def macaulay_bound(a: int, i: int) -> int:
    """a^<i>: shift every term of the representation up by one.

    This is the classical upper bound for the next value of an
    M-sequence after a at position i; 0^<i> = 0.
    """
    if a == 0:
        return 0
    return sum(math.comb(top + 1, idx + 1)
               for top, idx in macaulay_representation(a, i))


def is_M_sequence(seq: Sequence[int]) -> bool:
    """True for l_0 = 1 and l_{i+1} <= l_i^<i> for i = 1, 2, ....

    The step from l_0 to l_1 is unconstrained (any number of variables
    may appear in degree one); all entries must be non-negative.
    """
    ls = list(seq)
    if not ls or ls[0] != 1:
        return False
    if any(not isinstance(x, int) or x < 0 for x in ls):
        return False
    for i in range(1, len(ls) - 1):
        if ls[i + 1] > macaulay_bound(ls[i], i):
            return False
    return True


# ----- the alpha-sequence ----------------------------------------------------


@dataclass(frozen=True, slots=True)
class AlphaSequence:
    """The (n, d) ladder: alpha, its negated partial sums sigma, and p.

    alpha is defined by sum alpha_j s^j = sum_{j=0}^{n-d} C(n, d+j) (s-1)^(j+1),
    a polynomial of degree n-d+1.  sigma_j = -(alpha_0 + ... + alpha_j)
    is non-negative with sigma_{n-d+1} = 0, and p(s) = sum_{j} C(n, d+j) (s-1)^j
    has coefficients (sigma_0, ..., sigma_{n-d}), monic of degree n-d.
    """

    n: int
    d: int
    alpha: tuple[int, ...]
    sigma: tuple[int, ...]

    def partial_sigma(self, j: int) -> int:
        """sigma_j, with sigma_j = 0 beyond the stored range."""
        return self.sigma[j] if 0 <= j < len(self.sigma) else 0


def p_polynomial(n: int, d: int) -> IntPolynomial:
    """p(s) = sum_{j=0}^{n-d} C(n, d+j) (s-1)^j, for n >= d >= 0."""
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    poly = IntPolynomial()
    s_minus_1 = IntPolynomial([-1, 1])
    power = IntPolynomial([1])
    for j in range(n - d + 1):
        poly = poly + power.scale(math.comb(n, d + j))
        power = power * s_minus_1
    return poly


def alpha_sequence(n: int, d: int) -> AlphaSequence:
    """Build the alpha/sigma data for 1 <= d < n.

    Computed from the generating function, which is the authoritative
    definition; see alpha_entry_closed_form for the summation form.
    """
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < n, got d={d}, n={n}")
    gen = p_polynomial(n, d) * IntPolynomial([-1, 1])
    alpha = tuple(gen.coeff(j) for j in range(n - d + 2))
    sigma = []
    acc = 0
    for a in alpha:
        acc += a
        sigma.append(-acc)
    return AlphaSequence(n, d, alpha, tuple(sigma))


def alpha_entry_closed_form(n: int, d: int, k: int) -> int:
    """Direct summation form of alpha_k.

    alpha_k = sum_{j >= max(k, 1)}^{n-d+1} (-1)^(j-k) C(n, d+j-1) C(j, k).
    The lower limit is max(k, 1), not k: the generating function has no
    (s-1)^0 term, so the j = 0 summand must be excluded at k = 0.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return sum(
        (-1) ** (j - k) * binom(n, d + j - 1) * binom(j, k)
        for j in range(max(k, 1), n - d + 2)
    )


# ----- lambda <-> l-sequence -------------------------------------------------


class UnrealizableLambda(ValueError):
    """A candidate lambda-sequence no chordal clutter can produce."""


def lambda_from_lsequence(n: int, d: int, l: Sequence[int]) -> tuple[int, ...]:
    """lambda-sequence from an l-sequence (l_0, ..., l_{n-d}).

    lambda_{n-d-i} = alpha_{n-d-i} + l_i - l_{i+1} for i = 0..n-d-1, and
    lambda_{n-d+1} = 1 - l_0 = 0.  Raises UnrealizableLambda when some
    entry comes out negative, naming the offending index.
    """
    ls = list(l)
    if len(ls) != n - d + 1:
        raise ValueError(
            f"l-sequence must have n - d + 1 = {n - d + 1} entries, got {len(ls)}")
    if ls[0] != 1:
        raise ValueError(f"l_0 must be 1, got {ls[0]}")
    alpha = alpha_sequence(n, d).alpha
    lam = [0] * (n - d + 1)  # lambda_1 .. lambda_{n-d+1}
    for i in range(n - d):
        j = n - d - i  # target index of lambda
        lam[j - 1] = alpha[j] + ls[i] - ls[i + 1]
        if lam[j - 1] < 0:
            raise UnrealizableLambda(
                f"lambda_{j} = {lam[j - 1]} < 0 for the given l-sequence")
    lam[n - d] = 1 - ls[0]
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def lsequence_from_lambda(n: int, d: int, lam: Sequence[int]) -> LSequence:
    """Invert lambda_from_lsequence.

    l_k = sigma_{n-d-k} - (lambda_{n-d-k+1} + ... + lambda_{n-d+1}) for
    k = 0..n-d.  The input may be trimmed; anything longer than n-d
    entries means the clutter would have to be complete, which has no
    l-sequence, so that raises.  A negative l_k raises
    UnrealizableLambda with the offending index.
    """
    lam = list(lam)
    if any(not isinstance(x, int) or x < 0 for x in lam):
        raise ValueError("lambda entries must be non-negative integers")
    while lam and lam[-1] == 0:
        lam.pop()
    if len(lam) > n - d:
        raise UnrealizableLambda(
            f"lambda_{len(lam)} > 0 needs more than n - d = {n - d} deletions "
            "of distinct sizes; only the complete clutter reaches index "
            f"{n - d + 1}, and it is excluded here")
    full = lam + [0] * (n - d + 1 - len(lam))  # lambda_1 .. lambda_{n-d+1}
    sig = alpha_sequence(n, d).sigma
    out = []
    for k in range(n - d + 1):
        j = n - d - k
        lk = sig[j] - sum(full[j:])
        if lk < 0:
            raise UnrealizableLambda(f"l_{k} = {lk} < 0: lambda is not realizable")
        out.append(lk)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class LambdaDiagnosis:
    """Outcome of a realizability check for a candidate lambda."""

    valid: bool
    reason: str | None
    l_sequence: LSequence | None


def validate_lambda(n: int, d: int, lam: Sequence[int]) -> LambdaDiagnosis:
    """Full realizability check with a structured verdict.

    Valid means: the l-sequence exists (no negative entry), is an
    M-sequence, and has l_1 <= d.  Exactly the lambda-sequences of
    chordal d-uniform clutters on [n] other than the complete one pass.
    """
    try:
        ls = lsequence_from_lambda(n, d, lam)
    except (UnrealizableLambda, ValueError) as exc:
        return LambdaDiagnosis(False, str(exc), None)
    if not is_M_sequence(ls):
        return LambdaDiagnosis(
            False, f"recovered l-sequence {ls} violates the Macaulay growth bound", ls)
    if len(ls) > 1 and ls[1] > d:
        return LambdaDiagnosis(
            False, f"l_1 = {ls[1]} exceeds d = {d}: too many degree-(d+1) "
            "generator columns", ls)
    return LambdaDiagnosis(True, None, ls)


def is_valid_lambda(n: int, d: int, lam: Sequence[int]) -> bool:
    return validate_lambda(n, d, lam).valid


# ----- extremal values -------------------------------------------------------


def lambda_max(n: int, d: int, i: int) -> int:
    """Largest lambda_i over chordal clutters on [n] other than the complete one.

    Equals alpha_i + C(n-1-i, d-1); requires 1 <= i <= n - d.
    """
    if not 1 <= i <= n - d:
        raise ValueError(f"index must satisfy 1 <= i <= n - d = {n - d}, got {i}")
    return alpha_sequence(n, d).alpha[i] + binom(n - 1 - i, d - 1)


def extremal_lambda_profile(n: int, d: int, i: int) -> tuple[int, ...]:
    """The unique lambda attaining lambda_max at index i.

    lambda_j = alpha_j for j < i, alpha_i + C(n-1-i, d-1) at j = i, and
    alpha_j - C(n-1-j, d-2) for j > i; trailing zeros trimmed.
    """
    if not 1 <= i <= n - d:
        raise ValueError(f"index must satisfy 1 <= i <= n - d = {n - d}, got {i}")
    alpha = alpha_sequence(n, d).alpha
    lam = []
    for j in range(1, n - d + 1):
        if j < i:
            lam.append(alpha[j])
        elif j == i:
            lam.append(alpha[j] + binom(n - 1 - i, d - 1))
        else:
            lam.append(alpha[j] - binom(n - 1 - j, d - 2))
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


def extremal_clutter(n: int, d: int, i: int) -> Clutter:
    """The clutter of d-subsets not contained in [n-i].

    Its circuit ideal is squarefree strongly stable and its
    lambda-sequence matches extremal_lambda_profile(n, d, i).
    """
    if not 1 <= i <= n - d:
        raise ValueError(f"index must satisfy 1 <= i <= n - d = {n - d}, got {i}")
    cutoff = 1 << (n - i)  # masks below this live inside [n-i]
    masks = [mask_of(c) for c in combinations(range(1, n + 1), d)]
    return clutter_from_masks(n, d, (m for m in masks if m >= cutoff))


def complete_lambda(n: int, d: int) -> tuple[int, ...]:
    """lambda-sequence of the complete d-uniform clutter on [n].

    lambda_i = C(n-1-i, d-2) for i = 1..n-d+1; needs n >= d >= 2.
    """
    if d < 2 or n < d:
        raise ValueError(f"need n >= d >= 2, got n={n}, d={d}")
    lam = [binom(n - 1 - i, d - 2) for i in range(1, n - d + 2)]
    while lam and lam[-1] == 0:
        lam.pop()
    return tuple(lam)


# ----- squarefree strongly stable ideals -------------------------------------


def is_squarefree_strongly_stable(ideal: SquarefreeIdeal) -> bool:
    """Exchange test: swapping any generator vertex down stays in the ideal.

    For every generator u, every j in u and every i < j outside u, the
    set (u - {j}) + {i} must contain some generator.
    """
    gens = ideal.gen_masks
    for g in gens:
        members = verts_of(g)
        for j in members:
            jbit = 1 << (j - 1)
            for i in range(1, j):
                ibit = 1 << (i - 1)
                if g & ibit:
                    continue
                swapped = (g ^ jbit) | ibit
                if not any(h & swapped == h for h in gens):
                    return False
    return True


def m_vector(ideal: SquarefreeIdeal) -> tuple[int, ...]:
    """(m_d, ..., m_n): generator counts by largest vertex.

    Requires an ideal equigenerated in some degree d with at least one
    generator.
    """
    d = ideal.degree
    if d is None:
        raise ValueError("m_vector needs an equigenerated ideal")
    counts = [0] * (ideal.n - d + 1)
    for g in ideal.gen_masks:
        counts[g.bit_length() - d] += 1
    return tuple(counts)


def mu_direct(ideal: SquarefreeIdeal, j: int) -> int:
    """Count minimal generators of the degree-(d+j) truncation directly.

    The truncation is generated by every squarefree monomial of degree
    d + j lying in the ideal; being equigenerated they are all minimal,
    so this is a plain count over (d+j)-subsets of [n].  No stability
    assumption is used.
    """
    d = ideal.degree
    if d is None:
        raise ValueError("mu_direct needs an equigenerated ideal")
    if j < 0:
        raise ValueError(f"non-negative shift expected, got {j}")
    size = d + j
    if size > ideal.n:
        return 0
    gens = ideal.gen_masks
    count = 0
    for c in combinations(range(1, ideal.n + 1), size):
        m = mask_of(c)
        if any(g & m == g for g in gens):
            count += 1
    return count


def mu_via_lemma(ideal: SquarefreeIdeal, j: int) -> int:
    """Truncation generator count via the m-vector identity.

    mu_{d+j} = sum_i C(n-d-i, j) m_{d+i}, valid for squarefree strongly
    stable ideals equigenerated in degree d; refuses other input.
    """
    if j < 0:
        raise ValueError(f"non-negative shift expected, got {j}")
    if not is_squarefree_strongly_stable(ideal):
        raise ValueError("mu_via_lemma needs a squarefree strongly stable ideal")
    d = ideal.degree
    if d is None:
        raise ValueError("mu_via_lemma needs an equigenerated ideal")
    mv = m_vector(ideal)
    n = ideal.n
    return sum(binom(n - d - i, j) * mv[i] for i in range(n - d + 1))


def strongly_stable_closure(n: int, seeds: Iterable[Vertices]) -> SquarefreeIdeal:
    """Smallest squarefree strongly stable ideal containing the seed sets.

    Closes the seed generators under all downward exchanges.  Seeds
    must share one cardinality so the closure stays equigenerated.
    """
    masks = {mask_of(s) for s in seeds}
    if not masks:
        raise ValueError("at least one seed generator is required")
    if len({m.bit_count() for m in masks}) != 1:
        raise ValueError("seed generators must share one cardinality")
    queue = list(masks)
    while queue:
        g = queue.pop()
        for j in verts_of(g):
            jbit = 1 << (j - 1)
            for i in range(1, j):
                ibit = 1 << (i - 1)
                if g & ibit:
                    continue
                swapped = (g ^ jbit) | ibit
                if swapped not in masks:
                    masks.add(swapped)
                    queue.append(swapped)
    return ideal_from_masks(n, masks)


def ideal_with_m_vector(n: int, d: int, counts: Sequence[int]) -> SquarefreeIdeal:
    """A squarefree strongly stable witness with a prescribed m-vector.

    For each largest-vertex level d+i this takes the counts[i] first
    (d-1)-subsets of [d+i-1] in lexicographic order and appends the
    level vertex.  The result is verified: if it fails the strong
    stability or m-vector check (which happens exactly when counts is
    not an M-sequence with second entry <= d), a ValueError is raised
    rather than returning a wrong witness.
    """
    counts = list(counts)
    if len(counts) != n - d + 1:
        raise ValueError(
            f"m-vector must have n - d + 1 = {n - d + 1} entries, got {len(counts)}")
    if any(not isinstance(c, int) or c < 0 for c in counts):
        raise ValueError("m-vector entries must be non-negative integers")
    masks = []
    for i, c in enumerate(counts):
        level = d + i
        capacity = math.comb(level - 1, d - 1)
        if c > capacity:
            raise ValueError(
                f"m_{level} = {c} exceeds the {capacity} available "
                f"{d}-sets with largest vertex {level}")
        picked = 0
        for base in combinations(range(1, level), d - 1):
            if picked == c:
                break
            masks.append(mask_of(base) | (1 << (level - 1)))
            picked += 1
    ideal = ideal_from_masks(n, masks)
    if len(ideal.gen_masks) != sum(counts):
        raise ValueError("greedy selection collapsed generators; no witness built")
    if m_vector(ideal) != tuple(counts):
        raise ValueError("greedy selection missed the requested m-vector")
    if not is_squarefree_strongly_stable(ideal):
        raise ValueError(
            "greedy witness is not strongly stable; the requested m-vector "
            "is not an M-sequence with second entry <= d")
    return ideal
