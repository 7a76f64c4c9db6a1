"""f-vectors, h-vectors and Betti sequences of chordal clutters.

For a chordal d-uniform clutter the multiset of neighborhood sizes
collected by any complete simplicial order determines the face numbers
of the clique complex, hence the h-vector of its Stanley-Reisner
quotient, hence (the resolution being d-linear) the total Betti numbers
of the circuit ideal.  This module walks that chain with exact integer
polynomial arithmetic.

Conventions.  An f-vector is the coefficient tuple of the f-polynomial
f(t) = sum f_{i-1} t^i, so it reads (f_-1, f_0, ..., f_{delta-1}) with
f_-1 = 1 counting the empty face and delta = dim + 1.  An h-vector has
exactly delta + 1 entries h_0..h_delta and may contain negative entries
(clique complexes of chordal clutters are generally not Cohen-Macaulay).
A Betti sequence lists (beta_0, ..., beta_p) with every entry positive;
its length fixes the projective dimension p.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from itertools import combinations
from math import comb

from .clutter import Clutter, verts_of
from .guards import F_VECTOR_DEFAULT, check_cap
from .polynomials import IntPolynomial, binom, one_minus_t, one_plus_t

FVector = tuple[int, ...]
HVector = tuple[int, ...]
BettiSequence = tuple[int, ...]


def _as_counts(multiset: Counter | Iterable[int]) -> Counter:
    counts = Counter(multiset)
    for size, mult in counts.items():
        if not isinstance(size, int) or size < 1:
            raise ValueError(f"neighborhood sizes must be positive ints, got {size!r}")
        if not isinstance(mult, int) or mult < 0:
            raise ValueError(f"multiplicities must be non-negative ints, got {mult!r}")
    return +counts


def delta_from_multiset(d: int, multiset: Counter | Iterable[int]) -> int:
    """delta = dim + 1 of the clique complex: max size + d - 1.

    The empty multiset (empty clutter) degenerates to delta = d - 1.
    """
    counts = _as_counts(multiset)
    top = max(counts) if counts else 0
    return top + d - 1


# ----- f ---------------------------------------------------------------------


def f_polynomial_from_multiset(n: int, d: int,
                               multiset: Counter | Iterable[int]) -> IntPolynomial:
    """f-polynomial of the clique complex from a simplicial multiset.

    f(t) = sum_{i<d} C(n,i) t^i  +  t^(d-1) * sum_i M_i t^i, where
    M_i sums C(size, i) over the multiset.  The equivalent closed form
    through (1+t)^size - 1 is evaluated as well and both expansions are
    required to agree, as a cheap internal cross-check.
    """
    counts = _as_counts(multiset)
    if any(size > n - d + 1 for size in counts):
        raise ValueError("a neighborhood size exceeds n - d + 1")
    base = IntPolynomial([binom(n, i) for i in range(d)])
    top = max(counts) if counts else 0
    m_terms = [0] + [
        sum(mult * binom(size, i) for size, mult in counts.items())
        for i in range(1, top + 1)
    ]
    poly = base + IntPolynomial(m_terms).shift(d - 1)
    alt = base
    for size, mult in counts.items():
        bump = (one_plus_t(size) - IntPolynomial([1])).scale(mult)
        alt = alt + bump.shift(d - 1)
    if poly != alt:
        raise AssertionError("the two f-polynomial expansions disagree")
    return poly


def f_vector_from_multiset(n: int, d: int,
                           multiset: Counter | Iterable[int]) -> FVector:
    """Coefficients of the f-polynomial, i.e. (f_-1, ..., f_{delta-1})."""
    return f_polynomial_from_multiset(n, d, multiset).coeffs


def f_vector_direct(clutter: Clutter, max_n: int | None = None) -> FVector:
    """Brute-force f-vector by growing cliques one vertex at a time.

    Independent of the multiset formula: only the clique definition is
    used.  Guarded by the oracle cap since the face count is
    exponential in the worst case.
    """
    check_cap("f_vector_direct", clutter.n, F_VECTOR_DEFAULT, max_n)
    n, d = clutter.n, clutter.d
    circuits = clutter.mask_set()
    counts = [comb(n, i) for i in range(d)]
    if d - 1 > n:
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)
    if d == 1:
        level = [0]
    else:
        level = [sum(1 << (v - 1) for v in c)
                 for c in combinations(range(1, n + 1), d - 1)]
    while level:
        grown = []
        for vmask in level:
            top = vmask.bit_length()
            members = verts_of(vmask)
            for v in range(top + 1, n + 1):
                vbit = 1 << (v - 1)
                ok = True
                for sub in combinations(members, d - 1):
                    m = vbit
                    for u in sub:
                        m |= 1 << (u - 1)
                    if m not in circuits:
                        ok = False
                        break
                if ok:
                    grown.append(vmask | vbit)
        if grown:
            counts.append(len(grown))
        level = grown
    return tuple(counts)


# ----- h ---------------------------------------------------------------------


def h_from_f(f: FVector) -> HVector:
    """h-vector from an f-vector; delta is the f-vector's top index."""
    if not f or f[0] != 1:
        raise ValueError("an f-vector starts with f_-1 = 1")
    delta = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * binom(delta - i, k - i) * f[i] for i in range(k + 1))
        for k in range(delta + 1)
    )


def f_from_h(h: HVector, delta: int) -> FVector:
    """Inverse transform; h may be given trimmed, missing entries are 0."""
    if len(h) > delta + 1:
        raise ValueError(f"h-vector longer than delta + 1 = {delta + 1}")
    hs = list(h) + [0] * (delta + 1 - len(h))
    return tuple(
        sum(binom(delta - i, k - i) * hs[i] for i in range(k + 1))
        for k in range(delta + 1)
    )


def h_polynomial_from_multiset(n: int, d: int,
                               multiset: Counter | Iterable[int]) -> IntPolynomial:
    """h-polynomial straight from the multiset.

    h(t) = sum_{i<d} C(n,i) t^i (1-t)^(top+d-1-i)
         + t^(d-1) * sum_k ((1-t)^(top-size_k) - (1-t)^top),
    where top is the largest neighborhood size (0 when empty).
    """
    counts = _as_counts(multiset)
    if any(size > n - d + 1 for size in counts):
        raise ValueError("a neighborhood size exceeds n - d + 1")
    top = max(counts) if counts else 0
    poly = IntPolynomial()
    for i in range(d):
        poly = poly + one_minus_t(top + d - 1 - i).scale(binom(n, i)).shift(i)
    tail = IntPolynomial()
    for size, mult in counts.items():
        tail = tail + (one_minus_t(top - size) - one_minus_t(top)).scale(mult)
    return poly + tail.shift(d - 1)


def h_vector_from_multiset(n: int, d: int,
                           multiset: Counter | Iterable[int]) -> HVector:
    """h-vector padded to its full delta + 1 entries."""
    delta = delta_from_multiset(d, multiset)
    coeffs = h_polynomial_from_multiset(n, d, multiset).coeffs
    if len(coeffs) > delta + 1:
        raise AssertionError("h-polynomial degree exceeds delta")
    return tuple(coeffs) + (0,) * (delta + 1 - len(coeffs))


# ----- Betti -----------------------------------------------------------------


def _betti_from_expansion(poly: IntPolynomial, d: int) -> BettiSequence:
    """Read (beta_i) off 1 + sum (-1)^(i+1) beta_i t^(i+d).

    Enforces the d-linear shape: constant term 1, nothing in degrees
    1..d-1, then strictly alternating signs with no interior zeros.
    """
    coeffs = list(poly.coeffs)
    if not coeffs or coeffs[0] != 1:
        raise ValueError("expansion does not start at 1: not a d-linear shape")
    for k in range(1, min(d, len(coeffs))):
        if coeffs[k] != 0:
            raise ValueError(
                f"nonzero coefficient in degree {k} < d: not a d-linear shape")
    betti = []
    tail = coeffs[d:]
    for i, c in enumerate(tail):
        if c == 0:
            if any(tail[i:]):
                raise ValueError(
                    f"interior zero at homological degree {i}: "
                    "minimal resolutions have no gaps")
            break
        if (c > 0) != (i % 2 == 1):
            raise ValueError(
                f"sign violation at homological degree {i}: not a d-linear shape")
        betti.append(abs(c))
    return tuple(betti)


def betti_from_h(n: int, d: int, h: HVector, delta: int) -> BettiSequence:
    """Total Betti numbers of the circuit ideal from its h-vector.

    Expands (1-t)^(n-delta) * h(t) and reads the alternating tail.
    Raises ValueError when the expansion is not d-linear in shape,
    which is how a non-linear-resolution input announces itself.
    """
    if len(h) > delta + 1:
        raise ValueError(f"h-vector longer than delta + 1 = {delta + 1}")
    if delta > n:
        raise ValueError(f"delta = {delta} cannot exceed n = {n}")
    expansion = one_minus_t(n - delta) * IntPolynomial(h)
    return _betti_from_expansion(expansion, d)


def betti_from_multiset(n: int, d: int,
                        multiset: Counter | Iterable[int]) -> BettiSequence:
    """Total Betti numbers straight from the multiset.

    1 + sum (-1)^(i+1) beta_i t^(i+d)
      = sum_{i<d} C(n,i) t^i (1-t)^(n-i)
      + t^(d-1) * sum_k ((1-t)^(n-size_k-d+1) - (1-t)^(n-d+1)).

    Raises ValueError for the complete clutter (zero circuit ideal has
    no Betti sequence) and for multisets whose circuit count exceeds
    C(n, d).
    """
    counts = _as_counts(multiset)
    if any(size > n - d + 1 for size in counts):
        raise ValueError("a neighborhood size exceeds n - d + 1")
    r = sum(size * mult for size, mult in counts.items())
    total = comb(n, d) if n >= d else 0
    if r > total:
        raise ValueError(f"multiset accounts for {r} circuits, only {total} exist")
    if r == total:
        raise ValueError(
            "complete clutter: the circuit ideal is zero and has no Betti sequence")
    poly = IntPolynomial()
    for i in range(d):
        poly = poly + one_minus_t(n - i).scale(binom(n, i)).shift(i)
    tail = IntPolynomial()
    for size, mult in counts.items():
        diff = one_minus_t(n - size - d + 1) - one_minus_t(n - d + 1)
        tail = tail + diff.scale(mult)
    return _betti_from_expansion(poly + tail.shift(d - 1), d)


def multiplicity(clutter: Clutter) -> int:
    """Circuit count = number of (d-1)-dimensional cliques.

    For a chordal clutter this equals the multiplicity invariant of the
    circuit ideal; the count itself is well-defined for any clutter.
    """
    return clutter.num_circuits


def projective_dimension(betti: BettiSequence) -> int:
    """Index of the last Betti number (the sequence is gap-free)."""
    if not betti:
        raise ValueError("the zero ideal has no projective dimension here")
    return len(betti) - 1
