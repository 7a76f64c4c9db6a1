"""Exact univariate polynomials with integer coefficients.

Every invariant in this package (f-polynomials, h-polynomials, Betti
generating functions, the alpha-sequence) is a polynomial identity over
the integers, so coefficients are plain Python ints and no floating
point ever enters.  Polynomials are kept in canonical form: a tuple of
coefficients, constant term first, with no trailing zeros.
"""

from __future__ import annotations

import math
from collections.abc import Iterable


def binom(n: int, k: int) -> int:
    """Binomial coefficient extended by zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


class IntPolynomial:
    """Immutable integer polynomial, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    # ----- basic queries -------------------------------------------------

    @property
    def degree(self) -> int | float:
        """Degree, with -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def coeff(self, k: int) -> int:
        """Coefficient of t**k (zero beyond the stored degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # ----- arithmetic ----------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial([k * c for c in self.coeffs])

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    # ----- comparison / display ------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "IntPolynomial(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{k}")
        return f"IntPolynomial({' + '.join(parts)})"


ZERO = IntPolynomial()
ONE = IntPolynomial([1])


def constant(c: int) -> IntPolynomial:
    return IntPolynomial([c])


def monomial(c: int, k: int) -> IntPolynomial:
    """The polynomial c * t**k."""
    return IntPolynomial([0] * k + [c])


def binomial_power(a: int, sign: int, m: int) -> IntPolynomial:
    """Expand (a + sign*t)**m directly from binomial coefficients."""
    if m < 0:
        raise ValueError(f"non-negative exponent expected, got {m}")
    return IntPolynomial(
        [binom(m, k) * a ** (m - k) * sign**k for k in range(m + 1)]
    )


def one_minus_t(m: int) -> IntPolynomial:
    """(1 - t)**m."""
    return binomial_power(1, -1, m)


def one_plus_t(m: int) -> IntPolynomial:
    """(1 + t)**m."""
    return binomial_power(1, 1, m)
