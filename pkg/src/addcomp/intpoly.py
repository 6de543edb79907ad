"""Exact integer-coefficient polynomial arithmetic and cyclotomic polynomials.

A polynomial is a tuple of coefficients indexed by exponent, with no trailing
zeros stored; the zero polynomial is the empty tuple.  Coefficients are Python
ints, so everything here is exact arbitrary-precision arithmetic.  No floats.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass


class NonMonicDivisorError(ValueError):
    """Division was attempted by a zero or non-monic polynomial."""


def _trim(coeffs):
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial in canonical form (no stored trailing zeros)."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(tuple(self.coeffs)))

    @staticmethod
    def zero() -> IntPolynomial:
        return IntPolynomial(())

    @staticmethod
    def one() -> IntPolynomial:
        return IntPolynomial((1,))

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return IntPolynomial((0,) * exponent + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    def eval_at_one(self) -> int:
        """Sum of coefficients, i.e. the value at z = 1."""
        return sum(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPolynomial(out)

    def divrem(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic divisor: self = q * divisor + r, deg r < deg divisor.

        Restricting to monic divisors keeps the quotient and remainder over the
        integers; every divisor used here (cyclotomics, z^M - 1) is monic.
        """
        if divisor.is_zero():
            raise NonMonicDivisorError("division by the zero polynomial")
        if not divisor.is_monic():
            raise NonMonicDivisorError(
                f"divisor must be monic, got leading coefficient {divisor.coeffs[-1]}"
            )
        dd = divisor.degree
        if self.degree < dd:
            return IntPolynomial(()), self
        rem = list(self.coeffs)
        quot = [0] * (self.degree - dd + 1)
        # Skip the divisor's zero coefficients: cyclotomics of prime-power
        # order are very sparse and this is the hot loop.
        lower = [(i, c) for i, c in enumerate(divisor.coeffs[:-1]) if c]
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + dd]
            if c:
                quot[k] = c
                rem[k + dd] = 0
                for i, d in lower:
                    rem[k + i] -= c * d
        return IntPolynomial(quot), IntPolynomial(rem)

    def divides(self, other: IntPolynomial) -> bool:
        """True iff self divides other exactly (self must be monic, nonzero)."""
        return other.divrem(self)[1].is_zero()

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{k}")
        return " + ".join(parts)


def mul_mod_cyclic(f: IntPolynomial, g: IntPolynomial, period: int) -> IntPolynomial:
    """Product of f and g with exponents reduced by z^period == 1."""
    if period < 1:
        raise ValueError("period must be positive")
    out = [0] * period
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                if b:
                    out[(i + j) % period] += a * b
    return IntPolynomial(out)


def _prime_power_split(n: int) -> tuple[int, int] | None:
    """(p, e) if n = p**e for a prime p and e >= 1, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            m = n
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
        p += 1
    return n, 1


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial: monic, integer, degree phi(n).

    Prime powers p**(s+1) use the closed form 1 + z^(p^s) + ... + z^((p-1)p^s);
    other orders divide z^n - 1 by the cyclotomics of the proper divisors.
    Memoized per process; results are immutable and safe to share.
    """
    if n < 1:
        raise ValueError("cyclotomic order must be a positive integer")
    if n == 1:
        return IntPolynomial((-1, 1))
    split = _prime_power_split(n)
    if split is not None:
        p, _ = split
        step = n // p
        out = [0] * ((p - 1) * step + 1)
        for i in range(p):
            out[i * step] = 1
        return IntPolynomial(out)
    poly = IntPolynomial.monomial(n) - IntPolynomial.one()
    for d in _divisors(n):
        if d == n:
            continue
        poly, rem = poly.divrem(cyclotomic(d))
        assert rem.is_zero()
    return poly
