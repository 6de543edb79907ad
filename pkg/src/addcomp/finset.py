"""Finite sets of nonnegative integers and the structured residue form.

A set A of size m is "structured" when A = {a + i*m^s + k_i*m^(s+1) : 0 <= i < m}
for some offset a > 0, exponent s >= 0 and integer shifts k_i: all elements sit
in one residue class mod m^s and their digits at the m^s place sweep a complete
residue system mod m.  Two independent deciders live here: direct residue
analysis (detect_form) and extraction from cyclotomic divisibility of the
generating polynomial (cyclotomic_form_witness, prime cardinality only).
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass

from .intpoly import IntPolynomial, cyclotomic


class SetParseError(ValueError):
    """Malformed set input (bad token, negative value, or duplicate)."""


@dataclass(frozen=True)
class FiniteSet:
    """Strictly increasing tuple of nonnegative integers."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(self.elements)
        for i, e in enumerate(elems):
            if not isinstance(e, int):
                raise ValueError(f"element {e!r} is not an integer")
            if e < 0:
                raise ValueError(f"element {e} is negative")
            if i and elems[i - 1] >= e:
                raise ValueError("elements must be strictly increasing")
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "_members", frozenset(elems))

    @staticmethod
    def of(values) -> FiniteSet:
        """Build from any iterable; duplicates are rejected, order is free."""
        ordered = sorted(values)
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate element {a}")
        return FiniteSet(tuple(ordered))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, n) -> bool:
        return n in self._members

    def __bool__(self) -> bool:
        return bool(self.elements)

    @property
    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no minimum")
        return self.elements[0]

    @property
    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no maximum")
        return self.elements[-1]

    def counting(self, x: int) -> int:
        """Number of elements <= x."""
        return bisect.bisect_right(self.elements, x)

    def gen_poly(self) -> IntPolynomial:
        """Generating polynomial: sum of z^a over the elements."""
        if not self.elements:
            return IntPolynomial(())
        out = [0] * (self.elements[-1] + 1)
        for e in self.elements:
            out[e] = 1
        return IntPolynomial(out)


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def parse_set(text: str) -> FiniteSet:
    """Parse whitespace/comma separated decimal integers into a FiniteSet.

    Rejects non-integer tokens, negative values and duplicates, naming the
    offending token in the error.
    """
    seen = set()
    values = []
    for token in _TOKEN_SPLIT.split(text.strip()):
        if not token:
            continue
        try:
            value = int(token)
        except ValueError:
            raise SetParseError(f"not an integer: {token!r}") from None
        if value < 0:
            raise SetParseError(f"negative value not allowed: {token!r}")
        if value in seen:
            raise SetParseError(f"duplicate value: {token!r}")
        seen.add(value)
        values.append(value)
    return FiniteSet(tuple(sorted(values)))


@dataclass(frozen=True)
class FormWitness:
    """Parameters (m, s, a, k_0..k_{m-1}) realizing a structured set.

    Element i is a + i*m^s + k_i*m^(s+1).  The offset is canonicalized to
    1 <= a <= m^(s+1); shifts by multiples of m^(s+1) are absorbed into k.
    """

    m: int
    s: int
    a: int
    k: tuple[int, ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("cardinality m must be positive")
        if self.s < 0:
            raise ValueError("exponent s must be nonnegative")
        if len(self.k) != self.m:
            raise ValueError("need exactly one shift k_i per index")
        if not 1 <= self.a <= self.m ** (self.s + 1):
            raise ValueError("offset a must lie in [1, m^(s+1)]")
        object.__setattr__(self, "k", tuple(self.k))

    def to_json_dict(self) -> dict:
        return {"m": self.m, "s": self.s, "a": self.a, "k": list(self.k)}


def realize_form(witness: FormWitness) -> FiniteSet:
    """Evaluate a witness to the set it describes.

    Rejects realizations with a negative value or a collision.  Distinct
    indices always land in distinct residues mod m^(s+1), so collisions can
    only come from an invalid hand-built witness.
    """
    base = witness.m ** witness.s
    modulus = base * witness.m
    values = [witness.a + i * base + witness.k[i] * modulus for i in range(witness.m)]
    for v in values:
        if v < 0:
            raise ValueError(f"realization contains negative value {v}")
    if len(set(values)) != witness.m:
        raise ValueError("realization has colliding values")
    return FiniteSet(tuple(sorted(values)))


def detect_form(a_set: FiniteSet, m: int) -> FormWitness | None:
    """Decide by residue analysis whether a_set is structured with parameter m.

    For each exponent s with m^s <= diameter (plus s = 0 always), reduce the
    elements mod m^(s+1): accept iff they share one residue rho mod m^s and
    the digits (r - rho) / m^s are pairwise distinct mod m.  Returns a witness
    for the smallest qualifying s, canonical offset a = rho (or m^(s+1) when
    rho = 0), or None.  Any two elements of a structured set differ by at
    least m^s, which justifies the diameter bound on the search.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if len(a_set) != m:
        raise ValueError(f"set has {len(a_set)} elements, expected m = {m}")
    elems = a_set.elements
    diameter = elems[-1] - elems[0]
    s = 0
    while s == 0 or m ** s <= diameter:
        base = m ** s
        modulus = base * m
        residues = [e % modulus for e in elems]
        shared = {r % base for r in residues}
        if len(shared) == 1:
            rho = shared.pop()
            digits = {(r - rho) // base % m for r in residues}
            if len(digits) == m:
                offset = rho if rho >= 1 else modulus
                shifts = [0] * m
                for e in elems:
                    i = ((e - offset) % modulus) // base
                    shifts[i] = (e - offset - i * base) // modulus
                return FormWitness(m=m, s=s, a=offset, k=tuple(shifts))
        if m == 1:
            break
        s += 1
    return None


def is_prime(n: int) -> bool:
    """Trial division; inputs here are tiny cardinalities."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def cyclotomic_form_witness(a_set: FiniteSet) -> tuple[int, FormWitness] | None:
    """Decide structure via cyclotomic divisibility, for prime cardinality.

    Finds the least s >= 0 with p^s <= max(A) such that the cyclotomic
    polynomial of order p^(s+1) divides the generating polynomial, then
    extracts a witness: sort the residues mod p^(s+1), locate a gap of at
    least p^s (one exists by pigeonhole), anchor the offset at the residue
    after the gap, and check that the reduced offsets are exactly
    {0, p^s, ..., (p-1)p^s}, the exponent support of that cyclotomic.
    Returns (s, witness) or None; non-prime cardinality is rejected.
    """
    p = len(a_set)
    if not is_prime(p):
        raise ValueError(f"cardinality {p} is not prime")
    f = a_set.gen_poly()
    top = a_set.max
    s = 0
    while p ** s <= top:
        base = p ** s
        modulus = base * p
        phi = cyclotomic(modulus)
        if phi.degree <= f.degree and phi.divides(f):
            return s, _extract_witness(a_set, p, s)
        s += 1
    return None


def _extract_witness(a_set: FiniteSet, p: int, s: int) -> FormWitness:
    base = p ** s
    modulus = base * p
    elems = a_set.elements
    residues = sorted(e % modulus for e in elems)
    residues.append(modulus + residues[0])
    gap = next(j for j in range(p) if residues[j + 1] - residues[j] >= base)
    anchor = residues[gap + 1]
    reduced = [(e - anchor) % modulus for e in elems]
    support = [i for i, c in enumerate(cyclotomic(modulus).coeffs) if c]
    assert sorted(reduced) == support, "divisibility held but extraction failed"
    offset = anchor % modulus
    if offset < 1:
        offset = modulus
    shifts = [0] * p
    for e, t in zip(elems, reduced):
        i = t // base
        shifts[i] = (e - offset - i * base) // modulus
    return FormWitness(m=p, s=s, a=offset, k=tuple(shifts))
