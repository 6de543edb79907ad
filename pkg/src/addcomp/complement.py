"""Complement constructions: eventually periodic sets and explicit families.

A PeriodicSet is an eventually periodic subset of the nonnegative integers:
explicit members below a threshold, then a residue pattern mod a period.
The constructions here are the canonical bounded-deficit complement for a
structured set, the block pair family that pairs an unstructured set of any
composite size with an exact periodic complement, and a greedy baseline
complement for arbitrary sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finset import FiniteSet, FormWitness


@dataclass(frozen=True)
class PeriodicSet:
    """Members below `threshold` are listed in `preperiod`; from `threshold`
    on, n is a member iff n mod period is in `residues`."""

    preperiod: FiniteSet
    threshold: int
    period: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.threshold < 0:
            raise ValueError("threshold must be nonnegative")
        if self.period < 1:
            raise ValueError("period must be positive")
        res = tuple(self.residues)
        for i, r in enumerate(res):
            if not 0 <= r < self.period:
                raise ValueError(f"residue {r} outside [0, {self.period})")
            if i and res[i - 1] >= r:
                raise ValueError("residues must be strictly increasing")
        if self.preperiod and self.preperiod.max >= self.threshold:
            raise ValueError("preperiod members must lie below the threshold")
        object.__setattr__(self, "residues", res)
        object.__setattr__(self, "_residue_set", frozenset(res))

    def __contains__(self, n) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return n in self.preperiod
        return n % self.period in self._residue_set

    def counting(self, x: int) -> int:
        """Number of members <= x, by exact arithmetic on residue classes."""
        if x < 0:
            return 0
        if x < self.threshold:
            return self.preperiod.counting(x)
        total = len(self.preperiod)
        for r in self.residues:
            first = self.threshold + (r - self.threshold) % self.period
            if first <= x:
                total += (x - first) // self.period + 1
        return total

    def indicator(self, length: int) -> list[int]:
        return [1 if n in self else 0 for n in range(length)]

    def to_json_dict(self) -> dict:
        return {
            "preperiod": list(self.preperiod.elements),
            "threshold": self.threshold,
            "period": self.period,
            "residues": list(self.residues),
        }

    @staticmethod
    def from_json_dict(data: dict) -> PeriodicSet:
        try:
            return PeriodicSet(
                preperiod=FiniteSet.of(data["preperiod"]),
                threshold=data["threshold"],
                period=data["period"],
                residues=tuple(sorted(data["residues"])),
            )
        except KeyError as missing:
            raise ValueError(f"periodic set JSON lacks key {missing}") from None


def canonical_complement(witness: FormWitness) -> PeriodicSet:
    """The periodic complement {n : n mod m^(s+1) < m^s} for a structured set.

    Each n beyond a + (max k_i + 1) * m^(s+1) has exactly one representation:
    among the candidate differences n - a - i*m^s, exactly one index i lands
    in the residue window [0, m^s) mod m^(s+1).  The harness verifies this by
    brute force rather than assuming it.
    """
    base = witness.m ** witness.s
    return PeriodicSet(
        preperiod=FiniteSet(),
        threshold=0,
        period=base * witness.m,
        residues=tuple(range(base)),
    )


def block_complement_pair(d1: int, d2: int) -> tuple[FiniteSet, PeriodicSet]:
    """Unstructured set of size d1*d2 together with an exact periodic complement.

    A is d2 blocks of d1 consecutive integers spaced d1*d2 apart; B takes the
    residues {0, d1, ..., (d2-1)*d1} mod d1*d2^2.  Every nonnegative n splits
    uniquely as k*d1*d2^2 + u*d1 + l*d1*d2 + v with 0 <= u,l < d2 and
    0 <= v < d1, so each n has exactly one representation; and A contains
    consecutive integers while spanning several classes mod d1*d2, so it
    cannot be structured with parameter d1*d2.  Both claims are checked by
    brute force in the tests, not assumed.
    """
    if d1 <= 1:
        raise ValueError("d1 must exceed 1")
    if d2 <= 1:
        raise ValueError("d2 must exceed 1")
    n = d1 * d2
    a_set = FiniteSet.of(u + v * n for u in range(d1) for v in range(d2))
    b_set = PeriodicSet(
        preperiod=FiniteSet(),
        threshold=0,
        period=d1 * d2 * d2,
        residues=tuple(w * d1 for w in range(d2)),
    )
    return a_set, b_set


def greedy_complement(a_set: FiniteSet, n_max: int) -> FiniteSet:
    """Deterministic covering baseline: scan n upward from min(A); whenever n
    has no representation yet, adjoin b = n - min(A), the largest new shift
    that covers n (it also covers n + (a - min(A)) for every larger a, which
    is what lets the greedy reuse its picks).  Covers all of [min(A), n_max].
    """
    if not a_set:
        raise ValueError("base set must be nonempty")
    lo = a_set.min
    covered = bytearray(n_max + 1)
    chosen = []
    for n in range(lo, n_max + 1):
        if not covered[n]:
            b = n - lo
            chosen.append(b)
            for a in a_set.elements:
                t = b + a
                if t > n_max:
                    break
                covered[t] = 1
    return FiniteSet(tuple(chosen))
