"""Brute-force ground truth: representation counts, deficit traces,
divergence probing and eventual-periodicity detection.

Everything here is exact integer arithmetic over explicit horizons; no
asymptotic claim is ever made, only window-by-window observations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .complement import PeriodicSet
from .finset import FiniteSet

Complement = Union[FiniteSet, PeriodicSet]


def representation(a_set: FiniteSet, b_set: Complement, n: int) -> int:
    """Number of ways n = a + b with a in A, b in B."""
    count = 0
    for a in a_set.elements:
        if a > n:
            break
        if (n - a) in b_set:
            count += 1
    return count


@dataclass(frozen=True)
class RepProfile:
    """Representation counts over [0, N] with stabilization thresholds.

    n0: least t with R(n) >= 1 for all n in [t, N], n1: likewise with
    R(n) == 1.  Either is None when no such t exists with the stable tail
    spanning at least one full window of the base set (t <= N - max(A));
    a shorter tail is no evidence of stabilization.  Horizon-relative.
    """

    values: tuple[int, ...]
    n0: int | None
    n1: int | None


def rep_profile(a_set: FiniteSet, b_set: Complement, n_max: int) -> RepProfile:
    if not a_set:
        raise ValueError("base set must be nonempty")
    if n_max < a_set.max:
        raise ValueError("horizon must reach max(A)")
    values = tuple(representation(a_set, b_set, n) for n in range(n_max + 1))
    latest = n_max - a_set.max

    def threshold(ok) -> int | None:
        if not ok(values[n_max]):
            return None
        t = n_max
        while t > 0 and ok(values[t - 1]):
            t -= 1
        return t if t <= latest else None

    return RepProfile(
        values=values,
        n0=threshold(lambda v: v >= 1),
        n1=threshold(lambda v: v == 1),
    )


@dataclass(frozen=True)
class DeficitTrace:
    """Rows (x, A(x), B(x), D(x)) with D(x) = A(x)*B(x) - x, for x = 0..N."""

    rows: tuple[tuple[int, int, int, int], ...]

    def deficits(self) -> tuple[int, ...]:
        return tuple(row[3] for row in self.rows)

    def to_csv(self) -> str:
        lines = ["x,A,B,D"]
        lines.extend(f"{x},{a},{b},{d}" for x, a, b, d in self.rows)
        return "\n".join(lines) + "\n"


def deficit_trace(a_set: FiniteSet, b_set: Complement, n_max: int) -> DeficitTrace:
    rows = []
    a_count = 0
    b_count = 0
    for x in range(n_max + 1):
        if x in a_set:
            a_count += 1
        if x in b_set:
            b_count += 1
        rows.append((x, a_count, b_count, a_count * b_count - x))
    return DeficitTrace(tuple(rows))


@dataclass(frozen=True)
class DivergenceReport:
    """Minima of D over windows [X, 2X]; the verdict never claims a limit,
    only whether the observed window minima strictly increase."""

    windows: tuple[tuple[int, int], ...]
    minima: tuple[int, ...]
    verdict: str  # "consistent-with-divergence" | "bounded"


def divergence_probe(trace: DeficitTrace, window_starts) -> DivergenceReport:
    top = trace.rows[-1][0]
    windows = []
    minima = []
    for start in window_starts:
        end = 2 * start
        if start < 0 or start > end or start > top:
            raise ValueError(f"empty window [{start}, {end}] for trace up to {top}")
        end = min(end, top)
        windows.append((start, end))
        minima.append(min(row[3] for row in trace.rows[start : end + 1]))
    increasing = all(a < b for a, b in zip(minima, minima[1:]))
    verdict = "consistent-with-divergence" if increasing and len(minima) > 1 else "bounded"
    return DivergenceReport(tuple(windows), tuple(minima), verdict)


def detect_periodicity(indicator) -> PeriodicSet | None:
    """Smallest eventual period of a 0/1 sequence, with shortest preperiod.

    Tries periods M = 1 .. len/4; for each, the minimal threshold L is one
    past the last index where bit(n) != bit(n + M).  A candidate only counts
    if the periodic tail is observed over at least two further full periods
    (L <= len - 3M); without that guard any sequence would trivially "fit"
    a period at its very end.  Returns the decomposition as a PeriodicSet
    (preperiod members below L, then residues mod M), or None.
    """
    bits = [1 if b else 0 for b in indicator]
    length = len(bits)
    for period in range(1, length // 4 + 1):
        threshold = 0
        for i in range(length - period - 1, -1, -1):
            if bits[i] != bits[i + period]:
                threshold = i + 1
                break
        if threshold > length - 3 * period:
            continue
        pre = [n for n in range(threshold) if bits[n]]
        residues = []
        for r in range(period):
            first = threshold + (r - threshold) % period
            if bits[first]:
                residues.append(r)
        return PeriodicSet(
            preperiod=FiniteSet(tuple(pre)),
            threshold=threshold,
            period=period,
            residues=tuple(sorted(residues)),
        )
    return None
