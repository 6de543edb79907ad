"""Exact periodic complements as cyclic tilings, and identity verification.

A cyclic tiling is a set of translates T with A + T covering every residue
of Z_M exactly once; it corresponds to an exact periodic complement (every
large n represented exactly once).  The search is a deterministic
backtracking over residues.  periodic_identity_check verifies, with exact
polynomial arithmetic, the two identities every exact periodic complement
must satisfy: the cleared-denominator product identity and the counting
identity |A| * |T| = M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complement import PeriodicSet
from .finset import FiniteSet
from .harness import representation
from .intpoly import IntPolynomial


@dataclass(frozen=True)
class CyclicTiling:
    """Residues of A mod M together with translates T, A + T = Z_M exactly."""

    modulus: int
    set_residues: tuple[int, ...]
    translates: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        for r in tuple(self.set_residues) + tuple(self.translates):
            if not 0 <= r < self.modulus:
                raise ValueError(f"residue {r} outside [0, {self.modulus})")
        object.__setattr__(self, "set_residues", tuple(sorted(self.set_residues)))
        object.__setattr__(self, "translates", tuple(sorted(self.translates)))

    def is_exact_cover(self) -> bool:
        """Direct enumeration: every residue hit exactly once."""
        hits = [0] * self.modulus
        for a in self.set_residues:
            for t in self.translates:
                hits[(a + t) % self.modulus] += 1
        return all(h == 1 for h in hits)

    def to_json_dict(self) -> dict:
        return {
            "M": self.modulus,
            "A_residues": list(self.set_residues),
            "T": list(self.translates),
        }


def _canonical_translates(translates, lowest_residue: int, modulus: int) -> tuple[int, ...]:
    # Rotations of a tiling tile too; pick the rotation in which residue 0 is
    # covered via the smallest residue of A, breaking ties lexicographically.
    want = (-lowest_residue) % modulus
    best = None
    for t in translates:
        delta = (want - t) % modulus
        rotated = tuple(sorted((u + delta) % modulus for u in translates))
        if best is None or rotated < best:
            best = rotated
    return best


def find_cyclic_complement(a_set: FiniteSet, modulus: int) -> CyclicTiling | None:
    """Search for T with A + T = Z_M, each residue covered exactly once.

    Immediate refusals: M not a multiple of |A| (the counting identity could
    not hold) and colliding residues of A mod M (double coverage is then
    unavoidable).  Otherwise backtrack: repeatedly take the smallest
    uncovered residue and try, in increasing order, each translate that
    covers it without overlapping anything already covered.  Coverage is a
    bitmask, so placement tests are single shifts.  Deterministic; absence
    is a None result, not an error.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    if not a_set or modulus % len(a_set) != 0:
        return None
    residues = sorted({e % modulus for e in a_set})
    if len(residues) < len(a_set):
        return None
    translates = _tile_search(tuple(residues), modulus)
    if translates is None:
        return None
    return CyclicTiling(
        modulus=modulus,
        set_residues=tuple(residues),
        translates=_canonical_translates(translates, residues[0], modulus),
    )


def _tile_search(residues: tuple[int, ...], modulus: int) -> list[int] | None:
    """Exhaustive search for translates tiling Z_modulus by `residues`.

    Two exact reductions keep the backtracking tractable:
    - translation: shift the residues to start at 0 and shift the answer back;
    - common factor: if every shifted residue shares gcd g > 1 with the
      modulus, sums hit a class c mod g iff the translate is in class c, so
      T splits into g independent tilings of Z_(M/g) by residues/g; one
      inner tiling lifted to every class is a tiling, and none exists unless
      the inner one does.
    """
    if modulus % len(residues) != 0:
        return None
    shift = residues[0]
    shifted = tuple(r - shift for r in residues)
    g = _gcd_all(shifted, modulus)
    if g > 1:
        inner = _tile_search(tuple(r // g for r in shifted), modulus // g)
        if inner is None:
            return None
        lifted = [g * t + c for t in inner for c in range(g)]
        return [(t - shift) % modulus for t in lifted]
    found = _backtrack(shifted, modulus)
    if found is None:
        return None
    return [(t - shift) % modulus for t in found]


def _gcd_all(values, modulus: int) -> int:
    g = modulus
    for v in values:
        g = math.gcd(g, v)
        if g == 1:
            return 1
    return g


def _backtrack(residues: tuple[int, ...], modulus: int) -> list[int] | None:
    full = (1 << modulus) - 1
    base = 0
    for r in residues:
        base |= 1 << r

    def placed(t: int) -> int:
        if t == 0:
            return base
        return ((base << t) | (base >> (modulus - t))) & full

    chosen: list[int] = []
    dead: set[int] = set()  # covered-states proven uncompletable

    def search(covered: int) -> bool:
        if covered == full:
            return True
        if covered in dead:
            return False
        gap = ~covered & full
        low = (gap & -gap).bit_length() - 1
        for t in sorted((low - a) % modulus for a in residues):
            mask = placed(t)
            if mask & covered:
                continue
            chosen.append(t)
            if search(covered | mask):
                return True
            chosen.pop()
        dead.add(covered)
        return False

    return list(chosen) if search(0) else None


def search_cyclic_complements(a_set: FiniteSet, m_max: int) -> list[tuple[int, CyclicTiling]]:
    """All moduli |A|, 2|A|, ..., <= m_max admitting a tiling, ascending.

    Exhausting the sweep certifies absence only up to m_max; it never claims
    nonexistence for larger periods.
    """
    if not a_set:
        raise ValueError("base set must be nonempty")
    if m_max < len(a_set):
        raise ValueError("m_max must be at least |A|")
    out = []
    for modulus in range(len(a_set), m_max + 1, len(a_set)):
        tiling = find_cyclic_complement(a_set, modulus)
        if tiling is not None:
            out.append((modulus, tiling))
    return out


def build_complement_from_tiling(tiling: CyclicTiling) -> PeriodicSet:
    """Periodic set taking the tiling's translates as residues, no preperiod."""
    if not tiling.is_exact_cover():
        raise ValueError("tiling is not an exact cover")
    return PeriodicSet(
        preperiod=FiniteSet(),
        threshold=0,
        period=tiling.modulus,
        residues=tiling.translates,
    )


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of periodic_identity_check.

    failure_mode is None on pass, else one of "not-a-complement" (a zero
    representation count recurs periodically), "not-exact" (a count above 1
    recurs), or "identity-mismatch".  n1 is the least threshold beyond which
    every count equals 1 when stabilized, otherwise the start of the
    periodic regime used to assemble the polynomials; in that case the first
    mismatching coefficient of the product identity locates the first bad
    count inside the periodic window.
    """

    passed: bool
    failure_mode: str | None
    stabilized: bool
    n1: int
    period: int
    eq_product_ok: bool
    first_mismatch: tuple[int, int, int] | None  # (exponent, lhs, rhs)
    eq_count_lhs: int
    eq_count_rhs: int
    eq_count_ok: bool
    justification: str

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "failure_mode": self.failure_mode,
            "stabilized": self.stabilized,
            "n1": self.n1,
            "period": self.period,
            "eq_product_ok": self.eq_product_ok,
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
            "eq_count": {
                "lhs": self.eq_count_lhs,
                "rhs": self.eq_count_rhs,
                "ok": self.eq_count_ok,
            },
            "justification": self.justification,
        }


def periodic_identity_check(a_set: FiniteSet, b_set: PeriodicSet, horizon: int) -> IdentityReport:
    """Verify that b_set is an exact periodic complement of a_set.

    Computes representation counts R(n) for n <= horizon.  R is periodic
    with period M from L + max(A) on (membership of n - a is periodic there
    for every a), so one clean window of ones beyond that point certifies
    R = 1 for every larger n; the threshold n1 is then pushed down as far as
    the counts allow.  The generating-function identity
        (1 - z^M) f_A F_B + f_A T = (1 - z^M) p1 + (1 + z + ... + z^(M-1)) z^n1
    is asserted coefficient by coefficient, and |A| * T(1) = M as integers.
    The horizon must be at least L + 2M + max(A), otherwise no certificate
    is possible and the check refuses.
    """
    if not a_set:
        raise ValueError("base set must be nonempty")
    period = b_set.period
    threshold = b_set.threshold
    top = a_set.max
    if horizon < threshold + 2 * period + top:
        raise ValueError(
            f"horizon {horizon} cannot certify: need at least {threshold + 2 * period + top}"
        )
    counts = [representation(a_set, b_set, n) for n in range(horizon + 1)]
    start = threshold + top
    window = counts[start : start + period]

    stabilized = all(v == 1 for v in window)
    if stabilized:
        n1 = start
        while n1 > 0 and counts[n1 - 1] == 1:
            n1 -= 1
        failure = None
    else:
        n1 = start
        failure = "not-a-complement" if 0 in window else "not-exact"

    f_a = a_set.gen_poly()
    f_pre = b_set.preperiod.gen_poly()
    t_exponents = [threshold + (r - threshold) % period for r in b_set.residues]
    t_poly = FiniteSet.of(t_exponents).gen_poly() if t_exponents else IntPolynomial(())
    one_minus = IntPolynomial((1,) + (0,) * (period - 1) + (-1,))
    p1 = IntPolynomial(tuple(counts[:n1]))
    geometric = IntPolynomial((1,) * period)

    lhs = one_minus * f_a * f_pre + f_a * t_poly
    rhs = one_minus * p1 + geometric * IntPolynomial.monomial(n1)

    first_mismatch = None
    for e in range(max(lhs.degree, rhs.degree) + 1):
        if lhs.coeff(e) != rhs.coeff(e):
            first_mismatch = (e, lhs.coeff(e), rhs.coeff(e))
            break
    eq_product_ok = first_mismatch is None

    eq_count_lhs = f_a.eval_at_one() * t_poly.eval_at_one()
    eq_count_rhs = period
    eq_count_ok = eq_count_lhs == eq_count_rhs

    passed = stabilized and eq_product_ok and eq_count_ok
    if passed:
        failure_mode = None
    else:
        failure_mode = failure if failure is not None else "identity-mismatch"

    justification = (
        f"R is periodic with period {period} for n >= {start}"
        f" (= threshold + max(A)); counts over [{start}, {start + period})"
        f" {'are all 1, certifying R = 1 for every n >= ' + str(n1) if stabilized else 'deviate from 1, so R never stabilizes'}."
    )
    return IdentityReport(
        passed=passed,
        failure_mode=failure_mode,
        stabilized=stabilized,
        n1=n1,
        period=period,
        eq_product_ok=eq_product_ok,
        first_mismatch=first_mismatch,
        eq_count_lhs=eq_count_lhs,
        eq_count_rhs=eq_count_rhs,
        eq_count_ok=eq_count_ok,
        justification=justification,
    )
