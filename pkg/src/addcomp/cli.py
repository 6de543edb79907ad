"""Command-line interface: detect-form, construct, tile, trace, verify.

Exit codes are a stable contract: 0 for a positive result (form found,
identity passed, tiling found), 1 for an honest negative result, 2 for
usage or input errors.  Identical inputs produce byte-identical outputs;
JSON documents carry a top-level "schema": 1 field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complement import PeriodicSet, block_complement_pair, canonical_complement, greedy_complement
from .finset import FiniteSet, SetParseError, cyclotomic_form_witness, detect_form, is_prime, parse_set, realize_form
from .harness import deficit_trace, divergence_probe
from .tiling import periodic_identity_check, search_cyclic_complements

SCHEMA = 1

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Input or usage error; maps to exit code 2."""


def _load_set(spec: str) -> FiniteSet:
    """Inline list ("0,1,5") or path to a set file."""
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = spec
    try:
        return parse_set(text)
    except SetParseError as err:
        raise CliError(str(err)) from None


def _load_complement(spec: str, a_set: FiniteSet, horizon: int):
    """Complement spec: "greedy", inline JSON, a JSON file, or a set."""
    if spec == "greedy":
        return greedy_complement(a_set, horizon)
    text = spec
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as handle:
            text = handle.read()
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            return PeriodicSet.from_json_dict(data)
        except (json.JSONDecodeError, ValueError) as err:
            raise CliError(f"bad periodic complement JSON: {err}") from None
    try:
        return parse_set(text)
    except SetParseError as err:
        raise CliError(str(err)) from None


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _dump(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def cmd_detect_form(args) -> int:
    a_set = _load_set(args.set)
    if not a_set:
        raise CliError("input set is empty")
    m = args.m if args.m is not None else len(a_set)
    try:
        witness = detect_form(a_set, m)
    except ValueError as err:
        raise CliError(str(err)) from None

    cyc: dict = {"applicable": False, "reason": "cardinality is not prime"}
    if m == len(a_set) and is_prime(len(a_set)):
        found = cyclotomic_form_witness(a_set)
        cyc = {
            "applicable": True,
            "found": found is not None,
            "s": found[0] if found else None,
            "witness": found[1].to_json_dict() if found else None,
            "agrees": (found is not None) == (witness is not None),
        }
    elif m != len(a_set):
        cyc = {"applicable": False, "reason": "m differs from |A|"}

    document = {
        "schema": SCHEMA,
        "set": list(a_set.elements),
        "m": m,
        "found": witness is not None,
        "witness": witness.to_json_dict() if witness else None,
        "realization": list(realize_form(witness).elements) if witness else None,
        "cyclotomic_route": cyc,
    }
    if args.format == "text":
        if witness is None:
            _emit("none\n", args.out)
        else:
            _emit(
                f"m={witness.m} s={witness.s} a={witness.a} k={list(witness.k)}\n",
                args.out,
            )
    else:
        _emit(_dump(document), args.out)
    return EXIT_OK if witness is not None else EXIT_NEGATIVE


def _auto_horizon(requested: int | None, b_set: PeriodicSet, a_set: FiniteSet) -> int:
    minimum = b_set.threshold + 3 * b_set.period + a_set.max
    if requested is None:
        return max(minimum, 1000)
    if requested < minimum - b_set.period:
        raise CliError(f"horizon {requested} too small; need at least {minimum - b_set.period}")
    return requested


def cmd_construct(args) -> int:
    if args.set is not None:
        a_set = _load_set(args.set)
        if not a_set:
            raise CliError("input set is empty")
        witness = detect_form(a_set, len(a_set))
        if witness is None:
            sys.stderr.write("set is not structured; no canonical complement\n")
            return EXIT_NEGATIVE
        b_set = canonical_complement(witness)
    else:
        if args.d1 is None or args.d2 is None:
            raise CliError("construct needs either d1 and d2 or --set")
        if args.d1 <= 1 or args.d2 <= 1:
            raise CliError("d1 and d2 must both exceed 1")
        a_set, b_set = block_complement_pair(args.d1, args.d2)

    horizon = _auto_horizon(args.horizon, b_set, a_set)
    report = periodic_identity_check(a_set, b_set, horizon)
    document = {
        "schema": SCHEMA,
        "A": list(a_set.elements),
        "B": b_set.to_json_dict(),
        "identity": report.to_json_dict(),
    }
    if args.format == "text":
        lines = [
            f"A = {list(a_set.elements)}",
            f"B = residues {list(b_set.residues)} mod {b_set.period}"
            + (f" with preperiod {list(b_set.preperiod.elements)} below {b_set.threshold}" if b_set.threshold else ""),
            f"n1 = {report.n1}",
            f"count identity: {report.eq_count_lhs} == {report.eq_count_rhs}: {report.eq_count_ok}",
            f"identity check: {'pass' if report.passed else 'fail'}",
        ]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(document), args.out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_tile(args) -> int:
    a_set = _load_set(args.set)
    if not a_set:
        raise CliError("input set is empty")
    m_max = args.mmax
    if m_max < len(a_set):
        raise CliError(f"--mmax must be at least |A| = {len(a_set)}")
    found = search_cyclic_complements(a_set, m_max)
    tried = list(range(len(a_set), m_max + 1, len(a_set)))
    document = {
        "schema": SCHEMA,
        "set": list(a_set.elements),
        "M_max": m_max,
        "tried": tried,
        "tilings": [tiling.to_json_dict() for _, tiling in found],
        "exhausted": not found,
    }
    if args.format == "text":
        if found:
            lines = [f"M={m}: T={list(t.translates)}" for m, t in found]
        else:
            lines = [f"no tiling for any M in {tried}"]
        _emit("\n".join(lines) + "\n", args.out)
    else:
        _emit(_dump(document), args.out)
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_trace(args) -> int:
    a_set = _load_set(args.set)
    if not a_set:
        raise CliError("input set is empty")
    horizon = args.horizon
    if horizon < a_set.max:
        raise CliError(f"horizon must reach max(A) = {a_set.max}")
    b_set = _load_complement(args.complement, a_set, horizon)
    trace = deficit_trace(a_set, b_set, horizon)
    _emit(trace.to_csv(), args.out)

    starts = [10 ** k for k in range(2, 12) if 2 * 10 ** k <= horizon]
    if starts:
        probe = divergence_probe(trace, starts)
        sys.stderr.write(
            "windows " + " ".join(f"[{lo},{hi}]" for lo, hi in probe.windows)
            + " minima " + " ".join(str(v) for v in probe.minima)
            + f" verdict {probe.verdict}\n"
        )
    else:
        sys.stderr.write("horizon too small for divergence windows\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    a_set = _load_set(args.set)
    if not a_set:
        raise CliError("input set is empty")
    b_set = _load_complement(args.complement, a_set, args.horizon or 1000)
    if not isinstance(b_set, PeriodicSet):
        raise CliError("verify needs a periodic complement (JSON with a period)")
    horizon = _auto_horizon(args.horizon, b_set, a_set)
    try:
        report = periodic_identity_check(a_set, b_set, horizon)
    except ValueError as err:
        raise CliError(str(err)) from None
    document = {
        "schema": SCHEMA,
        "A": list(a_set.elements),
        "B": b_set.to_json_dict(),
        "identity": report.to_json_dict(),
    }
    if args.format == "text":
        _emit(
            f"{'pass' if report.passed else 'fail'}"
            + (f" ({report.failure_mode})" if report.failure_mode else "")
            + f" n1={report.n1}\n",
            args.out,
        )
    else:
        _emit(_dump(document), args.out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="addcomp",
        description="Structured-form detection, complement construction and verification "
        "for finite sets of nonnegative integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect-form", help="decide whether a set is structured")
    p.add_argument("set", help="inline list like '0,1,5' or a path to a set file")
    p.add_argument("--m", type=int, default=None, help="structure parameter, default |A|")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_detect_form)

    p = sub.add_parser("construct", help="build a set with an exact periodic complement")
    p.add_argument("d1", type=int, nargs="?", default=None)
    p.add_argument("d2", type=int, nargs="?", default=None)
    p.add_argument("--set", default=None, help="build the canonical complement of a structured set")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("tile", help="sweep periods for exact cyclic complements")
    p.add_argument("set")
    p.add_argument("--mmax", type=int, default=200)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tile)

    p = sub.add_parser("trace", help="CSV deficit trace with divergence probe on stderr")
    p.add_argument("set")
    p.add_argument("--complement", required=True, help="'greedy', periodic JSON, or a set")
    p.add_argument("--horizon", type=int, default=10_000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="check a periodic complement exactly")
    p.add_argument("set")
    p.add_argument("--complement", required=True)
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        sys.stderr.write(f"error: {err}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
