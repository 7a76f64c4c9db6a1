"""Command line front end.

Usage summary (see README for the file formats):

    clutterlab check FILE [--json] [--max-states K]
    clutterlab invariants FILE [--f] [--h] [--betti] [--verify] [--json]
    clutterlab lambda max N D I        [--json]
    clutterlab lambda profile N D I    [--json]
    clutterlab lambda complete N D     [--json]
    clutterlab lambda validate N D SEQ [--json]
    clutterlab generate complete N D [-o FILE] [--json]
    clutterlab generate extremal N D I [-o FILE] [--json]

Exit codes: 0 success (chordal where that is the question), 1 not
chordal (or a failed verification), 2 search inconclusive under a
--max-states budget, 64 malformed input or arguments.  Data goes to
stdout, diagnostics to stderr.  JSON reports carry a schema tag and
embed the parsed input, so piping a report's "input" object back into
the tool reproduces the report.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import __version__
from .chordality import (
    SearchLimitReached,
    find_simplicial_order,
    lambda_sequence,
    simplicial_multiset,
)
from .clutter import Clutter
from .guards import OracleBoundError
from .homology import hochster_betti
from .invariants import (
    betti_from_multiset,
    delta_from_multiset,
    f_vector_direct,
    f_vector_from_multiset,
    h_vector_from_multiset,
    multiplicity,
)
from .io import (
    ClutterParseError,
    clutter_to_json,
    clutter_to_json_dict,
    clutter_to_text,
    parse_clutter_file,
)
from .macaulay import (
    complete_lambda,
    extremal_clutter,
    extremal_lambda_profile,
    lambda_max,
    lsequence_from_lambda,
    validate_lambda,
)
from .clutter import complete_clutter

SCHEMA = "clutterlab-report/1"

EXIT_OK = 0
EXIT_NOT_CHORDAL = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 64


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    """argparse that reports bad arguments through exit code 64."""

    def error(self, message):
        raise UsageError(message)


def _build_parser() -> Parser:
    parser = Parser(prog="clutterlab",
                    description="chordality and resolution invariants "
                                "of uniform clutters")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide chordality of a clutter file")
    p_check.add_argument("file")
    p_check.add_argument("--json", action="store_true", dest="as_json")
    p_check.add_argument("--max-states", type=int, default=None,
                         help="search budget; exceeding it exits 2")

    p_inv = sub.add_parser("invariants",
                           help="f/h/Betti invariants of a chordal clutter file")
    p_inv.add_argument("file")
    p_inv.add_argument("--f", action="store_true", dest="want_f")
    p_inv.add_argument("--h", action="store_true", dest="want_h")
    p_inv.add_argument("--betti", action="store_true", dest="want_betti")
    p_inv.add_argument("--verify", action="store_true",
                       help="cross-check against the enumeration oracles")
    p_inv.add_argument("--json", action="store_true", dest="as_json")
    p_inv.add_argument("--max-states", type=int, default=None)

    p_lam = sub.add_parser("lambda", help="lambda-sequence arithmetic for (n, d)")
    lam_sub = p_lam.add_subparsers(dest="mode", required=True)
    for mode, extra in (("max", "I"), ("profile", "I"),
                        ("complete", None), ("validate", "SEQ")):
        q = lam_sub.add_parser(mode)
        q.add_argument("n", type=int)
        q.add_argument("d", type=int)
        if extra == "I":
            q.add_argument("index", type=int, metavar="I")
        elif extra == "SEQ":
            q.add_argument("sequence", metavar="SEQ",
                           help="comma-separated candidate, e.g. 4,2")
        q.add_argument("--json", action="store_true", dest="as_json")

    p_gen = sub.add_parser("generate", help="write a named clutter family member")
    gen_sub = p_gen.add_subparsers(dest="mode", required=True)
    for mode, takes_index in (("complete", False), ("extremal", True)):
        q = gen_sub.add_parser(mode)
        q.add_argument("n", type=int)
        q.add_argument("d", type=int)
        if takes_index:
            q.add_argument("index", type=int, metavar="I")
        q.add_argument("-o", "--output", default=None)
        q.add_argument("--json", action="store_true", dest="as_json",
                       help="emit the JSON clutter form instead of text")
    return parser


# ----- report assembly --------------------------------------------------------


def _order_block(order) -> dict:
    return {
        "elements": [list(e) for e in order.elements],
        "neighborhood_sizes": list(order.neighborhood_sizes),
    }


def _chordal_analysis(clutter: Clutter, max_states: int | None) -> dict:
    """Shared by check and invariants: decide and derive the multiset."""
    order = find_simplicial_order(clutter, max_states=max_states)
    report = {
        "schema": SCHEMA,
        "input": clutter_to_json_dict(clutter),
        "chordal": order is not None,
    }
    if order is not None:
        ms = simplicial_multiset(order)
        report["order"] = _order_block(order)
        report["multiset"] = sorted(ms.elements())
        report["lambda"] = list(lambda_sequence(ms))
    return report


def _print_human_check(report: dict, out) -> None:
    n, d = report["input"]["n"], report["input"]["d"]
    r = len(report["input"]["circuits"])
    print(f"clutter: n={n} d={d} circuits={r}", file=out)
    if report["chordal"]:
        steps = report["order"]
        pretty = ", ".join(
            "{%s}:%d" % (",".join(map(str, e)), s)
            for e, s in zip(steps["elements"], steps["neighborhood_sizes"]))
        print("chordal: yes", file=out)
        print(f"order: {pretty}", file=out)
        print(f"multiset: {report['multiset']}", file=out)
        print(f"lambda: {report['lambda']}", file=out)
    else:
        print("chordal: no", file=out)


def cmd_check(args) -> int:
    clutter = parse_clutter_file(args.file)
    try:
        report = _chordal_analysis(clutter, args.max_states)
    except SearchLimitReached as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if args.as_json:
        print(json.dumps(report, indent=2))
    else:
        _print_human_check(report, sys.stdout)
    return EXIT_OK if report["chordal"] else EXIT_NOT_CHORDAL


def cmd_invariants(args) -> int:
    clutter = parse_clutter_file(args.file)
    try:
        report = _chordal_analysis(clutter, args.max_states)
    except SearchLimitReached as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    if not report["chordal"]:
        print("not chordal: invariants are defined through a simplicial order; "
              "run 'clutterlab check' for the negative witness",
              file=sys.stderr)
        return EXIT_NOT_CHORDAL

    n, d = clutter.n, clutter.d
    ms = Counter(report["multiset"])
    want_all = not (args.want_f or args.want_h or args.want_betti)
    delta = delta_from_multiset(d, ms)
    report["delta"] = delta
    report["multiplicity"] = multiplicity(clutter)
    if want_all or args.want_f:
        report["f"] = list(f_vector_from_multiset(n, d, ms))
    if want_all or args.want_h:
        report["h"] = list(h_vector_from_multiset(n, d, ms))
    if want_all or args.want_betti:
        try:
            betti = betti_from_multiset(n, d, ms)
            report["betti"] = list(betti)
            report["projective_dimension"] = len(betti) - 1
        except ValueError as exc:
            report["betti"] = None
            report["betti_note"] = str(exc)
    try:
        lseq = lsequence_from_lambda(n, d, report["lambda"])
        diag = validate_lambda(n, d, report["lambda"])
        report["macaulay"] = {
            "l_sequence": list(lseq),
            "valid": diag.valid,
        }
    except ValueError:
        report["macaulay"] = None

    code = EXIT_OK
    if args.verify:
        verify = _verify_block(clutter, report)
        report["verify"] = verify
        if not verify["agreement"]:
            print("VERIFICATION MISMATCH: formula and oracle disagree; "
                  "this is a bug worth reporting", file=sys.stderr)
            code = EXIT_NOT_CHORDAL

    if args.as_json:
        print(json.dumps(report, indent=2))
    else:
        _print_human_invariants(report)
    return code


def _verify_block(clutter: Clutter, report: dict) -> dict:
    fv = f_vector_direct(clutter)
    table = hochster_betti(clutter)
    verify = {
        "f_direct": list(fv),
        "betti_oracle": list(table.totals()),
        "graded_betti": table.to_json(),
        "linear_resolution": table.is_linear(),
    }
    ms = Counter(report["multiset"])
    formula_f = list(f_vector_from_multiset(clutter.n, clutter.d, ms))
    try:
        formula_betti = list(betti_from_multiset(clutter.n, clutter.d, ms))
    except ValueError:
        formula_betti = []
    verify["agreement"] = (
        formula_f == verify["f_direct"]
        and formula_betti == verify["betti_oracle"]
        and verify["linear_resolution"]
    )
    return verify


def _print_human_invariants(report: dict) -> None:
    inp = report["input"]
    print(f"clutter: n={inp['n']} d={inp['d']} circuits={len(inp['circuits'])}")
    print(f"multiset: {report['multiset']}")
    print(f"lambda: {report['lambda']}")
    print(f"delta: {report['delta']}  multiplicity: {report['multiplicity']}")
    if "f" in report:
        print(f"f-vector: {report['f']}")
    if "h" in report:
        print(f"h-vector: {report['h']}")
    if "betti" in report:
        if report["betti"] is None:
            print(f"betti: undefined ({report['betti_note']})")
        else:
            print(f"betti: {report['betti']}  "
                  f"projdim: {report['projective_dimension']}")
    if report.get("macaulay"):
        print(f"l-sequence: {report['macaulay']['l_sequence']}")
    if "verify" in report:
        v = report["verify"]
        print(f"verify: f-oracle {v['f_direct']}")
        print(f"verify: betti-oracle {v['betti_oracle']} "
              f"linear={v['linear_resolution']}")
        print(f"verify: agreement={'yes' if v['agreement'] else 'NO'}")


# ----- lambda and generate ----------------------------------------------------


def _parse_sequence(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}")


def cmd_lambda(args) -> int:
    n, d = args.n, args.d
    out: dict = {"schema": SCHEMA, "n": n, "d": d, "mode": args.mode}
    try:
        if args.mode == "max":
            out["index"] = args.index
            out["lambda_max"] = lambda_max(n, d, args.index)
            human = f"lambda_max({n},{d}) at index {args.index}: {out['lambda_max']}"
        elif args.mode == "profile":
            out["index"] = args.index
            profile = extremal_lambda_profile(n, d, args.index)
            out["lambda"] = list(profile)
            human = f"extremal lambda profile at index {args.index}: {list(profile)}"
        elif args.mode == "complete":
            lam = complete_lambda(n, d)
            out["lambda"] = list(lam)
            human = f"lambda of the complete clutter: {list(lam)}"
        else:  # validate
            lam = _parse_sequence(args.sequence)
            diag = validate_lambda(n, d, lam)
            out["lambda"] = list(lam)
            out["valid"] = diag.valid
            out["l_sequence"] = list(diag.l_sequence) if diag.l_sequence else None
            out["reason"] = diag.reason
            if diag.valid:
                human = f"valid: realized by l-sequence {list(diag.l_sequence)}"
            else:
                human = f"invalid: {diag.reason}"
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.as_json:
        print(json.dumps(out, indent=2))
    else:
        print(human)
    if args.mode == "validate" and not out["valid"]:
        return EXIT_NOT_CHORDAL
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        if args.mode == "complete":
            clutter = complete_clutter(args.n, args.d)
        else:
            clutter = extremal_clutter(args.n, args.d, args.index)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    payload = clutter_to_json(clutter) if args.as_json else clutter_to_text(clutter)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
        print(f"wrote {args.output}", file=sys.stderr)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


# ----- entry point --------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "check":
            return cmd_check(args)
        if args.command == "invariants":
            return cmd_invariants(args)
        if args.command == "lambda":
            return cmd_lambda(args)
        if args.command == "generate":
            return cmd_generate(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ClutterParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OracleBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
