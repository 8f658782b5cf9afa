"""Command-line interface.

Commands: apply, psi, check, graph, compare, count, validate-arm.  Results
go to stdout, diagnostics to stderr.  Exit codes: 0 success or pass, 1
verification failure (witness printed), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .arms import arm_from_descriptor, validate_arm
from .errors import CrystalError
from .graphs import (
    MONOMIAL_MODEL,
    PARTITION_MODEL,
    compare_graphs,
    count_regular,
    export_dot,
    export_json,
    generate_graph,
)
from .isomorphism import partition_to_monomial
from .monomial_crystal import e_m, f_m, format_monomial, parse_monomial
from .partition_crystal import e_up, f_down
from .partitions import (
    arm as arm_stat,
    format_partition,
    hook,
    parse_partition,
)
from .arms import is_illegal_box


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinecrystal",
        description="Crystal operators on partitions and Laurent monomials, "
        "plus graph generation and comparison.",
    )
    parser.add_argument("--n", type=int, required=True, help="rank, at least 3")
    parser.add_argument(
        "--arm",
        default="horizontal",
        help="arm sequence: horizontal | file:PATH | random:SEED:T",
    )
    parser.add_argument(
        "--format",
        default="text",
        choices=["text", "dot", "json"],
        help="output format (graph takes dot or json; everything else text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply an operator word to an object")
    p.add_argument("object", help="partition like [3,1] or monomial like Y(0,0)")
    p.add_argument(
        "word",
        help="comma-separated operators applied left to right, e.g. f2,f0,e1; "
        "residues are reduced mod n",
    )

    p = sub.add_parser("psi", help="map a partition to its corner monomial")
    p.add_argument("partition")

    p = sub.add_parser("check", help="report the illegal boxes of a partition")
    p.add_argument("partition")

    p = sub.add_parser("graph", help="generate a crystal graph and export it")
    p.add_argument("--model", default=PARTITION_MODEL,
                   choices=[PARTITION_MODEL, MONOMIAL_MODEL])
    p.add_argument("--depth", type=int, required=True)

    p = sub.add_parser("compare", help="synchronized comparison of two graphs")
    p.add_argument("--model", default=PARTITION_MODEL,
                   choices=[PARTITION_MODEL, MONOMIAL_MODEL])
    p.add_argument("--model2", required=True,
                   choices=[PARTITION_MODEL, MONOMIAL_MODEL])
    p.add_argument("--arm2", default=None,
                   help="arm sequence for the second model (defaults to --arm)")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--use-psi", action="store_true",
                   help="also require vertex labels to agree through the corner map")

    p = sub.add_parser("count", help="count regular partitions by size")
    p.add_argument("--max", type=int, required=True)

    p = sub.add_parser("validate-arm", help="check the arm-sequence conditions")
    p.add_argument("--horizon", type=int, required=True)

    return parser


def _parse_word(word: str, n: int) -> list[tuple[str, int]]:
    ops = []
    for tok in word.split(","):
        tok = tok.strip()
        if len(tok) < 2 or tok[0] not in "ef" or not tok[1:].isdigit():
            raise CrystalError(f"bad operator token {tok!r}")
        ops.append((tok[0], int(tok[1:]) % n))
    return ops


def _cmd_apply(args) -> int:
    text = args.object.strip()
    ops = _parse_word(args.word, args.n)
    if text.startswith("["):
        obj = parse_partition(text)
        a = arm_from_descriptor(args.n, args.arm)
        for kind, i in ops:
            if obj is None:
                break
            obj = f_down(obj, i, a) if kind == "f" else e_up(obj, i, a)
        print("0" if obj is None else format_partition(obj))
    else:
        obj = parse_monomial(text, args.n)
        for kind, i in ops:
            if obj is None:
                break
            obj = f_m(obj, i) if kind == "f" else e_m(obj, i)
        print("0" if obj is None else format_monomial(obj))
    return 0


def _cmd_psi(args) -> int:
    lam = parse_partition(args.partition)
    print(format_monomial(partition_to_monomial(lam, args.n)))
    return 0


def _cmd_check(args) -> int:
    lam = parse_partition(args.partition)
    a = arm_from_descriptor(args.n, args.arm)
    bad = [b for b in lam.boxes() if is_illegal_box(lam, b, a)]
    if not bad:
        print("regular")
        return 0
    for b in bad:
        h = hook(lam, b)
        print(
            f"illegal at (row {b.row}, col {b.col}): "
            f"hook {h}, arm {arm_stat(lam, b)}, t {h // args.n}"
        )
    return 1


def _make_graph(model: str, n: int, depth: int, arm_text: str):
    a = arm_from_descriptor(n, arm_text) if model == PARTITION_MODEL else None
    return generate_graph(model, n, depth, a)


def _cmd_graph(args) -> int:
    if args.format == "text":
        print("graph output needs --format dot or --format json", file=sys.stderr)
        return 2
    g = _make_graph(args.model, args.n, args.depth, args.arm)
    sys.stdout.write(export_dot(g) if args.format == "dot" else export_json(g))
    return 0


def _cmd_compare(args) -> int:
    g1 = _make_graph(args.model, args.n, args.depth, args.arm)
    g2 = _make_graph(args.model2, args.n, args.depth, args.arm2 or args.arm)
    label_map = None
    if args.use_psi:
        if args.model != PARTITION_MODEL or args.model2 != MONOMIAL_MODEL:
            print(
                "--use-psi needs --model partition and --model2 monomial",
                file=sys.stderr,
            )
            return 2

        def label_map(text):
            return format_monomial(partition_to_monomial(parse_partition(text), args.n))

    result = compare_graphs(g1, g2, label_map)
    if result.isomorphic:
        print(f"isomorphic ({len(g1.vertices)} vertices)")
        return 0
    print(f"mismatch: {result.mismatch}")
    return 1


def _cmd_count(args) -> int:
    a = arm_from_descriptor(args.n, args.arm)
    counts = count_regular(args.n, a, args.max)
    print(" ".join(str(c) for c in counts))
    return 0


def _cmd_validate_arm(args) -> int:
    from .arms import horizontal_arm, unchecked_arm

    # load without eager validation so every violation can be listed
    text = args.arm
    if text == "horizontal":
        a = horizontal_arm(args.n)
    elif text.startswith("file:"):
        path = text[len("file:"):]
        with open(path) as fh:
            a = unchecked_arm(args.n, [int(tok) for tok in fh.read().split()],
                              text)
    elif text.startswith("random:"):
        a = arm_from_descriptor(args.n, text)
    else:
        raise CrystalError(f"unknown arm sequence {text!r}")
    bad = validate_arm(a, args.horizon)
    if not bad:
        print("ok")
        return 0
    for v in bad:
        if v.axiom == 1:
            print(f"axiom (i) violated at t={v.t}: A_t={a.value(v.t)}")
        else:
            print(
                f"axiom (ii) violated at (t={v.t}, u={v.u}): "
                f"A_{v.t + v.u}={a.value(v.t + v.u)} vs "
                f"A_{v.t}+A_{v.u}={a.value(v.t) + a.value(v.u)}"
            )
    return 1


_HANDLERS = {
    "apply": _cmd_apply,
    "psi": _cmd_psi,
    "check": _cmd_check,
    "graph": _cmd_graph,
    "compare": _cmd_compare,
    "count": _cmd_count,
    "validate-arm": _cmd_validate_arm,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.n < 3:
            raise CrystalError(f"--n must be at least 3, got {args.n}")
        return _HANDLERS[args.command](args)
    except CrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
