"""Command-line interface.

Exit status: 0 on success with all checks matching, 1 on a formula
mismatch or invalid witness, 2 on input or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bpair import b_number
from .connectivity import is_separating_set, kappa_with_witness
from .fileio import EdgeListError, read_graph_file, write_graph_file
from .graph import GraphError
from .product import double_cover, format_cover_vertex, kronecker_product
from .verify import (
    VerificationReport,
    fuzz_campaign,
    separator_from_bpair,
    separator_from_cut,
    verify_instance,
)


def _fmt_vertex_set(vs) -> str:
    return "{" + ", ".join(str(v) for v in sorted(vs)) + "}"


def _fmt_cover_set(vs) -> str:
    return "{" + ", ".join(format_cover_vertex(pv) for pv in sorted(vs)) + "}"


def _cmd_kappa(args) -> int:
    g = read_graph_file(args.file)
    kappa, witness = kappa_with_witness(g)
    print(f"kappa(G) = {kappa}")
    print(f"witness = {_fmt_vertex_set(witness.vertices)}")
    return 0


def _cmd_bnum(args) -> int:
    g = read_graph_file(args.file)
    value, witness = b_number(g)
    print(f"b(G) = {value}")
    print(f"X = {_fmt_vertex_set(witness.x_set)}")
    print(f"Y = {_fmt_vertex_set(witness.y_set)}")
    print(f"component = {_fmt_vertex_set(witness.component)}")
    print(f"value = {witness.value}")
    return 0


def _cmd_product(args) -> int:
    g = read_graph_file(args.file1)
    h = read_graph_file(args.file2)
    prod = kronecker_product(g, h)
    write_graph_file(
        args.output,
        prod,
        comments=[
            f"kronecker product of |G|={g.n} and |H|={h.n}",
            f"vertex (u,v) encoded as u*{h.n}+v",
        ],
    )
    return 0


def _cmd_doublecover(args) -> int:
    g = read_graph_file(args.file)
    cover = double_cover(g)
    write_graph_file(
        args.output,
        cover,
        comments=[
            f"double cover of |G|={g.n}",
            "vertex (u,side) encoded as 2*u+side with side a=0, b=1",
        ],
    )
    return 0


def _cmd_formula(args) -> int:
    g = read_graph_file(args.file)
    kappa, cut = kappa_with_witness(g)
    b_res = b_number(g)
    value = min(2 * kappa, b_res.value)
    if 2 * kappa <= b_res.value:
        witness = separator_from_cut(g, cut.vertices)
    else:
        witness = separator_from_bpair(g, b_res.witness)
    print(f"kappa(G) = {kappa}")
    print(f"b(G) = {b_res.value}")
    print(f"min(2*kappa(G), b(G)) = {value}")
    print(f"product witness = {_fmt_cover_set(witness)}")
    ok = len(witness) == value and is_separating_set(double_cover(g), witness)
    return 0 if ok else 1


def _report_exit_code(report: VerificationReport) -> int:
    return 0 if report.match and report.witness_valid else 1


def _cmd_verify(args) -> int:
    g = read_graph_file(args.file)
    report = verify_instance(g, with_oracle=args.oracle, graph_id=args.file)
    print(json.dumps(report.to_dict(), indent=2))
    return _report_exit_code(report)


def _cmd_fuzz(args) -> int:
    try:
        p_choices = [float(tok) for tok in args.p.split(",") if tok.strip()]
    except ValueError:
        raise GraphError(f"bad probability list: {args.p!r}") from None
    if not p_choices:
        raise GraphError("empty probability list")
    if args.nmin < 1 or args.nmax < args.nmin:
        raise GraphError(
            f"need 1 <= nmin <= nmax, got nmin={args.nmin} nmax={args.nmax}"
        )
    summary = fuzz_campaign(
        trials=args.trials,
        n_range=(args.nmin, args.nmax),
        p_choices=p_choices,
        master_seed=args.seed,
        oracle_limit=args.oracle_limit,
    )
    print(json.dumps(summary, indent=2))
    ok = summary["mismatches"] == 0 and summary["invalid_witnesses"] == 0
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronconn",
        description=(
            "Vertex connectivity of Kronecker double covers: "
            "kappa(G x K2) = min(2*kappa(G), b(G)), with witnesses."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", help="vertex connectivity with a witness cut")
    p.add_argument("file")
    p.set_defaults(func=_cmd_kappa)

    p = sub.add_parser("bnum", help="pair invariant b(G) with a witness pair")
    p.add_argument("file")
    p.set_defaults(func=_cmd_bnum)

    p = sub.add_parser("product", help="write the Kronecker product of two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("doublecover", help="write G x K2")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_doublecover)

    p = sub.add_parser("formula", help="evaluate min(2*kappa, b) with witness")
    p.add_argument("file")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("verify", help="formula vs direct product connectivity")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true",
                   help="also run the brute-force product oracle")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="randomized campaign over G(n,p) instances")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--p", required=True, help="comma-separated probabilities")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--oracle-limit", type=int, default=0, dest="oracle_limit",
                   help="run the product oracle when 2n <= this limit")
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (GraphError, EdgeListError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
