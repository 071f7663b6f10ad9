"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid q.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
from pathlib import Path

from . import export
from .bounds import render_table, table_rows
from .construction import (
    RULES,
    InvalidQError,
    build_H,
    circulant_part,
    derive_params,
    standalone_circulant,
    verify_construction,
)
from .field import classify_prime_power, field
from .geometry import all_parts, build_projective_incidence_graph, build_semiplane_L
from .girth import girth_oracle, mixed_girth
from .graph import random_mixed_graph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BAD_Q = 0, 1, 2, 3


def _q_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedcage", description="Build and verify the girth-6 mixed graphs H_{q,p}."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def q_args(p, required=True):
        p.add_argument("--q", type=int, required=required, help="prime power order of the field")
        p.add_argument("--force", action="store_true", help="allow q in {4, 5}")
        p.add_argument("--rules", choices=RULES, default="corrected", help="arc rule set")

    for name in ("construct", "export"):
        p = sub.add_parser(name, help="build H_{q,p} and write it out")
        q_args(p)
        p.add_argument("--out", type=Path, required=name == "export")
        p.add_argument("--format", choices=sorted(export.FORMATS), default="json")

    p = sub.add_parser("verify", help="check order, regularity, girth and structure")
    q_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the girth search")

    p = sub.add_parser("table", help="emit the upper-bound table")
    p.add_argument("--q-list", type=_q_list, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--format", choices=("csv", "text"), default="csv")
    p.add_argument("--force", action="store_true")
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("field", help="show the field modulus, primitive element and tables")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--show-tables", action="store_true")

    p = sub.add_parser("oracle-check", help="compare mixed_girth against the brute-force oracle")
    p.add_argument("--max-q", type=int, default=19)
    p.add_argument("--random", type=int, default=50, help="number of random mixed graphs")
    p.add_argument("--seed", type=int, default=0)
    return parser


def cmd_construct(args) -> int:
    params = derive_params(args.q, args.force)
    F = field(args.q)
    H = build_H(args.q, args.force, args.rules)
    if args.format == "json":
        text = export.to_json(F, H, "H_{q,p}", params.as_dict() | {"rules": args.rules})
    elif args.format == "dot":
        text = export.to_dot(F, H, f"H_{args.q}_{params.p}")
    else:
        text = export.to_csv(F, H)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_construction(args.q, args.force, args.rules, workers=args.threads)
    if args.json:
        print(json.dumps(report.as_dict(), indent=1))
    else:
        print(report.format())
    return EXIT_OK if report.claims_pass else EXIT_FAIL


def cmd_table(args) -> int:
    rows = table_rows(args.q_list, args.verify, args.force, args.threads)
    sys.stdout.write(render_table(rows, args.format))
    return EXIT_FAIL if any(r[5] in ("fail", "error") for r in rows) else EXIT_OK


def cmd_field(args) -> int:
    if args.q < 2 or classify_prime_power(args.q) is None:
        raise InvalidQError(f"{args.q} is not a prime power")
    F = field(args.q)
    print(f"q: {F.order}")
    print(f"modulus: {F.modulus_str}")
    print(f"xi: {F.format_poly(F.xi)}")
    if args.show_tables:
        print("exp table (i: xi^i):")
        for i, a in enumerate(F.exp_table):
            print(f"  {i}: {F.format_poly(a)}")
        print("log table (a: log a):")
        for a in range(1, F.q):
            print(f"  {F.format_poly(a)}: {F.log(a)}")
    return EXIT_OK


def oracle_corpus(max_q: int, n_random: int, seed: int):
    """(name, graph) pairs small enough for the oracle."""
    jump_sets = {(1,)}  # q = 4, 5
    for q in range(7, max_q + 1):
        if classify_prime_power(q) is not None:
            jump_sets.add(derive_params(q).jumps)
    for jumps in sorted(jump_sets):
        for n in range(2 * max(jumps) + 1, 41):
            yield f"circulant n={n} jumps={list(jumps)}", standalone_circulant(n, jumps)
    for q in (2, 3, 4):
        yield f"PG(2,{q})", build_projective_incidence_graph(q)
    for q in (3, 4, 5):
        yield f"G_{q}", build_semiplane_L(q)
    for q in range(7, max_q + 1):
        if classify_prime_power(q) is None:
            continue
        H = build_H(q)
        for part in all_parts(field(q))[-2:]:
            yield f"H_{q} {part}", circulant_part(H, part)
    rng = random.Random(seed)
    for k in range(n_random):
        yield f"random #{k}", random_mixed_graph(rng, rng.randint(3, 30))


def cmd_oracle_check(args) -> int:
    bad = 0
    for name, G in oracle_corpus(args.max_q, args.random, args.seed):
        fast, slow = mixed_girth(G), girth_oracle(G)
        ok = fast == slow
        bad += not ok
        print(f"{'ok  ' if ok else 'FAIL'} {name}: mixed_girth={fast} oracle={slow}")
    print(f"{'all agree' if not bad else f'{bad} disagreements'}")
    return EXIT_OK if not bad else EXIT_FAIL


COMMANDS = {
    "construct": cmd_construct,
    "export": cmd_construct,
    "verify": cmd_verify,
    "table": cmd_table,
    "field": cmd_field,
    "oracle-check": cmd_oracle_check,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except InvalidQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_Q


if __name__ == "__main__":
    sys.exit(main())
