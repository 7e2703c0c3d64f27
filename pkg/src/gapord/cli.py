"""Command-line front end: parse, compare, translate, embed, enumerate, check.

Exit codes: 0 success, 1 counterexamples from ``check``, 2 parse or
validation errors (argparse uses 2 for malformed invocations as well).
"""

from __future__ import annotations

import argparse
import sys

from . import btheta as bt
from . import cnf
from . import gapseq as gs
from . import maps, pi, suites, theta, veblen
from .enumeration import EnumSpec, enumerate_terms
from .syntax import TermSyntaxError

_LINEAR_SYSTEMS = ("cnf", "veblen", "pi", "theta", "btheta")
SYSTEMS = _LINEAR_SYSTEMS + ("gapseq",)
MAPS = ("chi", "chi-std", "psi", "psi-prime", "tau", "e", "h", "f-embed", "o-value")
DEFAULT_SEQ_BOUND = 10


class CliError(Exception):
    pass


def _parse_term(system: str, text: str, n: int | None):
    if system == "cnf":
        return cnf.parse_cnf(text)
    if system == "veblen":
        return veblen.parse_veblen(text, veblen.parse_nat_sub)
    if system == "pi":
        return pi.parse_pi(text)
    if system == "theta":
        return theta.parse_theta(text)
    if system == "btheta":
        return bt.parse_btheta(text)
    return gs.parse_seq(text, n if n is not None else DEFAULT_SEQ_BOUND)


def _format_term(system: str, term) -> str:
    return {
        "cnf": cnf.format_cnf,
        "veblen": veblen.format_veblen,
        "pi": pi.format_pi,
        "theta": theta.format_theta,
        "btheta": bt.format_btheta,
        "gapseq": gs.format_seq,
    }[system](term)


def _cmd_parse(args) -> int:
    term = _parse_term(args.system, args.term, args.n)
    print(_format_term(args.system, term))
    return 0


def _cmd_compare(args) -> int:
    if args.system == "gapseq":
        raise CliError("sequences carry a partial order; use the embed command")
    a = _parse_term(args.system, args.terms[0], args.n)
    b = _parse_term(args.system, args.terms[1], args.n)
    comparators = {
        "cnf": cnf.compare,
        "veblen": veblen.compare_nat_subs,
        "pi": pi.compare,
        "theta": theta.compare,
        "btheta": bt.compare,
    }
    try:
        c = comparators[args.system](a, b)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    print("<" if c < 0 else ">" if c > 0 else "=")
    return 0


def _require(value, flag: str):
    if value is None:
        raise CliError(f"this map needs {flag}")
    return value


def _cmd_translate(args) -> int:
    name, text = args.map, args.term
    if name == "chi":
        out = maps.chi(veblen.parse_veblen(text, veblen.parse_nat_sub))
        print(theta.format_theta(out))
    elif name == "chi-std":
        out = maps.chi_std(cnf.parse_cnf(text))
        print(theta.format_theta(out))
    elif name == "psi":
        term = veblen.parse_veblen(text, pi.parse_pi_scanner)
        out = maps.psi_map(term, _require(args.n, "--n"))
        print(theta.format_theta(out))
    elif name == "psi-prime":
        out = theta.to_tprime(theta.parse_theta(text), _require(args.n, "--n"))
        print(theta.format_theta(out))
    elif name == "tau":
        term = theta.parse_theta(text)
        image = maps.tau(_require(args.m, "--m"), term, _require(args.n, "--n"))
        if isinstance(image, cnf.CnfOrdinal):
            print(cnf.format_cnf(image))
        else:
            print(maps.format_omega_tuple(image))
    elif name == "e":
        term = theta.parse_theta(text)
        bound = args.n if args.n is not None else max(term.indices, default=-1) + 1
        print(gs.format_seq(gs.seq_of_term(term, bound)))
    elif name == "h":
        s = gs.parse_seq(text, args.n if args.n is not None else DEFAULT_SEQ_BOUND)
        head, parts = gs.h_split(s)
        inner = ", ".join(gs.format_seq(p) for p in parts)
        print(f"({gs.format_seq(head)}, ({inner}))")
    elif name == "f-embed":
        s = gs.parse_seq(text, args.n if args.n is not None else DEFAULT_SEQ_BOUND)
        print(bt.format_btheta(bt.embed_seq(s)))
    elif name == "o-value":
        term = bt.parse_btheta(text)
        print(veblen.format_leveled(bt.o_value(term, _require(args.n, "--n"))))
    else:
        raise CliError(f"unknown map {name!r}")
    return 0


def _cmd_embed(args) -> int:
    bound = args.n if args.n is not None else DEFAULT_SEQ_BOUND
    s = gs.parse_seq(args.terms[0], bound)
    t = gs.parse_seq(args.terms[1], bound)
    print("true" if gs.gap_leq(s, t, args.mode) else "false")
    return 0


def _cmd_enumerate(args) -> int:
    size = args.max_lh if args.max_lh is not None else args.max_len
    if size is None:
        raise CliError("a size bound (--max-lh or --max-len) is required")
    spec = EnumSpec(args.system, size, n=args.n, m=args.m, variant=args.mode or "")
    for term in enumerate_terms(spec):
        print(_format_term(args.system, term))
    return 0


def _cmd_check(args) -> int:
    names = [args.suite] if args.suite else None
    overrides = {}
    if args.n is not None:
        overrides["n"] = args.n
    size = args.max_lh if args.max_lh is not None else args.max_len
    for key in ("max_size", "max_lh", "max_len"):
        if size is not None:
            overrides[key] = size
    reports = suites.run_all(names, **overrides)
    suites.emit(reports, sys.stdout)
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapord",
        description="Addition-free ordinal notations, gap-embeddability orders, "
        "and the translations between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, system=False, map_flag=False):
        if system:
            p.add_argument("--system", required=True, choices=SYSTEMS)
        if map_flag:
            p.add_argument("--map", required=True, choices=MAPS)
        p.add_argument("--n", type=int, default=None, help="index/alphabet bound")
        p.add_argument("--m", type=int, default=None, help="level parameter")

    p = sub.add_parser("parse", help="echo the canonical form of a term")
    common(p, system=True)
    p.add_argument("term")
    p.set_defaults(fn=_cmd_parse)

    p = sub.add_parser("compare", help="compare two terms: prints <, = or >")
    common(p, system=True)
    p.add_argument("terms", nargs=2)
    p.set_defaults(fn=_cmd_compare)

    p = sub.add_parser("translate", help="apply a named translation map")
    common(p, map_flag=True)
    p.add_argument("term")
    p.set_defaults(fn=_cmd_translate)

    p = sub.add_parser("embed", help="gap-embeddability between two sequences")
    p.add_argument("--mode", required=True, choices=gs.MODES)
    p.add_argument("--n", type=int, default=None, help="alphabet bound")
    p.add_argument("terms", nargs=2)
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("enumerate", help="stream all terms within a size bound")
    common(p, system=True)
    p.add_argument("--mode", default="", help="variant: prime | sbar | ot | ot0")
    p.add_argument("--max-lh", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("check", help="run property suites; nonzero exit on a counterexample")
    p.add_argument("--suite", default=None, choices=sorted(suites.SUITES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max-lh", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(fn=_cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except TermSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
