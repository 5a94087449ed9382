"""Command line entry point: ``priordan <command> [flags]``.

Exit status is 0 on success, 1 for bad input and 2 when two independent
computations disagree.
"""
from __future__ import annotations

import argparse
import json
import sys

from .balanced import count_closed_walks_formula, count_closed_walks_matrix, eta, eta_inv
from .exceptions import ConsistencyError, InputError, RiordanError
from .graphs import GraphClass, adjacency, class_names, classify, count_graphs, enumerate_graphs, parse_class
from .perms import format_perm, parse_perm, phi, phi_inv
from .series import canonicalize, parse_poly
from .validation import check_modulus, check_order
from .verification import run_checks
from .words import format_word, parse_word, xi, xi_inv

CODEC_P = {"perm": 2, "balanced": 3}
CLASS_LABELS = [c.label for c in GraphClass]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def _graph_flags(sub, *, default_p=2):
    sub.add_argument("--p", type=int, default=default_p, help="modulus (default %(default)s)")
    sub.add_argument("--n", type=int, required=True, help="graph order")
    sub.add_argument("--g", required=True, help="polynomial g, e.g. '1+t^2'")
    sub.add_argument("--f", required=True, help="polynomial f, e.g. 't+t^2'")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="priordan", description="p-Riordan graphs and their encodings")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub = subs.add_parser("build", parents=[common], help="print the adjacency matrix")
    _graph_flags(sub)

    sub = subs.add_parser("encode", parents=[common], help="encode a graph")
    sub.add_argument("--p", type=int, default=None, help="modulus (default: 2, or 3 for balanced)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--g", required=True)
    sub.add_argument("--f", required=True)
    sub.add_argument("--to", choices=["word", "perm", "balanced"], required=True)

    sub = subs.add_parser("decode", parents=[common], help="decode an encoding back to (g, f)")
    sub.add_argument("--p", type=int, default=None, help="modulus (default: 2, or 3 for balanced)")
    sub.add_argument("--from", dest="source", choices=["word", "perm", "balanced"], required=True)
    sub.add_argument("--input", required=True)

    sub = subs.add_parser("enumerate", parents=[common], help="list or count all graphs of order n")
    sub.add_argument("--p", type=int, default=2)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--class", dest="cls", choices=CLASS_LABELS, default=None)
    sub.add_argument("--count-only", action="store_true")

    sub = subs.add_parser("classify", parents=[common], help="print the classes a graph belongs to")
    _graph_flags(sub)

    sub = subs.add_parser("verify", parents=[common], help="run the exhaustive verification suite")
    sub.add_argument("--max-n", type=int, default=None, help="cap every size bound")

    sub = subs.add_parser("walks", parents=[common], help="count closed walks on the k-cube")
    sub.add_argument("--dim", type=int, default=3)
    sub.add_argument("--length", type=int, required=True)
    return parser


def _pair(args):
    m = check_modulus(args.p)
    return canonicalize(parse_poly(args.g, m), parse_poly(args.f, m), check_order(args.n))


def _codec_modulus(args, codec: str) -> int:
    want = CODEC_P.get(codec)
    if want is None:
        return 2 if args.p is None else args.p
    if args.p is not None and args.p != want:
        raise InputError(f"'{codec}' encodings need p={want}, got p={args.p}")
    return want


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload) if args.json else text)


def cmd_build(args) -> int:
    mat = adjacency(_pair(args))
    _emit(args, mat.to_text(), mat.to_dict())
    return 0


def cmd_encode(args) -> int:
    args.p = _codec_modulus(args, args.to)
    pair = _pair(args)
    if args.to == "word":
        pair.modulus.require_prime()
        text = format_word(xi(pair), pair.modulus)
    elif args.to == "perm":
        text = format_perm(phi(pair))
    else:
        text = eta(pair)
    _emit(args, text, {"to": args.to, "encoding": text, "pair": pair.to_dict()})
    return 0


def cmd_decode(args) -> int:
    p = _codec_modulus(args, args.source)
    if args.source == "word":
        m = check_modulus(p, prime=True)
        pair = xi_inv(parse_word(args.input, m), m)
    elif args.source == "perm":
        pair = phi_inv(parse_perm(args.input))
    else:
        pair = eta_inv(args.input.strip())
    print(pair.to_json())
    return 0


def cmd_enumerate(args) -> int:
    m = check_modulus(args.p, prime=True)
    n = check_order(args.n)
    wanted = parse_class(args.cls) if args.cls else None
    pairs = enumerate_graphs(n, m)
    if wanted is not None:
        pairs = (pair for pair in pairs if wanted in classify(pair))
    if args.count_only:
        if wanted is None:
            total = count_graphs(n, m)
        else:
            total = sum(1 for _ in pairs)
        _emit(args, str(total), {"n": n, "p": m.p, "class": args.cls, "count": total})
        return 0
    for pair in pairs:
        print(pair.to_json() if args.json else str(pair))
    return 0


def cmd_classify(args) -> int:
    pair = _pair(args)
    names = class_names(classify(pair))
    _emit(args, ",".join(names) if names else "(none)", {"pair": pair.to_dict(), "classes": names})
    return 0


def cmd_verify(args) -> int:
    if args.max_n is not None and args.max_n < 1:
        raise InputError("--max-n must be >= 1")
    results = run_checks(args.max_n)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps({
            "passed": not failed,
            "criteria": [r.to_dict() for r in results],
            "counterexample": failed[0].counterexample if failed else None,
        }))
    else:
        for r in results:
            print(r.line())
        if failed:
            print(json.dumps({"criterion": failed[0].number, "counterexample": failed[0].counterexample}))
    return 2 if failed else 0


def cmd_walks(args) -> int:
    a = count_closed_walks_matrix(args.dim, args.length)
    b = count_closed_walks_formula(args.dim, args.length)
    payload = {"dim": args.dim, "length": args.length, "matrix": a, "formula": b, "agree": a == b}
    _emit(args, f"matrix power: {a}\nsum formula:  {b}", payload)
    if a != b:
        raise ConsistencyError(f"walk counts disagree: matrix {a}, formula {b}")
    return 0


COMMANDS = {
    "build": cmd_build, "encode": cmd_encode, "decode": cmd_decode, "enumerate": cmd_enumerate,
    "classify": cmd_classify, "verify": cmd_verify, "walks": cmd_walks,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except ConsistencyError as exc:
        print(f"error: internal consistency failure: {exc}", file=sys.stderr)
        return 2
    except (InputError, RiordanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
