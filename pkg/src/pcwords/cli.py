"""Command line driver for transforms, factorizations, exchanges, and verification."""

from __future__ import annotations

import argparse
import json
import sys

from .bwt import bw_matrix, clustering_permutation, row_pair_decompose
from .enumeration import cross_validate, enumerate_brute, enumerate_closure
from .factorization import build_W, canonical_special_factorization
from .free_group import GroupWord, apply_lambda, apply_rho
from .interval_exchange import IntervalExchange, iet_of_word
from .verification import run_all
from .words import Alphabet, Word

__all__ = ["build_parser", "main", "render_json"]


def render_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def _emit_json(data):
    sys.stdout.write(render_json(data))


def _parse_word(text: str, alphabet_spec: str | None) -> Word:
    return Word.from_str(text, Alphabet(alphabet_spec) if alphabet_spec else None)


def _input_words(args):
    if args.word == "-":
        texts = [line.strip() for line in sys.stdin]
        texts = [t for t in texts if t]
    else:
        texts = [args.word]
    return [_parse_word(t, args.alphabet) for t in texts]


def _format_pi(pi) -> str:
    if max(pi) <= 9:
        return "".join(map(str, pi))
    return ",".join(map(str, pi))


def _describe_clustering(verdict) -> str:
    if verdict.pi is None:
        return "not clustering"
    if verdict.perfect:
        return f"perfectly clustering ({_format_pi(verdict.pi)}-clustering)"
    return f"{_format_pi(verdict.pi)}-clustering"


def _cmd_bwt(args) -> int:
    for w in _input_words(args):
        matrix = bw_matrix(w)
        verdict = clustering_permutation(w)
        if args.json:
            _emit_json({
                "source": str(w),
                "rows": [str(r) for r in matrix.rows],
                "bwt": str(matrix.last_column),
                "clustering": {
                    "pi": list(verdict.pi) if verdict.pi is not None else None,
                    "perfect": verdict.perfect,
                },
            })
        else:
            for row in matrix.rows:
                print(row)
            print(f"bwt = {matrix.last_column}, {_describe_clustering(verdict)}")
    return 0


def _cmd_factor(args) -> int:
    for w in _input_words(args):
        f = canonical_special_factorization(w)
        companion = build_W(f)
        if args.json:
            syms = f.alphabet.symbols
            _emit_json({
                "letters": [str(syms[r]) for r in f.letters],
                "gaps": [str(g) for g in f.gaps],
                "palindromic": f.is_palindromic,
                "W": str(companion),
            })
        else:
            flag = "palindromic" if f.is_palindromic else "non-palindromic gaps"
            print(f"{f.separated()} ({flag}), W = {companion}")
    return 0


def _cmd_rows(args) -> int:
    for w in _input_words(args):
        matrix = bw_matrix(w)
        pairs = []
        for i in range(1, len(matrix.rows)):
            d = row_pair_decompose(matrix, i)
            pairs.append((i, d))
        if args.json:
            _emit_json({
                "source": str(w),
                "pairs": [
                    {
                        "rows": [i, i + 1],
                        "y": str(d.y),
                        "m": str(d.m),
                        "x": str(d.x),
                        "xy": str(d.x + d.y),
                        "gap": d.palindrome_index,
                    }
                    for i, d in pairs
                ],
            })
        else:
            for i, d in pairs:
                print(
                    f'rows {i},{i + 1}: y="{d.y}" m="{d.m}" x="{d.x}" '
                    f'xy="{d.x + d.y}" gap={d.palindrome_index}')
    return 0


def _cycles_text(exchange) -> str:
    return "".join("(" + " ".join(map(str, c)) + ")" for c in exchange.cycles())


def _cmd_iet(args) -> int:
    if args.word is not None:
        w = _parse_word(args.word, args.alphabet)
        exchange, rank = iet_of_word(w)
        encoding = exchange.encoding(rank, alphabet=w.support_alphabet())
        if args.json:
            _emit_json({
                "word": str(w),
                "composition": list(exchange.parts),
                "t": list(exchange.translations),
                "sigma": list(exchange.sigma),
                "r": rank,
                "encoding": str(encoding),
            })
        else:
            print(f"word = {w}")
            print(f"composition = {','.join(map(str, exchange.parts))}")
            print(f"r = {rank}")
            print(f"encoding({rank}) = {encoding}")
        return 0
    try:
        parts = tuple(int(c) for c in args.composition.split(","))
    except ValueError:
        raise ValueError(f"cannot parse composition {args.composition!r}") from None
    exchange = IntervalExchange(parts)
    circular = exchange.is_circular()
    encoding = exchange.encoding(args.start) if circular else None
    if args.json:
        _emit_json({
            "composition": list(exchange.parts),
            "t": list(exchange.translations),
            "sigma": list(exchange.sigma),
            "cycles": [list(c) for c in exchange.cycles()],
            "circular": circular,
            "encoding": str(encoding) if encoding is not None else None,
        })
    else:
        print(f"composition = {','.join(map(str, exchange.parts))}")
        print(f"t = {','.join(map(str, exchange.translations))}")
        print(f"sigma = {','.join(map(str, exchange.sigma))}")
        print(f"cycles = {_cycles_text(exchange)}")
        print(f"circular = {'yes' if circular else 'no'}")
        if encoding is not None:
            print(f"encoding({args.start}) = {encoding}")
    return 0


def _cmd_auto(args) -> int:
    side, letter = ("rho", args.rho) if args.rho else ("lambda", args.lam)
    if args.word == "-":
        texts = [line.strip() for line in sys.stdin]
        texts = [t for t in texts if t]
    else:
        texts = [args.word]
    for text in texts:
        if args.alphabet:
            alphabet = Alphabet(args.alphabet)
        else:
            alphabet = Alphabet(sorted(set(c for c in text if c != "-") | {letter}))
        g = GroupWord.parse(text, alphabet)
        image = apply_rho(letter, g) if side == "rho" else apply_lambda(letter, g)
        positivity = "positive" if image.is_positive() else "not positive"
        print(f"{side}_{letter}({g}) = {image} ({positivity})")
    return 0


def _cmd_enum(args) -> int:
    if args.method == "both":
        report = cross_validate(
            args.k, args.max_len, args.full_alphabet, workers=args.jobs)
        words = report.words
        if not report.equal:
            for w in report.brute_only:
                print(f"missing from closure: {w}", file=sys.stderr)
            for w in report.closure_only:
                print(f"missing from brute force: {w}", file=sys.stderr)
        if args.json:
            _emit_json({
                "words": [str(w) for w in words],
                "counts_by_length": {str(n): c for n, c in sorted(report.counts_by_length.items())},
                "closure_agrees": report.equal,
            })
        else:
            for w in words:
                print(w)
        return 0 if report.equal else 1
    if args.method == "closure":
        words = enumerate_closure(args.k, args.max_len, args.full_alphabet)
    else:
        words = enumerate_brute(args.k, args.max_len, args.full_alphabet, workers=args.jobs)
    if args.json:
        counts: dict[int, int] = {}
        for w in words:
            counts[len(w)] = counts.get(len(w), 0) + 1
        _emit_json({
            "words": [str(w) for w in words],
            "counts_by_length": {str(n): c for n, c in sorted(counts.items())},
        })
    else:
        for w in words:
            print(w)
    return 0


def _cmd_verify(args) -> int:
    results = run_all(
        k=args.k, max_len=args.max_len, seed=args.seed,
        samples=args.samples, workers=args.jobs)
    for result in results:
        for line in result.render():
            print(line)
    passed = sum(1 for r in results if r.passed)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pcwords",
        description="Perfectly clustering words: transforms, factorizations, exchanges.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bwt", help="rotation matrix, transform, and clustering verdict")
    p.add_argument("word", help="input word, or - to read words from stdin")
    p.add_argument("--alphabet", help="explicit symbol order, e.g. cba")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bwt)

    p = sub.add_parser("factor", help="palindromic special factorization")
    p.add_argument("word", help="input word, or - to read words from stdin")
    p.add_argument("--alphabet")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("rows", help="decompositions of consecutive matrix rows")
    p.add_argument("word", help="input word, or - to read words from stdin")
    p.add_argument("--alphabet")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rows)

    p = sub.add_parser("iet", help="interval exchange of a composition or word")
    p.add_argument("composition", nargs="?",
                   help="comma-separated positive parts, e.g. 3,3,4")
    p.add_argument("--word", help="build the exchange encoding this word")
    p.add_argument("--alphabet")
    p.add_argument("--start", type=int, default=1, help="encoding start point")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_iet)

    p = sub.add_parser("auto", help="apply a one-letter insertion automorphism")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--rho", metavar="LETTER", help="right insertion at this pivot")
    group.add_argument("--lambda", dest="lam", metavar="LETTER",
                       help="left insertion at this pivot")
    p.add_argument("word", help="input element, or - to read from stdin")
    p.add_argument("--alphabet")
    p.set_defaults(func=_cmd_auto)

    p = sub.add_parser("enum", help="enumerate perfectly clustering Lyndon words")
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--full-alphabet", action="store_true",
                   help="keep only words using every letter")
    p.add_argument("--method", choices=("brute", "closure", "both"), default="brute")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_enum)

    p = sub.add_parser("verify", help="run the full theorem suite")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10000,
                   help="random palindromes for the preservation check")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "iet" and (args.composition is None) == (args.word is None):
        parser.error("iet needs exactly one of a composition or --word")
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
