"""Command-line interface: analyze, reduce, tally, generate, export, verify."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import diagrams, enumeration, suites
from .nesting import NestingSolver, is_one_reducible
from .patterns import InapplicableError, maximal_subwords, reduce_op1, validate_trace
from .words import (
    WordError,
    ascending_relabel,
    detect_format,
    format_word,
    letter_removal,
    parse_word,
)

EXIT_OK, EXIT_INPUT, EXIT_INAPPLICABLE, EXIT_COUNTEREXAMPLE = 0, 2, 3, 4
CACHE_ENV = "DOWNEST_CACHE"


class CliError(Exception):
    def __init__(self, message, code=EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _read_word(args):
    fmt = args.format or detect_format(args.word)
    try:
        return parse_word(args.word, fmt, validate=True)
    except WordError as e:
        raise CliError(str(e)) from e


def _solver():
    solver = NestingSolver()
    path = os.environ.get(CACHE_ENV)
    if path and os.path.exists(path):
        solver.load(path)
    return solver


def _save(solver):
    path = os.environ.get(CACHE_ENV)
    if path:
        solver.save(path)


def analysis_report(pw, solver=None) -> dict:
    solver = solver or NestingSolver()
    w = pw.letters
    result = solver.solve(w)
    c12 = diagrams.contains_c12(w)
    one = is_one_reducible(w)
    # internal consistency, independent of the input
    assert one == (c12 is None)
    assert validate_trace(result.witness) and len(result.witness) == result.index
    syms = pw.symbols
    return {
        "word": pw.display(),
        "ascending": format_word(ascending_relabel(w)),
        "size": pw.size,
        "length": pw.length,
        "maximal_subwords": [
            {
                "start": m.span.start,
                "length": m.span.length,
                "kind": m.kind,
                "subword": pw.display(w[m.span.start:m.span.stop]),
            }
            for m in maximal_subwords(w)
        ],
        "one_reducible": one,
        "c12_witness": [syms[a - 1] for a in c12] if c12 else None,
        "nesting_index": result.index,
        "witness": result.witness.to_json(syms),
        "witness_words": [pw.display(u) for u in result.witness.words],
    }


def cmd_analyze(args):
    pw = _read_word(args)
    solver = _solver()
    rep = analysis_report(pw, solver)
    _save(solver)
    if args.json:
        print(json.dumps(rep, indent=2))
        return EXIT_OK
    print(f"word:             {rep['word']}")
    print(f"ascending form:   {rep['ascending']}")
    print(f"size / length:    {rep['size']} / {rep['length']}")
    subs = ", ".join(f"{m['subword']} ({m['kind']} at {m['start']})" for m in rep["maximal_subwords"])
    print(f"maximal subwords: {subs or 'none'}")
    print(f"1-reducible:      {'yes' if rep['one_reducible'] else 'no'}")
    wit = rep["c12_witness"]
    print(f"C1x2 witness:     {' '.join(wit) if wit else 'none'}")
    print(f"nesting index:    {rep['nesting_index']}")
    print(f"reduction:        {' -> '.join(rep['witness_words'])}")
    return EXIT_OK


def _letter_id(pw, symbol):
    try:
        return pw.symbols.index(symbol) + 1
    except ValueError:
        raise CliError(f"unknown letter {symbol!r}") from None


def cmd_reduce(args):
    pw = _read_word(args)
    w = pw.letters
    if args.all:
        while w:
            try:
                w, _ = reduce_op1(w)
            except InapplicableError as e:
                raise CliError(str(e), EXIT_INAPPLICABLE) from e
            print(pw.display(w))
        return EXIT_OK
    op = args.op or "1"
    if op == "1":
        try:
            w, _ = reduce_op1(w)
        except InapplicableError as e:
            raise CliError(str(e), EXIT_INAPPLICABLE) from e
    elif op.startswith("2:"):
        w = letter_removal(w, _letter_id(pw, op[2:]))
    else:
        raise CliError(f"--op must be 1 or 2:<letter>, got {op!r}")
    print(pw.display(w))
    return EXIT_OK


def _sizes(spec):
    lo, _, hi = spec.partition("-")
    try:
        lo, hi = int(lo), int(hi or lo)
    except ValueError:
        raise CliError(f"bad size {spec!r}") from None
    return range(lo, hi + 1)


def cmd_tally(args):
    cap = enumeration.LONG_MAX_SIZE + 1 if args.allow_long else enumeration.DEFAULT_MAX_SIZE
    sizes = [n for s in args.size for n in _sizes(s)]
    for n in sizes:
        if not 1 <= n <= cap:
            hint = "" if args.allow_long else " (pass --allow-long for larger sizes)"
            raise CliError(f"size {n} outside 1..{cap}{hint}")
    rows = {n: enumeration.tally_nesting(n, args.workers) for n in sizes}
    if args.json:
        text = "\n".join(enumeration.tally_json(n, r) for n, r in rows.items()) + "\n"
    else:
        text = enumeration.tally_csv(rows)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.check:
        bad = [n for n in sizes if rows[n] != enumeration.TABLE1.get(n)]
        for n in bad:
            print(f"size {n}: {rows[n]} != reference {enumeration.TABLE1.get(n)}", file=sys.stderr)
        if bad:
            return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def cmd_generate(args):
    try:
        w = diagrams.generate(args.family, args.n, args.m)
    except ValueError as e:
        raise CliError(str(e)) from e
    print(" ".join(map(str, w)))
    return EXIT_OK


def cmd_export(args):
    pw = _read_word(args)
    obj = diagrams.chord_diagram(pw.letters) if args.what == "chords" else diagrams.circle_graph(pw.letters)
    if args.json:
        text = json.dumps(obj.to_json(pw.symbols), indent=2) + "\n"
    else:
        text = obj.to_dot(pw.symbols)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args):
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    solver = _solver()
    ok = True
    for name in names:
        if name == "families":
            res = suites.families(args.n, solver)
        elif name == "reverse-invariance":
            res = suites.reverse_invariance(min(args.max_size, 5), args.samples, seed=args.seed)
        elif name == "theorem-c12":
            res = suites.theorem_c12(args.max_size)
        else:
            res = suites.SUITES[name](args.max_size, solver=solver)
        print("\n".join(res.lines()))
        ok = ok and res.ok
    _save(solver)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def cmd_min_size(args):
    if args.max_size > enumeration.LONG_MAX_SIZE or (
        args.max_size > enumeration.DEFAULT_MAX_SIZE and not args.allow_long
    ):
        raise CliError("size limit exceeded (sizes above 7 need --allow-long, 8 at most)")
    rows = enumeration.min_size_for_ni(args.max_ni, args.max_size, args.workers)
    print("ni,min_size,n,s,n_minus_s,n_plus_s")
    for r in rows:
        size = "" if r["min_size"] is None else r["min_size"]
        print(f"{r['ni']},{size},{r['n']},{r['s']},{r['n_minus_s']},{r['n_plus_s']}")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="downest", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def word_cmd(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("word", help='word text, e.g. "1212" or "a b a b"')
        sp.add_argument("--format", choices=["compact", "tokens"], default=None)
        return sp

    sp = word_cmd("analyze", "full report for one word")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_analyze)

    sp = word_cmd("reduce", "apply a reduction operation")
    sp.add_argument("--op", help="1, or 2:<letter>")
    sp.add_argument("--all", action="store_true", help="iterate operation 1 down to the empty word")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("tally", help="count ascending words by nesting index")
    sp.add_argument("--size", action="append", required=True, help="N or A-B; repeatable")
    sp.add_argument("--workers", type=int, default=None, help="default: all CPUs")
    sp.add_argument("--csv", metavar="PATH", help="write output here instead of stdout")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--allow-long", action="store_true", help="permit sizes 8 and 9")
    sp.add_argument("--check", action="store_true", help="compare against the reference table")
    sp.set_defaults(func=cmd_tally)

    sp = sub.add_parser("generate", help="print a word of a named family")
    sp.add_argument("--family", choices=["repeat", "return", "grid", "w1", "w2"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int)
    sp.set_defaults(func=cmd_generate)

    sp = word_cmd("export", "chord diagram or circle graph as DOT or JSON")
    sp.add_argument("--what", choices=["chords", "circle"], default="circle")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", default=True)
    fmt.add_argument("--json", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("--suite", choices=["all"] + list(suites.SUITES), default="all")
    sp.add_argument("--max-size", type=int, default=5)
    sp.add_argument("--n", type=int, default=4, help="largest family index for 'families'")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("min-size", help="smallest size reaching each nesting index")
    sp.add_argument("--max-ni", type=int, default=4)
    sp.add_argument("--max-size", type=int, default=enumeration.DEFAULT_MAX_SIZE)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--allow-long", action="store_true")
    sp.set_defaults(func=cmd_min_size)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"downest: {e}", file=sys.stderr)
        return e.code
    except (WordError, ValueError) as e:
        print(f"downest: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
