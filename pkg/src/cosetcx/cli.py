"""Command-line entry point.

Exit codes: 0 ok, 2 parse error, 3 cap or overflow, 4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import caps as caps_mod
from .complex import to_text
from .errors import OverCap, ParseError
from .fpgroups.low_index import (
    complement_exists,
    count_maximal_by_index,
    count_simple_quotients,
    low_index_subgroups,
)
from .fpgroups.presentation import load_presentation, parse_words
from .fpgroups.todd_coxeter import todd_coxeter
from .groups import build_group
from .report import COMPLEXES, FAMILIES, analyze, make_complex, make_family, render_text
from .verify import load_corpus, run_suite, shipped_corpus_path, summary_table

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4
TSV_COLUMNS = ("index", "normal", "maximal", "table-hash", "generator-words")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def cmd_analyze(args) -> int:
    report = analyze(args.group, args.family or ["all"], args.complex or ["order"],
                     cap_simplices=args.cap_simplices, timings=args.timings)
    print(render_text(report))
    _write(args.json, _dump(report))
    return EXIT_OK


def cmd_export(args) -> int:
    G = build_group(args.group)
    K = make_complex(G, make_family(G, args.family), args.complex, args.cap_simplices)
    text = to_text(K)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _low_index_tsv(P, res) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    for s in res.subgroups:
        words = ", ".join(P.format_word(w) for w in s.table.schreier_generators())
        lines.append(f"{s.index}\t{str(s.is_normal).lower()}\t{str(s.is_maximal).lower()}\t"
                     f"{s.table.digest()}\t{words}")
    return "\n".join(lines) + "\n"


def cmd_fp(args) -> int:
    P = load_presentation(args.presentation)
    payload: dict
    if args.subcommand == "enumerate":
        words = parse_words(args.subgroup or "", P.generators)
        T = todd_coxeter(P, words, args.max_cosets)
        print(f"index {T.index}")
        payload = {"presentation": P.to_text(), "subgroup": [P.format_word(w) for w in words],
                   "index": T.index, "table": [list(r) for r in T.rows]}
    elif args.subcommand == "low-index":
        res = low_index_subgroups(P, args.max_index, dedupe_conjugates=not args.all_conjugates)
        tsv = _low_index_tsv(P, res)
        sys.stdout.write(tsv)
        _write(args.tsv, tsv)
        payload = {"presentation": P.to_text(), "bound": res.bound, "deduplicated": res.deduplicated,
                   "subgroups": [{"index": s.index, "normal": s.is_normal, "maximal": s.is_maximal,
                                  "table_hash": s.table.digest(),
                                  "generators": [P.format_word(w) for w in s.table.schreier_generators()]}
                                 for s in res.subgroups]}
    elif args.subcommand == "maximal-counts":
        counts = count_maximal_by_index(P, args.max_index)
        tsv = "index\tmaximal\n" + "".join(f"{n}\t{c}\n" for n, c in counts.items())
        sys.stdout.write(tsv)
        _write(args.tsv, tsv)
        payload = {"presentation": P.to_text(), "bound": args.max_index,
                   "counts": {str(n): c for n, c in counts.items()}}
    elif args.subcommand == "complements":
        pool_bound = args.pool_index or args.max_index
        pool = low_index_subgroups(P, pool_bound, dedupe_conjugates=False).subgroups
        targets = [s for s in pool if 1 < s.index <= args.max_index]
        rows = []
        for s in targets:
            K = complement_exists(P, s.table, [k.table for k in pool])
            rows.append({"index": s.index, "table_hash": s.table.digest(),
                         "complement_hash": K.digest() if K else None,
                         "complement_index": K.index if K else None})
        covered = sum(r["complement_hash"] is not None for r in rows)
        pct = 100.0 * covered / len(rows) if rows else 100.0
        lines = ["index\ttable-hash\tcomplement-index\tcomplement-hash"]
        lines += [f"{r['index']}\t{r['table_hash']}\t{r['complement_index']}\t{r['complement_hash']}" for r in rows]
        lines.append(f"# complement coverage {covered}/{len(rows)} = {pct:.1f}%")
        tsv = "\n".join(lines) + "\n"
        sys.stdout.write(tsv)
        _write(args.tsv, tsv)
        payload = {"presentation": P.to_text(), "bound": args.max_index, "pool_bound": pool_bound,
                   "rows": rows, "coverage_percent": pct}
    else:
        counts = count_simple_quotients(P, args.max_index)
        tsv = "quotient\tkernels\n" + "".join(f"{k}\t{v}\n" for k, v in counts.items())
        sys.stdout.write(tsv)
        _write(args.tsv, tsv)
        payload = {"presentation": P.to_text(), "bound": args.max_index, "simple_quotients": counts}
    _write(args.json, _dump(payload))
    return EXIT_OK


def cmd_verify(args) -> int:
    path = args.corpus or str(shipped_corpus_path())
    corpus = load_corpus(path)
    if not corpus["groups"] and not corpus["presentations"]:
        print(f"warning: corpus {path} is empty; nothing to check", file=sys.stderr)
    results = run_suite(corpus, jobs=args.jobs)
    print(summary_table(results))
    if args.json:
        _write(args.json, _dump([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results]))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cosetcx", description="Coset complexes of finite and finitely presented groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one finite group")
    a.add_argument("group", help="group spec, e.g. cyclic:6 or perm:3:(0 1),(0 1 2)")
    a.add_argument("--family", action="append", choices=FAMILIES)
    a.add_argument("--complex", action="append", choices=COMPLEXES)
    a.add_argument("--json", metavar="FILE")
    a.add_argument("--cap-simplices", type=int)
    a.add_argument("--timings", action="store_true", help="include wall-clock timings (breaks byte-identical output)")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("export", help="write a complex in the line-based text format")
    e.add_argument("group")
    e.add_argument("--family", choices=FAMILIES, default="all")
    e.add_argument("--complex", choices=COMPLEXES, default="order")
    e.add_argument("--out", metavar="FILE")
    e.add_argument("--cap-simplices", type=int)
    e.set_defaults(func=cmd_export)

    f = sub.add_parser("fp", help="finitely presented groups")
    f.add_argument("subcommand", choices=("enumerate", "low-index", "maximal-counts", "complements", "simple-quotients"))
    f.add_argument("presentation", help="inline 'gens: ... ; rels: ...' or a file path")
    f.add_argument("--subgroup", default="", help="comma-separated subgroup generator words")
    f.add_argument("--max-index", type=int, default=6)
    f.add_argument("--pool-index", type=int, help="complements: search pool bound (default: --max-index)")
    f.add_argument("--max-cosets", type=int)
    f.add_argument("--all-conjugates", action="store_true", help="low-index: list every subgroup, not one per class")
    f.add_argument("--tsv", metavar="FILE")
    f.add_argument("--json", metavar="FILE")
    f.set_defaults(func=cmd_fp)

    v = sub.add_parser("verify", help="run the invariant suite over a corpus file")
    v.add_argument("corpus", nargs="?", help="corpus JSON (default: the shipped corpus)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", metavar="FILE")
    v.set_defaults(func=cmd_verify)

    for p in (a, e, f, v):
        p.add_argument("--caps", help="override caps, same format as COSET_CAPS")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.caps:
            caps_mod.parse_caps(args.caps)
            os.environ[caps_mod.ENV_VAR] = args.caps
        if getattr(args, "max_cosets", None) is None and args.command == "fp":
            args.max_cosets = caps_mod.current_caps().cosets
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OverCap as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
