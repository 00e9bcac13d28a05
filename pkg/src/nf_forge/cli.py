"""Command-line front end: ``nf-forge {stratify,eval,check,universe-stats}``.

Exit codes: 0 success, 1 check or corpus mismatch, 2 usage or parse error,
3 resource or level budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cardinals import Arithmetic
from .evaluator import EvalError, EvalOverflow, Evaluator
from .stratifier import CorpusRecord, batch_check, parse_corpus_line
from .universe import DEFAULT_BUDGET, BudgetExceeded, LevelOverflow, Universe

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("NF_FORGE_JOBS", "1")))
    except ValueError:
        return 1


def _universe(args) -> Universe:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    return Universe(args.n, args.L, args.budget)


# ---------------------------------------------------------------------------
# stratify


def _read_records(source: str, text: str, expect, wrt) -> list:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if line.count("\t") == 3:
            try:
                rec = parse_corpus_line(line, i)
            except ValueError as exc:
                raise UsageError(f"{source}: {exc}") from exc
            if expect:
                rec = CorpusRecord(rec.name, expect, rec.mode, rec.text, rec.line)
        else:   # a bare formula
            mode = f"strat-wrt:{wrt}" if wrt else "strat"
            rec = CorpusRecord(f"{source}:{i}", expect or "PASS", mode, s, i)
        out.append(rec)
    return out


def cmd_stratify(args) -> int:
    records = []
    for path in args.files:
        try:
            text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc}") from exc
        records.extend(_read_records("stdin" if path == "-" else path, text, args.expect, args.wrt))
    report = batch_check(records, jobs=args.jobs)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_tsv())
    if any(r.got == "ERROR" for r in report.results):
        return EXIT_USAGE
    return report.exit_code


# ---------------------------------------------------------------------------
# eval


def cmd_eval(args) -> int:
    ev = Evaluator(_universe(args))
    try:
        res = ev.evaluate(args.expr, level=args.level)
    except EvalError as exc:
        raise UsageError(str(exc)) from exc
    except EvalOverflow as exc:
        print(f"level overflow: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"level {res.level}: {ev.show(res, raw=args.raw)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    from .harness import UnknownSelection, audit_table, run_catalog

    if args.audit:
        print(audit_table())
        return EXIT_OK
    U = _universe(args)
    try:
        report = run_catalog(U, args.select, jobs=args.jobs, heavy=args.heavy, timing=args.timing)
    except UnknownSelection as exc:
        raise UsageError(f"selection {exc.args[0]!r} matches no catalog entry") from exc
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        print(report.to_text())
    return report.exit_code


# ---------------------------------------------------------------------------
# universe-stats


def cmd_universe_stats(args) -> int:
    U = _universe(args)
    A = Arithmetic(U)
    out = {"n": args.n, "L": args.L,
           "level_sizes": [U.size(k) for k in range(U.L + 1)], "homes": {}}
    for h in range(2, U.L + 2):
        if U.size(h - 1) > 4096:
            out["homes"][str(h)] = {"skipped": f"level {h - 1} has {U.size(h - 1)} sets"}
            continue
        F = [A.describe(k) for k in A.F(h)]
        SF = [A.describe(k) for k in A.SF(h)]
        entry = {"F": F, "SF": SF}
        if h <= U.L:
            entry["G_size"] = len(A.mul_graph(h))
        out["homes"][str(h)] = entry
    if args.format == "json":
        print(json.dumps(out, indent=1, ensure_ascii=False, sort_keys=True))
        return EXIT_OK
    print(f"universe n={args.n} L={args.L}")
    print("level sizes: " + ", ".join(str(s) for s in out["level_sizes"]))
    for h, entry in out["homes"].items():
        if "skipped" in entry:
            print(f"home level {h}: skipped ({entry['skipped']})")
            continue
        print(f"home level {h}: F = [{', '.join(entry['F'])}]")
        print(f"home level {h}: SF = [{', '.join(entry['SF'])}]")
        if "G_size" in entry:
            print(f"home level {h}: |G| = {entry['G_size']}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nf-forge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def universe_opts(sp, n_default=3):
        sp.add_argument("--n", type=int, default=n_default, help="number of atoms")
        sp.add_argument("--L", type=int, default=2, help="highest enumerated level")
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest level size that may be enumerated")

    sp = sub.add_parser("stratify", help="check a stratification corpus")
    sp.add_argument("files", nargs="+", help="corpus files, or - for stdin")
    sp.add_argument("--expect", choices=["PASS", "FAIL"],
                    help="expected verdict (for bare formulas; overrides EXPECT fields)")
    sp.add_argument("--wrt", metavar="VAR", help="weak stratification w.r.t. VAR for bare formulas")
    sp.add_argument("--format", choices=["tsv", "json"], default="tsv")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.set_defaults(func=cmd_stratify)

    sp = sub.add_parser("eval", help="evaluate a closed term")
    sp.add_argument("expr")
    universe_opts(sp)
    sp.add_argument("--level", type=int, help="level of the result (inferred by default)")
    sp.add_argument("--raw", action="store_true", help="also print the set itself")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("check", help="run the lemma catalog")
    universe_opts(sp)
    sp.add_argument("--select", default=None, help="comma-separated id globs, e.g. 'lemma:T*'")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.add_argument("--heavy", action="store_true",
                    help="raise the per-level enumeration limit (slow at n=4)")
    sp.add_argument("--timing", action="store_true", help="include wall-clock times")
    sp.add_argument("--audit", action="store_true", help="print the lemma-to-check table and exit")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("universe-stats", help="level sizes, F, SF and G")
    universe_opts(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_universe_stats)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, LevelOverflow) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
