"""Run catalog checks against a finite universe and report the results."""

from __future__ import annotations

import fnmatch
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from ..cardinals import Arithmetic
from ..universe import BudgetExceeded, FuncView, LevelOverflow, SetVal, Universe
from .catalog import BY_ID, CATALOG, OUT_OF_SCOPE
from .core import DEFAULT_LIMIT, HEAVY_LIMIT, Check, Ctx, Env, Outcome, SkipLevel

PASS, PASS_VACUOUS, FAIL, SKIP = "pass", "pass-vacuous", "fail", "skip"


class UnknownSelection(KeyError):
    """A ``--select`` pattern matched no catalog entry."""


# ---------------------------------------------------------------------------
# witness encoding


def encode_value(U: Universe, v):
    if isinstance(v, SetVal):
        return U.format(v)
    if isinstance(v, FuncView):
        return {"pairs": [[U.format(x), U.format(y)] for x, y in v.pairs]}
    if isinstance(v, frozenset):
        return {"set": sorted(U.format(x) for x in v)}
    if isinstance(v, tuple):
        return {"tuple": [encode_value(U, x) for x in v]}
    raise TypeError(f"cannot encode {type(v).__name__}")


def decode_value(U: Universe, v):
    if isinstance(v, str):
        return U.parse(v)
    if "pairs" in v:
        return FuncView(tuple((U.parse(x), U.parse(y)) for x, y in v["pairs"]))
    if "set" in v:
        return frozenset(U.parse(x) for x in v["set"])
    if "tuple" in v:
        return tuple(decode_value(U, x) for x in v["tuple"])
    raise ValueError(f"cannot decode {v!r}")


# ---------------------------------------------------------------------------
# evaluation


def _hyp_depths(check: Check) -> list:
    names = [n for n, _ in check.variables]
    last = len(names) - 1
    out = []
    for _, _, needs in check.hypotheses:
        out.append(max((names.index(v) for v in needs), default=last) if needs else last)
    return out


def _run_level(check: Check, c: Ctx) -> Outcome:
    if check.vectorized is not None:
        res = check.vectorized(c)
        if res is not None:
            return res
    out = Outcome(filtered={name: 0 for name, _, _ in check.hypotheses})
    depths = _hyp_depths(check)
    variables = check.variables
    by_depth = {}
    for (name, fn, _), d in zip(check.hypotheses, depths):
        by_depth.setdefault(d, []).append((name, fn))
    env = Env()

    def passes(depth) -> bool:
        for name, fn in by_depth.get(depth, ()):
            if not fn(c, env):
                out.filtered[name] += 1
                return False
        return True

    def rec(i) -> bool:
        """Return False to stop (a counterexample was found)."""
        if i == len(variables):
            out.instances += 1
            out.exercised += 1
            if not check.conclusion(c, env):
                out.witness = dict(env)
                return False
            return True
        name, dom = variables[i]
        for v in dom.values(c, env):
            env[name] = v
            if not passes(i):
                out.instances += 1
                continue
            if not rec(i + 1):
                return False
        env.pop(name, None)
        return True

    if not variables:
        if passes(-1):
            rec(0)
        else:
            out.instances += 1
    else:
        rec(0)
    return out


@dataclass
class CheckResult:
    id: str
    anchor: str
    status: str
    reduced: bool
    instances: int = 0
    exercised: int = 0
    filtered: dict = field(default_factory=dict)
    levels: dict = field(default_factory=dict)       # level -> "checked" | "skipped: ..."
    witness: Optional[dict] = None                  # {"level": h, "bindings": {...}}
    millis: Optional[float] = None

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "reduced": self.reduced,
            "vacuity": {
                "instances": self.instances,
                "exercised": self.exercised,
                "filtered": dict(self.filtered),
                "levels": {str(k): v for k, v in self.levels.items()},
            },
            "millis": round(self.millis, 3) if timing and self.millis is not None else None,
        }
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def run_check(check: Check, U: Universe, A: Arithmetic, limit: int = DEFAULT_LIMIT) -> CheckResult:
    t0 = time.perf_counter()
    res = CheckResult(check.id, check.anchor, SKIP, check.reduced,
                      filtered={n: 0 for n, _, _ in check.hypotheses})
    ran = False
    for h in check.levels:
        c = Ctx(U, A, h, limit)
        try:
            out = _run_level(check, c)
        except (SkipLevel, LevelOverflow, BudgetExceeded) as exc:
            res.levels[h] = f"skipped: {exc}"
            continue
        ran = True
        res.levels[h] = "checked"
        res.instances += out.instances
        res.exercised += out.exercised
        for k, v in out.filtered.items():
            res.filtered[k] = res.filtered.get(k, 0) + v
        if out.witness is not None:
            res.witness = {"level": h,
                           "bindings": {k: encode_value(U, v) for k, v in out.witness.items()}}
            res.status = FAIL
            break
    if res.status != FAIL and ran:
        res.status = PASS if res.exercised else PASS_VACUOUS
    res.millis = (time.perf_counter() - t0) * 1000.0
    return res


def _key(v):
    # a decoded FuncView has no backing graph, so compare relations by pairs
    return ("rel", frozenset(v.pairs)) if isinstance(v, FuncView) else v


def replay(check_id: str, U: Universe, witness: dict, A: Optional[Arithmetic] = None) -> bool:
    """Re-evaluate a recorded witness; True when it is still a counterexample
    (every binding lies in its domain, every hypothesis holds and the
    conclusion fails)."""
    check = BY_ID[check_id]
    A = A or Arithmetic(U)
    c = Ctx(U, A, witness["level"], HEAVY_LIMIT)
    bindings = {k: decode_value(U, v) for k, v in witness["bindings"].items()}
    if check.conclusion is None:
        return False
    env = Env()
    for name, dom in check.variables:
        if name not in bindings:
            return False
        if _key(bindings[name]) not in {_key(v) for v in dom.values(c, env)}:
            return False
        env[name] = bindings[name]
    return all(fn(c, env) for _, fn, _ in check.hypotheses) and not check.conclusion(c, env)


# ---------------------------------------------------------------------------
# selection and reports


def select(patterns: Optional[str]) -> list:
    if not patterns:
        return list(CATALOG)
    pats = [p.strip() for p in patterns.split(",") if p.strip()]
    chosen = []
    for p in pats:
        hits = [ch for ch in CATALOG if fnmatch.fnmatchcase(ch.id, p)]
        if not hits:
            raise UnknownSelection(p)
        chosen.extend(h for h in hits if h not in chosen)
    order = {ch.id: i for i, ch in enumerate(CATALOG)}
    return sorted(chosen, key=lambda ch: order[ch.id])


@dataclass
class CheckReport:
    n: int
    L: int
    results: list
    timing: bool = False

    @property
    def summary(self) -> dict:
        s = {"pass": 0, "fail": 0, "skip": 0}
        for r in self.results:
            s["pass" if r.status in (PASS, PASS_VACUOUS) else r.status] += 1
        return s

    def by_id(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.id == check_id:
                return r
        raise KeyError(check_id)

    def to_dict(self) -> dict:
        return {"universe": {"n": self.n, "L": self.L},
                "checks": [r.to_dict(self.timing) for r in self.results],
                "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, indent=1)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            extra = f" exercised={r.exercised}/{r.instances}"
            if r.reduced:
                extra += " reduced"
            if r.witness:
                extra += f" witness@{r.witness['level']}=" + json.dumps(
                    r.witness["bindings"], ensure_ascii=False, sort_keys=True)
            if r.millis is not None and self.timing:
                extra += f" {r.millis:.1f}ms"
            lines.append(f"{r.status:<13}{r.id}{extra}")
        s = self.summary
        lines.append(f"summary: pass={s['pass']} fail={s['fail']} skip={s['skip']}")
        return "\n".join(lines)

    @property
    def exit_code(self) -> int:
        return 1 if self.summary["fail"] else 0


def run_catalog(U: Universe, selection: Optional[str] = None, jobs: int = 1,
                arith: Optional[Arithmetic] = None, heavy: bool = False,
                timing: bool = False) -> CheckReport:
    """Run the selected catalog entries; results keep catalog order."""
    checks = select(selection)
    A = arith if arith is not None else Arithmetic(U)
    limit = HEAVY_LIMIT if heavy else DEFAULT_LIMIT
    if jobs <= 1:
        results = [run_check(ch, U, A, limit) for ch in checks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda ch: run_check(ch, U, A, limit), checks))
    return CheckReport(U.n_atoms, U.L, results, timing)


def check_lemma(check_id: str, U: Universe, arith: Optional[Arithmetic] = None,
                heavy: bool = False) -> CheckResult:
    if check_id not in BY_ID:
        raise UnknownSelection(check_id)
    return run_check(BY_ID[check_id], U, arith or Arithmetic(U),
                     HEAVY_LIMIT if heavy else DEFAULT_LIMIT)


def audit_table() -> str:
    """One line per catalog entry: id, levels, variables, hypotheses."""
    rows = []
    for ch in CATALOG:
        a = ch.audit_row()
        rows.append("\t".join([a["id"], ",".join(map(str, a["levels"])),
                               "; ".join(a["variables"]), "; ".join(a["hypotheses"]),
                               "reduced" if a["reduced"] else "", a["note"]]))
    for k, why in sorted(OUT_OF_SCOPE.items()):
        rows.append(f"{k}\tout-of-scope\t\t\t\t{why}")
    return "\n".join(rows)
