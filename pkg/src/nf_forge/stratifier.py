"""Stratification checking by integer-offset constraint solving.

Every variable (each binder introduces its own variable node; free variables
get one node each) and every compound term occurrence becomes a node.  Atoms
and function symbols generate constraints ``idx(left) = idx(right) + offset``
which are solved with a union-find that keeps, for every node, its offset
from the representative of its class.  When two nodes that are already
connected are asked to satisfy an incompatible offset, the path between them
through previously accepted constraints closes a cycle with nonzero net
offset; that cycle is returned as the conflict witness.
"""

from __future__ import annotations

import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import formula as F

__all__ = [
    "IndexConstraint", "StratResult", "OffsetUnionFind", "ConstraintSystem",
    "STRATIFIED", "WEAKLY_STRATIFIED", "UNSTRATIFIED",
    "CLASS_CONSTANTS", "DISPLACEMENT",
    "generate_constraints", "stratify", "stratify_wrt", "check_comprehension",
    "CorpusRecord", "RecordResult", "Report", "read_corpus", "parse_corpus_line",
    "batch_check",
]

STRATIFIED = "Stratified"
WEAKLY_STRATIFIED = "WeaklyStratified"
UNSTRATIFIED = "Unstratified"

#: Constants naming classes.  Like free variables they share one node per
#: formula (so two occurrences at different levels clash) and they may be
#: treated as parameters in weak stratification.  The remaining constants
#: (Lambda, V and the numerals) are index-free with a fresh node per use.
CLASS_CONSTANTS = frozenset({"FIN", "DEC", "Ffin", "SF", "Ggraph"})

#: Displacement table.  For each function symbol: the list of equalities
#: between arguments ``(i, j)`` meaning idx(arg_i) = idx(arg_j) plus extra
#: argument offsets ``(i, j, d)`` meaning idx(arg_i) = idx(arg_j) + d, and the
#: result offset relative to argument ``base``: idx(result) = idx(arg_base) + d.
DISPLACEMENT = {
    "singleton":      {"same": [], "rel": [], "result": (0, 1)},
    "unordered_pair": {"same": [(1, 0)], "rel": [], "result": (0, 1)},
    "opair":          {"same": [(1, 0)], "rel": [], "result": (0, 2)},
    "otriple":        {"same": [(1, 0), (2, 0)], "rel": [], "result": (0, 4)},
    "union2":         {"same": [(1, 0)], "rel": [], "result": (0, 0)},
    "inter2":         {"same": [(1, 0)], "rel": [], "result": (0, 0)},
    "diff":           {"same": [(1, 0)], "rel": [], "result": (0, 0)},
    "plus":           {"same": [(1, 0)], "rel": [], "result": (0, 0)},
    "times":          {"same": [(1, 0)], "rel": [], "result": (0, 0)},
    "succ":           {"same": [], "rel": [], "result": (0, 0)},
    "exp2":           {"same": [], "rel": [], "result": (0, 0)},
    "bigunion":       {"same": [], "rel": [], "result": (0, -1)},
    "usc":            {"same": [], "rel": [], "result": (0, 1)},
    "ssc":            {"same": [], "rel": [], "result": (0, 1)},
    "sc":             {"same": [], "rel": [], "result": (0, 1)},
    "nc":             {"same": [], "rel": [], "result": (0, 1)},
    "t_op":           {"same": [], "rel": [], "result": (0, 1)},
    "j":              {"same": [], "rel": [], "result": (0, 1)},
    "jbar":           {"same": [], "rel": [], "result": (0, 1)},
    "prod":           {"same": [(1, 0)], "rel": [], "result": (0, 2)},
    "image":          {"same": [], "rel": [(0, 1, 2)], "result": (1, 0)},
    "ap":             {"same": [], "rel": [(0, 1, 3)], "result": (1, 0)},
    "dom":            {"same": [], "rel": [], "result": (0, -2)},
    "range":          {"same": [], "rel": [], "result": (0, -2)},
}


@dataclass(frozen=True)
class IndexConstraint:
    """``idx(left) = idx(right) + offset``."""

    left: str
    right: str
    offset: int

    def flipped(self) -> "IndexConstraint":
        return IndexConstraint(self.right, self.left, -self.offset)

    def holds(self, assignment: dict) -> bool:
        return assignment[self.left] == assignment[self.right] + self.offset

    def __str__(self):
        sign = "+" if self.offset >= 0 else "-"
        return f"idx({self.left}) = idx({self.right}) {sign} {abs(self.offset)}"

    def to_json(self):
        return {"left": self.left, "right": self.right, "offset": self.offset}


@dataclass
class StratResult:
    verdict: str
    assignment: Optional[dict] = None
    conflict: Optional[list] = None
    eigen_index: Optional[int] = None
    term_index: Optional[int] = None
    excluded: tuple = ()
    variables: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict != UNSTRATIFIED

    def index_of(self, name: str) -> Optional[int]:
        """Index of the variable (or class constant) printed as ``name``."""
        node = self.variables.get(name, name)
        if self.assignment is None:
            return None
        return self.assignment.get(node)

    def net_offset(self) -> int:
        return sum(c.offset for c in self.conflict or ())

    def to_json(self) -> dict:
        out = {"verdict": self.verdict}
        if self.assignment is not None:
            out["assignment"] = dict(sorted(self.assignment.items()))
        if self.conflict is not None:
            out["conflict"] = [c.to_json() for c in self.conflict]
            out["net_offset"] = self.net_offset()
        if self.eigen_index is not None:
            out["eigen_index"] = self.eigen_index
        if self.term_index is not None:
            out["term_index"] = self.term_index
        if self.excluded:
            out["parameters"] = list(self.excluded)
        return out


class OffsetUnionFind:
    """Union-find over named nodes keeping integer offsets to the root.

    ``potential(x)`` is ``idx(x) - idx(root(x))``.  Accepted constraints are
    also kept as an undirected adjacency list (a spanning forest), which is
    used to extract the witness cycle when a constraint is rejected.
    """

    def __init__(self):
        self.parent: dict = {}
        self.pot: dict = {}
        self.rank: dict = {}
        self.tree: dict = {}

    def add(self, x: str) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.pot[x] = 0
            self.rank[x] = 0
            self.tree[x] = []

    def find(self, x: str):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # Path compression: accumulate offsets from the top of the path down.
        acc = 0
        for node in reversed(path):
            acc += self.pot[node]
            self.pot[node] = acc
            self.parent[node] = root
        return root

    def potential(self, x: str) -> int:
        self.find(x)
        return self.pot[x] if self.parent[x] != x else 0

    def union(self, c: IndexConstraint) -> Optional[list]:
        """Impose ``c``.  Return ``None`` on success or the conflict cycle."""
        a, b, d = c.left, c.right, c.offset
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.potential(a), self.potential(b)
        if ra == rb:
            if pa - pb == d:
                return None
            return [c] + self._path(b, a)
        # idx(ra) = idx(rb) + x with x = pb + d - pa
        x = pb + d - pa
        if self.rank[ra] > self.rank[rb]:
            ra, rb, x = rb, ra, -x
        self.parent[ra] = rb
        self.pot[ra] = x
        if self.rank[ra] == self.rank[rb]:
            self.rank[rb] += 1
        self.tree[a].append(c)
        self.tree[b].append(c.flipped())
        return None

    def _path(self, src: str, dst: str) -> list:
        """Accepted constraints leading from ``src`` to ``dst`` (oriented)."""
        if src == dst:
            return []
        prev = {src: None}
        queue = deque([src])
        while queue:
            node = queue.popleft()
            if node == dst:
                break
            for edge in self.tree[node]:
                if edge.right not in prev:
                    prev[edge.right] = edge
                    queue.append(edge.right)
        out = []
        node = dst
        while node != src:
            edge = prev[node]
            out.append(edge)
            node = edge.left
        out.reverse()
        return out


@dataclass
class ConstraintSystem:
    """Nodes and constraints generated from one formula."""

    nodes: list
    constraints: list
    variables: dict          # printed variable name -> node id (free vars and binders)
    free_nodes: dict         # free variable / class constant name -> node id
    binder_nodes: dict = field(default_factory=dict)


class _Generator:
    def __init__(self, phi, reserved=()):
        self.nodes: list = []
        self.constraints: list = []
        self.variables: dict = {}
        self.free_nodes: dict = {}
        self.term_count = 0
        self.used = set(reserved)
        for name in sorted(F.free_vars(phi)):
            self._new_var_node(name, free=True)

    def _new_node(self, node_id: str) -> str:
        self.nodes.append(node_id)
        self.used.add(node_id)
        return node_id

    def _new_var_node(self, name: str, free=False) -> str:
        node_id = name
        k = 1
        while node_id in self.used:
            k += 1
            node_id = f"{name}#{k}"
        self._new_node(node_id)
        if free:
            self.free_nodes[name] = node_id
        self.variables.setdefault(name, node_id)
        return node_id

    def _term_node(self, label: str) -> str:
        self.term_count += 1
        return self._new_node(f"t{self.term_count}:{label}")

    def emit(self, left: str, right: str, offset: int):
        self.constraints.append(IndexConstraint(left, right, offset))

    def term(self, t, env) -> str:
        if isinstance(t, F.Var):
            if t.name in env:
                return env[t.name]
            return self.free_nodes[t.name]
        if isinstance(t, F.Const):
            if t.name in CLASS_CONSTANTS:
                if t.name not in self.free_nodes:
                    node = self._new_node(t.name if t.name not in self.used else t.name + "#c")
                    self.free_nodes[t.name] = node
                    self.variables.setdefault(t.name, node)
                return self.free_nodes[t.name]
            return self._term_node(t.name)
        if isinstance(t, F.App):
            args = [self.term(a, env) for a in t.args]
            node = self._term_node(F.render(t))
            disp = DISPLACEMENT[t.fsym]
            for i, j in disp["same"]:
                self.emit(args[i], args[j], 0)
            for i, j, d in disp["rel"]:
                self.emit(args[i], args[j], d)
            base, d = disp["result"]
            self.emit(node, args[base], d)
            return node
        if isinstance(t, F.Compr):
            node = self._term_node(F.render(t))
            var_node = self._new_var_node(t.var)
            inner = dict(env)
            inner[t.var] = var_node
            self.formula(t.body, inner)
            self.emit(node, var_node, 1)
            return node
        raise TypeError(f"not a term: {t!r}")

    def formula(self, f, env):
        if isinstance(f, F.Mem):
            a = self.term(f.left, env)
            b = self.term(f.right, env)
            self.emit(b, a, 1)
        elif isinstance(f, F.Eq):
            a = self.term(f.left, env)
            b = self.term(f.right, env)
            self.emit(a, b, 0)
        elif isinstance(f, (F.And, F.Or, F.Implies, F.Iff)):
            self.formula(f.left, env)
            self.formula(f.right, env)
        elif isinstance(f, F.Not):
            self.formula(f.body, env)
        elif isinstance(f, (F.Forall, F.Exists)):
            inner = dict(env)
            inner[f.var] = self._new_var_node(f.var)
            self.formula(f.body, inner)
        elif isinstance(f, (F.Truth, F.Falsity)):
            pass
        else:
            raise TypeError(f"not a formula: {f!r}")


def generate_constraints(phi) -> ConstraintSystem:
    """Build the node set and index constraints for a formula or term."""
    gen = _Generator(phi)
    if isinstance(phi, (F.Var, F.Const, F.App, F.Compr)):
        gen.term(phi, {})
    else:
        gen.formula(phi, {})
    return ConstraintSystem(gen.nodes, gen.constraints, gen.variables, gen.free_nodes)


def _solve(nodes, constraints):
    uf = OffsetUnionFind()
    for n in nodes:
        uf.add(n)
    for c in constraints:
        conflict = uf.union(c)
        if conflict is not None:
            return None, conflict
    # Normalise each connected class so that its minimum index is 0.
    raw = {n: uf.potential(n) for n in nodes}
    roots = {n: uf.find(n) for n in nodes}
    low: dict = {}
    for n in nodes:
        r = roots[n]
        low[r] = min(low.get(r, raw[n]), raw[n])
    return {n: raw[n] - low[roots[n]] for n in nodes}, None


def _parameter_nodes(system: ConstraintSystem, phi, eigen: Optional[str]) -> dict:
    params = parameters_with_classes(phi, eigen)
    return {name: system.free_nodes[name] for name in sorted(params) if name in system.free_nodes}


def parameters_with_classes(phi, eigen: Optional[str]) -> set:
    """Parameters of ``phi`` for ``eigen`` including class-constant parameters."""
    positions: dict = {}
    for name, pos in _occurrences(phi):
        positions.setdefault(name, set()).add(pos)
    return {n for n, p in positions.items() if n != eigen and p == {"param"}}


def _occurrences(node, bound=frozenset(), position="other"):
    if isinstance(node, F.Var):
        if node.name not in bound:
            yield node.name, position
    elif isinstance(node, F.Const):
        if node.name in CLASS_CONSTANTS:
            yield node.name, position
    elif isinstance(node, F.App):
        for a in node.args:
            yield from _occurrences(a, bound, "other")
    elif isinstance(node, (F.Compr, F.Forall, F.Exists)):
        yield from _occurrences(node.body, bound | {node.var})
    elif isinstance(node, F.Not):
        yield from _occurrences(node.body, bound)
    elif isinstance(node, F.Mem):
        yield from _occurrences(node.left, bound, "other")
        yield from _occurrences(node.right, bound, "param")
    elif isinstance(node, F.Eq):
        yield from _occurrences(node.left, bound, "other")
        yield from _occurrences(node.right, bound, "other")
    elif isinstance(node, (F.And, F.Or, F.Implies, F.Iff)):
        yield from _occurrences(node.left, bound)
        yield from _occurrences(node.right, bound)


def stratify(phi) -> StratResult:
    """Decide whether ``phi`` is stratified; return assignment or conflict."""
    system = generate_constraints(phi)
    assignment, conflict = _solve(system.nodes, system.constraints)
    if conflict is not None:
        return StratResult(UNSTRATIFIED, conflict=conflict, variables=system.variables)
    return StratResult(STRATIFIED, assignment=assignment, variables=system.variables)


def stratify_wrt(phi, eigen: str) -> StratResult:
    """Decide (weak) stratification of ``phi`` with respect to ``eigen``.

    A formula that is stratified outright is reported as Stratified.
    Otherwise the parameters (free variables and class constants other than
    ``eigen`` occurring only as bare right operands of ``in``) are dropped
    from the constraint graph and the remaining system is solved again.
    """
    system = generate_constraints(phi)
    assignment, conflict = _solve(system.nodes, system.constraints)
    verdict = STRATIFIED
    excluded: tuple = ()
    if conflict is not None:
        params = _parameter_nodes(system, phi, eigen)
        dropped = set(params.values())
        nodes = [n for n in system.nodes if n not in dropped]
        constraints = [c for c in system.constraints
                       if c.left not in dropped and c.right not in dropped]
        assignment, conflict = _solve(nodes, constraints)
        if conflict is not None:
            return StratResult(UNSTRATIFIED, conflict=conflict,
                               excluded=tuple(params), variables=system.variables)
        verdict = WEAKLY_STRATIFIED
        excluded = tuple(params)
    eigen_node = system.free_nodes.get(eigen)
    eigen_index = assignment.get(eigen_node) if eigen_node is not None else None
    return StratResult(verdict, assignment=assignment, eigen_index=eigen_index,
                       excluded=excluded, variables=system.variables)


def check_comprehension(t: F.Compr) -> StratResult:
    """Check that ``{ v : body }`` is a legal comprehension instance."""
    if not isinstance(t, F.Compr):
        raise TypeError("check_comprehension expects a comprehension term")
    res = stratify_wrt(t.body, t.var)
    if res.ok:
        if res.eigen_index is None:
            # The bound variable does not occur: give it index 0.
            res.eigen_index = 0
        res.term_index = res.eigen_index + 1
    return res


# ---------------------------------------------------------------------------
# Corpus handling


@dataclass(frozen=True)
class CorpusRecord:
    name: str
    expect: str          # "PASS" or "FAIL"
    mode: str            # "strat" or "strat-wrt:VAR"
    text: str
    line: int = 0

    @property
    def eigen(self) -> Optional[str]:
        if self.mode.startswith("strat-wrt:"):
            return self.mode.split(":", 1)[1]
        return None


@dataclass
class RecordResult:
    record: CorpusRecord
    got: str                  # "PASS", "FAIL" or "ERROR"
    result: Optional[StratResult] = None
    error: Optional[str] = None

    @property
    def matched(self) -> bool:
        return self.got == self.record.expect

    def detail(self) -> str:
        if self.error:
            return self.error
        res = self.result
        if res.verdict == UNSTRATIFIED:
            return "conflict: " + "; ".join(str(c) for c in res.conflict)
        extra = f" parameters={','.join(res.excluded)}" if res.excluded else ""
        return res.verdict + extra


@dataclass
class Report:
    results: list

    @property
    def mismatches(self) -> int:
        return sum(not r.matched for r in self.results)

    @property
    def exit_code(self) -> int:
        return 1 if self.mismatches else 0

    def summary(self) -> dict:
        return {
            "records": len(self.results),
            "matched": len(self.results) - self.mismatches,
            "mismatched": self.mismatches,
        }

    def to_tsv(self) -> str:
        lines = ["name\texpected\tgot\teigen_index\tdetail"]
        for r in self.results:
            eig = ""
            if r.result is not None and r.result.eigen_index is not None:
                eig = str(r.result.eigen_index)
            lines.append(f"{r.record.name}\t{r.record.expect}\t{r.got}\t{eig}\t{r.detail()}")
        s = self.summary()
        lines.append(f"# {s['records']} records, {s['matched']} matched, "
                     f"{s['mismatched']} mismatched")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        recs = []
        for r in self.results:
            item = {"name": r.record.name, "expected": r.record.expect,
                    "mode": r.record.mode, "got": r.got}
            if r.error:
                item["error"] = r.error
            if r.result is not None:
                item.update(r.result.to_json())
            recs.append(item)
        return json.dumps({"records": recs, "summary": self.summary()},
                          indent=2, ensure_ascii=False) + "\n"


def parse_corpus_line(line: str, lineno: int = 0) -> Optional[CorpusRecord]:
    """Parse one corpus line; blank lines and ``#`` comments give ``None``."""
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    parts = line.rstrip("\n").split("\t")
    if len(parts) != 4:
        raise ValueError(f"line {lineno}: expected 4 tab-separated fields, got {len(parts)}")
    name, expect, mode, text = (p.strip() for p in parts)
    if expect not in ("PASS", "FAIL"):
        raise ValueError(f"line {lineno}: EXPECT must be PASS or FAIL, got {expect!r}")
    if mode != "strat" and not (mode.startswith("strat-wrt:") and len(mode) > 10):
        raise ValueError(f"line {lineno}: MODE must be strat or strat-wrt:VAR, got {mode!r}")
    return CorpusRecord(name, expect, mode, text, lineno)


def read_corpus(text: str) -> list:
    out = []
    for i, line in enumerate(text.splitlines(), start=1):
        rec = parse_corpus_line(line, i)
        if rec is not None:
            out.append(rec)
    return out


def check_record(rec: CorpusRecord) -> RecordResult:
    try:
        phi = F.parse_formula(rec.text)
    except F.ParseError as exc:
        return RecordResult(rec, "ERROR", error=f"parse error: {exc}")
    if rec.eigen is None:
        res = stratify(phi)
    else:
        res = stratify_wrt(phi, rec.eigen)
    return RecordResult(rec, "PASS" if res.ok else "FAIL", res)


def batch_check(records, jobs: int = 1) -> Report:
    """Check every record; results are reported in input order."""
    records = list(records)
    if jobs > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(check_record, records))
    else:
        results = [check_record(r) for r in records]
    return Report(results)
