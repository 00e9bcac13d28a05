"""Evaluate closed terms (constants and operators) in a finite universe.

Levels are inferred from the displacement of each operator: the term is
given one free level offset and the smallest shift that makes every
operator meaningful is chosen, unless the caller fixes the level of the
result.  For example ``exp2(two)`` lands at level 3 (exponentiation needs
the members of its cardinals to have power sets) and ``T(zero)`` evaluates
``zero`` at level 2 and yields a cardinal at level 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import formula as F
from .cardinals import Arithmetic, RepCardinal
from .stratifier import DISPLACEMENT, IndexConstraint, OffsetUnionFind
from .universe import BudgetExceeded, LevelOverflow, SetVal, Universe

NUMERALS = ("zero", "one", "two", "three", "four")

#: Operators whose result is a cardinal (printed through the size oracle).
CARDINAL_OPS = frozenset({"succ", "plus", "times", "exp2", "t_op", "nc"})

#: Smallest level at which a node of each kind makes sense.
_MIN_LEVEL = {"succ": 2, "plus": 2, "times": 2, "exp2": 3, "t_op": 3, "nc": 2,
              "j": 3, "jbar": 3, "usc": 1, "ssc": 1, "sc": 1, "singleton": 1,
              "unordered_pair": 1, "opair": 2, "otriple": 4, "prod": 3, "bigunion": 0,
              "image": 0, "ap": 0, "dom": 1, "range": 1}


class EvalError(ValueError):
    """The expression is not a closed term of the evaluation sublanguage."""


class EvalOverflow(RuntimeError):
    """A construction needs a level the universe does not materialise."""


@dataclass
class EvalResult:
    term: object
    level: int
    value: object            # SetVal or RepCardinal

    def is_cardinal(self) -> bool:
        t = self.term
        return ((isinstance(t, F.Const) and t.name in NUMERALS)
                or (isinstance(t, F.App) and t.fsym in CARDINAL_OPS))


class Evaluator:
    def __init__(self, universe: Universe, arith: Optional[Arithmetic] = None):
        self.U = universe
        self.A = arith or Arithmetic(universe)

    # -- level inference ---------------------------------------------------
    def _collect(self, t, uf, nodes, counter):
        counter[0] += 1
        node = f"n{counter[0]}"
        uf.add(node)
        nodes.append((node, t))
        if isinstance(t, F.Var):
            raise EvalError(f"free variable {t.name!r}: only closed terms can be evaluated")
        if isinstance(t, F.Compr):
            raise EvalError("comprehension terms cannot be evaluated")
        if isinstance(t, F.Const):
            if t.name not in NUMERALS and t.name not in ("Lambda", "V"):
                raise EvalError(f"class constant {t.name!r} is not a set of the universe")
            return node
        args = [self._collect(a, uf, nodes, counter) for a in t.args]
        disp = DISPLACEMENT[t.fsym]
        cons = [IndexConstraint(args[i], args[j], 0) for i, j in disp["same"]]
        cons += [IndexConstraint(args[i], args[j], d) for i, j, d in disp["rel"]]
        base, d = disp["result"]
        cons.append(IndexConstraint(node, args[base], d))
        for c in cons:
            if uf.union(c) is not None:
                raise EvalError(f"{F.render(t)}: arguments live at incompatible levels")
        return node

    def levels(self, term, level: Optional[int] = None) -> dict:
        """Map ``id(node)`` → level for every subterm."""
        uf = OffsetUnionFind()
        nodes = []
        root = self._collect(term, uf, nodes, [0])
        pot = {n: uf.potential(n) for n, _ in nodes}
        if level is None:
            need = []
            for n, t in nodes:
                lo = 0
                if isinstance(t, F.Const):
                    lo = 2 if t.name in NUMERALS else 1
                if isinstance(t, F.App):
                    lo = _MIN_LEVEL.get(t.fsym, 0)
                need.append(lo - pot[n])
            shift = max(need)
        else:
            shift = level - pot[root]
        out = {}
        for n, t in nodes:
            lv = pot[n] + shift
            if lv < 0:
                raise EvalError(f"{F.render(t)} would sit at negative level {lv}")
            out[id(t)] = lv
        return out

    # -- evaluation --------------------------------------------------------
    def evaluate(self, term, level: Optional[int] = None) -> EvalResult:
        if isinstance(term, str):
            try:
                term = F.parse_term(term)
            except F.ParseError as exc:
                raise EvalError(str(exc)) from exc
        lv = self.levels(term, level)
        value = self._eval(term, lv)
        return EvalResult(term, lv[id(term)], value)

    def _eval(self, t, lv):
        h = lv[id(t)]
        U, A = self.U, self.A
        try:
            if isinstance(t, F.Const):
                if t.name == "Lambda":
                    return SetVal(h, 0) if h <= U.L + 1 else RepCardinal(h, None)
                if t.name == "V":
                    return U.full(h)
                return A.numeral(t.name, h)
            a = [self._eval(x, lv) for x in t.args]
            f = t.fsym
            if f == "t_op" and h > U.L + 1:
                return A.t_rep(a[0])
            ops = {
                "singleton": lambda: U.mk_singleton(a[0]),
                "unordered_pair": lambda: U.mk_upair(a[0], a[1]),
                "opair": lambda: U.mk_opair(a[0], a[1]),
                "otriple": lambda: U.mk_otriple(a[0], a[1], a[2]),
                "union2": lambda: U.union(a[0], a[1]),
                "inter2": lambda: U.inter(a[0], a[1]),
                "diff": lambda: U.diff(a[0], a[1]),
                "bigunion": lambda: U.bigunion(a[0]),
                "usc": lambda: U.usc(a[0]),
                "ssc": lambda: U.ssc(a[0]),
                "sc": lambda: U.sc(a[0]),
                "nc": lambda: A.nc(a[0]),
                "succ": lambda: A.succ(a[0]),
                "plus": lambda: A.add(a[0], a[1]),
                "times": lambda: A.mul(a[0], a[1]),
                "exp2": lambda: A.exp2(a[0]),
                "t_op": lambda: A.t_op(a[0]),
                "j": lambda: A.j_set(a[0]),
                "jbar": lambda: A.j_bar(a[0]),
                "prod": lambda: U.product(a[0], a[1]),
                "image": lambda: U.image(a[0], a[1]),
                "ap": lambda: U.ap(a[0], a[1]),
                "dom": lambda: U.dom(a[0]),
                "range": lambda: U.range(a[0]),
            }
            if any(isinstance(x, RepCardinal) for x in a):
                raise LevelOverflow(f"argument of {f} is beyond the materialised levels")
            return ops[f]()
        except (LevelOverflow, BudgetExceeded) as exc:
            raise EvalOverflow(f"{F.render(t)} at level {h}: {exc}") from exc

    # -- printing ----------------------------------------------------------
    def show(self, res: EvalResult, raw: bool = False) -> str:
        v = res.value
        if isinstance(v, RepCardinal):
            line = str(v)
        elif res.is_cardinal() or (v.level >= 2 and self.A.is_cardinal(v) and v.bits):
            line = self.A.describe(v)
            if v.bits == 0:
                line += " = Λ"
            else:
                for name in NUMERALS:
                    if self.A.numeral(name, v.level) == v:
                        line += f" = {name}"
                        break
        else:
            line = self.U.format(v)
        if raw and isinstance(v, SetVal) and line != self.U.format(v):
            line += "\n" + self.U.format(v)
        return line
