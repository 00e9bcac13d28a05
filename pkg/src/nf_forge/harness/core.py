"""Building blocks for declarative lemma checks.

A :class:`Check` is data: named variables ranging over :class:`Domain`
values, an ordered list of named hypotheses, and a conclusion.  The runner
enumerates every instance of the variables, counts which hypothesis (if any)
filtered it out, and evaluates the conclusion on the survivors.

Predicates and domains receive a :class:`Ctx` (the universe, the arithmetic
engine and the home level ``h`` being checked) and an environment ``e``
mapping variable names to values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from ..cardinals import Arithmetic, RepCardinal
from ..universe import FuncView, LevelOverflow, SetVal, Universe, _submasks, mask_from_indices

#: Largest number of sets a domain may enumerate at one level by default.
DEFAULT_LIMIT = 256
#: Limit used with ``heavy=True``.
HEAVY_LIMIT = 1 << 16
#: Number of extra pseudo-random sets mixed into domains over a level that
#: cannot be enumerated.
SAMPLE_SIZE = 24
SAMPLE_SEED = 20240601


class SkipLevel(Exception):
    """Raised when a level cannot be checked in the current universe."""


class Ctx:
    """Evaluation context: universe, arithmetic and home level."""

    def __init__(self, U: Universe, A: Arithmetic, h: int, limit: int = DEFAULT_LIMIT):
        self.U = U
        self.A = A
        self.h = h
        self.limit = limit

    def at(self, h: int) -> "Ctx":
        return Ctx(self.U, self.A, h, self.limit)

    @property
    def up(self) -> "Ctx":
        return self.at(self.h + 1)

    # -- sets ---------------------------------------------------------------
    def sets(self, level: int) -> list:
        """Every set at ``level`` (level L+1 included when small enough)."""
        U = self.U
        if level < 0:
            raise SkipLevel("negative level")
        if level > U.L + 1:
            raise SkipLevel(f"level {level} is not enumerable (L={U.L})")
        n = U.size(level) if level <= U.L else None
        if level == U.L + 1:
            if U.size(U.L) >= 32 or (1 << U.size(U.L)) > self.limit:
                raise SkipLevel(f"level {level} has 2^{U.size(U.L)} sets")
            return [SetVal(level, k) for k in range(1 << U.size(U.L))]
        if n > self.limit:
            raise SkipLevel(f"level {level} has {n} sets, over the limit {self.limit}")
        return U.elements(level)

    def any_sets(self, level: int) -> list:
        """All sets at ``level`` if enumerable, otherwise the semifinite
        cardinals, Λ, the full set and a fixed pseudo-random sample."""
        try:
            return self.sets(level)
        except SkipLevel:
            pass
        if level - 1 > self.U.L:
            raise SkipLevel(f"level {level} sets are not representable")
        width = self.U.size(level - 1)
        if width > self.limit:
            raise SkipLevel(f"level {level} is too wide ({width})")
        out = list(self.A.SF(level)) if level >= 2 else []
        extra = [SetVal(level, 0), SetVal(level, (1 << width) - 1)]
        rng = np.random.default_rng(SAMPLE_SEED + level)
        for i in range(SAMPLE_SIZE):
            density = (i + 1) / (SAMPLE_SIZE + 1)
            bits = np.nonzero(rng.random(width) < density)[0]
            extra.append(SetVal(level, mask_from_indices(int(b) for b in bits)))
        seen = set(out)
        for x in extra:
            if x not in seen:
                seen.add(x)
                out.append(x)
        return out

    def _cardinal_level(self):
        h = self.h
        if h < 2:
            raise SkipLevel("cardinals live at level >= 2")
        if h - 1 > self.U.L:
            raise SkipLevel(f"cardinals at level {h} need level {h - 1} enumerated")
        if self.U.size(h - 1) > self.limit:
            raise SkipLevel(f"level {h - 1} has {self.U.size(h - 1)} sets, over the limit {self.limit}")

    @property
    def F(self) -> list:
        self._cardinal_level()
        return self.A.F(self.h)

    @property
    def SF(self) -> list:
        self._cardinal_level()
        return self.A.SF(self.h)

    def num(self, name: str) -> SetVal:
        self._cardinal_level()
        return self.A.numeral(name, self.h)

    zero = property(lambda self: self.num("zero"))
    one = property(lambda self: self.num("one"))
    two = property(lambda self: self.num("two"))
    three = property(lambda self: self.num("three"))
    four = property(lambda self: self.num("four"))

    @property
    def lam(self) -> SetVal:
        return SetVal(self.h, 0)

    # -- arithmetic shorthands ----------------------------------------------
    def s(self, x):
        return self.A.succ(x)

    def add(self, x, y):
        return self.A.add(x, y)

    def mul(self, x, y):
        return self.A.mul(x, y)

    def exp(self, x):
        return self.A.exp2(x)

    def T(self, x):
        return self.A.t_op(x)

    def le(self, x, y):
        return self.A.card_le(x, y)

    def lt(self, x, y):
        return self.A.card_lt(x, y)

    def inF(self, x):
        return self.A.in_F(x)

    def inSF(self, x):
        return self.A.in_SF(x)

    def inG(self, x, y, z):
        return self.A.in_G(x, y, z)

    def nc(self, x):
        return self.A.nc(x)

    @staticmethod
    def inh(x) -> bool:
        if isinstance(x, RepCardinal):
            return x.inhabited()
        return x.bits != 0

    # -- set shorthands -----------------------------------------------------
    def fin(self, x) -> bool:
        return self.U.is_finite(x)

    def dec(self, x) -> bool:
        return self.U.has_dec_eq(x)

    def sim(self, x, y) -> bool:
        return self.U.similar(x, y)

    def simw(self, x, y) -> bool:
        """Similarity established through an explicit, validated bijection
        when the members are small enough (level <= 1 sets), otherwise by
        the counting test."""
        if x.level <= 1:
            return self.U.similar(x, y, witness=True) is not None
        return self.U.similar(x, y)

    def ssc(self, x) -> SetVal:
        return self.A._memo(("ssc", x.level, x.bits), lambda: self.U.ssc(x))

    def usc(self, x) -> SetVal:
        return self.A._memo(("usc", x.level, x.bits), lambda: self.U.usc(x))

    def sub(self, x, y) -> bool:
        return self.U.subset(x, y)

    def sep(self, u, x) -> bool:
        """``u`` is a separable subset of ``x``."""
        return self.U.subset(u, x) and self.U.separable_in(u, x)

    def mem(self, x, y) -> bool:
        """``y in x``."""
        return self.U.contains(x, y)


class Env(dict):
    """Variable bindings; values are also reachable as attributes."""

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name) from None


@dataclass(frozen=True)
class Domain:
    """A named range for one variable; ``fn(ctx, env)`` yields the values."""

    name: str
    fn: Callable

    def values(self, c: Ctx, e: dict) -> Iterable:
        return self.fn(c, e)


@dataclass(frozen=True)
class Check:
    """One catalog entry."""

    id: str
    anchor: str
    levels: tuple
    variables: tuple = ()
    hypotheses: tuple = ()
    conclusion: Optional[Callable] = None
    reduced: bool = False
    note: str = ""
    vectorized: Optional[Callable] = None   # fast path: fn(ctx) -> Outcome
    level_name: str = "h"

    def audit_row(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "levels": list(self.levels),
            "variables": [f"{n} ∈ {d.name}" for n, d in self.variables],
            "hypotheses": [n for n, _, _ in self.hypotheses],
            "reduced": self.reduced,
            "note": self.note,
        }


@dataclass
class Outcome:
    """Result of evaluating one check at one level."""

    instances: int = 0
    exercised: int = 0
    filtered: dict = field(default_factory=dict)
    witness: Optional[dict] = None   # variable name -> value


# ---------------------------------------------------------------------------
# Domain constructors


def D(name: str, fn: Callable) -> Domain:
    return Domain(name, fn)


dF = Domain("F", lambda c, e: c.F)
dSF = Domain("SF", lambda c, e: c.SF)
dAny = Domain("all sets at h", lambda c, e: c.any_sets(c.h))


def dF_at(k: int) -> Domain:
    return Domain(f"F@h{k:+d}", lambda c, e: c.at(c.h + k).F)


def dU(k: int) -> Domain:
    """All sets at level h+k."""
    return Domain(f"U[h{k:+d}]", lambda c, e: c.sets(c.h + k))


def dMembers(var: str) -> Domain:
    return Domain(f"members({var})", lambda c, e: c.U.members(e[var]))


def dSubsets(var: str) -> Domain:
    return Domain(f"subsets({var})",
                  lambda c, e: [SetVal(e[var].level, m) for m in _submasks(e[var].bits)])


def dSSCmembers(var: str) -> Domain:
    return Domain(f"SSC({var})", lambda c, e: c.U.members(c.ssc(e[var])))


def relations(U: Universe, X: SetVal, Y: SetVal) -> list:
    """Every relation ``f ⊆ X × Y`` (materialised graphs when possible)."""
    pairs = [(x, y) for x in U.members(X) for y in U.members(Y)]
    if X.level + 1 <= U.L:
        codes = [U.mk_opair(x, y).bits for x, y in pairs]
        out = []
        for r in range(1 << len(pairs)):
            out.append(SetVal(X.level + 2, mask_from_indices(
                codes[i] for i in range(len(pairs)) if (r >> i) & 1)))
        return out
    out = []
    for r in range(1 << len(pairs)):
        out.append(FuncView(tuple(pairs[i] for i in range(len(pairs)) if (r >> i) & 1)))
    return out


def dRelations(X: str, Y: str, max_pairs: int = 9) -> Domain:
    def fn(c, e):
        n = len(e[X]) * len(e[Y])
        if n > max_pairs:
            raise SkipLevel(f"relations on {n} pairs exceed the bound {max_pairs}")
        return relations(c.U, e[X], e[Y])
    return Domain(f"relations ⊆ {X}×{Y}", fn)


def dFsubsets() -> Domain:
    """Subsets of F at level h, as frozensets of cardinals."""
    def fn(c, e):
        F = c.F
        if len(F) > 12:
            raise SkipLevel("too many subsets of F")
        return [frozenset(s) for r in range(len(F) + 1)
                for s in itertools.combinations(F, r)]
    return Domain("subsets of F", fn)


def dGtriples() -> Domain:
    def fn(c, e):
        c._cardinal_level()
        g = c.A.mul_graph(c.h)
        return [tuple(SetVal(c.h, b) for b in t) for t in sorted(g.triples)]
    return Domain("triples of G", fn)


def dConst(name: str, fn: Callable) -> Domain:
    """A single value computed from the context."""
    return Domain(name, lambda c, e: [fn(c, e)])
