"""Frege-style finite cardinal arithmetic evaluated extensionally.

A cardinal at *home level* ``h`` is a set at level ``h`` whose members are
level ``h-1`` sets.  All operations follow their defining comprehensions:

* ``succ(k)``  = { z ∪ {a} : z ∈ k, a ∉ z }
* ``add(x,y)`` = { u ∪ v : u ∈ x, v ∈ y, u ∩ v = Λ }
* ``mul(x,y)`` = ⋃ { z : <x,y,z> ∈ G }, G the least relation with the base
  triples and closed under <x,y,z> ↦ <x, y⁺, z + x>
* ``exp2(m)``  = { u : ∃a (USC(a) ∈ m ∧ u ∼ SSC(a)) }
* ``t_op(k)``  = { u : ∃x (x ∈ k ∧ u ∼ USC(x)) }

When no witnessing sets exist the result is the empty set Λ ("overflow").
Cardinals one level above the enumerated part of the universe cannot be
materialised; they are handled as :class:`RepCardinal` values carrying one
representative member, compared by similarity of representatives.

:class:`SymCardinal` is an independent size-based oracle used to
cross-check the extensional engine.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .universe import LevelOverflow, SetVal, Universe, indices_of, mask_from_indices

__all__ = [
    "Arithmetic", "RepCardinal", "SymCardinal", "OVERFLOW", "NotACardinal",
    "MulGraph", "NUMERALS", "capacity",
    "sym_add", "sym_mul", "sym_succ", "sym_exp2", "sym_t",
]

NUMERALS = ("zero", "one", "two", "three", "four")


class NotACardinal(ValueError):
    """Raised when a size is requested for a set that is not a cardinal."""


class _Overflow:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "OVERFLOW"

    def __reduce__(self):
        return (_Overflow, ())


#: The "not a number" size, corresponding to the empty set Λ.
OVERFLOW = _Overflow()


@dataclass(frozen=True)
class SymCardinal:
    """Symbolic twin of a cardinal: its home level and member size."""

    level: int
    size: Union[int, _Overflow]

    def __str__(self):
        if self.size is OVERFLOW:
            return f"C(level={self.level}, OVERFLOW)"
        return f"C(level={self.level}, size={self.size})"

    @property
    def overflow(self) -> bool:
        return self.size is OVERFLOW


def capacity(U: Universe, home: int) -> int:
    """Largest size of a member of a cardinal at ``home``: |U_{home-2}|."""
    return U.size(home - 2)


def _sat(U, level, k):
    if k is OVERFLOW or k > capacity(U, level):
        return SymCardinal(level, OVERFLOW)
    return SymCardinal(level, k)


def sym_succ(U: Universe, a: SymCardinal) -> SymCardinal:
    if a.overflow:
        return a
    return _sat(U, a.level, a.size + 1)


def sym_add(U: Universe, a: SymCardinal, b: SymCardinal) -> SymCardinal:
    if a.overflow or b.overflow:
        return SymCardinal(a.level, OVERFLOW)
    return _sat(U, a.level, a.size + b.size)


def sym_mul(U: Universe, a: SymCardinal, b: SymCardinal) -> SymCardinal:
    """Saturating product; zero annihilates even the overflow value."""
    if a.size == 0 or b.size == 0:
        return SymCardinal(a.level, 0)
    if a.overflow or b.overflow:
        return SymCardinal(a.level, OVERFLOW)
    return _sat(U, a.level, a.size * b.size)


def sym_exp2(U: Universe, a: SymCardinal) -> SymCardinal:
    if a.overflow or a.size > U.size(a.level - 3):
        return SymCardinal(a.level, OVERFLOW)
    return _sat(U, a.level, 2 ** a.size)


def sym_t(U: Universe, a: SymCardinal) -> SymCardinal:
    return SymCardinal(a.level + 1, a.size)


@dataclass(frozen=True)
class RepCardinal:
    """A cardinal above the enumerated levels, given by one member.

    ``rep`` is ``None`` for the empty cardinal.  Two such cardinals are equal
    when they are both empty or their representatives are similar (two
    cardinals with a common member coincide).
    """

    level: int
    rep: Optional[SetVal]

    def inhabited(self) -> bool:
        return self.rep is not None

    def __str__(self):
        if self.rep is None:
            return f"C(level={self.level}, OVERFLOW)"
        return f"C(level={self.level}, size={self.rep.bits.bit_count()})"


@dataclass
class MulGraph:
    """Least fixpoint of the multiplication rules over one home level."""

    level: int
    triples: frozenset     # of (x.bits, y.bits, z.bits)
    rounds: int

    def __contains__(self, t) -> bool:
        x, y, z = t
        return (x.bits, y.bits, z.bits) in self.triples

    def __len__(self):
        return len(self.triples)


class Arithmetic:
    """Cardinal arithmetic over one universe, with per-instance caches.

    The two class attributes switch off clauses of the definitions; they
    exist so that deliberately broken variants can be built for mutation
    testing.
    """

    ADD_REQUIRES_DISJOINT = True
    F_REQUIRES_INHABITED = True

    def __init__(self, universe: Universe):
        self.U = universe
        self._cache: dict = {}
        self._lock = threading.Lock()

    # ------------------------------------------------------------------
    # helpers

    def _memo(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            val = fn()
            self._cache[key] = val
            return val

    def members_array(self, x: SetVal) -> np.ndarray:
        return self._memo(("arr", x.level, x.bits),
                          lambda: np.asarray(indices_of(x.bits), dtype=np.int64))

    def _check_home(self, h: int) -> None:
        if h < 2:
            raise ValueError("cardinals live at level >= 2")
        if h - 1 > self.U.max_enum_level:
            raise LevelOverflow(
                f"cardinals at level {h} need level {h - 1} enumerated")

    def size_cardinal(self, h: int, k: int) -> SetVal:
        """All level ``h-1`` sets with ``k`` members (Λ when none exist)."""
        self._check_home(h)
        if k < 0 or k > capacity(self.U, h):
            return SetVal(h, 0)
        return SetVal(h, self.U.sizeclass(h - 1, k))

    def empty(self, h: int) -> SetVal:
        return SetVal(h, 0)

    def zero(self, h: int) -> SetVal:
        """{Λ}."""
        self._check_home(h)
        return SetVal(h, 1)

    def numeral(self, name: str, h: int) -> SetVal:
        """zero, one = zero⁺, two = one⁺, ... at home level ``h``."""
        k = NUMERALS.index(name)
        val = self.zero(h)
        for _ in range(k):
            val = self.succ(val)
        return val

    # ------------------------------------------------------------------
    # successor, F, SF

    def succ(self, k: SetVal) -> SetVal:
        h = k.level
        self._check_home(h)

        def compute():
            z = self.members_array(k)
            width = self.U.size(h - 2)
            out = []
            for a in range(width):
                bit = np.int64(1) << np.int64(a)
                free = z[(z & bit) == 0]
                out.append(free | bit)
            if not out:
                return SetVal(h, 0)
            return SetVal(h, mask_from_indices(np.unique(np.concatenate(out))))

        return self._memo(("succ", h, k.bits), compute)

    def F(self, h: int) -> list:
        """Finite Frege cardinals at home ``h``, in order of construction."""

        def compute():
            out = [self.zero(h)]
            seen = {out[0]}
            while True:
                nxt = self.succ(out[-1])
                if self.F_REQUIRES_INHABITED and not nxt.inhabited():
                    break
                if nxt in seen:
                    break
                seen.add(nxt)
                out.append(nxt)
            return tuple(out)

        return list(self._memo(("F", h), compute))

    def SF(self, h: int) -> list:
        """Least class containing zero and closed under successor."""

        def compute():
            out = [self.zero(h)]
            seen = {out[0]}
            while True:
                nxt = self.succ(out[-1])
                if nxt in seen:
                    break
                seen.add(nxt)
                out.append(nxt)
            return tuple(out)

        return list(self._memo(("SF", h), compute))

    def in_F(self, k: SetVal) -> bool:
        return k.level >= 2 and k in self._memo(("Fset", k.level), lambda: frozenset(self.F(k.level)))

    def in_SF(self, k: SetVal) -> bool:
        return k.level >= 2 and k in self._memo(("SFset", k.level), lambda: frozenset(self.SF(k.level)))

    def F_and_lambda(self, h: int) -> list:
        out = self.F(h)
        if self.empty(h) not in out:
            out.append(self.empty(h))
        return out

    # ------------------------------------------------------------------
    # order

    def card_le(self, k: SetVal, m: SetVal) -> bool:
        """∃a ∈ k, b ∈ m: a ⊆ b and b = a ∪ (b − a)."""
        if k.level != m.level:
            raise ValueError("order between different levels")

        def compute():
            A = self.members_array(k)
            B = self.members_array(m)
            if A.size == 0 or B.size == 0:
                return False
            a = A[:, None]
            b = B[None, :]
            sub = (a & ~b) == 0
            sep = b == (a | (b & ~a))
            return bool(np.any(sub & sep))

        return self._memo(("le", k.level, k.bits, m.bits), compute)

    def card_lt(self, k: SetVal, m: SetVal) -> bool:
        return self.card_le(k, m) and k != m

    # ------------------------------------------------------------------
    # addition

    def add(self, x: SetVal, y: SetVal) -> SetVal:
        if x.level != y.level:
            raise ValueError("sum of sets at different levels")
        h = x.level
        self._check_home(h)

        def compute():
            A = self.members_array(x)
            B = self.members_array(y)
            if A.size == 0 or B.size == 0:
                return SetVal(h, 0)
            a = A[:, None]
            b = B[None, :]
            u = a | b
            if self.ADD_REQUIRES_DISJOINT:
                u = u[(a & b) == 0]
            return SetVal(h, mask_from_indices(np.unique(u)))

        key = ("add", h) + ((x.bits, y.bits) if x.bits <= y.bits else (y.bits, x.bits))
        return self._memo(key, compute)

    def add_table(self, h: int) -> np.ndarray:
        """Table ``T[i, j] = index of (set i) + (set j)`` over all level ``h``
        sets; only for small enumerated levels."""
        self._check_home(h)
        if h > self.U.max_enum_level:
            raise LevelOverflow(f"add table needs level {h} enumerated")
        n = self.U.size(h)
        width = self.U.size(h - 1)
        if n > 4096 or width > 16:
            raise LevelOverflow(f"add table at level {h} is too large ({n}x{n})")

        def compute():
            idx = np.arange(n, dtype=np.int64)
            has = [((idx >> u) & 1).astype(bool) for u in range(width)]
            table = np.zeros((n, n), dtype=np.int64)
            for u in range(width):
                for v in range(width):
                    if self.ADD_REQUIRES_DISJOINT and (u & v):
                        continue
                    mask = np.outer(has[u], has[v])
                    table[mask] |= np.int64(1) << np.int64(u | v)
            return table

        return self._memo(("addtable", h), compute)

    def succ_table(self, h: int) -> np.ndarray:
        n = self.U.size(h)
        return self._memo(("succtable", h), lambda: np.array(
            [self.succ(SetVal(h, i)).bits for i in range(n)], dtype=np.int64))

    # ------------------------------------------------------------------
    # multiplication

    def mul_graph(self, h: int) -> MulGraph:
        key = ("G", h)
        if key in self._cache:
            return self._cache[key]
        with self._lock:
            if key in self._cache:
                return self._cache[key]
            sf = self.SF(h)
            zero = self.zero(h)
            triples = set()
            for x in sf:
                triples.add((x.bits, zero.bits, zero.bits))
                triples.add((zero.bits, x.bits, zero.bits))
            frontier = set(triples)
            rounds = 0
            while frontier:
                rounds += 1
                new = set()
                for xb, yb, zb in frontier:
                    x = SetVal(h, xb)
                    t = (xb, self.succ(SetVal(h, yb)).bits, self.add(SetVal(h, zb), x).bits)
                    if t not in triples:
                        triples.add(t)
                        new.add(t)
                frontier = new
            graph = MulGraph(h, frozenset(triples), rounds)
            self._cache[key] = graph
            return graph

    def mul(self, x: SetVal, y: SetVal) -> SetVal:
        """x · y = { u : ∃z (<x,y,z> ∈ G ∧ u ∈ z) }."""
        if x.level != y.level:
            raise ValueError("product of sets at different levels")
        h = x.level

        def compute():
            index = self._memo(("Gindex", h), lambda: _index_graph(self.mul_graph(h)))
            bits = 0
            for zb in index.get((x.bits, y.bits), ()):
                bits |= zb
            return SetVal(h, bits)

        return self._memo(("mul", h, x.bits, y.bits), compute)

    def in_G(self, x: SetVal, y: SetVal, z: SetVal) -> bool:
        return (x.bits, y.bits, z.bits) in self.mul_graph(x.level).triples

    # ------------------------------------------------------------------
    # exponentiation

    def exp2(self, m: SetVal) -> SetVal:
        """2^m; needs m at home level >= 3 (USC lives one level down)."""
        h = m.level
        if h < 3:
            raise LevelOverflow("2^m needs m at level >= 3 (atoms have no unit subclasses)")
        self._check_home(h)

        def compute():
            U = self.U
            bits = 0
            for w in U.members(m):
                if U.is_usc_shaped(w):
                    a = U.bigunion(w)
                    s = U.ssc(a)
                    bits |= U.sizeclass(h - 1, len(s))
            return SetVal(h, bits)

        return self._memo(("exp", h, m.bits), compute)

    def exp2_witness(self, m: SetVal) -> Optional[SetVal]:
        """Some ``a`` with USC(a) ∈ m, if any."""
        for w in self.U.members(m):
            if self.U.is_usc_shaped(w):
                return self.U.bigunion(w)
        return None

    # ------------------------------------------------------------------
    # T, Nc and J

    def t_op(self, k: SetVal) -> SetVal:
        """T(k) at level h+1 (materialised; needs level h enumerated)."""
        h = k.level
        self.U._require_enumerated(h, "T")

        def compute():
            bits = 0
            for x in self.U.members(k):
                bits |= self.U.sizeclass(h, len(self.U.usc(x)))
            return SetVal(h + 1, bits)

        return self._memo(("T", h, k.bits), compute)

    def t_rep(self, k) -> RepCardinal:
        """T(k) as a representative-carrying cardinal (any level)."""
        if isinstance(k, RepCardinal):
            if k.rep is None:
                return RepCardinal(k.level + 1, None)
            return RepCardinal(k.level + 1, self.U.usc(k.rep))
        mem = self.U.members(k)
        if not mem:
            return RepCardinal(k.level + 1, None)
        return RepCardinal(k.level + 1, self.U.usc(mem[0]))

    def nc(self, x: SetVal):
        """Nc(x): a materialised cardinal when possible, else a RepCardinal."""
        if x.level == 0:
            raise TypeError("atoms have no cardinal")
        if x.level <= self.U.max_enum_level:
            return SetVal(x.level + 1, self.U.sizeclass(x.level, len(x)))
        return RepCardinal(x.level + 1, x)

    def as_rep(self, k) -> RepCardinal:
        if isinstance(k, RepCardinal):
            return k
        mem = self.U.members(k)
        return RepCardinal(k.level, mem[0] if mem else None)

    def rep_equal(self, a, b) -> bool:
        """Equality of cardinals via the common-member criterion."""
        a, b = self.as_rep(a), self.as_rep(b)
        if a.level != b.level:
            return False
        if a.rep is None or b.rep is None:
            return a.rep is None and b.rep is None
        return self.U.similar(a.rep, b.rep)

    def exp2_rep(self, m) -> RepCardinal:
        """2^m for a cardinal one level above the materialised ones.

        Searches the (enumerated) level below for ``a`` with USC(a) similar
        to the representative of ``m``; the result is represented by SSC(a).
        """
        m = self.as_rep(m)
        if m.rep is None:
            return RepCardinal(m.level, None)
        lvl = m.rep.level - 1  # level of a
        for a in self.U.elements(lvl):
            if self.U.similar(self.U.usc(a), m.rep):
                return RepCardinal(m.level, self.U.ssc(a))
        return RepCardinal(m.level, None)

    def j_set(self, m: SetVal) -> SetVal:
        """J(m) = { x ∈ F : x < m } as a set one level up."""
        h = m.level
        self.U._require_enumerated(h, "J")
        return self._memo(("J", h, m.bits), lambda: SetVal(
            h + 1, mask_from_indices(x.bits for x in self.F(h) if self.card_lt(x, m))))

    def j_bar(self, m: SetVal) -> SetVal:
        """J̄(m) = { x ∈ F : x ≤ m }."""
        h = m.level
        self.U._require_enumerated(h, "Jbar")
        return self._memo(("Jbar", h, m.bits), lambda: SetVal(
            h + 1, mask_from_indices(x.bits for x in self.F(h) if self.card_le(x, m))))

    # ------------------------------------------------------------------
    # oracle bridge

    def is_cardinal(self, k: SetVal) -> bool:
        """Def cardinal: ∀u ∈ k ∀v (v ∈ k ↔ u ∼ v) (the empty set qualifies)."""
        mem = self.U.members(k)
        if not mem:
            return True
        size = len(mem[0])
        return k.bits == self.U.sizeclass(k.level - 1, size)

    def sym_size(self, k) -> SymCardinal:
        if isinstance(k, RepCardinal):
            if k.rep is None:
                return SymCardinal(k.level, OVERFLOW)
            return SymCardinal(k.level, len(k.rep))
        if not self.is_cardinal(k):
            raise NotACardinal(f"{self.U.format(k)} is not a cardinal")
        mem = self.U.members(k)
        if not mem:
            return SymCardinal(k.level, OVERFLOW)
        return SymCardinal(k.level, len(mem[0]))

    def from_size(self, level: int, size) -> SetVal:
        if size is OVERFLOW:
            return self.empty(level)
        return self.size_cardinal(level, size)

    def describe(self, k) -> str:
        """``C(level=.., size=..)`` for cardinals, the raw text otherwise."""
        if isinstance(k, RepCardinal):
            return str(k)
        if k.level >= 2 and self.is_cardinal(k):
            return str(self.sym_size(k))
        return self.U.format(k)


def _index_graph(graph: MulGraph) -> dict:
    index: dict = {}
    for x, y, z in graph.triples:
        index.setdefault((x, y), []).append(z)
    return index
