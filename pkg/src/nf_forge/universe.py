"""Finite typed set universes.

Level 0 holds ``n`` atoms; level ``l+1`` is the power set of level ``l``.
Levels ``0..L`` are enumerated: element ``k`` of level ``l >= 1`` is the
subset of level ``l-1`` whose membership bitmask is ``k``.  A set at level
``l`` is therefore a :class:`SetVal` whose ``bits`` field is both its
membership bitmask over level ``l-1`` and its own index within level ``l``.
Sets exist up to level ``L+1`` (their members are enumerated elements);
anything needing a higher level raises :class:`LevelOverflow`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

__all__ = [
    "SetVal", "Universe", "FuncView", "LevelOverflow", "BudgetExceeded",
    "DEFAULT_BUDGET", "build_universe", "mask_from_indices", "indices_of",
]

DEFAULT_BUDGET = 2 ** 16


class LevelOverflow(ValueError):
    """A construction needs a level that is not materialised."""


class BudgetExceeded(ValueError):
    """The requested universe is larger than the configured budget."""


@dataclass(frozen=True, order=True)
class SetVal:
    """An element of the universe: an atom (level 0) or a set (level >= 1).

    For atoms ``bits`` is the atom index; for sets it is the membership
    bitmask over the enumeration of the level below.
    """

    level: int
    bits: int

    @property
    def index(self) -> int:
        return self.bits

    @property
    def is_atom(self) -> bool:
        return self.level == 0

    def __len__(self) -> int:
        if self.level == 0:
            raise TypeError("atoms have no members")
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return True

    def inhabited(self) -> bool:
        return self.level > 0 and self.bits != 0

    def __repr__(self) -> str:
        return f"SetVal({self.level}, {self.bits})"


def indices_of(bits: int) -> list:
    """Positions of the set bits of ``bits`` in increasing order."""
    if bits < (1 << 64):
        out = []
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out
    raw = np.frombuffer(bits.to_bytes((bits.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")).tolist()


def mask_from_indices(indices: Iterable[int]) -> int:
    """Inverse of :func:`indices_of`."""
    idx = np.asarray(list(indices) if not isinstance(indices, np.ndarray) else indices,
                     dtype=np.int64)
    if idx.size == 0:
        return 0
    top = int(idx.max()) + 1
    if top <= 64:
        out = 0
        for i in idx.tolist():
            out |= 1 << i
        return out
    arr = np.zeros(top, dtype=bool)
    arr[idx] = True
    return int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")


class Universe:
    """Typed universe over ``n_atoms`` atoms with levels ``0..max_enum_level``
    enumerated.

    >>> U = Universe(3, 2)
    >>> U.level_sizes
    (3, 8, 256)
    """

    def __init__(self, n_atoms: int, max_enum_level: int = 2, budget: int = DEFAULT_BUDGET):
        if n_atoms < 0:
            raise ValueError("n_atoms must be non-negative")
        if max_enum_level < 0:
            raise ValueError("max_enum_level must be non-negative")
        sizes = [n_atoms]
        for level in range(1, max_enum_level + 1):
            prev = sizes[-1]
            if prev >= max(budget, 1).bit_length():
                raise BudgetExceeded(
                    f"level {level} has 2^{prev} elements, over budget {budget}")
            size = 1 << prev
            if size > budget:
                raise BudgetExceeded(
                    f"level {level} has {size} elements, over budget {budget}")
            sizes.append(size)
        if sizes[-1] > budget:
            raise BudgetExceeded(
                f"level {max_enum_level} has {sizes[-1]} elements, over budget {budget}")
        self.n_atoms = n_atoms
        self.max_enum_level = max_enum_level
        self.budget = budget
        self.level_sizes = tuple(sizes)
        self._popcounts = {}
        for level in range(1, max_enum_level + 1):
            k = np.arange(sizes[level], dtype=np.uint64)
            pc = np.zeros(sizes[level], dtype=np.int64)
            for b in range(sizes[level - 1]):
                pc += ((k >> np.uint64(b)) & np.uint64(1)).astype(np.int64)
            self._popcounts[level] = pc
        self.members = lru_cache(maxsize=1 << 16)(self._members)
        self._sizeclass = {}

    # ------------------------------------------------------------------
    # Enumeration

    def __repr__(self) -> str:
        return f"Universe(n_atoms={self.n_atoms}, max_enum_level={self.max_enum_level})"

    @property
    def L(self) -> int:
        return self.max_enum_level

    def size(self, level: int) -> int:
        """``|U_level|`` (computed symbolically above the enumerated levels)."""
        if level <= self.max_enum_level:
            return self.level_sizes[level]
        return 1 << self.size(level - 1)

    def elements(self, level: int):
        """All elements of an enumerated level, in index order."""
        self._require_enumerated(level)
        return [SetVal(level, k) for k in range(self.level_sizes[level])]

    def atoms(self):
        return self.elements(0)

    def popcounts(self, level: int) -> np.ndarray:
        """Array mapping each index of an enumerated level >= 1 to its size."""
        self._require_enumerated(level)
        return self._popcounts[level]

    def _require_enumerated(self, level: int, what: str = "") -> None:
        if level < 0:
            raise LevelOverflow("negative level")
        if level > self.max_enum_level:
            raise LevelOverflow(
                f"{what or 'construction'} needs level {level} enumerated, "
                f"but only levels 0..{self.max_enum_level} are")

    def check(self, x: SetVal) -> SetVal:
        """Validate that ``x`` denotes an element of this universe."""
        if x.level == 0:
            if not 0 <= x.bits < self.n_atoms:
                raise ValueError(f"atom {x.bits} out of range")
        else:
            self._require_enumerated(x.level - 1, "set")
            if x.bits < 0 or x.bits.bit_length() > self.size(x.level - 1):
                raise ValueError(f"bits out of range for level {x.level}")
        return x

    def _members(self, x: SetVal) -> tuple:
        if x.level == 0:
            raise TypeError("atoms have no members")
        return tuple(SetVal(x.level - 1, i) for i in indices_of(x.bits))

    def contains(self, x: SetVal, y: SetVal) -> bool:
        """``y in x``."""
        if x.level != y.level + 1:
            return False
        return bool((x.bits >> y.bits) & 1)

    def sizeclass(self, level: int, k: int) -> int:
        """Bitmask (over level ``level``) of all level-``level`` sets of size ``k``."""
        key = (level, k)
        if key not in self._sizeclass:
            self._require_enumerated(level, "size class")
            if level == 0:
                raise TypeError("atoms have no size")
            idx = np.flatnonzero(self._popcounts[level] == k)
            self._sizeclass[key] = mask_from_indices(idx)
        return self._sizeclass[key]

    # ------------------------------------------------------------------
    # Constructors

    def mk_set(self, level: int, members: Iterable[SetVal]) -> SetVal:
        self._require_enumerated(level - 1, "set")
        bits = 0
        for m in members:
            if m.level != level - 1:
                raise ValueError(f"member at level {m.level}, expected {level - 1}")
            bits |= 1 << m.bits
        return SetVal(level, bits)

    def mk_empty(self, level: int) -> SetVal:
        if level < 1:
            raise ValueError("the empty set lives at level >= 1")
        self._require_enumerated(level - 1, "empty set")
        return SetVal(level, 0)

    def full(self, level: int) -> SetVal:
        """The whole of level ``level - 1`` as a set (the local universe)."""
        self._require_enumerated(level - 1, "full set")
        return SetVal(level, (1 << self.size(level - 1)) - 1)

    def mk_singleton(self, x: SetVal) -> SetVal:
        self._require_enumerated(x.level, "singleton")
        return SetVal(x.level + 1, 1 << x.bits)

    def mk_upair(self, x: SetVal, y: SetVal) -> SetVal:
        if x.level != y.level:
            raise ValueError("unordered pair of different levels")
        self._require_enumerated(x.level, "unordered pair")
        return SetVal(x.level + 1, (1 << x.bits) | (1 << y.bits))

    def mk_opair(self, x: SetVal, y: SetVal) -> SetVal:
        """Wiener-Kuratowski pair {{x}, {x, y}}."""
        return self.mk_upair(self.mk_singleton(x), self.mk_upair(x, y))

    def mk_otriple(self, x: SetVal, y: SetVal, z: SetVal) -> SetVal:
        return self.mk_opair(self.mk_opair(x, y), self.mk_singleton(self.mk_singleton(z)))

    def decode_pair(self, p: SetVal) -> Optional[tuple]:
        """Return ``(x, y)`` if ``p`` is an ordered pair, else ``None``."""
        if p.level < 2:
            return None
        mem = self.members(p)
        if len(mem) == 1:
            (s,) = mem
            inner = self.members(s)
            if len(inner) == 1:
                return inner[0], inner[0]
            return None
        if len(mem) != 2:
            return None
        a, b = mem
        for single, double in ((a, b), (b, a)):
            ms, md = self.members(single), self.members(double)
            if len(ms) == 1 and len(md) == 2 and ms[0] in md:
                x = ms[0]
                y = md[0] if md[1] == x else md[1]
                return x, y
        return None

    # ------------------------------------------------------------------
    # Boolean algebra at one level

    def _same(self, a: SetVal, b: SetVal) -> None:
        if a.level != b.level or a.level == 0:
            raise ValueError("set operation on mismatched levels or atoms")

    def union(self, a: SetVal, b: SetVal) -> SetVal:
        self._same(a, b)
        return SetVal(a.level, a.bits | b.bits)

    def inter(self, a: SetVal, b: SetVal) -> SetVal:
        self._same(a, b)
        return SetVal(a.level, a.bits & b.bits)

    def diff(self, a: SetVal, b: SetVal) -> SetVal:
        self._same(a, b)
        return SetVal(a.level, a.bits & ~b.bits)

    def subset(self, a: SetVal, b: SetVal) -> bool:
        self._same(a, b)
        return a.bits & ~b.bits == 0

    def separable_in(self, u: SetVal, x: SetVal) -> bool:
        """``u ⊆ x`` and ``x = u ∪ (x − u)``, evaluated literally."""
        return self.subset(u, x) and x == self.union(u, self.diff(x, u))

    def adjoin(self, a: SetVal, c: SetVal) -> SetVal:
        """``a ∪ {c}``."""
        return self.union(a, self.mk_singleton(c))

    def bigunion(self, a: SetVal) -> SetVal:
        if a.level < 2:
            raise ValueError("union of a set of atoms is undefined")
        bits = 0
        for m in self.members(a):
            bits |= m.bits
        return SetVal(a.level - 1, bits)

    # ------------------------------------------------------------------
    # Unit and separable subclasses

    def usc(self, a: SetVal) -> SetVal:
        """The set of singletons of members of ``a``."""
        self._require_enumerated(a.level, "USC")
        return SetVal(a.level + 1, mask_from_indices(1 << i for i in indices_of(a.bits)))

    def ssc(self, a: SetVal) -> SetVal:
        """Separable subsets of ``a``; classically every subset."""
        self._require_enumerated(a.level, "SSC")
        subs = []
        for u_bits in _submasks(a.bits):
            u = SetVal(a.level, u_bits)
            if self.separable_in(u, a):
                subs.append(u_bits)
        return SetVal(a.level + 1, mask_from_indices(subs))

    def sc(self, a: SetVal) -> SetVal:
        """All subclasses; coincides with :meth:`ssc` in a classical model."""
        return self.ssc(a)

    def is_unit(self, a: SetVal) -> bool:
        return a.level >= 1 and a.bits.bit_count() == 1

    def is_usc_shaped(self, a: SetVal) -> bool:
        """Every member of ``a`` is a singleton."""
        return a.level >= 2 and all(m.bits.bit_count() == 1 for m in self.members(a))

    # ------------------------------------------------------------------
    # Relations and functions

    def product(self, a: SetVal, b: SetVal) -> SetVal:
        self._same(a, b)
        pairs = [self.mk_opair(x, y) for x in self.members(a) for y in self.members(b)]
        self._require_enumerated(a.level + 1, "product")
        return SetVal(a.level + 2, mask_from_indices(p.bits for p in pairs))

    def pairs_of(self, f: SetVal) -> list:
        """Decoded ordered pairs among the members of ``f``."""
        out = []
        for p in self.members(f):
            d = self.decode_pair(p)
            if d is not None:
                out.append(d)
        return out

    def view(self, f: SetVal) -> "FuncView":
        return FuncView(tuple(self.pairs_of(f)), base=f,
                        all_pairs=len(self.pairs_of(f)) == len(f))

    def image(self, f: SetVal, a: SetVal) -> SetVal:
        """``f``a``: second components of pairs whose first component is in ``a``."""
        if f.level != a.level + 2:
            raise ValueError("image: level of f must be level of a plus 2")
        ys = {y for x, y in self.pairs_of(f) if self.contains(a, x)}
        return SetVal(a.level, mask_from_indices(y.bits for y in ys))

    def dom(self, f: SetVal) -> SetVal:
        return SetVal(f.level - 2, mask_from_indices({x.bits for x, _ in self.pairs_of(f)}))

    def range(self, f: SetVal) -> SetVal:
        return SetVal(f.level - 2, mask_from_indices({y.bits for _, y in self.pairs_of(f)}))

    def ap(self, f, x: SetVal) -> SetVal:
        """``{u : exists y (<x, y> in f and u in y)}``."""
        pairs = f.pairs if isinstance(f, FuncView) else self.pairs_of(f)
        if x.level == 0:
            raise LevelOverflow("Ap needs set-valued second components (level >= 1)")
        bits = 0
        for a, y in pairs:
            if a == x:
                bits |= y.bits
        return SetVal(x.level, bits)

    # Function predicates operate on FuncView (pair lists), optionally backed
    # by a materialised graph.

    def _fv(self, f) -> "FuncView":
        return f if isinstance(f, FuncView) else self.view(f)

    def is_relation(self, f) -> bool:
        return self._fv(f).all_pairs

    def is_function(self, f) -> bool:
        seen = {}
        for x, y in self._fv(f).pairs:
            if seen.setdefault(x, y) != y:
                return False
        return True

    def maps(self, f, X: SetVal, Y: SetVal) -> bool:
        """For every x in X there is a unique y in Y with <x, y> in f."""
        pairs = self._fv(f).pairs
        for x in self.members(X):
            ys = {y for a, y in pairs if a == x and self.contains(Y, y)}
            if len(ys) != 1:
                return False
        return True

    def value(self, f, x: SetVal) -> Optional[SetVal]:
        """The unique second component for ``x`` (``None`` if not unique)."""
        ys = {y for a, y in self._fv(f).pairs if a == x}
        return next(iter(ys)) if len(ys) == 1 else None

    def is_one_one(self, f, X: SetVal, Y: SetVal) -> bool:
        fv = self._fv(f)
        for x, y in fv.pairs:
            if self.contains(Y, y) and not self.contains(X, x):
                return False
        mem = self.members(X)
        vals = {x: self.value(fv, x) for x in mem}
        for x in mem:
            for z in mem:
                if vals[x] == vals[z] and x != z:
                    return False
        return True

    def is_onto(self, f, X: SetVal, Y: SetVal) -> bool:
        pairs = self._fv(f).pairs
        for y in self.members(Y):
            if not any(b == y and self.contains(X, a) for a, b in pairs):
                return False
        return True

    def is_similarity(self, f, X: SetVal, Y: SetVal) -> bool:
        return (self.maps(f, X, Y) and self.is_function(f)
                and self.is_one_one(f, X, Y) and self.is_onto(f, X, Y))

    def similar(self, a: SetVal, b: SetVal, witness: bool = False):
        """Similarity test.  With ``witness=True`` return a validated bijection
        (a :class:`FuncView`, backed by a graph when the pair level is
        materialised) or ``None``."""
        if a.level != b.level:
            raise ValueError("similarity between different levels")
        if not witness:
            return a.bits.bit_count() == b.bits.bit_count()
        ma, mb = self.members(a), self.members(b)
        if len(ma) != len(mb):
            return None
        fv = self.bijection(list(zip(ma, mb)))
        if not self.is_similarity(fv, a, b):
            raise AssertionError("constructed bijection failed validation")
        return fv

    def bijection(self, pairs) -> "FuncView":
        pairs = tuple(pairs)
        base = None
        if pairs and pairs[0][0].level + 2 <= self.max_enum_level:
            base = SetVal(pairs[0][0].level + 3,
                          mask_from_indices(self.mk_opair(x, y).bits for x, y in pairs))
        elif not pairs:
            base = None
        return FuncView(pairs, base=base)

    # ------------------------------------------------------------------
    # Finiteness and decidability

    def finite_closure(self, level: int) -> int:
        """Bitmask over level ``level`` of the least class containing the empty
        set and closed under adjoining a new element."""
        self._require_enumerated(level, "finite closure")
        if level == 0:
            raise TypeError("atoms are not sets")
        width = self.level_sizes[level - 1]
        reached = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for z in range(width):
                    if not (u >> z) & 1:
                        w = u | (1 << z)
                        if w not in reached:
                            reached.add(w)
                            nxt.append(w)
            frontier = nxt
        return mask_from_indices(reached)

    @lru_cache(maxsize=None)
    def _finite_mask(self, level: int) -> int:
        return self.finite_closure(level)

    def is_finite(self, a: SetVal) -> bool:
        """Membership in the inductively defined class of finite sets."""
        if a.level == 0:
            raise TypeError("atoms are not sets")
        if a.level <= self.max_enum_level:
            return bool((self._finite_mask(a.level) >> a.bits) & 1)
        # Above the enumerated levels: exhibit a derivation from the empty set.
        u = 0
        for i in indices_of(a.bits):
            if (u >> i) & 1:
                return False
            u |= 1 << i
        return u == a.bits

    def has_dec_eq(self, a: SetVal) -> bool:
        """forall x, y in a (x = y or x != y)."""
        mem = self.members(a)
        return all((x == y) or (x != y) for x in mem for y in mem)

    def is_dedekind_infinite(self, a: SetVal) -> bool:
        """Is ``a`` similar to a proper subset of itself?"""
        for sub in _submasks(a.bits):
            if sub == a.bits:
                continue
            if self.similar(a, SetVal(a.level, sub), witness=True) is not None:
                return True
        return False

    # ------------------------------------------------------------------
    # Text form

    def format(self, x: SetVal) -> str:
        """Level-tagged canonical text, e.g. ``2:{ {}, {0,1} }``."""
        return f"{x.level}:{self._fmt(x)}"

    def _fmt(self, x: SetVal) -> str:
        if x.level == 0:
            return str(x.bits)
        mem = self.members(x)
        if not mem:
            return "{}"
        inner = [self._fmt(m) for m in mem]
        if x.level == 1:
            return "{" + ",".join(inner) + "}"
        return "{ " + ", ".join(inner) + " }"

    def parse(self, text: str) -> SetVal:
        m = re.fullmatch(r"\s*(\d+)\s*:\s*(.*?)\s*", text, re.S)
        if not m:
            raise ValueError("expected LEVEL:{...}")
        level = int(m.group(1))
        body = m.group(2)
        val, pos = self._parse_at(body, 0, level)
        if body[pos:].strip():
            raise ValueError(f"trailing text {body[pos:]!r}")
        return val

    def _parse_at(self, s: str, pos: int, level: int):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if level == 0:
            m = re.match(r"\d+", s[pos:])
            if not m:
                raise ValueError(f"expected atom at {pos}")
            atom = SetVal(0, int(m.group()))
            self.check(atom)
            return atom, pos + m.end()
        if pos >= len(s) or s[pos] != "{":
            raise ValueError(f"expected '{{' at {pos}")
        pos += 1
        members = []
        while True:
            while pos < len(s) and s[pos].isspace():
                pos += 1
            if pos < len(s) and s[pos] == "}":
                pos += 1
                break
            if members:
                if s[pos] != ",":
                    raise ValueError(f"expected ',' at {pos}")
                pos += 1
            m, pos = self._parse_at(s, pos, level - 1)
            members.append(m)
        return self.mk_set(level, members), pos


@dataclass(frozen=True)
class FuncView:
    """A relation given by its decoded pair list, optionally with the graph
    it was read from (``base``)."""

    pairs: tuple
    base: Optional[SetVal] = None
    all_pairs: bool = True

    def __len__(self):
        return len(self.pairs)

    def inverse(self) -> "FuncView":
        return FuncView(tuple((y, x) for x, y in self.pairs))


def _submasks(bits: int):
    """All submasks of ``bits`` (including 0 and ``bits``), ascending."""
    idx = indices_of(bits)
    out = []
    for r in range(len(idx) + 1):
        for combo in combinations(idx, r):
            m = 0
            for i in combo:
                m |= 1 << i
            out.append(m)
    out.sort()
    return out


def build_universe(n_atoms: int, max_enum_level: int = 2, budget: int = DEFAULT_BUDGET) -> Universe:
    return Universe(n_atoms, max_enum_level, budget)
