"""The lemma catalog: one declarative entry per in-scope lemma or theorem.

Conventions
-----------
``levels`` lists the levels ``h`` a check is run at.  For statements about
cardinals ``h`` is the *home level* of the cardinals (members at ``h-1``);
for statements about plain sets ``h`` is the level of the principal set
variables.  Domains such as ``dU(-1)`` are relative to ``h``.

Hypotheses are ``(name, predicate, *needs)``; a hypothesis is evaluated as
soon as the variables it names (all of them when none are listed) are bound,
and every instance it rejects is counted against its name.

Hypotheses whose name starts with ``capacity:`` are not part of the original
statement: they assert that a constant is not the overflow value Λ in a
finite universe too small to contain a set of that size.  They are counted
like any other hypothesis so their effect is visible in the report.

Entries flagged ``reduced`` compare cardinals one level above the
materialised part of the universe through representatives (see
:class:`~nf_forge.cardinals.RepCardinal`) or the size oracle.
"""

from __future__ import annotations

import numpy as np

from ..cardinals import sym_mul
from ..universe import FuncView, SetVal, _submasks, indices_of, mask_from_indices
from .core import (Check, Domain, Outcome, SkipLevel, dAny, dConst, dF, dF_at, dFsubsets,
                   dGtriples, dMembers, dRelations, dSF, dSSCmembers, dSubsets, dU)

CATALOG: list = []

#: Statements not checked semantically (their content is specific to
#: intuitionistic logic and collapses in a classical finite model).  Their
#: formulas are still part of the stratification corpus.
OUT_OF_SCOPE = {
    "lemma:markov": "finite Markov principle: ¬¬∃ → ∃ is a classical tautology",
    "lemma:finiteDNS": "double negation shift is a classical tautology",
    "lemma:notnotseparable": "¬¬-separability collapses to separability classically",
    "lemma:union2": "¬¬(x ∪ y ∈ FINITE) collapses to lemma:union classically",
    "lemma:boundedDNS": "bounded double negation shift is a classical tautology",
}


def H(name, fn, *needs):
    return (name, fn, needs)


def check(id, anchor, levels, variables=(), hypotheses=(), conclusion=None, **kw):
    CATALOG.append(Check(id=id, anchor=anchor, levels=tuple(levels),
                         variables=tuple(variables), hypotheses=tuple(hypotheses),
                         conclusion=conclusion, **kw))


SET12 = (1, 2)
CARD = (2, 3)
EXP = (3,)
TLEV = (2,)


# ---------------------------------------------------------------------------
# helpers used by several conclusions


def _restrict(U, f, dom):
    pairs = f.pairs if isinstance(f, FuncView) else U.pairs_of(f)
    return FuncView(tuple((x, y) for x, y in pairs if U.contains(dom, x)))


def _pairs(U, f):
    return f.pairs if isinstance(f, FuncView) else U.pairs_of(f)


def _dom(U, f, level):
    return SetVal(level, mask_from_indices({x.bits for x, _ in _pairs(U, f)}))


def _strict_sep_pair(c, k, m, strict):
    """∃x ∈ k, y ∈ m with x ⊆ y (proper if ``strict``) and y = x ∪ (y − x)."""
    A = c.A.members_array(k)
    B = c.A.members_array(m)
    if A.size == 0 or B.size == 0:
        return False
    a, b = A[:, None], B[None, :]
    ok = ((a & ~b) == 0) & (b == (a | (b & ~a)))
    if strict:
        ok &= a != b
    return bool(np.any(ok))


def _pair_lists(level, max_pairs):
    """Relations with at most ``max_pairs`` pairs between sets of ``level``."""
    def fn(c, e):
        elems = c.sets(level)
        pairs = [(x, y) for x in elems for y in elems]
        out = [FuncView(())]
        for i, p in enumerate(pairs):
            out.append(FuncView((p,)))
            if max_pairs >= 2:
                for q in pairs[i + 1:]:
                    out.append(FuncView((p, q)))
        return out
    return Domain(f"relations on U{level} with <= {max_pairs} pairs", fn)


def _stratification(record_name):
    """Conclusion: the named corpus formula is stratified (lazily parsed)."""
    def concl(c, e):
        from importlib.resources import files
        from ..stratifier import check_record, read_corpus
        text = files("nf_forge").joinpath("corpus/paper_definitions.nf").read_text()
        rec = next(r for r in read_corpus(text) if r.name == record_name)
        return check_record(rec).got == "PASS"
    return concl


# ---------------------------------------------------------------------------
# Vectorised fast paths (the scalar conclusion is still used for replay)


def _vec_addition2(c):
    U, A, h = c.U, c.A, c.h
    if h > U.L or U.size(h) > min(4096, c.limit):
        return None
    T = A.add_table(h)
    S = A.succ_table(h)
    n = U.size(h)
    idx = np.arange(n)
    z = A.zero(h).bits
    e1 = T[:, z] == idx                             # x + zero = x
    lhs = T[:, S]                                    # x + y⁺
    e2 = lhs == S[T]                                 # (x + y)⁺
    e3 = lhs == T[S, :]                              # x⁺ + y
    bad = ~(e1[:, None] & e2 & e3)
    out = Outcome(instances=n * n, exercised=n * n)
    if bad.any():
        x, y = map(int, np.argwhere(bad)[0])
        out.witness = {"x": SetVal(h, x), "y": SetVal(h, y)}
    return out


def _vec_addition3(c):
    U, A, h = c.U, c.A, c.h
    if h > U.L or U.size(h) > min(4096, c.limit):
        return None
    T = A.add_table(h)
    n = U.size(h)
    idx = np.arange(n)
    z = A.zero(h).bits
    out = Outcome(instances=n ** 3, exercised=n ** 3)
    ok_id = T[z, :] == idx
    ok_comm = T == T.T
    for zz in range(n):
        lhs = T[T, zz]                     # (x + y) + z
        rhs = T[:, T[:, zz]]               # x + (y + z)
        bad = ~((lhs == rhs) & ok_comm & ok_id[:, None])
        if bad.any():
            x, y = map(int, np.argwhere(bad)[0])
            out.witness = {"x": SetVal(h, x), "y": SetVal(h, y), "z": SetVal(h, zz)}
            return out
    return out


def _vec_adds_to_zero(c):
    U, A, h = c.U, c.A, c.h
    if h > U.L or U.size(h) > min(4096, c.limit):
        return None
    T = A.add_table(h)
    n = U.size(h)
    z = A.zero(h).bits
    hyp = T == z
    bad = hyp & (np.arange(n)[:, None] != z)
    out = Outcome(instances=n * n, exercised=int(hyp.sum()),
                  filtered={"p + q = zero": int(n * n - hyp.sum())})
    if bad.any():
        p, q = map(int, np.argwhere(bad)[0])
        out.witness = {"p": SetVal(h, p), "q": SetVal(h, q)}
    return out


def _vec_sim(c):
    U, h = c.U, c.h
    if h <= 1 or h > U.L:
        return None
    c.sets(h)                      # respects the enumeration limit
    if U.size(h) > 4096:
        raise SkipLevel(f"similarity matrix over {U.size(h)} sets is too large")
    pc = U.popcounts(h)
    n = len(pc)
    S = pc[:, None] == pc[None, :]
    Si = S.astype(np.int64)
    trans = (Si @ Si) > 0
    ok = bool(np.all(np.diag(S))) and bool(np.all(S == S.T)) and bool(np.all(~trans | S))
    out = Outcome(instances=n ** 3, exercised=n ** 3)
    if not ok:
        out.witness = {"x": SetVal(h, 0), "y": SetVal(h, 0), "z": SetVal(h, 0)}
    return out


def _vec_intersectionseparable(c):
    U, h = c.U, c.h
    if h != 2 or h > U.L:
        return None
    out = Outcome()
    for Aset in c.sets(h):
        subs = np.asarray(_submasks(Aset.bits), dtype=np.int64)
        member = np.zeros(U.size(h), dtype=bool)
        member[indices_of(c.ssc(Aset).bits)] = True
        ok = member[subs[:, None] & subs[None, :]] & member[subs[:, None] | subs[None, :]]
        out.instances += ok.size
        out.exercised += ok.size
        if not ok.all():
            i, j = map(int, np.argwhere(~ok)[0])
            out.witness = {"A": Aset, "u": SetVal(h, int(subs[i])), "v": SetVal(h, int(subs[j]))}
            return out
    return out


# ===========================================================================
# Ordered pairs, functions, similarity


check("lemma:ordered_pair_equality", "⟨x,y⟩ = ⟨a,b⟩ ↔ x = a ∧ y = b", (0, 1),
      [("x", dU(0)), ("y", dU(0)), ("a", dU(0)), ("b", dU(0))],
      conclusion=lambda c, e: (c.U.mk_opair(e.x, e.y) == c.U.mk_opair(e.a, e.b))
      == (e.x == e.a and e.y == e.b))

check("lemma:singleton1", "u ∈ {x} ↔ u = x", (0, 1, 2),
      [("x", dU(0)), ("u", dU(0))],
      conclusion=lambda c, e: c.mem(c.U.mk_singleton(e.x), e.u) == (e.u == e.x))

check("lemma:single_oneone", "{x} = {y} ↔ x = y", (0, 1, 2),
      [("x", dU(0)), ("y", dU(0))],
      conclusion=lambda c, e: (c.U.mk_singleton(e.x) == c.U.mk_singleton(e.y)) == (e.x == e.y))

check("lemma:Ap", "f function ∧ ⟨x,y⟩ ∈ f → y = Ap(f,x)", (1,),
      [("f", _pair_lists(1, 2)),
       ("x", Domain("first components of f", lambda c, e: sorted({x for x, _ in e.f.pairs},
                                                                   key=lambda v: v.bits))),
       ("y", Domain("values at x", lambda c, e: [y for x, y in e.f.pairs if x == e.x]))],
      [H("f is a function", lambda c, e: c.U.is_function(e.f), "f"),
       H("⟨x,y⟩ ∈ f", lambda c, e: (e.x, e.y) in e.f.pairs)],
      lambda c, e: c.U.ap(e.f, e.x) == e.y,
      note="f ranges over all relations on U1 with at most two pairs")

check("lemma:finverse", "f: X → Y one-to-one onto → f⁻¹: Y → X one-to-one onto", (1,),
      [("X", dU(0)), ("Y", dU(0)), ("f", dRelations("X", "Y"))],
      [H("f: X → Y", lambda c, e: c.U.maps(e.f, e.X, e.Y)),
       H("f is a function", lambda c, e: c.U.is_function(e.f)),
       H("f one-to-one", lambda c, e: c.U.is_one_one(e.f, e.X, e.Y)),
       H("f onto", lambda c, e: c.U.is_onto(e.f, e.X, e.Y))],
      lambda c, e: (lambda g: c.U.maps(g, e.Y, e.X) and c.U.is_function(g)
                    and c.U.is_one_one(g, e.Y, e.X) and c.U.is_onto(g, e.Y, e.X))(
          c.U.view(e.f).inverse()))

check("lemma:sim", "x ∼ x; x ∼ y → y ∼ x; x ∼ y ∧ y ∼ z → x ∼ z", SET12,
      [("x", dU(0)), ("y", dU(0)), ("z", dU(0))],
      conclusion=lambda c, e: c.simw(e.x, e.x)
      and (not c.simw(e.x, e.y) or c.simw(e.y, e.x))
      and (not (c.simw(e.x, e.y) and c.simw(e.y, e.z)) or c.simw(e.x, e.z)),
      vectorized=_vec_sim,
      note="explicit bijection witnesses at level 1; similarity matrix at level 2")

check("lemma:similar_to_empty2", "x ∼ Λ ↔ x = Λ", SET12,
      [("x", dU(0))],
      conclusion=lambda c, e: c.simw(e.x, SetVal(e.x.level, 0)) == (e.x.bits == 0))

# ===========================================================================
# Finite sets

check("lemma:finitedecidable", "FINITE ⊆ DECIDABLE", SET12,
      [("x", dU(0))], [H("x ∈ FINITE", lambda c, e: c.fin(e.x))],
      lambda c, e: c.dec(e.x))

check("lemma:empty_or_inhabited", "x ∈ FINITE → x = Λ ∨ ∃u u ∈ x", SET12,
      [("x", dU(0))], [H("x ∈ FINITE", lambda c, e: c.fin(e.x))],
      lambda c, e: e.x.bits == 0 or c.inh(e.x))

check("lemma:lambda_finite", "Λ ∈ FINITE", (1, 2, 3),
      conclusion=lambda c, e: c.fin(SetVal(c.h, 0)))

check("lemma:finite_adjoin", "x ∈ FINITE ∧ c ∉ x → x ∪ {c} ∈ FINITE", SET12,
      [("x", dU(0)), ("a", dU(-1))],
      [H("x ∈ FINITE", lambda c, e: c.fin(e.x), "x"),
       H("c ∉ x", lambda c, e: not c.mem(e.x, e.a))],
      lambda c, e: c.fin(c.U.adjoin(e.x, e.a)))

check("lemma:finite_structure", "z ∈ FINITE → z = Λ ∨ ∃x ∈ FINITE ∃c ∉ x (z = x ∪ {c})", SET12,
      [("z", dU(0))], [H("z ∈ FINITE", lambda c, e: c.fin(e.z))],
      lambda c, e: e.z.bits == 0 or any(
          c.fin(x) and not c.mem(x, a) and c.U.adjoin(x, a) == e.z
          for a in c.sets(c.h - 1) for x in [c.U.diff(e.z, c.U.mk_singleton(a))]),
      note="the witness x is determined by c as z − {c}")

check("lemma:singletons_finite", "{x} ∈ FINITE", (0, 1, 2),
      [("x", dU(0))], conclusion=lambda c, e: c.fin(c.U.mk_singleton(e.x)))

check("lemma:uscfinite", "USC(x) ∈ FINITE ↔ x ∈ FINITE", SET12,
      [("x", dU(0))], conclusion=lambda c, e: c.fin(c.usc(e.x)) == c.fin(e.x))

check("lemma:union", "x, y ∈ FINITE ∧ x ∩ y = Λ → x ∪ y ∈ FINITE", SET12,
      [("x", dU(0)), ("y", dU(0))],
      [H("x ∈ FINITE", lambda c, e: c.fin(e.x), "x"),
       H("y ∈ FINITE", lambda c, e: c.fin(e.y)),
       H("x ∩ y = Λ", lambda c, e: e.x.bits & e.y.bits == 0)],
      lambda c, e: c.fin(c.U.union(e.x, e.y)))

check("lemma:similar_decidable", "x ∈ DECIDABLE ∧ x ∼ y → y ∈ DECIDABLE", SET12,
      [("x", dU(0)), ("y", dU(0))],
      [H("x ∈ DECIDABLE", lambda c, e: c.dec(e.x), "x"),
       H("x ∼ y", lambda c, e: c.sim(e.x, e.y))],
      lambda c, e: c.dec(e.y))

check("lemma:similarityrestricted",
      "f: z ∪ {c} → y one-to-one onto ∧ c ∉ z → f|z: z → y − {f(c)} one-to-one onto", (1,),
      [("z", dU(0)), ("a", dU(-1)), ("X", dConst("z ∪ {c}", lambda c, e: c.U.adjoin(e.z, e.a))),
       ("y", dU(0)), ("f", dRelations("X", "y"))],
      [H("c ∉ z", lambda c, e: not c.mem(e.z, e.a), "z", "a"),
       H("|y| = |z ∪ {c}|", lambda c, e: len(e.y) == len(e.X), "X", "y"),
       H("f similarity", lambda c, e: c.U.is_similarity(e.f, e.X, e.y))],
      lambda c, e: c.U.is_similarity(
          _restrict(c.U, e.f, e.z), e.z,
          c.U.diff(e.y, c.U.mk_singleton(c.U.value(e.f, e.a)))),
      note="the size hypothesis only prunes relations that cannot be similarities")

check("lemma:finitesimilar", "x ∼ y ∧ y ∈ FINITE → x ∈ FINITE", SET12,
      [("x", dU(0)), ("y", dU(0))],
      [H("x ∼ y", lambda c, e: c.sim(e.x, e.y)), H("y ∈ FINITE", lambda c, e: c.fin(e.y))],
      lambda c, e: c.fin(e.x))

check("lemma:finitepowerset", "x ∈ FINITE → SSC(x) ∈ FINITE", SET12,
      [("x", dU(0))], [H("x ∈ FINITE", lambda c, e: c.fin(e.x))],
      lambda c, e: c.fin(c.ssc(e.x)))

check("lemma:finiteseparable", "x, y ∈ FINITE ∧ y ⊆ x → y ∈ SSC(x)", SET12,
      [("x", dU(0)), ("y", dSubsets("x"))],
      [H("x ∈ FINITE", lambda c, e: c.fin(e.x), "x"),
       H("y ⊆ x", lambda c, e: c.sub(e.y, e.x)),
       H("y ∈ FINITE", lambda c, e: c.fin(e.y))],
      lambda c, e: c.mem(c.ssc(e.x), e.y))

check("lemma:separablefinite", "x ∈ FINITE ∧ y ∈ SSC(x) → y ∈ FINITE", SET12,
      [("x", dU(0)), ("y", dSSCmembers("x"))],
      [H("x ∈ FINITE", lambda c, e: c.fin(e.x), "x")],
      lambda c, e: c.fin(e.y))

check("lemma:finitedif", "a, b ∈ FINITE ∧ b ⊆ a → a − b ∈ FINITE", SET12,
      [("a", dU(0)), ("b", dSubsets("a"))],
      [H("a ∈ FINITE", lambda c, e: c.fin(e.a), "a"),
       H("b ∈ FINITE", lambda c, e: c.fin(e.b)),
       H("b ⊆ a", lambda c, e: c.sub(e.b, e.a))],
      lambda c, e: c.fin(c.U.diff(e.a, e.b)))


def _bq_Y(c, e):
    pairs = _pairs(c.U, e.R)
    ys = {z.bits for u, z in pairs if c.mem(e.B, u) and c.mem(e.X, z)}
    return SetVal(e.X.level, mask_from_indices(ys))


check("lemma:boundedquantification",
      "X decidable, R separable, B ∈ FINITE, B ⊆ X → {z ∈ X : ∃u ∈ B ⟨u,z⟩ ∈ R} ∈ SSC(X)", (1,),
      [("X", dU(0)), ("R", dRelations("X", "X")), ("B", dSubsets("X"))],
      [H("X ∈ DECIDABLE", lambda c, e: c.dec(e.X), "X"),
       H("R separable on X", lambda c, e: all(
           (((u, z) in _pairs(c.U, e.R)) or ((u, z) not in _pairs(c.U, e.R)))
           for u in c.U.members(e.X) for z in c.U.members(e.X)), "R"),
       H("B ∈ FINITE", lambda c, e: c.fin(e.B)),
       H("B ⊆ X", lambda c, e: c.sub(e.B, e.X))],
      lambda c, e: c.mem(c.ssc(e.X), _bq_Y(c, e)))

check("lemma:swap_similarity", "U ⊆ X, b ∈ U, c ∈ X − U → U ∼ (U − {b}) ∪ {c}", SET12,
      [("X", dU(0)), ("V", dSubsets("X")), ("b", dMembers("V")), ("a", dMembers("X"))],
      [H("X ∈ DECIDABLE", lambda c, e: c.dec(e.X), "X"),
       H("c ∉ U", lambda c, e: not c.mem(e.V, e.a))],
      lambda c, e: c.simw(e.V, c.U.adjoin(c.U.diff(e.V, c.U.mk_singleton(e.b)), e.a)),
      note="U is named V in witnesses, c is named a")

check("theorem:infiniteimpliesnotfinite", "X ∼ Y ⊆ X ∧ Y ≠ X → X ∉ FINITE", SET12,
      [("X", dU(0)), ("Y", dSubsets("X"))],
      [H("X ∼ Y", lambda c, e: c.sim(e.X, e.Y)), H("Y ≠ X", lambda c, e: e.X != e.Y)],
      lambda c, e: not c.fin(e.X),
      note="vacuous in every finite model: no finite set is Dedekind-infinite")

check("lemma:finiteunion", "x ∈ FINITE, members finite and pairwise disjoint → ⋃x ∈ FINITE",
      (2, 3),
      [("x", dAny)],
      [H("x ∈ FINITE", lambda c, e: c.fin(e.x)),
       H("members finite", lambda c, e: all(c.fin(u) for u in c.U.members(e.x))),
       H("members pairwise disjoint", lambda c, e: (lambda ms: all(
           u == v or u.bits & v.bits == 0 for u in ms for v in ms))(c.U.members(e.x)))],
      lambda c, e: c.fin(c.U.bigunion(e.x)))

check("lemma:ssc_adjoin", "c ∉ x → SSC(x) ⊆ SSC(x ∪ {c})", SET12,
      [("x", dU(0)), ("a", dU(-1))],
      [H("c ∉ x", lambda c, e: not c.mem(e.x, e.a))],
      lambda c, e: c.sub(c.ssc(e.x), c.ssc(c.U.adjoin(e.x, e.a))))

check("lemma:intersectionseparable", "u, v ∈ SSC(A) → u ∩ v, u ∪ v ∈ SSC(A)", SET12,
      [("A", dU(0)), ("u", dSSCmembers("A")), ("v", dSSCmembers("A"))],
      conclusion=lambda c, e: c.mem(c.ssc(e.A), c.U.inter(e.u, e.v))
      and c.mem(c.ssc(e.A), c.U.union(e.u, e.v)),
      vectorized=_vec_intersectionseparable)

# ===========================================================================
# Frege cardinals

check("lemma:finitecardinals1", "κ ∈ F ∧ x ∈ κ → x ∈ FINITE", CARD,
      [("k", dF), ("x", dMembers("k"))], conclusion=lambda c, e: c.fin(e.x))


def _closed_under_succ(c, e):
    return all(c.s(x) in e.S for x in e.S if c.inh(c.s(x)))


check("lemma:induction", "φ(zero) ∧ ∀x (φ(x) ∧ ∃u u ∈ x⁺ → φ(x⁺)) → ∀x ∈ F φ(x)", CARD,
      [("S", dFsubsets())],
      [H("zero ∈ S", lambda c, e: c.zero in e.S),
       H("S closed under inhabited successor", _closed_under_succ)],
      lambda c, e: all(x in e.S for x in c.F),
      note="φ(x) ranges over x ∈ S for every subset S of F")

check("lemma:cardinalsinhabited", "κ ∈ F → ∃u u ∈ κ", CARD,
      [("k", dF)], conclusion=lambda c, e: c.inh(e.k))

check("lemma:finitecardinals0", "κ ∈ F ∧ x ∈ κ ∧ x ∼ y → y ∈ κ", CARD,
      [("k", dF), ("x", dMembers("k")), ("y", dU(-1))],
      [H("x ∼ y", lambda c, e: c.sim(e.x, e.y))],
      lambda c, e: c.mem(e.k, e.y))

check("lemma:finitecardinals2", "κ ∈ F ∧ x, y ∈ κ → x ∼ y", CARD,
      [("k", dF), ("x", dMembers("k")), ("y", dMembers("k"))],
      conclusion=lambda c, e: c.simw(e.x, e.y))

check("lemma:xinNcx", "x ∈ Nc(x)", SET12,
      [("x", dU(0))], conclusion=lambda c, e: c.mem(c.nc(e.x), e.x))

check("lemma:cardinalequality", "Nc(x) = Nc(y) ↔ x ∼ y", SET12,
      [("x", dU(0)), ("y", dU(0))],
      conclusion=lambda c, e: (c.nc(e.x) == c.nc(e.y)) == c.sim(e.x, e.y))

check("lemma:Ncsuccessor", "c ∉ x → Nc(x ∪ {c}) = Nc(x)⁺", SET12,
      [("x", dU(0)), ("a", dU(-1))],
      [H("c ∉ x", lambda c, e: not c.mem(e.x, e.a))],
      lambda c, e: c.nc(c.U.adjoin(e.x, e.a)) == c.s(c.nc(e.x)))

check("lemma:Nc_empty", "Nc(Λ) = zero", SET12,
      conclusion=lambda c, e: c.nc(SetVal(c.h, 0)) == c.up.zero)

check("lemma:successorinhabited",
      "κ⁺ inhabited → κ⁺ has an inhabited member and all members of κ⁺ are inhabited", CARD,
      [("k", dAny)], [H("κ⁺ inhabited", lambda c, e: c.inh(c.s(e.k)))],
      lambda c, e: any(c.inh(u) for u in c.U.members(c.s(e.k)))
      and all(c.inh(u) for u in c.U.members(c.s(e.k))))

check("lemma:Fregesuccessoromits0", "∀x x⁺ ≠ zero", CARD,
      [("x", dAny)], conclusion=lambda c, e: c.s(e.x) != c.zero)

check("lemma:nonzeroissuccessor", "κ ∈ F ∧ κ ≠ zero → ∃μ ∈ F κ = μ⁺", CARD,
      [("k", dF)], [H("κ ≠ zero", lambda c, e: e.k != c.zero)],
      lambda c, e: any(c.s(m) == e.k for m in c.F))

check("lemma:zeroF", "zero ∈ F", CARD, conclusion=lambda c, e: c.inF(c.zero))

check("lemma:successorF", "κ ∈ F ∧ κ⁺ inhabited → κ⁺ ∈ F", CARD,
      [("k", dF)], [H("κ⁺ inhabited", lambda c, e: c.inh(c.s(e.k)))],
      lambda c, e: c.inF(c.s(e.k)))

check("lemma:oneF", "one ∈ F", CARD, [],
      [H("capacity: one inhabited", lambda c, e: c.inh(c.one))],
      lambda c, e: c.inF(c.one))

check("lemma:finitecardinals3", "x ∈ FINITE → Nc(x) ∈ F", CARD,
      [("x", dU(-1))], [H("x ∈ FINITE", lambda c, e: c.fin(e.x))],
      lambda c, e: c.inF(c.nc(e.x)))

check("lemma:Finhabited", "κ ∈ F → κ inhabited", CARD,
      [("k", dF)], conclusion=lambda c, e: c.inh(e.k))

check("lemma:similar_to_finite", "x ∼ y ∧ y ∈ FINITE → x ∈ FINITE", SET12,
      [("x", dU(0)), ("y", dU(0))],
      [H("x ∼ y", lambda c, e: c.sim(e.x, e.y)), H("y ∈ FINITE", lambda c, e: c.fin(e.y))],
      lambda c, e: c.fin(e.x))

# ===========================================================================
# Order

check("lemma:separable_similarity",
      "f: b → c similarity ∧ b = a ∪ (b − a) → c = f``a ∪ (c − f``a)", (1,),
      [("b", dU(0)), ("c", dU(0)), ("f", dRelations("b", "c")), ("a", dU(0))],
      [H("f similarity", lambda c, e: c.U.is_similarity(e.f, e.b, e.c), "f"),
       H("a ⊆ b ∧ b = a ∪ (b − a)", lambda c, e: c.sep(e.a, e.b))],
      lambda c, e: (lambda im: e.c == c.U.union(im, c.U.diff(e.c, im)))(c.U.image(e.f, e.a)))

check("lemma:similarity_image", "f: a → b similarity ∧ x ⊆ a → f|x: x → f``x similarity", (1,),
      [("a", dU(0)), ("b", dU(0)), ("f", dRelations("a", "b")), ("x", dSubsets("a"))],
      [H("f similarity", lambda c, e: c.U.is_similarity(e.f, e.a, e.b), "f")],
      lambda c, e: c.U.is_similarity(_restrict(c.U, e.f, e.x), e.x, c.U.image(e.f, e.x)))

check("lemma:le_transitive", "κ ≤ μ ∧ μ ≤ λ → κ ≤ λ", CARD,
      [("k", dF), ("m", dF), ("l", dF)],
      [H("κ ≤ μ", lambda c, e: c.le(e.k, e.m), "k", "m"),
       H("μ ≤ λ", lambda c, e: c.le(e.m, e.l))],
      lambda c, e: c.le(e.k, e.l))

check("lemma:cardinalsdisjoint", "(i) common member → κ = μ; (ii) κ ≠ μ → κ ∩ μ = Λ", CARD,
      [("k", dF), ("m", dF)],
      conclusion=lambda c, e: (not (e.k.bits & e.m.bits) or e.k == e.m)
      and (e.k == e.m or e.k.bits & e.m.bits == 0))

check("lemma:lessthan2", "κ < μ ↔ ∃x ∈ κ ∃y ∈ μ (x ⊂ y ∧ y = x ∪ (y − x))", CARD,
      [("k", dF), ("m", dF)],
      conclusion=lambda c, e: c.lt(e.k, e.m) == _strict_sep_pair(c, e.k, e.m, True))


def _le2_rhs(c, k, m):
    A = c.A.members_array(k)
    B = c.A.members_array(m)
    if B.size == 0:
        return True
    if A.size == 0:
        return False
    a, b = A[:, None], B[None, :]
    ok = ((a & ~b) == 0) & (b == (a | (b & ~a)))
    return bool(np.all(ok.any(axis=0)))


check("lemma:le2", "μ inhabited → (κ ≤ μ ↔ ∀b ∈ μ ∃a ∈ κ (a ⊆ b ∧ b = a ∪ (b − a)))", CARD,
      [("k", dF), ("m", dF)], [H("μ inhabited", lambda c, e: c.inh(e.m))],
      lambda c, e: c.le(e.k, e.m) == _le2_rhs(c, e.k, e.m))

check("lemma:cardinalpredecessor", "κ ∈ F ∧ x ∈ κ⁺ ∧ c ∈ x → x − {c} ∈ κ", CARD,
      [("k", dF), ("x", Domain("members(κ⁺)", lambda c, e: c.U.members(c.s(e.k)))),
       ("a", dMembers("x"))],
      conclusion=lambda c, e: c.mem(e.k, c.U.diff(e.x, c.U.mk_singleton(e.a))))

check("lemma:ordersuccessor", "μ⁺ inhabited → (κ ≤ μ ↔ κ⁺ ≤ μ⁺)", CARD,
      [("k", dF), ("m", dF)], [H("μ⁺ inhabited", lambda c, e: c.inh(c.s(e.m)))],
      lambda c, e: c.le(e.k, e.m) == c.le(c.s(e.k), c.s(e.m)))

check("lemma:successoroneone", "λ⁺, μ⁺ inhabited → (λ = μ ↔ λ⁺ = μ⁺)", CARD,
      [("l", dF), ("m", dF)],
      [H("λ⁺ inhabited", lambda c, e: c.inh(c.s(e.l)), "l"),
       H("μ⁺ inhabited", lambda c, e: c.inh(c.s(e.m)))],
      lambda c, e: (e.l == e.m) == (c.s(e.l) == c.s(e.m)))

for _id in ("lemma:strictordersuccessor", "lemma:successorstrict"):
    check(_id, "κ⁺, μ⁺ inhabited → (κ < μ ↔ κ⁺ < μ⁺)", CARD,
          [("k", dF), ("m", dF)],
          [H("κ⁺ inhabited", lambda c, e: c.inh(c.s(e.k)), "k"),
           H("μ⁺ inhabited", lambda c, e: c.inh(c.s(e.m)))],
          lambda c, e: c.lt(e.k, e.m) == c.lt(c.s(e.k), c.s(e.m)))

check("lemma:difference_nonempty", "x ⊆ y ∧ y = x ∪ (y − x) → (y − x = Λ ↔ y = x)", SET12,
      [("y", dU(0)), ("x", dSubsets("y"))],
      [H("x separable in y", lambda c, e: c.sep(e.x, e.y))],
      lambda c, e: (c.U.diff(e.y, e.x).bits == 0) == (e.y == e.x))

check("lemma:zero_or_not_zero", "κ ∈ F → κ = zero ∨ κ ≠ zero", CARD,
      [("k", dF)], conclusion=lambda c, e: e.k == c.zero or e.k != c.zero)

check("theorem:finitetrichotomy", "κ < μ ∨ κ = μ ∨ μ < κ, and ¬(κ < μ ∧ μ < κ)", CARD,
      [("k", dF), ("m", dF)],
      conclusion=lambda c, e: (c.lt(e.k, e.m) or e.k == e.m or c.lt(e.m, e.k))
      and not (c.lt(e.k, e.m) and c.lt(e.m, e.k)))

check("lemma:FregeNdecidable", "κ, μ ∈ F → κ = μ ∨ κ ≠ μ", CARD,
      [("k", dF), ("m", dF)], conclusion=lambda c, e: e.k == e.m or e.k != e.m)

check("lemma:le_reflexive", "κ ≤ κ", CARD, [("k", dF)],
      conclusion=lambda c, e: c.le(e.k, e.k))

check("lemma:letolessthan", "κ ≤ μ ↔ κ < μ ∨ κ = μ", CARD, [("k", dF), ("m", dF)],
      conclusion=lambda c, e: c.le(e.k, e.m) == (c.lt(e.k, e.m) or e.k == e.m))

check("lemma:finitetrichotomy2", "κ ≤ μ ∧ μ ≤ κ → κ = μ", CARD, [("k", dF), ("m", dF)],
      [H("κ ≤ μ", lambda c, e: c.le(e.k, e.m)), H("μ ≤ κ", lambda c, e: c.le(e.m, e.k))],
      lambda c, e: e.k == e.m)

check("lemma:le_transitive2", "κ < μ ≤ λ → κ < λ", CARD,
      [("k", dF), ("m", dF), ("l", dF)],
      [H("κ < μ", lambda c, e: c.lt(e.k, e.m), "k", "m"), H("μ ≤ λ", lambda c, e: c.le(e.m, e.l))],
      lambda c, e: c.lt(e.k, e.l))

check("lemma:le_transitive3", "κ ≤ λ < μ → κ < μ", CARD,
      [("k", dF), ("l", dF), ("m", dF)],
      [H("κ ≤ λ", lambda c, e: c.le(e.k, e.l), "k", "l"), H("λ < μ", lambda c, e: c.lt(e.l, e.m))],
      lambda c, e: c.lt(e.k, e.m))

check("lemma:lessthan_transitive", "κ < λ < μ → κ < μ", CARD,
      [("k", dF), ("l", dF), ("m", dF)],
      [H("κ < λ", lambda c, e: c.lt(e.k, e.l), "k", "l"), H("λ < μ", lambda c, e: c.lt(e.l, e.m))],
      lambda c, e: c.lt(e.k, e.m))

check("lemma:lessthansuccessor", "κ⁺ ∈ F ∧ κ⁺ inhabited → κ < κ⁺", CARD,
      [("k", dAny)],
      [H("κ⁺ ∈ F", lambda c, e: c.inF(c.s(e.k))), H("κ⁺ inhabited", lambda c, e: c.inh(c.s(e.k)))],
      lambda c, e: c.lt(e.k, c.s(e.k)))

check("lemma:successorincreasing", "m ∈ F → ¬(m⁺ ≤ m)", CARD, [("m", dF)],
      conclusion=lambda c, e: not c.le(c.s(e.m), e.m))

check("lemma:xnotlessthanx", "x ∈ F → ¬(x < x)", CARD, [("x", dF)],
      conclusion=lambda c, e: not c.lt(e.x, e.x))

check("lemma:xnotlessthanzero", "x ∈ F → ¬(x < zero)", CARD, [("x", dF)],
      conclusion=lambda c, e: not c.lt(e.x, c.zero))

check("lemma:noinsertions", "κ < μ → κ⁺ ≤ μ", CARD, [("k", dF), ("m", dF)],
      [H("κ < μ", lambda c, e: c.lt(e.k, e.m))],
      lambda c, e: c.le(c.s(e.k), e.m))

check("lemma:successorbounded", "a < b → a⁺ ∈ F", CARD, [("a", dF), ("b", dF)],
      [H("a < b", lambda c, e: c.lt(e.a, e.b))], lambda c, e: c.inF(c.s(e.a)))

check("lemma:lessthansuccessor2",
      "κ ≤ μ⁺ → κ ≤ μ ∨ κ = μ⁺; with μ⁺ ∈ F the converse holds", CARD,
      [("k", dF), ("m", dF)],
      conclusion=lambda c, e: (lambda sm, rhs: (not c.le(e.k, sm) or rhs)
                               and (not c.inF(sm) or c.le(e.k, sm) == rhs))(
          c.s(e.m), c.le(e.k, e.m) or e.k == c.s(e.m)))

check("lemma:lessthansuccessor3",
      "κ < μ⁺ → κ < μ ∨ κ = μ; with μ⁺ ∈ F the converse holds", CARD,
      [("k", dF), ("m", dF)],
      conclusion=lambda c, e: (lambda sm, rhs: (not c.lt(e.k, sm) or rhs)
                               and (not c.inF(sm) or c.lt(e.k, sm) == rhs))(
          c.s(e.m), c.lt(e.k, e.m) or e.k == e.m))

check("lemma:nothinglessthanzero", "m ∈ F → ¬(m < zero)", CARD, [("m", dF)],
      conclusion=lambda c, e: not c.lt(e.m, c.zero))


def _finite_family(c, S):
    if c.h <= c.U.L:
        return c.fin(SetVal(c.h + 1, mask_from_indices(x.bits for x in S)))
    return True  # a literal finite list is built by adjoining one member at a time


check("lemma:finitemaximal", "S ⊆ F finite and inhabited → S has a maximal element", CARD,
      [("S", dFsubsets())],
      [H("S inhabited", lambda c, e: len(e.S) > 0), H("S ∈ FINITE", lambda c, e: _finite_family(c, e.S))],
      lambda c, e: any(all(not c.lt(x, y) for y in e.S) for x in e.S))

check("lemma:xnotequalsuccessorx", "x, x⁺ ∈ F → x ≠ x⁺", CARD, [("x", dF)],
      [H("x⁺ ∈ F", lambda c, e: c.inF(c.s(e.x)))], lambda c, e: e.x != c.s(e.x))

check("lemma:xlessthansuccessorx", "x, x⁺ ∈ F → x < x⁺", CARD, [("x", dF)],
      [H("x⁺ ∈ F", lambda c, e: c.inF(c.s(e.x)))], lambda c, e: c.lt(e.x, c.s(e.x)))

# ===========================================================================
# Unit subsets and power sets


check("lemma:subset_usc", "y ∈ SSC(USC(a)) → ∃z ∈ SSC(a) y = USC(z)", (1,),
      [("a", dU(0)),
       ("y", Domain("SSC(USC(a))", lambda c, e: c.U.members(c.ssc(c.usc(e.a)))))],
      conclusion=lambda c, e: any(e.y == c.usc(z) for z in c.U.members(c.ssc(e.a))))


def _sscusc(c, e):
    U, A = c.U, c.A
    lhs, rhs = c.ssc(c.usc(e.a)), c.usc(c.ssc(e.a))
    W = FuncView(tuple((U.mk_singleton(z), c.usc(z)) for z in U.members(c.ssc(e.a))))
    return A.rep_equal(A.nc(lhs), A.nc(rhs)) and U.is_similarity(W, rhs, lhs)


check("lemma:sscusc", "Nc(SSC(USC(a))) = Nc(USC(SSC(a)))", (1,),
      [("a", dU(0))], conclusion=_sscusc, reduced=True,
      note="level-4 cardinals compared through representatives, plus the explicit "
           "bijection {z} ↦ USC(z)")

check("lemma:singletons_similar", "{x} ∼ {y}", (0, 1),
      [("x", dU(0)), ("y", dU(0))],
      conclusion=lambda c, e: c.simw(c.U.mk_singleton(e.x), c.U.mk_singleton(e.y)))

check("lemma:similar_to_singleton", "x ∼ {y} → x is a unit class", (0, 1),
      [("x", dU(1)), ("y", dU(0))],
      [H("x ∼ {y}", lambda c, e: c.sim(e.x, c.U.mk_singleton(e.y)))],
      lambda c, e: c.U.is_unit(e.x))

check("lemma:one_members", "u ∈ one ↔ ∃a u = {a}", CARD,
      [("u", dU(-1))],
      conclusion=lambda c, e: c.mem(c.one, e.u)
      == any(e.u == c.U.mk_singleton(a) for a in c.sets(c.h - 2)))

check("lemma:usc_subset3", "a, b ∈ FINITE ∧ a ∈ SSC(b) → USC(a) ∈ SSC(SSC(b))", (1,),
      [("a", dU(0)), ("b", dU(0))],
      [H("a ∈ FINITE", lambda c, e: c.fin(e.a), "a"), H("b ∈ FINITE", lambda c, e: c.fin(e.b)),
       H("a ∈ SSC(b)", lambda c, e: c.mem(c.ssc(e.b), e.a))],
      lambda c, e: c.mem(c.ssc(c.ssc(e.b)), c.usc(e.a)))

check("lemma:uscsimilar", "a ∼ b ↔ USC(a) ∼ USC(b)", SET12,
      [("a", dU(0)), ("b", dU(0))],
      conclusion=lambda c, e: c.sim(e.a, e.b) == c.sim(c.usc(e.a), c.usc(e.b)))

check("lemma:sscsimilar", "a ∼ b → SSC(a) ∼ SSC(b)", SET12,
      [("a", dU(0)), ("b", dU(0))], [H("a ∼ b", lambda c, e: c.sim(e.a, e.b))],
      lambda c, e: c.sim(c.ssc(e.a), c.ssc(e.b)))

check("lemma:usc_subset_ssc", "a ∈ DECIDABLE → USC(a) ⊆ SSC(a)", SET12,
      [("a", dU(0))], [H("a ∈ DECIDABLE", lambda c, e: c.dec(e.a))],
      lambda c, e: c.sub(c.usc(e.a), c.ssc(e.a)))

check("lemma:usc_subset", "a ⊆ b ↔ USC(a) ⊆ USC(b)", SET12,
      [("a", dU(0)), ("b", dU(0))],
      conclusion=lambda c, e: c.sub(e.a, e.b) == c.sub(c.usc(e.a), c.usc(e.b)))

check("lemma:ssc_subset1", "a ∈ SSC(b) ↔ USC(a) ∈ SSC(USC(b))", (1,),
      [("a", dU(0)), ("b", dU(0))],
      conclusion=lambda c, e: c.mem(c.ssc(e.b), e.a) == c.mem(c.ssc(c.usc(e.b)), c.usc(e.a)))

check("lemma:ssc_subset2", "a ∈ SSC(b) ↔ SSC(a) ⊆ SSC(b)", SET12,
      [("a", dU(0)), ("b", dU(0))],
      conclusion=lambda c, e: c.mem(c.ssc(e.b), e.a) == c.sub(c.ssc(e.a), c.ssc(e.b)))

check("lemma:ssc_subset4", "b ∈ FINITE ∧ x, y ∈ SSC(b) → x ⊆ y ∨ ¬(x ⊆ y)", (1,),
      [("b", dU(0)), ("x", dSSCmembers("b")), ("y", dSSCmembers("b"))],
      [H("b ∈ FINITE", lambda c, e: c.fin(e.b), "b")],
      lambda c, e: c.sub(e.x, e.y) or not c.sub(e.x, e.y))

check("lemma:ssc_subset3", "a, b ∈ FINITE ∧ a ∈ SSC(b) → SSC(a) ∈ SSC(SSC(b))", (1,),
      [("a", dU(0)), ("b", dU(0))],
      [H("a ∈ FINITE", lambda c, e: c.fin(e.a), "a"), H("b ∈ FINITE", lambda c, e: c.fin(e.b)),
       H("a ∈ SSC(b)", lambda c, e: c.mem(c.ssc(e.b), e.a))],
      lambda c, e: c.mem(c.ssc(c.ssc(e.b)), c.ssc(e.a)))

check("lemma:usc_successor", "c ∉ a → USC(a ∪ {c}) = USC(a) ∪ {{c}}", SET12,
      [("a", dU(0)), ("x", dU(-1))], [H("c ∉ a", lambda c, e: not c.mem(e.a, e.x))],
      lambda c, e: c.usc(c.U.adjoin(e.a, e.x))
      == c.U.adjoin(c.usc(e.a), c.U.mk_singleton(e.x)),
      note="c is named x")

check("lemma:usc_dif2", "USC(a − b) = USC(a) − USC(b)", SET12,
      [("a", dU(0)), ("b", dU(0))],
      conclusion=lambda c, e: c.usc(c.U.diff(e.a, e.b)) == c.U.diff(c.usc(e.a), c.usc(e.b)))

check("lemma:usc_empty", "USC(Λ) = Λ", SET12,
      conclusion=lambda c, e: c.usc(SetVal(c.h, 0)) == SetVal(c.h + 1, 0))

check("lemma:usc_up_down", "x ∈ a ↔ {x} ∈ USC(a)", SET12,
      [("a", dU(0)), ("x", dU(-1))],
      conclusion=lambda c, e: c.mem(e.a, e.x) == c.mem(c.usc(e.a), c.U.mk_singleton(e.x)))

check("lemma:ssc_empty", "SSC(Λ) = {Λ}", SET12,
      conclusion=lambda c, e: c.ssc(SetVal(c.h, 0)) == c.U.mk_singleton(SetVal(c.h, 0)))

check("lemma:similarinhabited", "a ∼ b ∧ a inhabited → b inhabited", SET12,
      [("a", dU(0)), ("b", dU(0))],
      [H("a ∼ b", lambda c, e: c.sim(e.a, e.b)), H("a inhabited", lambda c, e: c.inh(e.a))],
      lambda c, e: c.inh(e.b))

# ===========================================================================
# Exponentiation

check("lemma:expuscssc", "m ∈ USC(a) → 2^m ∈ SSC(a) ∧ 2^m = Nc(SSC(a))", EXP,
      [("m", dF), ("a", dU(-2))],
      [H("m ∈ USC(a)", lambda c, e: c.mem(e.m, c.usc(e.a)))],
      lambda c, e: c.mem(c.exp(e.m), c.ssc(e.a)) and c.exp(e.m) == c.nc(c.ssc(e.a)),
      note="'m ∈ USC(a)' is read as USC(a) ∈ m, the typed membership of the unit class")

check("lemma:expdefinable", "⟨m, 2^m⟩ relation is stratified", (0,),
      conclusion=_stratification("expdefinable"),
      note="stratification of the defining formula of the graph")

check("lemma:exp_inhabited", "2^m inhabited → ∃a (USC(a) ∈ m ∧ SSC(a) ∈ 2^m)", EXP,
      [("m", dF)], [H("2^m inhabited", lambda c, e: c.inh(c.exp(e.m)))],
      lambda c, e: any(c.mem(e.m, c.usc(a)) and c.mem(c.exp(e.m), c.ssc(a))
                       for a in c.sets(c.h - 2)))

check("lemma:finiteexp", "m ∈ F ∧ 2^m inhabited → 2^m ∈ F", EXP,
      [("m", dF)], [H("2^m inhabited", lambda c, e: c.inh(c.exp(e.m)))],
      lambda c, e: c.inF(c.exp(e.m)))

check("lemma:exp_zero", "2^zero = one", EXP, conclusion=lambda c, e: c.exp(c.zero) == c.one)
check("lemma:exp_one", "2^one = two", EXP, conclusion=lambda c, e: c.exp(c.one) == c.two)
check("lemma:exp_two", "2^two = four", EXP, conclusion=lambda c, e: c.exp(c.two) == c.four)

check("lemma:two_members", "u ∈ two ↔ ∃a ≠ b u = {a, b}", CARD,
      [("u", dU(-1))],
      conclusion=lambda c, e: c.mem(c.two, e.u) == any(
          a != b and e.u == c.U.mk_upair(a, b)
          for a in c.sets(c.h - 2) for b in c.sets(c.h - 2)))

check("lemma:three_members", "u ∈ three ↔ ∃ distinct a, b, c u = {a, b, c}", CARD,
      [("u", dU(-1))],
      conclusion=lambda c, e: c.mem(c.three, e.u) == any(
          len({a, b, d}) == 3 and e.u == c.U.adjoin(c.U.mk_upair(a, b), d)
          for a in c.sets(c.h - 2) for b in c.sets(c.h - 2) for d in c.sets(c.h - 2)))

check("lemma:smallarith", "zero < one < two < three < four", CARD, [],
      [H("capacity: four inhabited", lambda c, e: c.inh(c.four))],
      lambda c, e: c.lt(c.zero, c.one) and c.lt(c.one, c.two)
      and c.lt(c.two, c.three) and c.lt(c.three, c.four))

check("lemma:lessthanone", "m < one ↔ m = zero", CARD, [("m", dF)],
      [H("capacity: one inhabited", lambda c, e: c.inh(c.one))],
      lambda c, e: c.lt(e.m, c.one) == (e.m == c.zero))

check("lemma:lessthantwo", "m < two ↔ m = zero ∨ m = one", CARD, [("m", dF)],
      [H("capacity: two inhabited", lambda c, e: c.inh(c.two))],
      lambda c, e: c.lt(e.m, c.two) == (e.m == c.zero or e.m == c.one))

check("lemma:usc_unitclass", "a unit class ↔ USC(a) unit class", SET12,
      [("a", dU(0))],
      conclusion=lambda c, e: c.U.is_unit(e.a) == c.U.is_unit(c.usc(e.a)))

check("lemma:le_zero", "x ≤ zero → x = zero", CARD, [("x", dF)],
      [H("x ≤ zero", lambda c, e: c.le(e.x, c.zero))], lambda c, e: e.x == c.zero)

check("lemma:mlessthanexpm", "2^m inhabited → m < 2^m", EXP, [("m", dF)],
      [H("2^m inhabited", lambda c, e: c.inh(c.exp(e.m)))],
      lambda c, e: c.lt(e.m, c.exp(e.m)))

check("lemma:mplusone_le_expm", "2^m inhabited → m⁺ ≤ 2^m", EXP, [("m", dF)],
      [H("2^m inhabited", lambda c, e: c.inh(c.exp(e.m)))],
      lambda c, e: c.le(c.s(e.m), c.exp(e.m)))

check("lemma:exporder", "m ≤ n ∧ 2^n inhabited → 2^m inhabited ∧ 2^m ≤ 2^n", EXP,
      [("m", dF), ("n", dF)],
      [H("m ≤ n", lambda c, e: c.le(e.m, e.n)), H("2^n inhabited", lambda c, e: c.inh(c.exp(e.n)))],
      lambda c, e: c.inh(c.exp(e.m)) and c.le(c.exp(e.m), c.exp(e.n)))

# ===========================================================================
# Addition

dAnySmall = Domain("SF ∪ sample at h", lambda c, e: c.any_sets(c.h)[:len(c.SF) + 8])

check("lemma:addition2", "x + zero = x; x + y⁺ = (x + y)⁺ = x⁺ + y", CARD,
      [("x", dAny), ("y", dAny)],
      conclusion=lambda c, e: c.add(e.x, c.zero) == e.x
      and c.add(e.x, c.s(e.y)) == c.s(c.add(e.x, e.y)) == c.add(c.s(e.x), e.y),
      vectorized=_vec_addition2)

check("lemma:addition3", "zero + x = x; (x + y) + z = x + (y + z); x + y = y + x", CARD,
      [("x", dAnySmall), ("y", dAnySmall), ("z", dAnySmall)],
      conclusion=lambda c, e: c.add(c.zero, e.x) == e.x
      and c.add(c.add(e.x, e.y), e.z) == c.add(e.x, c.add(e.y, e.z))
      and c.add(e.x, e.y) == c.add(e.y, e.x),
      vectorized=_vec_addition3)

check("lemma:successorisplusone", "m⁺ = m + one", CARD, [("m", dF)],
      conclusion=lambda c, e: c.s(e.m) == c.add(e.m, c.one))

check("lemma:oneplusone", "one + one = two", CARD,
      conclusion=lambda c, e: c.add(c.one, c.one) == c.two)

check("lemma:inhabited_sum", "κ, μ ∈ F ∧ κ + μ inhabited → κ + μ ∈ F", CARD,
      [("k", dF), ("m", dF)], [H("κ + μ inhabited", lambda c, e: c.inh(c.add(e.k, e.m)))],
      lambda c, e: c.inF(c.add(e.k, e.m)))

check("lemma:subterms", "p + q + r ∈ F → p + q, q + r ∈ F; p + q + r + s ∈ F → p + q + r ∈ F",
      CARD, [("p", dF), ("q", dF), ("r", dF), ("t", dF)],
      conclusion=lambda c, e: (lambda pq, qr, pqr: (not c.inF(pqr) or (c.inF(pq) and c.inF(qr)))
                               and (not c.inF(c.add(pqr, e.t)) or c.inF(pqr)))(
          c.add(e.p, e.q), c.add(e.q, e.r), c.add(c.add(e.p, e.q), e.r)),
      note="s is named t")

check("lemma:subterms2", "p ∈ F ∧ p + q⁺ ∈ F → p⁺ ∈ F", CARD,
      [("p", dF), ("q", dAny)], [H("p + q⁺ ∈ F", lambda c, e: c.inF(c.add(e.p, c.s(e.q))))],
      lambda c, e: c.inF(c.s(e.p)))

check("lemma:subterms3", "p + q⁺ ∈ F → p + q ∈ F", CARD,
      [("p", dF), ("q", dF)], [H("p + q⁺ ∈ F", lambda c, e: c.inF(c.add(e.p, c.s(e.q))))],
      lambda c, e: c.inF(c.add(e.p, e.q)))

check("lemma:addorder", "b + q ∈ F ∧ a ≤ b ∧ p ≤ q → a + p ≤ b + q", CARD,
      [("a", dF), ("b", dF), ("p", dF), ("q", dF)],
      [H("a ≤ b", lambda c, e: c.le(e.a, e.b), "a", "b"), H("p ≤ q", lambda c, e: c.le(e.p, e.q)),
       H("b + q ∈ F", lambda c, e: c.inF(c.add(e.b, e.q)))],
      lambda c, e: c.le(c.add(e.a, e.p), c.add(e.b, e.q)))

check("lemma:addorder2", "b + q ∈ F ∧ a < b ∧ p ≤ q → a + p < b + q", CARD,
      [("a", dF), ("b", dF), ("p", dF), ("q", dF)],
      [H("a < b", lambda c, e: c.lt(e.a, e.b), "a", "b"), H("p ≤ q", lambda c, e: c.le(e.p, e.q)),
       H("b + q ∈ F", lambda c, e: c.inF(c.add(e.b, e.q)))],
      lambda c, e: c.lt(c.add(e.a, e.p), c.add(e.b, e.q)))

check("lemma:exp_members2", "m ∈ USC(x) → 2^m ∈ SSC(x)", EXP,
      [("m", dF), ("x", dU(-2))], [H("m ∈ USC(x)", lambda c, e: c.mem(e.m, c.usc(e.x)))],
      lambda c, e: c.mem(c.exp(e.m), c.ssc(e.x)))

check("lemma:expnotzero", "2^z ≠ zero", EXP, [("z", dAny)],
      conclusion=lambda c, e: c.exp(e.z) != c.zero)

check("lemma:extend_similar", "x ∼ y ∧ a ∉ x ∧ b ∉ y → x ∪ {a} ∼ y ∪ {b}", (1,),
      [("x", dU(0)), ("y", dU(0)), ("a", dU(-1)), ("b", dU(-1))],
      [H("x ∼ y", lambda c, e: c.sim(e.x, e.y), "x", "y"),
       H("a ∉ x", lambda c, e: not c.mem(e.x, e.a), "x", "a"),
       H("b ∉ y", lambda c, e: not c.mem(e.y, e.b))],
      lambda c, e: c.simw(c.U.adjoin(e.x, e.a), c.U.adjoin(e.y, e.b)))

check("lemma:cardinality_additive", "p, q ∈ FINITE ∧ p ∩ q = Λ → Nc(p ∪ q) = Nc(p) + Nc(q)",
      SET12, [("p", dU(0)), ("q", dU(0))],
      [H("p ∈ FINITE", lambda c, e: c.fin(e.p), "p"), H("q ∈ FINITE", lambda c, e: c.fin(e.q)),
       H("p ∩ q = Λ", lambda c, e: e.p.bits & e.q.bits == 0)],
      lambda c, e: c.nc(c.U.union(e.p, e.q)) == c.add(c.nc(e.p), c.nc(e.q)))

check("lemma:subtraction", "q + p ∈ F → (q + p = r + p → q = r) ∧ (p + q = p + r → q = r)", CARD,
      [("p", dF), ("q", dF), ("r", dF)],
      [H("q + p ∈ F", lambda c, e: c.inF(c.add(e.q, e.p)), "p", "q")],
      lambda c, e: (c.add(e.q, e.p) != c.add(e.r, e.p) or e.q == e.r)
      and (c.add(e.p, e.q) != c.add(e.p, e.r) or e.q == e.r))

check("lemma:ssc_adjoin2", "b ∈ FINITE ∧ c ∉ b → Nc(SSC(b ∪ {c})) = Nc(SSC(b)) + Nc(SSC(b))",
      (1,), [("b", dU(0)), ("a", dU(-1))],
      [H("b ∈ FINITE", lambda c, e: c.fin(e.b), "b"), H("c ∉ b", lambda c, e: not c.mem(e.b, e.a))],
      lambda c, e: (lambda k: c.nc(c.ssc(c.U.adjoin(e.b, e.a))) == c.add(k, k))(c.nc(c.ssc(e.b))),
      note="c is named a")

check("lemma:exprec", "2^(p⁺) ∈ F → 2^(p⁺) = 2^p + 2^p", EXP, [("p", dF)],
      [H("2^(p⁺) ∈ F", lambda c, e: c.inF(c.exp(c.s(e.p))))],
      lambda c, e: c.exp(c.s(e.p)) == c.add(c.exp(e.p), c.exp(e.p)))

check("lemma:exponeonebase", "2^m = one ↔ m = zero", EXP, [("m", dF)],
      conclusion=lambda c, e: (c.exp(e.m) == c.one) == (e.m == c.zero))

check("lemma:exponeone", "2^n = 2^m inhabited → n = m", EXP, [("n", dF), ("m", dF)],
      [H("2^n = 2^m", lambda c, e: c.exp(e.n) == c.exp(e.m)),
       H("2^n inhabited", lambda c, e: c.inh(c.exp(e.n)))],
      lambda c, e: e.n == e.m)

check("lemma:exporderstrict", "m < n ∧ 2^n inhabited → 2^m inhabited ∧ 2^m < 2^n", EXP,
      [("m", dF), ("n", dF)],
      [H("m < n", lambda c, e: c.lt(e.m, e.n)), H("2^n inhabited", lambda c, e: c.inh(c.exp(e.n)))],
      lambda c, e: c.inh(c.exp(e.m)) and c.lt(c.exp(e.m), c.exp(e.n)))

check("lemma:orderbyaddition", "p ≤ q ↔ ∃k ∈ F p + k = q", CARD, [("p", dF), ("q", dF)],
      conclusion=lambda c, e: c.le(e.p, e.q) == any(c.add(e.p, k) == e.q for k in c.F))

# ===========================================================================
# Semifinite cardinals and multiplication

check("lemma:successorSF", "x ∈ SF → x⁺ ∈ SF", CARD, [("x", dSF)],
      conclusion=lambda c, e: c.inSF(c.s(e.x)))

check("lemma:FsubsetSF", "F ⊆ SF", CARD, [("x", dF)], conclusion=lambda c, e: c.inSF(e.x))

check("lemma:zero_or_successor", "x ∈ SF → x = zero ∨ ∃u ∈ SF x = u⁺", CARD, [("x", dSF)],
      conclusion=lambda c, e: e.x == c.zero or any(c.s(u) == e.x for u in c.SF))

check("lemma:additionSF", "x, y ∈ SF → x + y ∈ SF", CARD, [("x", dSF), ("y", dSF)],
      conclusion=lambda c, e: c.inSF(c.add(e.x, e.y)))

check("lemma:multiplication1", "G is defined by a stratified formula", (0,),
      conclusion=_stratification("multiplication"),
      note="stratification of the least-fixed-point definition")


def _Gstep(c, t):
    x, y, z = t
    return c.inG(x, c.s(y), c.add(z, x))


check("lemma:multiplication2", "⟨x,zero,zero⟩, ⟨zero,x,zero⟩ ∈ G; ⟨x,y,z⟩ ∈ G → ⟨x,y⁺,z+x⟩ ∈ G",
      CARD, [("x", dSF), ("t", dGtriples())],
      conclusion=lambda c, e: c.inG(e.x, c.zero, c.zero) and c.inG(c.zero, e.x, c.zero)
      and _Gstep(c, e.t))

check("lemma:multiplicationSF", "⟨x,y,z⟩ ∈ G → x, y, z ∈ SF", CARD, [("t", dGtriples())],
      conclusion=lambda c, e: all(c.inSF(v) for v in e.t))

check("lemma:zero_or_successorG", "⟨x,y,z⟩ ∈ G → z = zero ∨ ∃u ∈ SF z = u⁺", CARD,
      [("t", dGtriples())],
      conclusion=lambda c, e: e.t[2] == c.zero or any(c.s(u) == e.t[2] for u in c.SF))

check("lemma:addstozero", "x, y ∈ SF ∧ x + y = zero → x = y = zero", CARD,
      [("x", dSF), ("y", dSF)], [H("x + y = zero", lambda c, e: c.add(e.x, e.y) == c.zero)],
      lambda c, e: e.x == c.zero and e.y == c.zero)

check("lemma:multiplication3helper", "⟨zero,y,z⟩ ∈ G → z = zero", CARD, [("t", dGtriples())],
      [H("x = zero", lambda c, e: e.t[0] == c.zero)], lambda c, e: e.t[2] == c.zero)


def _mul3(c, e):
    x, y, z = e.t
    if z == c.zero:
        return x == c.zero or y == c.zero
    G = c.A.mul_graph(c.h).triples
    for p in c.SF:
        if c.s(p) != x:
            continue
        for q in c.SF:
            if c.s(q) != y:
                continue
            for (a, b, r) in G:
                if a == x.bits and b == q.bits:
                    rv = SetVal(c.h, r)
                    if z == c.add(rv, x) and c.add(rv, x) == c.s(c.add(rv, p)):
                        return True
    return False


check("lemma:multiplication3",
      "⟨x,y,z⟩ ∈ G → (z = zero → x = zero ∨ y = zero) ∧ "
      "(z ≠ zero → ∃p,q,r x = p⁺ ∧ y = q⁺ ∧ ⟨x,q,r⟩ ∈ G ∧ z = r + x = (r + p)⁺)", CARD,
      [("t", dGtriples())], conclusion=_mul3,
      note="r ranges over the third components of triples ⟨x,q,r⟩ ∈ G")

check("lemma:inhabitedSF", "m ∈ SF inhabited → m ∈ F", CARD, [("m", dSF)],
      [H("m inhabited", lambda c, e: c.inh(e.m))], lambda c, e: c.inF(e.m))

check("lemma:successorSFF", "x ∈ SF ∧ x⁺ ∈ F → x ∈ F", CARD, [("x", dSF)],
      [H("x⁺ ∈ F", lambda c, e: c.inF(c.s(e.x)))], lambda c, e: c.inF(e.x))

check("lemma:multiplication4", "y ∈ F ∧ ⟨x,y,z⟩, ⟨x,y,t⟩ ∈ G → z = t", CARD,
      [("y", dF), ("x", dSF), ("z", dSF), ("t", dSF)],
      [H("⟨x,y,z⟩ ∈ G", lambda c, e: c.inG(e.x, e.y, e.z), "y", "x", "z"),
       H("⟨x,y,t⟩ ∈ G", lambda c, e: c.inG(e.x, e.y, e.t))],
      lambda c, e: e.z == e.t,
      note="x, z, t bounded by SF: every component of a triple of G is in SF")

check("lemma:mul_zeroNF", "x ∈ SF → x · zero = zero", CARD, [("x", dSF)],
      conclusion=lambda c, e: c.mul(e.x, c.zero) == c.zero)

check("lemma:zero_mulNF", "x ∈ F → zero · x = zero", CARD, [("x", dF)],
      conclusion=lambda c, e: c.mul(c.zero, e.x) == c.zero)


def _mul_is_graph_value(c, x, y):
    v = c.mul(x, y)
    return c.inSF(v) and all(c.inG(x, y, z) == (z == v) for z in c.SF)


check("lemma:multhelper", "x · y ∈ SF is the G-value ∧ y⁺ ∈ F → x · y⁺ = x · y + x", CARD,
      [("x", dSF), ("y", dF)],
      [H("y⁺ ∈ F", lambda c, e: c.inF(c.s(e.y))),
       H("x · y ∈ SF is the unique G-value", lambda c, e: _mul_is_graph_value(c, e.x, e.y))],
      lambda c, e: c.mul(e.x, c.s(e.y)) == c.add(c.mul(e.x, e.y), e.x))

check("lemma:multhelper2", "same hypotheses → x · y⁺ ∈ SF is the unique G-value", CARD,
      [("x", dSF), ("y", dF)],
      [H("y⁺ ∈ F", lambda c, e: c.inF(c.s(e.y))),
       H("x · y ∈ SF is the unique G-value", lambda c, e: _mul_is_graph_value(c, e.x, e.y))],
      lambda c, e: _mul_is_graph_value(c, e.x, c.s(e.y)))

check("lemma:multiplication5", "x, y ∈ F → x · y ∈ SF ∧ (⟨x,y,z⟩ ∈ G ↔ z = x · y)", CARD,
      [("x", dF), ("y", dF), ("z", dAny)],
      conclusion=lambda c, e: c.inSF(c.mul(e.x, e.y))
      and c.inG(e.x, e.y, e.z) == (e.z == c.mul(e.x, e.y)))

check("theorem:multiplication", "y⁺ ∈ F → x · y⁺ = x · y + x", CARD, [("x", dF), ("y", dF)],
      [H("y⁺ ∈ F", lambda c, e: c.inF(c.s(e.y)))],
      lambda c, e: c.mul(e.x, c.s(e.y)) == c.add(c.mul(e.x, e.y), e.x))

check("lemma:right_distributiveNF", "y + z ∈ F → x · (y + z) = x · y + x · z", CARD,
      [("x", dF), ("y", dF), ("z", dF)],
      [H("y + z ∈ F", lambda c, e: c.inF(c.add(e.y, e.z)))],
      lambda c, e: c.mul(e.x, c.add(e.y, e.z)) == c.add(c.mul(e.x, e.y), c.mul(e.x, e.z)))

check("lemma:left_distributiveNF", "x + y ∈ F → (x + y) · z = x · z + y · z", CARD,
      [("x", dF), ("y", dF), ("z", dF)],
      [H("x + y ∈ F", lambda c, e: c.inF(c.add(e.x, e.y)), "x", "y")],
      lambda c, e: c.mul(c.add(e.x, e.y), e.z) == c.add(c.mul(e.x, e.z), c.mul(e.y, e.z)))

check("lemma:one_mulNF", "one · x = x", CARD, [("x", dF)],
      conclusion=lambda c, e: c.mul(c.one, e.x) == e.x)

check("lemma:multiplication_commutative", "x · y = y · x", CARD, [("x", dF), ("y", dF)],
      conclusion=lambda c, e: c.mul(e.x, e.y) == c.mul(e.y, e.x))

check("lemma:subtractionF", "x ∈ SF ∧ u ∈ F ∧ x + u ∈ F → x ∈ F", CARD,
      [("x", dSF), ("u", dF)], [H("x + u ∈ F", lambda c, e: c.inF(c.add(e.x, e.u)))],
      lambda c, e: c.inF(e.x))

check("lemma:assoc_helper", "z⁺ ∈ F ∧ y · z⁺ ∈ F → y · z ∈ F", CARD, [("y", dF), ("z", dF)],
      [H("z⁺ ∈ F", lambda c, e: c.inF(c.s(e.z))),
       H("y · z⁺ ∈ F", lambda c, e: c.inF(c.mul(e.y, c.s(e.z))))],
      lambda c, e: c.inF(c.mul(e.y, e.z)))

check("lemma:multiplication_associative", "x · y, y · z ∈ F → x · (y · z) = (x · y) · z", CARD,
      [("x", dF), ("y", dF), ("z", dF)],
      [H("x · y ∈ F", lambda c, e: c.inF(c.mul(e.x, e.y)), "x", "y"),
       H("y · z ∈ F", lambda c, e: c.inF(c.mul(e.y, e.z)))],
      lambda c, e: c.mul(e.x, c.mul(e.y, e.z)) == c.mul(c.mul(e.x, e.y), e.z))

check("lemma:mul_oneNF", "x · one = x", CARD, [("x", dF)],
      conclusion=lambda c, e: c.mul(e.x, c.one) == e.x)

check("lemma:twoequalsoneplusone", "two = one + one", CARD,
      conclusion=lambda c, e: c.two == c.add(c.one, c.one))

check("lemma:timestwo", "x + x = x · two", CARD, [("x", dF)],
      conclusion=lambda c, e: c.add(e.x, e.x) == c.mul(e.x, c.two))

check("lemma:xlessthan_xplusy", "p + q ∈ F → p ≤ p + q ∧ q ≤ p + q", CARD,
      [("p", dF), ("q", dF)], [H("p + q ∈ F", lambda c, e: c.inF(c.add(e.p, e.q)))],
      lambda c, e: c.le(e.p, c.add(e.p, e.q)) and c.le(e.q, c.add(e.p, e.q)))

check("lemma:exp_sum", "2^(p+q) ∈ F → 2^p, 2^q, 2^p · 2^q ∈ F ∧ 2^(p+q) = 2^p · 2^q", EXP,
      [("p", dF), ("q", dF)],
      [H("p + q ∈ F", lambda c, e: c.inF(c.add(e.p, e.q))),
       H("2^(p+q) ∈ F", lambda c, e: c.inF(c.exp(c.add(e.p, e.q))))],
      lambda c, e: c.inF(c.exp(e.p)) and c.inF(c.exp(e.q))
      and c.inF(c.mul(c.exp(e.p), c.exp(e.q)))
      and c.exp(c.add(e.p, e.q)) == c.mul(c.exp(e.p), c.exp(e.q)))

# ===========================================================================
# The T operation (cardinals at level h, images at h+1)

dF_up = dF_at(1)

check("lemma:Tmembers", "x ∈ κ ↔ USC(x) ∈ T(κ)", TLEV, [("k", dF), ("x", dU(-1))],
      conclusion=lambda c, e: c.mem(e.k, e.x) == c.mem(c.T(e.k), c.usc(e.x)))

check("lemma:T", "x ∈ κ → T(κ) = Nc(USC(x))", TLEV, [("k", dF), ("x", dMembers("k"))],
      conclusion=lambda c, e: c.T(e.k) == c.nc(c.usc(e.x)))

check("lemma:Ncdef", "κ ∈ F ∧ x ∈ κ → κ = Nc(x)", CARD, [("k", dF), ("x", dMembers("k"))],
      conclusion=lambda c, e: e.k == c.nc(e.x))

check("lemma:SpeckerT", "Nc(x) ∈ F → T(Nc(x)) = Nc(USC(x))", TLEV, [("x", dU(-1))],
      [H("Nc(x) ∈ F", lambda c, e: c.inF(c.nc(e.x)))],
      lambda c, e: c.T(c.nc(e.x)) == c.nc(c.usc(e.x)))

check("lemma:Tfinite", "m ∈ F → T(m) ∈ F", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.inF(c.T(e.m)))

check("lemma:Nc_unitclass", "Nc({x}) = one", SET12, [("x", dU(-1))],
      conclusion=lambda c, e: c.nc(c.U.mk_singleton(e.x)) == c.up.one)

check("lemma:Tsuccessor", "m⁺ inhabited → T(m⁺) = T(m)⁺", TLEV, [("m", dF)],
      [H("m⁺ inhabited", lambda c, e: c.inh(c.s(e.m)))],
      lambda c, e: c.T(c.s(e.m)) == c.s(c.T(e.m)))

check("lemma:Tzero", "T(zero) = zero", TLEV, conclusion=lambda c, e: c.T(c.zero) == c.up.zero)

check("lemma:Tone", "T(one) = one", TLEV, [],
      [H("capacity: one inhabited", lambda c, e: c.inh(c.one))],
      lambda c, e: c.T(c.one) == c.up.one)

check("lemma:Ttwo", "T(two) = two", TLEV, [],
      [H("capacity: two inhabited", lambda c, e: c.inh(c.two))],
      lambda c, e: c.T(c.two) == c.up.two)

check("lemma:Torder", "n < m → T(n) < T(m)", TLEV, [("n", dF), ("m", dF)],
      [H("n < m", lambda c, e: c.lt(e.n, e.m))], lambda c, e: c.lt(c.T(e.n), c.T(e.m)))

check("lemma:Tsum", "n + m ∈ F → T(n + m) = T(n) + T(m)", TLEV, [("n", dF), ("m", dF)],
      [H("n + m ∈ F", lambda c, e: c.inF(c.add(e.n, e.m)))],
      lambda c, e: c.T(c.add(e.n, e.m)) == c.add(c.T(e.n), c.T(e.m)))

check("lemma:expT_inhabited", "2^T(m) inhabited", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.inh(c.exp(c.T(e.m))))

check("lemma:expTinF", "2^T(m) ∈ F", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.inF(c.exp(c.T(e.m))))

check("lemma:successorT", "T(m)⁺ ∈ F", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.inF(c.s(c.T(e.m))))

check("lemma:expT", "2^(T m) = T(2^m)", EXP, [("m", dF)],
      [H("2^m inhabited", lambda c, e: c.inh(c.exp(e.m)))],
      lambda c, e: c.A.rep_equal(c.A.exp2_rep(c.A.t_rep(e.m)), c.A.t_rep(c.exp(e.m))),
      reduced=True,
      note="m ∈ F at level 3; both sides are level-4 cardinals compared by representatives")

check("lemma:Toneone", "T(n) = T(m) → n = m", TLEV, [("n", dF), ("m", dF)],
      [H("T(n) = T(m)", lambda c, e: c.T(e.n) == c.T(e.m))], lambda c, e: e.n == e.m)

check("lemma:fivepointthree_converse", "T(a) + T(b) ∈ F ∧ T(a) + T(b) = T(c) → a + b = c",
      TLEV, [("a", dF), ("b", dF), ("x", dF)],
      [H("T(a) + T(b) ∈ F", lambda c, e: c.inF(c.add(c.T(e.a), c.T(e.b))), "a", "b"),
       H("T(a) + T(b) = T(c)", lambda c, e: c.add(c.T(e.a), c.T(e.b)) == c.T(e.x))],
      lambda c, e: c.add(e.a, e.b) == e.x, note="c is named x")

check("lemma:Tlessthan", "n < m ↔ T(n) < T(m)", TLEV, [("n", dF), ("m", dF)],
      conclusion=lambda c, e: c.lt(e.n, e.m) == c.lt(c.T(e.n), c.T(e.m)))

check("lemma:Tonto", "p < T(q) → ∃r ∈ F p = T(r)", TLEV, [("p", dF_up), ("q", dF)],
      [H("p < T(q)", lambda c, e: c.lt(e.p, c.T(e.q)))],
      lambda c, e: any(e.p == c.T(r) for r in c.F))

check("lemma:Tinexp", "2^p inhabited → ∃q p = T(q)", TLEV, [("p", dF_up)],
      [H("2^p inhabited", lambda c, e: c.inh(c.exp(e.p)))],
      lambda c, e: any(e.p == c.T(q) for q in c.F))

check("lemma:epluse", "e + e ∈ F → e⁺ ∈ F", CARD, [("x", dF)],
      [H("capacity: one inhabited", lambda c, e: c.inh(c.one)),
       H("e + e ∈ F", lambda c, e: c.inF(c.add(e.x, e.x)))],
      lambda c, e: c.inF(c.s(e.x)), note="e is named x")

check("lemma:Teven", "T(c) = a + a ∈ F → ∃b c = b + b", TLEV, [("x", dF), ("a", dF_up)],
      [H("a + a ∈ F", lambda c, e: c.inF(c.add(e.a, e.a))),
       H("T(c) = a + a", lambda c, e: c.T(e.x) == c.add(e.a, e.a))],
      lambda c, e: any(e.x == c.add(b, b) for b in c.F), note="c is named x")

check("lemma:adds_to_zero", "p + q = zero → p = zero", CARD, [("p", dAny), ("q", dAny)],
      [H("p + q = zero", lambda c, e: c.add(e.p, e.q) == c.zero)],
      lambda c, e: e.p == c.zero, vectorized=_vec_adds_to_zero)

check("lemma:dividebytwo", "x + x = y + y → x = y", CARD, [("x", dF), ("y", dF)],
      [H("x + x = y + y", lambda c, e: c.add(e.x, e.x) == c.add(e.y, e.y))],
      lambda c, e: e.x == e.y,
      note="fails in finite models when both sums overflow to Λ")

check("lemma:expandT", "2^p ∈ F ↔ ∃q p = T(q)", TLEV, [("p", dF_up)],
      conclusion=lambda c, e: c.inF(c.exp(e.p)) == any(e.p == c.T(q) for q in c.F))

# ===========================================================================
# Products


def _pf_helper(c, e):
    A, U = c.A, c.U
    prod = U.product(U.mk_singleton(e.a), e.Y)
    return c.fin(prod) and A.rep_equal(A.t_rep(c.T(c.nc(e.Y))), A.nc(prod))


check("lemma:productfinite_helper", "Y ∈ FINITE ∧ a ∈ A → {a} × Y ∈ FINITE ∧ Nc({a} × Y) = T²(Nc Y)",
      (1,), [("A", dU(0)), ("Y", dSubsets("A")), ("a", dMembers("A"))],
      [H("A ∈ DECIDABLE", lambda c, e: c.dec(e.A), "A"), H("Y ∈ FINITE", lambda c, e: c.fin(e.Y))],
      _pf_helper, reduced=True,
      note="level-4 cardinals compared through representatives")


def _pf(c, e):
    A, U = c.A, c.U
    prod = U.product(e.X, e.Y)
    t2x = A.sym_size(A.t_rep(c.T(c.nc(e.X))))
    t2y = A.sym_size(A.t_rep(c.T(c.nc(e.Y))))
    return c.fin(prod) and sym_mul(U, t2x, t2y) == A.sym_size(A.nc(prod))


check("lemma:productfinite", "X, Y ∈ FINITE → X × Y ∈ FINITE ∧ Nc(X × Y) = T²κ · T²μ", (1,),
      [("A", dU(0)), ("X", dSubsets("A")), ("Y", dSubsets("A"))],
      [H("A ∈ DECIDABLE", lambda c, e: c.dec(e.A), "A"), H("X ∈ FINITE", lambda c, e: c.fin(e.X), "X"),
       H("Y ∈ FINITE", lambda c, e: c.fin(e.Y))],
      _pf, reduced=True,
      note="level-4 product compared through the size oracle")

# ===========================================================================
# Finite functions and Dedekind finiteness

_FUN_VARS = [("X", dU(0)), ("f", dRelations("X", "X"))]
_FUN_HYPS = [H("X ∈ FINITE", lambda c, e: c.fin(e.X), "X"),
             H("Rel(f)", lambda c, e: c.U.is_relation(e.f)),
             H("f: X → X", lambda c, e: c.U.maps(e.f, e.X, e.X)),
             H("Func(f)", lambda c, e: c.U.is_function(e.f))]

check("lemma:finitefunction", "X ∈ FINITE ∧ f: X → X ∧ dom f = X → f ∈ FINITE", (1,),
      _FUN_VARS, _FUN_HYPS[:3] + [H("dom f = X", lambda c, e: c.U.dom(e.f) == e.X)],
      lambda c, e: c.fin(e.f))

check("lemma:decidable_preimage", "X ∈ FINITE ∧ f: X → X → (∃x ⟨x,y⟩ ∈ f) ∨ ¬", (1,),
      _FUN_VARS + [("y", dMembers("X"))], _FUN_HYPS[:3],
      lambda c, e: (lambda r: r or not r)(
          any(c.mem(e.f, c.U.mk_opair(x, e.y)) for x in c.U.members(e.X))))

check("theorem:dedekind1", "X ∈ FINITE ∧ f: X → X one-to-one → f onto", (1,),
      _FUN_VARS, _FUN_HYPS + [H("f one-to-one", lambda c, e: c.U.is_one_one(e.f, e.X, e.X))],
      lambda c, e: c.U.is_onto(e.f, e.X, e.X))

check("theorem:dedekind2", "X ∈ FINITE ∧ f: X → X onto → f one-to-one", (1,),
      _FUN_VARS, _FUN_HYPS + [H("f onto", lambda c, e: c.U.is_onto(e.f, e.X, e.X))],
      lambda c, e: c.U.is_one_one(e.f, e.X, e.X))

check("lemma:adjoin_cardinality", "B ∈ FINITE ∧ a ∉ B → Nc(B ∪ {a}) = Nc(B)⁺", SET12,
      [("B", dU(0)), ("a", dU(-1))],
      [H("B ∈ FINITE", lambda c, e: c.fin(e.B), "B"), H("a ∉ B", lambda c, e: not c.mem(e.B, e.a))],
      lambda c, e: c.nc(c.U.adjoin(e.B, e.a)) == c.s(c.nc(e.B)))

check("lemma:nothingbetween", "m + n ∈ F ∧ m + n ≤ m⁺ ∧ n ≠ zero → n = one", CARD,
      [("m", dF), ("n", dF)],
      [H("m + n ∈ F", lambda c, e: c.inF(c.add(e.m, e.n))),
       H("m + n ≤ m⁺", lambda c, e: c.le(c.add(e.m, e.n), c.s(e.m))),
       H("n ≠ zero", lambda c, e: e.n != c.zero)],
      lambda c, e: e.n == c.one)

check("lemma:separableNc", "X ∈ FINITE ∧ Z ∈ SSC(X) → Nc(Z) ≤ Nc(X)", SET12,
      [("X", dU(0)), ("Z", dSSCmembers("X"))], [H("X ∈ FINITE", lambda c, e: c.fin(e.X), "X")],
      lambda c, e: c.le(c.nc(e.Z), c.nc(e.X)))

# ===========================================================================
# The counting sets J(m) = {x ∈ F : x < m}

check("lemma:Jsuccessor", "m⁺ ∈ F → J(m⁺) = J(m) ∪ {m} ∧ J̄(m⁺) = J̄(m) ∪ {m⁺}", TLEV,
      [("m", dF)], [H("m⁺ ∈ F", lambda c, e: c.inF(c.s(e.m)))],
      lambda c, e: c.A.j_set(c.s(e.m)) == c.U.adjoin(c.A.j_set(e.m), e.m)
      and c.A.j_bar(c.s(e.m)) == c.U.adjoin(c.A.j_bar(e.m), c.s(e.m)))

check("lemma:Jfinite", "J(m), J̄(m) ∈ FINITE", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.fin(c.A.j_set(e.m)) and c.fin(c.A.j_bar(e.m)))

check("lemma:Jcardinality", "Nc(J(m)) = T²(m)", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.A.rep_equal(c.nc(c.A.j_set(e.m)), c.A.t_rep(c.T(e.m))),
      reduced=True, note="level-4 cardinals compared through representatives")

# ===========================================================================
# Oracles: the extensional engine against the size-arithmetic oracle


def _oracle(op):
    from .. import cardinals as C

    def concl(c, e):
        try:
            return _compare(c, e)
        except C.NotACardinal:
            return False        # the engine produced a non-cardinal: disagreement

    def _compare(c, e):
        A, U = c.A, c.U
        sx, sy = A.sym_size(e.x), A.sym_size(e.y)
        if op == "succ":
            return A.sym_size(c.s(e.x)) == C.sym_succ(U, sx)
        if op == "add":
            return A.sym_size(c.add(e.x, e.y)) == C.sym_add(U, sx, sy)
        if op == "mul":
            return A.sym_size(c.mul(e.x, e.y)) == C.sym_mul(U, sx, sy)
        if op == "exp":
            return A.sym_size(c.exp(e.x)) == C.sym_exp2(U, sx)
        if op == "t":
            return A.sym_size(c.T(e.x)) == C.sym_t(U, sx)
        raise ValueError(op)
    return concl


_FL = Domain("F ∪ {Λ}", lambda c, e: c.F + [c.lam])
_FL1 = Domain("F", lambda c, e: c.F)
for _op, _lv, _dom in (("succ", CARD, _FL), ("add", CARD, _FL), ("mul", CARD, _FL),
                       ("exp", EXP, _FL), ("t", TLEV, _FL)):
    check(f"oracle:{_op}_sym", f"{_op} agrees with size arithmetic", _lv,
          [("x", _dom), ("y", _dom)], conclusion=_oracle(_op))

check("oracle:counting_axiom", "|J(m)| = size(m)", TLEV, [("m", dF)],
      conclusion=lambda c, e: c.A.is_cardinal(e.m) and len(c.A.j_set(e.m)) == c.A.sym_size(e.m).size)

check("oracle:dividebytwo_inhabited", "x + x = y + y ∈ F → x = y", CARD, [("x", dF), ("y", dF)],
      [H("x + x = y + y", lambda c, e: c.add(e.x, e.x) == c.add(e.y, e.y)),
       H("x + x ∈ F", lambda c, e: c.inF(c.add(e.x, e.x)))],
      lambda c, e: e.x == e.y,
      note="lemma:dividebytwo restricted to sums that do not overflow")

BY_ID = {ch.id: ch for ch in CATALOG}
assert len(BY_ID) == len(CATALOG), "duplicate catalog ids"
