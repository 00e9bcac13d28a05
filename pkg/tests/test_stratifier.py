import json
from importlib.resources import files

import pytest
from hypothesis import given, settings, strategies as st

from nf_forge import formula as F
from nf_forge.stratifier import (STRATIFIED, UNSTRATIFIED, WEAKLY_STRATIFIED, CorpusRecord,
                                 OffsetUnionFind, batch_check, check_comprehension,
                                 generate_constraints, read_corpus, stratify, stratify_wrt)

from strat_oracle import brute_force, small_formulas


def corpus(name):
    return read_corpus(files("nf_forge").joinpath("corpus", name).read_text())


def strat(text):
    return stratify(F.parse_formula(text))


# -- soundness / completeness against the brute-force oracle -------------------

SAMPLE = small_formulas(300, seed=11)


@pytest.mark.parametrize("phi,system", SAMPLE[:300], ids=lambda v: "")
def test_verdict_matches_brute_force(phi, system):
    res = stratify(phi)
    assert res.ok == brute_force(system.nodes, system.constraints)


def test_solution_satisfies_every_constraint_and_is_normalised():
    for phi, system in SAMPLE:
        res = stratify(phi)
        if res.ok:
            assert all(c.holds(res.assignment) for c in system.constraints)
            assert min(res.assignment.values()) == 0
        else:
            assert res.net_offset() != 0
            # the cycle is closed: consecutive constraints share endpoints
            cyc = res.conflict
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                assert a.right == b.left


def test_stratified_implies_weakly_stratified():
    for phi, _ in SAMPLE:
        if stratify(phi).verdict == STRATIFIED:
            for v in F.free_vars(phi):
                assert stratify_wrt(phi, v).verdict == STRATIFIED


def test_determinism_and_alpha_invariance():
    a = F.parse_formula("forall w. (w in u -> exists v. (v in w & x in v))")
    b = F.parse_formula("forall p. (p in u -> exists q. (q in p & x in q))")
    ra, rb = stratify(a), stratify(b)
    assert ra.verdict == rb.verdict == STRATIFIED
    assert ra.index_of("x") == rb.index_of("x") and ra.index_of("u") == rb.index_of("u")
    assert stratify(a).assignment == ra.assignment


# -- worked examples -------------------------------------------------------------

def test_ordered_pair_gets_index_two_more():
    rec = {r.name: r for r in corpus("paper_definitions.nf")}["ordered_pair"]
    res = strat(rec.text)
    assert res.verdict == STRATIFIED
    assert res.index_of("z") == res.index_of("x") + 2 == res.index_of("y") + 2
    res = strat("p = <x, y>")
    assert res.index_of("p") == res.index_of("x") + 2


def test_russell_and_singleton_graph_fail():
    res = strat("not (x in x)")
    assert res.verdict == UNSTRATIFIED
    assert res.net_offset() != 0
    assert str(res.conflict[0]) == "idx(x) = idx(x) + 1"
    assert strat("y = {x} & <x,y> in f").verdict == UNSTRATIFIED


def test_weak_stratification_examples():
    res = stratify_wrt(F.parse_formula("x in FIN -> ssc(x) in FIN"), "x")
    assert res.verdict == WEAKLY_STRATIFIED
    assert "FIN" in res.excluded
    recs = {r.name: r for r in corpus("paper_definitions.nf")}
    for name in ("uscfinite_left", "finitepowerset"):
        rec = recs[name]
        assert stratify_wrt(F.parse_formula(rec.text), rec.eigen).verdict == WEAKLY_STRATIFIED
    # exclusion never hurts an already stratified formula
    assert stratify_wrt(F.parse_formula("x in y"), "x").verdict == STRATIFIED


def test_addition_indices():
    rec = {r.name: r for r in corpus("paper_definitions.nf")}["addition"]
    res = stratify_wrt(F.parse_formula(rec.text), "z")
    assert res.ok
    iu = res.index_of("u")
    assert res.index_of("v") == iu == res.index_of("z")
    assert res.index_of("x") == res.index_of("y") == iu + 1


def test_exp_indices():
    res = check_comprehension(F.parse_term("{ u : exists a. (usc(a) in m & sim(u, ssc(a))) }"))
    assert res.ok
    ia = res.index_of("a")
    assert res.index_of("u") == ia + 1
    assert res.index_of("m") == ia + 2
    assert res.term_index == res.index_of("m")       # 2^m gets m's index
    res = strat("y = exp2(m)")
    assert res.index_of("y") == res.index_of("m")


def test_cardinal_successor_comprehension():
    t = F.parse_term("{ x : exists z, a. (z in kappa & a in x & not (a in z) "
                     "& x = union2(z, {a})) }")
    res = check_comprehension(t)
    assert res.ok
    assert res.index_of("a") + 1 == res.index_of("z") == res.eigen_index
    assert res.term_index == res.eigen_index + 1


def test_class_constant_clash_needs_parameters():
    # FIN at two different levels: unstratified, but weakly stratified w.r.t. x
    phi = F.parse_formula("x in FIN & usc(x) in FIN")
    assert stratify(phi).verdict == UNSTRATIFIED
    assert stratify_wrt(phi, "x").verdict == WEAKLY_STRATIFIED


def test_parameter_inside_a_term_is_indexed():
    phi = F.parse_formula("x in P & usc(x) in usc(P)")
    assert "P" not in F.parameters_of(phi, "x")


# -- union-find ------------------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(-3, 3)),
                max_size=12))
def test_offset_union_find_matches_brute_force(edges):
    from nf_forge.stratifier import IndexConstraint

    uf = OffsetUnionFind()
    cons = [IndexConstraint(f"n{a}", f"n{b}", d) for a, b, d in edges]
    consistent = True
    for c in cons:
        if uf.union(c) is not None:
            consistent = False
            break
    if consistent:
        for c in cons:
            assert uf.potential(c.left) == uf.potential(c.right) + c.offset
    nodes = sorted({n for c in cons for n in (c.left, c.right)})
    # offsets up to 3 over <= 6 nodes may need indices up to 15
    assert consistent == brute_force_wide(nodes, cons)


def brute_force_wide(nodes, cons):
    # resolve by propagation from each component root; simple and exact
    val = {}
    adj = {}
    for c in cons:
        adj.setdefault(c.left, []).append((c.right, -c.offset))
        adj.setdefault(c.right, []).append((c.left, c.offset))
    for n in nodes:
        if n in val:
            continue
        val[n] = 0
        stack = [n]
        while stack:
            a = stack.pop()
            for b, d in adj.get(a, ()):
                if b not in val:
                    val[b] = val[a] + d
                    stack.append(b)
    return all(val[c.left] == val[c.right] + c.offset for c in cons)


# -- corpus and reports ----------------------------------------------------------

def test_bundled_corpora_match_expectations():
    for name in ("paper_definitions.nf", "negatives.nf"):
        report = batch_check(corpus(name))
        bad = [r.record.name for r in report.results if not r.matched]
        assert bad == [], name
        assert report.exit_code == 0


def test_negatives_carry_conflict_cycles():
    report = batch_check(corpus("negatives.nf"))
    for r in report.results:
        assert r.got == "FAIL"
        assert r.result.conflict and r.result.net_offset() != 0


def test_empty_corpus():
    report = batch_check([])
    assert report.results == [] and report.exit_code == 0


def test_parallel_batch_keeps_order():
    recs = corpus("paper_definitions.nf")
    assert batch_check(recs, jobs=4).to_json() == batch_check(recs, jobs=1).to_json()


def test_report_formats():
    recs = [CorpusRecord("r", "FAIL", "strat", "x in x"),
            CorpusRecord("bad", "PASS", "strat", "x in (")]
    report = batch_check(recs)
    assert report.mismatches == 1
    assert report.results[1].got == "ERROR"
    tsv = report.to_tsv()
    assert tsv.splitlines()[0] == "name\texpected\tgot\teigen_index\tdetail"
    data = json.loads(report.to_json())
    assert data["summary"] == {"records": 2, "matched": 1, "mismatched": 1}
    assert data["records"][0]["net_offset"] != 0
