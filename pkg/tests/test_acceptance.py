"""Acceptance criteria, one test per criterion.  Each test prints a single
``[criterion N] PASS|FAIL ...`` line (also repeated in the terminal summary)
with the tolerance it was held to."""

import itertools
import subprocess
import sys
import time
from importlib.resources import files

import pytest

from nf_forge import formula as F
from nf_forge.cardinals import Arithmetic, sym_add, sym_mul, sym_succ
from nf_forge.harness import check_lemma, replay, run_catalog
from nf_forge.stratifier import STRATIFIED, batch_check, read_corpus, stratify, stratify_wrt
from nf_forge.universe import FuncView, SetVal, Universe

from conftest import ACCEPTANCE_LINES
from strat_oracle import brute_force, small_formulas

CORPUS_SECONDS = 1.0
RANDOM_SECONDS = 30.0
CATALOG_SECONDS = 120.0
DEDEKIND_SECONDS = 10.0
RANDOM_FORMULAS = 1000


@pytest.fixture
def announce(capsys):
    def emit(number, ok, detail):
        line = f"[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}"
        ACCEPTANCE_LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
    return emit


def _records(name):
    return {r.name: r for r in read_corpus(files("nf_forge").joinpath("corpus", name).read_text())}


def test_criterion_1_stratification_corpus(announce):
    t0 = time.perf_counter()
    defs, negs = _records("paper_definitions.nf"), _records("negatives.nf")
    pos_report = batch_check(list(defs.values()))
    neg_report = batch_check(list(negs.values()))
    pair = stratify(F.parse_formula(defs["ordered_pair"].text))
    exp = stratify(F.parse_formula("y = exp2(m)"))
    add = stratify_wrt(F.parse_formula(defs["addition"].text), "z")
    elapsed = time.perf_counter() - t0
    checks = {
        "positives": pos_report.mismatches == 0,
        "negatives": neg_report.mismatches == 0
                     and all(r.result.conflict and r.result.net_offset() != 0
                             for r in neg_report.results),
        "pair+2": pair.verdict == STRATIFIED and pair.index_of("z") == pair.index_of("x") + 2,
        "exp": exp.index_of("y") == exp.index_of("m"),
        "addition": (add.index_of("u") == add.index_of("v") == add.index_of("z")
                     == add.index_of("x") - 1 == add.index_of("y") - 1),
        "time": elapsed < CORPUS_SECONDS,
    }
    ok = all(checks.values())
    announce(1, ok, f"corpus {len(defs)}+{len(negs)} records, index relations "
                    f"{[k for k, v in checks.items() if not v] or 'ok'}, "
                    f"{elapsed:.3f}s (limit {CORPUS_SECONDS}s)")
    assert ok, checks


def test_criterion_2_solver_vs_brute_force(announce):
    t0 = time.perf_counter()
    sample = small_formulas(RANDOM_FORMULAS, seed=2024)
    mismatches, verdicts = 0, set()
    for phi, system in sample:
        got = stratify(phi).ok
        verdicts.add(got)
        if got != brute_force(system.nodes, system.constraints):
            mismatches += 1
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and verdicts == {True, False} and elapsed < RANDOM_SECONDS
    announce(2, ok, f"{len(sample)} formulas (<= 6 nodes, indices 0..6), {mismatches} "
                    f"mismatches, {elapsed:.2f}s (limit {RANDOM_SECONDS}s)")
    assert ok


NAMED = ["theorem:finitetrichotomy", "lemma:addition2", "lemma:addition3", "theorem:multiplication",
         "lemma:right_distributiveNF", "lemma:left_distributiveNF",
         "lemma:multiplication_commutative", "lemma:multiplication_associative",
         "lemma:exp_zero", "lemma:exp_one", "lemma:exp_two", "lemma:exprec", "lemma:exp_sum",
         "lemma:exponeone", "lemma:SpeckerT", "lemma:Toneone", "lemma:Tonto", "lemma:Teven",
         "lemma:expandT", "lemma:noinsertions", "lemma:orderbyaddition", "lemma:nothingbetween",
         "lemma:le_transitive", "lemma:lessthan_transitive", "lemma:Jsuccessor", "lemma:Jfinite",
         "lemma:Jcardinality"]


def _criterion_3_numbers(catalog_n3):
    report, seconds = catalog_n3
    s = report.summary
    failed = [r.id for r in report.results if r.status == "fail"]
    named_ok = all(report.by_id(i).status == "pass" for i in NAMED)
    return report, seconds, s, failed, named_ok


@pytest.mark.xfail(strict=True, reason="lemma:dividebytwo has a genuine finite counterexample "
                                       "(both sums overflow); see the decisions ledger")
def test_criterion_3_catalog_at_n3(catalog_n3, announce):
    report, seconds, s, failed, named_ok = _criterion_3_numbers(catalog_n3)
    ok = s["fail"] == 0 and s["skip"] == 0 and named_ok and seconds < CATALOG_SECONDS
    announce(3, ok, f"pass={s['pass']} fail={s['fail']} skip={s['skip']} "
                    f"failures={failed} named laws {'pass' if named_ok else 'FAIL'}, "
                    f"{seconds:.1f}s (limit {CATALOG_SECONDS}s)")
    assert ok


def test_criterion_3_only_known_failure(catalog_n3):
    report, seconds, s, failed, named_ok = _criterion_3_numbers(catalog_n3)
    assert failed == ["lemma:dividebytwo"]
    assert s["skip"] == 0 and named_ok and seconds < CATALOG_SECONDS
    assert replay("lemma:dividebytwo", Universe(3, 2), report.by_id("lemma:dividebytwo").witness)


def test_criterion_4_overflow_matching(announce, catalog_n3):
    U = Universe(3, 2)
    A = Arithmetic(U)
    c2, c3, lam = A.numeral("two", 2), A.numeral("three", 2), SetVal(2, 0)
    examples = A.add(c2, c2) == lam and A.succ(c3) == lam and A.mul(c2, c2) == lam
    Fl = A.F_and_lambda(2)
    agree, total = 0, 0
    for a in Fl:
        total += 1
        agree += A.sym_size(A.succ(a)) == sym_succ(U, A.sym_size(a))
    for a, b in itertools.product(Fl, repeat=2):
        total += 2
        agree += A.sym_size(A.add(a, b)) == sym_add(U, A.sym_size(a), A.sym_size(b))
        agree += A.sym_size(A.mul(a, b)) == sym_mul(U, A.sym_size(a), A.sym_size(b))
    report, _ = catalog_n3
    twins = all(report.by_id(i).status == "pass" for i in
                ("oracle:succ_sym", "oracle:add_sym", "oracle:mul_sym", "oracle:exp_sym",
                 "oracle:t_sym"))
    ok = examples and agree == total and twins
    announce(4, ok, f"add(c2,c2)=succ(c3)=mul(c2,c2)=Λ {'holds' if examples else 'FAILS'}; "
                    f"size oracle agrees on {agree}/{total} (F∪{{Λ}})² cases; catalog twins "
                    f"{'pass' if twins else 'FAIL'}")
    assert ok


def test_criterion_5_dedekind(announce):
    t0 = time.perf_counter()
    report = run_catalog(Universe(3, 2), "theorem:dedekind1,theorem:dedekind2")
    elapsed = time.perf_counter() - t0
    exercised = sum(r.exercised for r in report.results)
    ok = (all(r.status == "pass" for r in report.results) and exercised > 0
          and elapsed < DEDEKIND_SECONDS)
    announce(5, ok, f"dedekind1/2 over all X ⊆ U0 and f ⊆ X×X: "
                    f"{[r.status for r in report.results]}, {exercised} exercised, "
                    f"{elapsed:.2f}s (limit {DEDEKIND_SECONDS}s)")
    assert ok


def test_criterion_6_ssc_usc_identity(announce):
    checked, good = 0, 0
    for n in range(4):
        U = Universe(n, 2)
        A = Arithmetic(U)
        for a in U.elements(1):
            lhs, rhs = U.ssc(U.usc(a)), U.usc(U.ssc(a))
            W = FuncView(tuple((U.mk_singleton(z), U.usc(z)) for z in U.members(U.ssc(a))))
            checked += 1
            good += bool(len(lhs) == len(rhs) and U.is_similarity(W, rhs, lhs))
        assert check_lemma("lemma:sscusc", U).status in ("pass", "pass-vacuous")
    ok = checked == good
    announce(6, ok, f"|SSC(USC(A))| = |USC(SSC(A))| with explicit bijection for "
                    f"{good}/{checked} sets A ∈ U1, n = 0..3")
    assert ok


def test_criterion_7_determinism(announce):
    cmd = [sys.executable, "-m", "nf_forge.cli", "check", "--n", "3", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    ok = runs[0].stdout == runs[1].stdout and len(runs[0].stdout) > 0
    announce(7, ok, f"two `check --n 3 --format json` runs byte-identical "
                    f"({len(runs[0].stdout)} bytes, exit {runs[0].returncode})")
    assert ok


def test_criterion_8_mutation_sensitivity(announce):
    class NoDisjointness(Arithmetic):
        ADD_REQUIRES_DISJOINT = False

    class NoInhabitedness(Arithmetic):
        F_REQUIRES_INHABITED = False

    U = Universe(3, 2)
    details, ok = [], True
    for mutant in (NoDisjointness, NoInhabitedness):
        report = run_catalog(U, arith=mutant(U))
        fails = [r for r in report.results if r.status == "fail"]
        new = [r for r in fails if r.id != "lemma:dividebytwo"]
        replayed = all(replay(r.id, U, r.witness, mutant(U)) for r in fails)
        ok &= bool(new) and replayed
        details.append(f"{mutant.__name__}: {len(new)} new fails, witnesses "
                       f"{'replay' if replayed else 'DO NOT replay'}")
    announce(8, ok, "; ".join(details))
    assert ok
