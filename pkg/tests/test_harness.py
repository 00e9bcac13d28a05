import json

import pytest

from nf_forge.cardinals import Arithmetic
from nf_forge.harness import (BY_ID, CATALOG, OUT_OF_SCOPE, UnknownSelection, audit_table,
                              check_lemma, decode_value, encode_value, replay, run_catalog)
from nf_forge.universe import FuncView, SetVal, Universe

from labels import LABELS


class NoDisjointness(Arithmetic):
    ADD_REQUIRES_DISJOINT = False


class NoInhabitedness(Arithmetic):
    F_REQUIRES_INHABITED = False


def test_every_label_is_checked_or_declared_out_of_scope():
    ids = {c.id for c in CATALOG}
    for label in LABELS:
        assert (label in ids) != (label in OUT_OF_SCOPE), label
    extra = {i for i in ids if not i.startswith("oracle:")} - set(LABELS)
    assert extra == set()
    assert len(BY_ID) == len(CATALOG)


def test_catalog_at_n3(catalog_n3):
    report, _ = catalog_n3
    failed = [r.id for r in report.results if r.status == "fail"]
    assert failed == ["lemma:dividebytwo"]
    assert report.summary["skip"] == 0
    w = report.by_id("lemma:dividebytwo").witness
    assert w["level"] == 2
    assert replay("lemma:dividebytwo", Universe(3, 2), w)
    # the inhabited reading holds
    assert report.by_id("oracle:dividebytwo_inhabited").status == "pass"


def test_vacuity_is_reported(catalog_n3):
    report, _ = catalog_n3
    for r in report.results:
        d = r.to_dict()
        assert d["vacuity"]["exercised"] <= d["vacuity"]["instances"]
        assert d["millis"] is None
        if r.status == "pass":
            assert r.exercised > 0


def test_reduced_entries_are_flagged(catalog_n3):
    report, _ = catalog_n3
    reduced = {r.id for r in report.results if r.reduced}
    assert "lemma:sscusc" in reduced and "lemma:Jcardinality" in reduced


def test_empty_universe_runs():
    report = run_catalog(Universe(0, 2))
    assert report.summary["fail"] == 0
    assert any(r.status == "pass-vacuous" for r in report.results)


@pytest.mark.parametrize("mutant,expected", [
    (NoDisjointness, "lemma:addition2"),
    (NoInhabitedness, "lemma:cardinalsinhabited"),
])
def test_mutations_are_caught_with_replayable_witnesses(mutant, expected):
    U = Universe(3, 2)
    report = run_catalog(U, "lemma:addition*,lemma:cardinals*,lemma:Finhabited,lemma:subterms*,"
                            "oracle:*", arith=mutant(U))
    failed = [r for r in report.results if r.status == "fail"]
    assert expected in {r.id for r in failed}
    for r in failed:
        w = json.loads(json.dumps(r.witness))            # survives serialisation
        assert replay(r.id, U, w, mutant(U))
        assert not replay(r.id, U, w, Arithmetic(U)) or r.id == "lemma:dividebytwo"


def test_witness_encoding_round_trip(U3):
    a, b = SetVal(0, 0), SetVal(0, 1)
    values = [SetVal(2, 0b1011), frozenset({SetVal(1, 3), SetVal(1, 0)}),
              FuncView(((a, b), (b, a))), (SetVal(1, 1), SetVal(0, 2))]
    for v in values:
        enc = encode_value(U3, v)
        dec = decode_value(U3, json.loads(json.dumps(enc)))
        if isinstance(v, FuncView):
            assert dec.pairs == v.pairs
        else:
            assert dec == v


def test_parallel_run_is_identical():
    U = Universe(3, 2)
    sel = "lemma:T*,lemma:exp*,theorem:*"
    assert run_catalog(U, sel, jobs=4).to_json() == run_catalog(U, sel, jobs=1).to_json()


def test_selection():
    with pytest.raises(UnknownSelection):
        run_catalog(Universe(1, 2), "lemma:nope*")
    report = run_catalog(Universe(3, 2), "theorem:dedekind*")
    assert [r.id for r in report.results] == ["theorem:dedekind1", "theorem:dedekind2"]
    assert all(r.status == "pass" for r in report.results)


def test_check_lemma_and_audit():
    r = check_lemma("lemma:sscusc", Universe(3, 2))
    assert r.status == "pass"
    with pytest.raises(UnknownSelection):
        check_lemma("lemma:nope", Universe(1, 2))
    table = audit_table().splitlines()
    assert len(table) == len(CATALOG) + len(OUT_OF_SCOPE)
    assert any(line.startswith("lemma:markov\tout-of-scope") for line in table)


def test_text_report(catalog_n3):
    report, _ = catalog_n3
    text = report.to_text()
    assert text.splitlines()[-1] == "summary: pass={pass} fail={fail} skip={skip}".format(
        **report.summary)
    assert "witness@2=" in text


def test_relation_witness_replays():
    # a hand-made counterexample to a false claim about relations: replay
    # accepts it only when the relation is in the enumerated domain
    U = Universe(3, 2)
    a, b = SetVal(0, 0), SetVal(0, 1)
    X = SetVal(1, 0b011)
    f = FuncView(((a, b), (b, a)))
    w = {"level": 1, "bindings": {"X": encode_value(U, X), "f": encode_value(U, f)}}
    # dedekind1 holds, so the swap is no counterexample
    assert not replay("theorem:dedekind1", U, w)
    bad = FuncView(((a, SetVal(0, 2)),))
    w["bindings"]["f"] = encode_value(U, bad)
    assert not replay("theorem:dedekind1", U, w)
