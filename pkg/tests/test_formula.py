from importlib.resources import files

import pytest
from hypothesis import given, settings, strategies as st

from nf_forge import formula as F
from nf_forge.stratifier import read_corpus

NAMES = ["x", "y", "z", "u", "w", "kappa", "f"]
FSYMS = sorted(F.SIGNATURE)


def corpus_records():
    out = []
    for name in ("paper_definitions.nf", "negatives.nf"):
        out += read_corpus(files("nf_forge").joinpath("corpus", name).read_text())
    return out


# -- grammar-directed generator (depth <= 8) ---------------------------------

def _terms(formulas):
    leaves = st.one_of(st.sampled_from(NAMES).map(F.Var),
                       st.sampled_from(F.CONSTANTS).map(F.Const))

    def extend(inner):
        app = st.sampled_from(FSYMS).flatmap(
            lambda s: st.lists(inner, min_size=F.SIGNATURE[s], max_size=F.SIGNATURE[s])
            .map(lambda args, s=s: F.App(s, tuple(args))))
        return app

    return st.recursive(leaves, extend, max_leaves=4)


def formulas(max_leaves=6):
    def extend(inner):
        terms = _terms(inner)
        return st.one_of(
            st.builds(F.Mem, terms, terms),
            st.builds(F.Eq, terms, terms),
            st.builds(F.And, inner, inner),
            st.builds(F.Or, inner, inner),
            st.builds(F.Implies, inner, inner),
            st.builds(F.Iff, inner, inner),
            st.builds(F.Not, inner),
            st.builds(F.Forall, st.sampled_from(NAMES), inner),
            st.builds(F.Exists, st.sampled_from(NAMES), inner),
            st.builds(lambda v, body, a: F.Mem(a, F.Compr(v, body)),
                      st.sampled_from(NAMES), inner, st.sampled_from(NAMES).map(F.Var)),
        )

    atoms = st.one_of(
        st.builds(F.Mem, st.sampled_from(NAMES).map(F.Var), st.sampled_from(NAMES).map(F.Var)),
        st.builds(F.Eq, st.sampled_from(NAMES).map(F.Var), st.sampled_from(F.CONSTANTS).map(F.Const)),
        st.just(F.Truth()), st.just(F.Falsity()),
    )
    return st.recursive(atoms, extend, max_leaves=max_leaves)


def depth(node):
    kids = []
    if isinstance(node, F.App):
        kids = list(node.args)
    elif isinstance(node, F.Compr):
        kids = [node.body]
    elif isinstance(node, (F.Mem, F.Eq, F.And, F.Or, F.Implies, F.Iff)):
        kids = [node.left, node.right]
    elif isinstance(node, (F.Not, F.Forall, F.Exists)):
        kids = [node.body]
    return 1 + max((depth(k) for k in kids), default=0)


@settings(max_examples=400, deadline=None)
@given(formulas())
def test_render_parse_round_trip(phi):
    if depth(phi) > 8:
        return
    assert F.parse_formula(F.render(phi)) == phi


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_render_is_a_fixpoint(phi):
    text = F.render(phi)
    assert F.render(F.parse_formula(text)) == text


@settings(max_examples=200, deadline=None)
@given(formulas(), st.sampled_from(NAMES))
def test_parameters_are_free_and_exclude_eigenvariable(phi, eigen):
    params = F.parameters_of(phi, eigen)
    assert eigen not in params
    assert params <= F.free_vars(phi)


# -- worked examples ---------------------------------------------------------

def test_atomic_membership():
    assert F.parse_formula("x in y") == F.Mem(F.Var("x"), F.Var("y"))
    assert F.render(F.parse_formula("x in y")) == "x in y"


def test_quantifier_scope():
    phi = F.parse_formula("forall w. (w in u -> w = x)")
    assert phi == F.Forall("w", F.Implies(F.Mem(F.Var("w"), F.Var("u")),
                                          F.Eq(F.Var("w"), F.Var("x"))))


def test_ordered_pair_formula_shape():
    phi = F.parse_formula("u in z <-> (forall w. w in u -> w = x) | "
                          "(forall w. w in u -> (w = x | w = y))")
    assert isinstance(phi, F.Iff)
    assert phi.left == F.Mem(F.Var("u"), F.Var("z"))
    assert isinstance(phi.right, F.Or)
    assert F.free_vars(phi) == {"u", "z", "x", "y"}


def test_terms():
    assert F.parse_term("{x}") == F.App("singleton", (F.Var("x"),))
    assert F.parse_term("<x,y,z>") == F.App("otriple", (F.Var("x"), F.Var("y"), F.Var("z")))
    ap = F.parse_term("{ u : exists y. (<x,y> in f & u in y) }")
    assert isinstance(ap, F.Compr) and ap.var == "u"
    assert F.free_vars(ap) == {"x", "f"}
    assert F.render(ap).startswith("{ u : ")


def test_aliases_and_arity():
    assert F.parse_term("T(Nc(x))") == F.App("t_op", (F.App("nc", (F.Var("x"),)),))
    with pytest.raises(F.ParseError):
        F.parse_term("plus(x)")


def test_bounded_quantifiers_desugar():
    assert F.parse_formula("forall v in t. v = v") == F.parse_formula("forall v. (v in t -> v = v)")
    assert F.parse_formula("exists v in t. v = v") == F.parse_formula("exists v. (v in t & v = v)")


def test_subset_sugar():
    phi = F.parse_formula("sub(a, b)")
    assert isinstance(phi, F.Forall)
    w = phi.var
    assert phi.body == F.Implies(F.Mem(F.Var(w), F.Var("a")), F.Mem(F.Var(w), F.Var("b")))


def test_parse_error_position_and_expected():
    with pytest.raises(F.ParseError) as exc:
        F.parse_formula("x in\n  & y")
    err = exc.value
    assert (err.line, err.column) == (2, 3)
    assert err.expected


def test_parameters_examples():
    p = lambda text, x: F.parameters_of(F.parse_formula(text), x)
    assert p("x in X & z in X", "x") == {"X"}
    assert p("x = y", "x") == set()
    assert p("u in B & <u,z> in R", "z") == {"B", "R"}


def test_alpha_renaming_helpers():
    a = F.parse_formula("forall w. w in x")
    b = F.parse_formula("forall v. v in x")
    assert F.alpha_equivalent(a, b)
    assert not F.alpha_equivalent(a, F.parse_formula("forall v. v in y"))
    assert F.fresh_name("w", {"w", "w1"}) not in {"w", "w1"}


def test_every_corpus_formula_round_trips():
    recs = corpus_records()
    assert len(recs) > 60
    for rec in recs:
        phi = F.parse_formula(rec.text)
        assert F.parse_formula(F.render(phi)) == phi, rec.name
