"""Abstract syntax, parser and printer for the set-theory language.

The language has a single binary predicate ``in`` (plus equality), the usual
connectives and quantifiers, a fixed collection of named constants, a fixed
signature of function symbols, and comprehension terms ``{ v : phi }``.

Concrete syntax (ASCII)::

    formula  := quantified | iff
    iff      := implies [ '<->' implies ]
    implies  := or [ '->' implies ]            (right associative)
    or       := and { '|' and }
    and      := unary { '&' unary }
    unary    := 'not' unary | quantified | atom
    quantified := ('forall'|'exists') var {',' var} ['in' term] '.' formula
    atom     := '(' formula ')' | 'true' | 'false'
              | term ('in' | 'notin' | '=' | '!=') term
              | sub(t, t) | sim(t, t) | le(t, t) | lt(t, t)
    term     := var | CONST | fsym '(' term {',' term} ')'
              | '{' term '}' | '{' term ',' term '}'
              | '<' term ',' term '>' | '<' term ',' term ',' term '>'
              | '{' var ':' formula '}'

``sub``, ``sim``, ``le`` and ``lt`` are surface sugar which expand into
the defining formulas (subset, similarity, and the separable order on
cardinals); bounded quantifiers expand in the usual way.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

__all__ = [
    "Var", "Const", "App", "Compr", "Term",
    "Mem", "Eq", "And", "Or", "Implies", "Iff", "Not", "Forall", "Exists",
    "Truth", "Falsity", "Formula",
    "CONSTANTS", "SIGNATURE", "ALIASES", "ParseError",
    "parse_formula", "parse_term", "render", "free_vars", "parameters_of",
    "subterms", "variables_of", "alpha_equivalent", "fresh_name",
]

# ---------------------------------------------------------------------------
# Signature

#: Constant names. ``FIN``/``DEC``/``Ffin``/``SF``/``Ggraph`` name the classes
#: FINITE, DECIDABLE, the finite Frege cardinals, the semifinite cardinals and
#: the graph of multiplication.
CONSTANTS = (
    "Lambda", "V", "zero", "one", "two", "three", "four",
    "FIN", "DEC", "Ffin", "SF", "Ggraph",
)

#: Function symbols and their arities.
SIGNATURE = {
    "singleton": 1, "unordered_pair": 2, "opair": 2, "otriple": 3,
    "union2": 2, "inter2": 2, "diff": 2, "bigunion": 1,
    "usc": 1, "ssc": 1, "sc": 1, "nc": 1, "succ": 1,
    "plus": 2, "times": 2, "exp2": 1, "t_op": 1, "j": 1, "jbar": 1,
    "prod": 2, "image": 2, "ap": 2, "dom": 1, "range": 1,
}

#: Alternative spellings accepted by the parser (never produced by render).
ALIASES = {
    "upair": "unordered_pair", "T": "t_op", "Nc": "nc", "J": "j",
    "Jbar": "jbar", "USC": "usc", "SSC": "ssc", "SC": "sc", "Ap": "ap",
    "union": "union2", "inter": "inter2",
}

SUGAR_PREDICATES = ("sub", "sim", "le", "lt")

KEYWORDS = frozenset({"in", "notin", "not", "forall", "exists", "true", "false"})


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str

    def __post_init__(self):
        if self.name not in CONSTANTS:
            raise ValueError(f"unknown constant {self.name!r}")


@dataclass(frozen=True)
class App:
    fsym: str
    args: tuple

    def __post_init__(self):
        if self.fsym not in SIGNATURE:
            raise ValueError(f"unknown function symbol {self.fsym!r}")
        if len(self.args) != SIGNATURE[self.fsym]:
            raise ValueError(
                f"{self.fsym} takes {SIGNATURE[self.fsym]} argument(s), "
                f"got {len(self.args)}"
            )
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Compr:
    """Comprehension term ``{ var : body }``; binds ``var`` in ``body``."""

    var: str
    body: "Formula"


Term = Union[Var, Const, App, Compr]


@dataclass(frozen=True)
class Mem:
    left: Term
    right: Term


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Truth:
    pass


@dataclass(frozen=True)
class Falsity:
    pass


Formula = Union[Mem, Eq, And, Or, Implies, Iff, Not, Forall, Exists, Truth, Falsity]

_BINARY = (And, Or, Implies, Iff)
_QUANT = (Forall, Exists)


# ---------------------------------------------------------------------------
# Traversal helpers


def variables_of(node) -> set:
    """All variable names occurring anywhere in ``node`` (bound or free)."""
    out = set()
    for sub in _walk(node):
        if isinstance(sub, Var):
            out.add(sub.name)
        elif isinstance(sub, (Compr, Forall, Exists)):
            out.add(sub.var)
    return out


def _walk(node) -> Iterator:
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, App):
            stack.extend(reversed(n.args))
        elif isinstance(n, (Compr, Forall, Exists, Not)):
            stack.append(n.body)
        elif isinstance(n, (Mem, Eq) + _BINARY):
            stack.append(n.right)
            stack.append(n.left)


def subterms(node) -> list:
    """Every term occurrence in ``node`` in left-to-right pre-order."""
    return [n for n in _walk(node) if isinstance(n, (Var, Const, App, Compr))]


def free_vars(node) -> set:
    """Standard free-variable set of a term or formula."""
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, (Const, Truth, Falsity)):
        return set()
    if isinstance(node, App):
        out = set()
        for a in node.args:
            out |= free_vars(a)
        return out
    if isinstance(node, (Compr, Forall, Exists)):
        return free_vars(node.body) - {node.var}
    if isinstance(node, Not):
        return free_vars(node.body)
    if isinstance(node, (Mem, Eq) + _BINARY):
        return free_vars(node.left) | free_vars(node.right)
    raise TypeError(f"not a formula or term: {node!r}")


def _free_occurrences(node, bound=frozenset(), position="other") -> Iterator:
    """Yield ``(name, position)`` for each free variable occurrence.

    ``position`` is ``"param"`` for an atomic occurrence as the right operand
    of a membership atom and ``"other"`` everywhere else.
    """
    if isinstance(node, Var):
        if node.name not in bound:
            yield node.name, position
    elif isinstance(node, App):
        for a in node.args:
            yield from _free_occurrences(a, bound, "other")
    elif isinstance(node, (Compr, Forall, Exists)):
        yield from _free_occurrences(node.body, bound | {node.var})
    elif isinstance(node, Not):
        yield from _free_occurrences(node.body, bound)
    elif isinstance(node, Mem):
        yield from _free_occurrences(node.left, bound, "other")
        yield from _free_occurrences(node.right, bound, "param")
    elif isinstance(node, Eq):
        yield from _free_occurrences(node.left, bound, "other")
        yield from _free_occurrences(node.right, bound, "other")
    elif isinstance(node, _BINARY):
        yield from _free_occurrences(node.left, bound)
        yield from _free_occurrences(node.right, bound)


def parameters_of(phi, eigen: str) -> set:
    """Free variables other than ``eigen`` that occur only right of ``in``.

    Only bare variable occurrences as the right operand of a membership atom
    qualify; an occurrence inside a function-symbol argument or in an
    equation disqualifies the variable.
    """
    positions: dict = {}
    for name, pos in _free_occurrences(phi):
        positions.setdefault(name, set()).add(pos)
    return {
        name for name, pos in positions.items()
        if name != eigen and pos == {"param"}
    }


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """Return ``base`` or ``base_k`` for the smallest k, avoiding ``avoid``."""
    avoid = set(avoid)
    if base not in avoid and base not in KEYWORDS:
        return base
    for k in itertools.count(1):
        cand = f"{base}_{k}"
        if cand not in avoid:
            return cand
    raise AssertionError("unreachable")


def alpha_equivalent(a, b) -> bool:
    """Structural equality up to renaming of bound variables."""
    return _canon(a, {}, [0]) == _canon(b, {}, [0])


def _canon(node, env, counter):
    if isinstance(node, Var):
        return ("V", env.get(node.name, node.name))
    if isinstance(node, Const):
        return ("C", node.name)
    if isinstance(node, App):
        return ("A", node.fsym, tuple(_canon(a, env, counter) for a in node.args))
    if isinstance(node, (Compr, Forall, Exists)):
        counter[0] += 1
        new_env = dict(env)
        new_env[node.var] = ("#bound", counter[0])
        return (type(node).__name__, _canon(node.body, new_env, counter))
    if isinstance(node, Not):
        return ("Not", _canon(node.body, env, counter))
    if isinstance(node, (Mem, Eq) + _BINARY):
        return (type(node).__name__, _canon(node.left, env, counter),
                _canon(node.right, env, counter))
    if isinstance(node, (Truth, Falsity)):
        return (type(node).__name__,)
    raise TypeError(node)


# ---------------------------------------------------------------------------
# Sugar expansion


def expand_subset(a: Term, b: Term, avoid: set) -> Formula:
    w = fresh_name("w", avoid)
    return Forall(w, Implies(Mem(Var(w), a), Mem(Var(w), b)))


def expand_similar(a: Term, b: Term, avoid: set) -> Formula:
    """``a ~ b``: some f maps a to b, is one-to-one and onto."""
    avoid = set(avoid) | variables_of(a) | variables_of(b)
    f = fresh_name("f", avoid); avoid.add(f)
    p = fresh_name("p", avoid); avoid.add(p)
    u = fresh_name("u", avoid); avoid.add(u)
    v = fresh_name("v", avoid); avoid.add(v)
    w = fresh_name("w", avoid); avoid.add(w)
    F, P, U, Vv, W = Var(f), Var(p), Var(u), Var(v), Var(w)

    def pair(x, y):
        return App("opair", (x, y))

    rel = Forall(p, Implies(Mem(P, F), Exists(u, Exists(v, And(
        And(Mem(U, a), Mem(Vv, b)), Eq(P, pair(U, Vv)))))))
    total = Forall(u, Implies(Mem(U, a), Exists(v, And(Mem(Vv, b), Mem(pair(U, Vv), F)))))
    func = Forall(u, Forall(v, Forall(w, Implies(
        And(Mem(pair(U, Vv), F), Mem(pair(U, W), F)), Eq(Vv, W)))))
    inj = Forall(u, Forall(v, Forall(w, Implies(
        And(Mem(pair(U, W), F), Mem(pair(Vv, W), F)), Eq(U, Vv)))))
    onto = Forall(v, Implies(Mem(Vv, b), Exists(u, And(Mem(U, a), Mem(pair(U, Vv), F)))))
    return Exists(f, And(And(And(And(rel, total), func), inj), onto))


def expand_le(a: Term, b: Term, avoid: set) -> Formula:
    """Separable order: some member of ``a`` is a separable subset of one of ``b``."""
    avoid = set(avoid) | variables_of(a) | variables_of(b)
    x = fresh_name("x", avoid); avoid.add(x)
    y = fresh_name("y", avoid); avoid.add(y)
    X, Y = Var(x), Var(y)
    sep = Eq(Y, App("union2", (X, App("diff", (Y, X)))))
    body = And(And(And(Mem(X, a), Mem(Y, b)), expand_subset(X, Y, avoid | {x, y})), sep)
    return Exists(x, Exists(y, body))


def expand_lt(a: Term, b: Term, avoid: set) -> Formula:
    return And(expand_le(a, b, avoid), Not(Eq(a, b)))


# ---------------------------------------------------------------------------
# Lexer


class ParseError(ValueError):
    """Syntax error carrying a 1-based line/column and the expected tokens."""

    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = frozenset(expected)
        exp = ""
        if self.expected:
            exp = " (expected one of: " + ", ".join(sorted(self.expected)) + ")"
        super().__init__(f"line {line}, column {column}: {message}{exp}")


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<op><->|->|!=|[(){}<>,.:&|=])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str   # 'op', 'ident', 'eof'
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line,
                             pos - line_start + 1)
        kind = m.lastgroup
        if kind != "ws":
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        else:
            chunk = m.group()
            nl = chunk.count("\n")
            if nl:
                line += nl
                line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    toks.append(_Tok("eof", "<end of input>", line, pos - line_start + 1))
    return toks


# ---------------------------------------------------------------------------
# Parser


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = set()
        for t in self.toks:
            if t.kind == "ident":
                self.names.add(t.text)

    # -- token helpers -----------------------------------------------------
    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k=1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind != "eof" and self.tok.text == text

    def error(self, message: str, expected=()):
        t = self.tok
        raise ParseError(message, t.line, t.col, expected)

    def expect(self, text: str) -> _Tok:
        if not self.at(text):
            self.error(f"unexpected {self.tok.text!r}", {repr(text)})
        t = self.tok
        self.i += 1
        return t

    def variable(self) -> str:
        t = self.tok
        if t.kind != "ident" or t.text in KEYWORDS or t.text in CONSTANTS:
            self.error(f"unexpected {t.text!r}", {"variable"})
        self.i += 1
        return t.text

    # -- formulas ----------------------------------------------------------
    def formula(self):
        if self.at("forall") or self.at("exists"):
            return self.quantified()
        left = self.implies()
        if self.at("<->"):
            self.i += 1
            right = self.implies()
            return Iff(left, right)
        return left

    def implies(self):
        left = self.disj()
        if self.at("->"):
            self.i += 1
            if self.at("forall") or self.at("exists"):
                right = self.quantified()
            else:
                right = self.implies()
            return Implies(left, right)
        return left

    def disj(self):
        left = self.conj()
        while self.at("|"):
            self.i += 1
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.at("&"):
            self.i += 1
            left = And(left, self.unary())
        return left

    def unary(self):
        if self.at("not"):
            self.i += 1
            return Not(self.unary())
        if self.at("forall") or self.at("exists"):
            return self.quantified()
        return self.atom()

    def quantified(self):
        q = self.tok.text
        self.i += 1
        names = [self.variable()]
        while self.at(","):
            self.i += 1
            names.append(self.variable())
        bound = None
        if self.at("in"):
            self.i += 1
            bound = self.term()
        if not self.at("."):
            self.error(f"unexpected {self.tok.text!r}", {"'.'", "','", "'in'"})
        self.i += 1
        body = self.formula()
        for name in reversed(names):
            if q == "forall":
                if bound is not None:
                    body = Implies(Mem(Var(name), bound), body)
                body = Forall(name, body)
            else:
                if bound is not None:
                    body = And(Mem(Var(name), bound), body)
                body = Exists(name, body)
        return body

    def atom(self):
        t = self.tok
        if self.at("("):
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        if self.at("true"):
            self.i += 1
            return Truth()
        if self.at("false"):
            self.i += 1
            return Falsity()
        if t.kind == "ident" and t.text in SUGAR_PREDICATES and self.peek().text == "(":
            return self.sugar()
        if t.kind == "eof" or (t.kind == "op" and t.text not in ("{", "<")) \
                or (t.kind == "ident" and t.text in KEYWORDS):
            self.error(f"unexpected {t.text!r}",
                       {"'('", "'not'", "'forall'", "'exists'", "'true'", "'false'", "term"})
        left = self.term()
        op = self.tok.text if self.tok.kind != "eof" else None
        if op in ("in", "notin", "=", "!="):
            self.i += 1
            right = self.term()
            if op == "in":
                return Mem(left, right)
            if op == "notin":
                return Not(Mem(left, right))
            if op == "=":
                return Eq(left, right)
            return Not(Eq(left, right))
        self.error(f"unexpected {self.tok.text!r}", {"'in'", "'notin'", "'='", "'!='"})

    def sugar(self):
        name = self.tok.text
        self.i += 1
        self.expect("(")
        a = self.term()
        self.expect(",")
        b = self.term()
        self.expect(")")
        avoid = self.names | variables_of(a) | variables_of(b)
        return {"sub": expand_subset, "sim": expand_similar,
                "le": expand_le, "lt": expand_lt}[name](a, b, avoid)

    # -- terms -------------------------------------------------------------
    def term(self):
        t = self.tok
        if self.at("{"):
            self.i += 1
            first = self.term()
            if self.at(":"):
                if not isinstance(first, Var):
                    self.error("comprehension needs a variable before ':'", {"variable"})
                self.i += 1
                body = self.formula()
                self.expect("}")
                return Compr(first.name, body)
            if self.at(","):
                self.i += 1
                second = self.term()
                self.expect("}")
                return App("unordered_pair", (first, second))
            if not self.at("}"):
                self.error(f"unexpected {self.tok.text!r}", {"'}'", "','", "':'"})
            self.i += 1
            return App("singleton", (first,))
        if self.at("<"):
            self.i += 1
            items = [self.term()]
            while self.at(","):
                self.i += 1
                items.append(self.term())
            if not self.at(">"):
                self.error(f"unexpected {self.tok.text!r}", {"'>'", "','"})
            self.i += 1
            if len(items) == 2:
                return App("opair", tuple(items))
            if len(items) == 3:
                return App("otriple", tuple(items))
            raise ParseError("tuples have two or three components", t.line, t.col,
                             {"2 or 3 components"})
        if t.kind != "ident" or t.text in KEYWORDS:
            self.error(f"unexpected {t.text!r}", {"term"})
        name = t.text
        if self.peek().text == "(" and self.peek().kind == "op":
            fsym = ALIASES.get(name, name)
            if fsym not in SIGNATURE:
                self.error(f"unknown function symbol {name!r}", {"function symbol"})
            self.i += 2
            args = [self.term()]
            while self.at(","):
                self.i += 1
                args.append(self.term())
            if len(args) != SIGNATURE[fsym]:
                raise ParseError(
                    f"{name} takes {SIGNATURE[fsym]} argument(s), got {len(args)}",
                    t.line, t.col, {f"{SIGNATURE[fsym]} arguments"})
            self.expect(")")
            return App(fsym, tuple(args))
        self.i += 1
        if name in CONSTANTS:
            return Const(name)
        return Var(name)

    def done(self):
        if self.tok.kind != "eof":
            self.error(f"unexpected {self.tok.text!r}", {"<end of input>"})


def parse_formula(text: str) -> Formula:
    """Parse ``text`` as a formula; raise :class:`ParseError` on bad input."""
    p = _Parser(text)
    f = p.formula()
    p.done()
    return f


def parse_term(text: str) -> Term:
    """Parse ``text`` as a term; raise :class:`ParseError` on bad input."""
    p = _Parser(text)
    t = p.term()
    p.done()
    return t


# ---------------------------------------------------------------------------
# Printer

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4}
_SYM = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def render(node) -> str:
    """Canonical concrete syntax for a term or formula."""
    if isinstance(node, (Var, Const, App, Compr)):
        return _render_term(node)
    return _render_formula(node, 0)


def _render_term(t) -> str:
    if isinstance(t, (Var, Const)):
        return t.name
    if isinstance(t, Compr):
        return "{ " + t.var + " : " + _render_formula(t.body, 0) + " }"
    args = [_render_term(a) for a in t.args]
    if t.fsym == "singleton":
        return "{" + args[0] + "}"
    if t.fsym == "unordered_pair":
        return "{" + ", ".join(args) + "}"
    if t.fsym in ("opair", "otriple"):
        return "<" + ", ".join(args) + ">"
    return t.fsym + "(" + ", ".join(args) + ")"


def _render_formula(f, ctx: int) -> str:
    if isinstance(f, Mem):
        return f"{_render_term(f.left)} in {_render_term(f.right)}"
    if isinstance(f, Eq):
        return f"{_render_term(f.left)} = {_render_term(f.right)}"
    if isinstance(f, Truth):
        return "true"
    if isinstance(f, Falsity):
        return "false"
    if isinstance(f, Not):
        inner = _render_formula(f.body, 5)
        if not isinstance(f.body, Not) and not inner.startswith("("):
            inner = "(" + inner + ")"
        return "not " + inner
    if isinstance(f, _QUANT):
        kw = "forall" if isinstance(f, Forall) else "exists"
        s = f"{kw} {f.var}. {_render_formula(f.body, 0)}"
        return "(" + s + ")" if ctx > 0 else s
    if isinstance(f, _BINARY):
        prec = _PREC[type(f)]
        if isinstance(f, And) or isinstance(f, Or):
            lctx, rctx = prec, prec + 1
        elif isinstance(f, Implies):
            lctx, rctx = prec + 1, prec
        else:
            lctx, rctx = prec + 1, prec + 1
        s = f"{_render_formula(f.left, lctx)} {_SYM[type(f)]} {_render_formula(f.right, rctx)}"
        return "(" + s + ")" if prec < ctx else s
    raise TypeError(f"not a formula: {f!r}")
