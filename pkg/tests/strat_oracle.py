"""Brute-force stratification oracle and a random small-formula generator."""

import itertools
import random

import numpy as np

from nf_forge import formula as F
from nf_forge.stratifier import DISPLACEMENT, generate_constraints

VARS = ["x", "y", "z", "u"]
UNARY = ["singleton", "usc", "ssc", "nc", "succ", "bigunion", "t_op", "dom"]
BINARY = ["opair", "unordered_pair", "union2", "plus", "prod", "image"]
INDEX_RANGE = 7          # indices 0..6


def brute_force(nodes, constraints, top=INDEX_RANGE):
    """Is there an assignment nodes -> {0..top-1} satisfying every constraint?"""
    k = len(nodes)
    if k == 0:
        return True
    pos = {n: i for i, n in enumerate(nodes)}
    grid = np.indices((top,) * k).reshape(k, -1)
    ok = np.ones(grid.shape[1], dtype=bool)
    for c in constraints:
        ok &= grid[pos[c.left]] == grid[pos[c.right]] + c.offset
    return bool(ok.any())


def max_offset(constraints):
    return max((abs(c.offset) for c in constraints), default=0)


class FormulaGen:
    def __init__(self, seed):
        self.rng = random.Random(seed)

    def term(self, depth):
        r = self.rng
        if depth <= 0 or r.random() < 0.45:
            return F.Var(r.choice(VARS)) if r.random() < 0.9 else F.Const("zero")
        if r.random() < 0.6:
            return F.App(r.choice(UNARY), (self.term(depth - 1),))
        return F.App(r.choice(BINARY), (self.term(depth - 1), self.term(depth - 1)))

    def formula(self, depth):
        r = self.rng
        roll = r.random()
        if depth <= 0 or roll < 0.35:
            ctor = F.Mem if r.random() < 0.7 else F.Eq
            return ctor(self.term(1), self.term(1))
        if roll < 0.7:
            ctor = r.choice([F.And, F.Or, F.Implies, F.Iff])
            return ctor(self.formula(depth - 1), self.formula(depth - 1))
        if roll < 0.8:
            return F.Not(self.formula(depth - 1))
        ctor = r.choice([F.Forall, F.Exists])
        return ctor(r.choice(VARS), self.formula(depth - 1))


def small_formulas(count, seed=7, max_nodes=6):
    """``count`` random formulas with at most ``max_nodes`` index nodes and
    small enough offsets that any solution fits in {0..6} after shifting."""
    gen = FormulaGen(seed)
    out = []
    while len(out) < count:
        phi = gen.formula(2)
        system = generate_constraints(phi)
        n = len(system.nodes)
        if n == 0 or n > max_nodes:
            continue
        if (n - 1) * max_offset(system.constraints) > INDEX_RANGE - 1:
            continue
        out.append((phi, system))
    return out
