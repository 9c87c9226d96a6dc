"""Shared fixtures and independent oracles.

The oracles never touch the library's operation tables: every fixture is
rebuilt as a product of Lukasiewicz chains where ``x -> y = min(1, 1 - x + y)``
and ``x (+) y = min(1, x + y)`` hold componentwise on rational tuples.
"""

from __future__ import annotations

import functools
import itertools
import random
from fractions import Fraction

import pytest

from fuzzideal import as_residuated, load_fixture

F = Fraction

# fixture name -> (chain lengths, declared element names in lexicographic order)
MODELS = {
    "order4": ((2, 2), "0 a b 1".split()),
    "order8": ((2, 2, 2), "0 a b c d e f 1".split()),
    "order9": ((3, 3), "0 a b c d e f g 1".split()),
}
FIXTURES = tuple(MODELS)


class ChainProduct:
    """Arithmetic model of a product of finite Lukasiewicz chains."""

    def __init__(self, lengths, names):
        chains = [[F(i, m - 1) for i in range(m)] for m in lengths]
        self.points = list(itertools.product(*chains))
        self.names = list(names)
        self.index = {p: i for i, p in enumerate(self.points)}

    def imp(self, x, y):
        return tuple(min(F(1), 1 - a + b) for a, b in zip(x, y))

    def neg(self, x):
        return tuple(1 - a for a in x)

    def oplus(self, x, y):
        return tuple(min(F(1), a + b) for a, b in zip(x, y))

    def leq(self, x, y):
        return all(a <= b for a, b in zip(x, y))

    def circ_names(self):
        n = self.names
        return [[n[self.index[self.imp(x, y)]] for y in self.points] for x in self.points]

    def neg_names(self):
        return [self.names[self.index[self.neg(x)]] for x in self.points]

    def is_ideal(self, S):
        S = [self.points[i] for i in S]
        if not S:
            return False
        members = set(S)
        down = all(y in members for x in S for y in self.points if self.leq(y, x))
        return down and all(self.oplus(x, y) in members for x in S for y in S)

    def ideals(self):
        n = len(self.points)
        out = []
        for mask in range(1, 1 << n):
            if self.is_ideal([i for i in range(n) if mask >> i & 1]):
                out.append(mask)
        return out

    def is_fuzzy_ideal(self, grades):
        P = self.points
        g = dict(zip(P, grades))
        rev = all(g[x] >= g[y] for x in P for y in P if self.leq(x, y))
        return rev and all(g[self.oplus(x, y)] >= min(g[x], g[y]) for x in P for y in P)

    @functools.cached_property
    def _cover(self):
        # sup over finite sums: reachable (support, sum) pairs until fixpoint,
        # then support -> points below some sum with that support
        P = self.points
        states = {(frozenset([x]), x) for x in P}
        frontier = set(states)
        while frontier:
            new = set()
            for support, total in frontier:
                for x in P:
                    s = (support | {x}, self.oplus(total, x))
                    if s not in states:
                        new.add(s)
            states |= new
            frontier = new
        cover = {}
        for support, total in states:
            cover.setdefault(support, set()).update(x for x in P if self.leq(x, total))
        return cover

    def closure(self, grades):
        g = dict(zip(self.points, grades))
        out = {x: F(0) for x in self.points}
        for support, below in self._cover.items():
            m = min(g[s] for s in support)
            for x in below:
                if m > out[x]:
                    out[x] = m
        return tuple(out[x] for x in self.points)


@pytest.fixture(scope="session")
def models():
    return {name: ChainProduct(*shape) for name, shape in MODELS.items()}


@pytest.fixture(scope="session")
def algebras():
    return {name: load_fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def lattices(algebras):
    return {name: as_residuated(W) for name, W in algebras.items()}


GRADE_POOL = tuple(sorted({F(p, q) for q in (1, 2, 3, 4, 5, 6) for p in range(q + 1)}))


def random_grades(rng: random.Random, n: int, image_size: int | None = None):
    pool = GRADE_POOL if image_size is None else rng.sample(GRADE_POOL, image_size)
    return tuple(rng.choice(pool) for _ in range(n))
