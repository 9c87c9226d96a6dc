"""Fuzzy subsets with exact rational grades and fuzzy-ideal tests.

A fuzzy ideal is order reversing and satisfies
``mu(x uplus y) >= min(mu(x), mu(y))``.  Four equivalent characterizations
are implemented independently so they can be cross-checked:

* :func:`is_fuzzy_ideal` -- order reversal plus the ``uplus`` condition
* :func:`is_fuzzy_ideal_alt` -- ``mu(0)`` is maximal plus
  ``mu(y) >= min(mu(x), mu(x* . y))``
* :func:`is_fuzzy_ideal_boxplus` -- order reversal plus the ``boxplus`` condition
* :func:`is_fuzzy_ideal_bound` -- ``z <= x boxplus y`` implies
  ``mu(z) >= min(mu(x), mu(y))``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Mapping, Sequence, Union

from .algebra import FiniteResiduatedLattice, WajsbergAlgebra, as_residuated
from .errors import FuzzIdealError
from .ideals import Subset, close_mask, as_mask, bits

Grade = Union[Fraction, int, str]
ZERO, ONE = Fraction(0), Fraction(1)


def _grade(g: Grade) -> Fraction:
    if isinstance(g, float):
        raise TypeError("grades must be exact; pass a Fraction, int or 'p/q' string")
    g = Fraction(g)
    if not ZERO <= g <= ONE:
        raise FuzzIdealError(f"grade {g} outside [0, 1]")
    return g


@dataclass(frozen=True)
class FuzzySubset:
    """Total map from the elements of ``algebra`` to rationals in ``[0, 1]``."""

    algebra: FiniteResiduatedLattice
    grades: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.grades) != self.algebra.size:
            raise FuzzIdealError(
                f"expected {self.algebra.size} grades, got {len(self.grades)}"
            )
        object.__setattr__(self, "grades", tuple(_grade(g) for g in self.grades))

    @classmethod
    def _trusted(cls, algebra: FiniteResiduatedLattice, grades: tuple) -> FuzzySubset:
        # grades derived from already-validated subsets
        mu = object.__new__(cls)
        object.__setattr__(mu, "algebra", algebra)
        object.__setattr__(mu, "grades", grades)
        return mu

    def __call__(self, x: int | str) -> Fraction:
        return self.grades[self.algebra.idx(x)]

    def __le__(self, other: FuzzySubset) -> bool:
        _same_algebra(self, other)
        return all(a <= b for a, b in zip(self.grades, other.grades))

    @property
    def image(self) -> frozenset[Fraction]:
        return frozenset(self.grades)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.algebra.elements, self.grades))

    def __str__(self) -> str:
        return "".join(f"{e} = {g}\n" for e, g in zip(self.algebra.elements, self.grades))


def _same_algebra(*mus: FuzzySubset) -> FiniteResiduatedLattice:
    L = mus[0].algebra
    for mu in mus[1:]:
        if mu.algebra is not L and mu.algebra != L:
            raise FuzzIdealError("fuzzy subsets live on different algebras")
    return L


def fuzzy_subset(
    A: FiniteResiduatedLattice | WajsbergAlgebra,
    grades: Sequence[Grade] | Mapping[str, Grade],
) -> FuzzySubset:
    L = as_residuated(A)
    if isinstance(grades, Mapping):
        unknown = set(grades) - set(L.elements)
        if unknown:
            raise FuzzIdealError(f"unknown elements {sorted(unknown)}")
        missing = [e for e in L.elements if e not in grades]
        if missing:
            raise FuzzIdealError(f"no grade for {missing}")
        grades = [grades[e] for e in L.elements]
    return FuzzySubset(L, tuple(grades))


def constant(A, value: Grade) -> FuzzySubset:
    L = as_residuated(A)
    return FuzzySubset(L, (value,) * L.size)


def two_level(A, I: Subset, alpha: Grade, beta: Grade) -> FuzzySubset:
    """``alpha`` on ``I`` and ``beta`` elsewhere; requires ``alpha > beta``."""
    L = as_residuated(A)
    alpha, beta = _grade(alpha), _grade(beta)
    if not alpha > beta:
        raise FuzzIdealError(f"two-level map needs alpha > beta, got {alpha} <= {beta}")
    mask = as_mask(L, I)
    return FuzzySubset(L, tuple(alpha if mask >> x & 1 else beta for x in range(L.size)))


def characteristic(A, B: Subset) -> FuzzySubset:
    L = as_residuated(A)
    mask = as_mask(L, B)
    return FuzzySubset(L, tuple(ONE if mask >> x & 1 else ZERO for x in range(L.size)))


# ---------------------------------------------------------------------------
# characterizations


def _order_reversing(mu: FuzzySubset) -> bool:
    L, g = mu.algebra, mu.grades
    r = range(L.size)
    return all(g[x] >= g[y] for x in r for y in r if L.leq(x, y))


def is_fuzzy_ideal(mu: FuzzySubset) -> bool:
    L, g = mu.algebra, mu.grades
    up = L.uplus_table
    r = range(L.size)
    return _order_reversing(mu) and all(
        g[up[x][y]] >= min(g[x], g[y]) for x in r for y in r
    )


def is_fuzzy_ideal_alt(mu: FuzzySubset, prime_form: bool = True) -> bool:
    """``mu(0) >= mu(x)`` together with ``mu(y) >= min(mu(x), mu(x* . y))``.

    With ``prime_form=False`` the second condition uses
    ``mu((x* -> y*)*)`` in place of ``mu(x* . y)``.
    """
    L, g = mu.algebra, mu.grades
    neg, prod, imp = L.neg_table, L.prod_table, L.impl_table
    r = range(L.size)
    if any(g[L.bottom] < g[x] for x in r):
        return False
    if prime_form:
        return all(g[y] >= min(g[x], g[prod[neg[x]][y]]) for x in r for y in r)
    return all(g[y] >= min(g[x], g[neg[imp[neg[x]][neg[y]]]]) for x in r for y in r)


def is_fuzzy_ideal_boxplus(mu: FuzzySubset) -> bool:
    L, g = mu.algebra, mu.grades
    bp = L.boxplus_table
    r = range(L.size)
    return _order_reversing(mu) and all(
        g[bp[x][y]] >= min(g[x], g[y]) for x in r for y in r
    )


def is_fuzzy_ideal_bound(mu: FuzzySubset, form: Literal["eq", "le"] = "le") -> bool:
    """Bounded-sum characterization.

    ``form="le"`` uses the premise ``z <= x boxplus y``; ``form="eq"`` the
    premise ``(x boxplus y) boxplus z* == 1``.
    """
    L, g = mu.algebra, mu.grades
    bp, neg = L.boxplus_table, L.neg_table
    r = range(L.size)
    if form == "le":
        premise = lambda x, y, z: L.leq(z, bp[x][y])  # noqa: E731
    elif form == "eq":
        premise = lambda x, y, z: bp[bp[x][y]][neg[z]] == L.top  # noqa: E731
    else:
        raise ValueError(f"unknown form {form!r}")
    return all(
        g[z] >= min(g[x], g[y])
        for x, y, z in itertools.product(r, repeat=3)
        if premise(x, y, z)
    )


def characterization_verdicts(mu: FuzzySubset) -> dict[str, bool]:
    """Verdict of every characterization, keyed by a short label."""
    return {
        "uplus": is_fuzzy_ideal(mu),
        "prod-form": is_fuzzy_ideal_alt(mu),
        "arrow-form": is_fuzzy_ideal_alt(mu, prime_form=False),
        "boxplus": is_fuzzy_ideal_boxplus(mu),
        "bound-eq": is_fuzzy_ideal_bound(mu, "eq"),
        "bound-le": is_fuzzy_ideal_bound(mu, "le"),
    }


# ---------------------------------------------------------------------------
# generated fuzzy ideal


def level_mask(mu: FuzzySubset, t: Fraction) -> int:
    return sum(1 << x for x, g in enumerate(mu.grades) if g >= t)


def fuzzy_closure(mu: FuzzySubset) -> FuzzySubset:
    """Least fuzzy ideal containing ``mu``, computed from level sets.

    For each grade ``t`` of ``mu`` the level set ``{x : mu(x) >= t}`` is
    closed to a crisp ideal; the result at ``x`` is the largest ``t`` whose
    closed level set contains ``x``.
    """
    L = mu.algebra
    out = [ZERO] * L.size
    for t in sorted(mu.image):
        if t == ZERO:
            continue
        for x in bits(close_mask(L, level_mask(mu, t))):
            out[x] = t
    return FuzzySubset._trusted(L, tuple(out))


@lru_cache(maxsize=64)
def _decomposition_cover(L: FiniteResiduatedLattice, max_terms: int | None) -> dict[int, int]:
    # support mask -> mask of elements below some boxplus-sum with that support
    n, bp, down = L.size, L.boxplus_table, L.down_masks
    layer = {(1 << x, x) for x in range(n)}
    seen = set(layer)
    terms = 1
    while layer and (max_terms is None or terms < max_terms):
        nxt = set()
        for support, total in layer:
            for x in range(n):
                state = (support | 1 << x, bp[total][x])
                if state not in seen:
                    nxt.add(state)
        seen |= nxt
        layer = nxt
        terms += 1
    cover: dict[int, int] = {}
    for support, total in seen:
        cover[support] = cover.get(support, 0) | down[total]
    return cover


def decomposition_closure(mu: FuzzySubset, max_terms: int | None = -1) -> FuzzySubset:
    """Evaluate ``sup{min(mu(x1),...,mu(xk)) : x <= x1 boxplus ... boxplus xk}`` directly.

    Sums of at most ``max_terms`` terms are enumerated (default: the size of
    the algebra); ``max_terms=None`` iterates until no new (support, sum)
    pair appears, which covers sums of every length.  Intended as a
    reference for :func:`fuzzy_closure` on small algebras.
    """
    L, g = mu.algebra, mu.grades
    if L.size > 12:
        raise FuzzIdealError("decomposition oracle is limited to 12 elements")
    if max_terms == -1:
        max_terms = L.size
    if max_terms is not None and max_terms < 1:
        raise FuzzIdealError("max_terms must be positive")
    out = [ZERO] * L.size
    for support, covered in _decomposition_cover(L, max_terms).items():
        m = min(g[x] for x in bits(support))
        for x in bits(covered):
            if m > out[x]:
                out[x] = m
    return FuzzySubset(L, tuple(out))
