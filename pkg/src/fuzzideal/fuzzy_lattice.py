"""The lattice of fuzzy ideals: meet, join and the relative pseudocomplement.

Meets are pointwise minima; joins are the generated fuzzy ideal of the
pointwise maximum.  The arrow is computed inside a finite :class:`ValueGrid`
by enumerating every grid-valued fuzzy ideal, so it is the relative
pseudocomplement of that (finite) sublattice.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import FiniteResiduatedLattice, as_residuated
from .errors import BudgetExceededError, FuzzIdealError
from .fuzzy import (
    ONE,
    ZERO,
    FuzzySubset,
    _grade,
    _same_algebra,
    constant,
    fuzzy_closure,
    is_fuzzy_ideal_boxplus,
)

DEFAULT_BUDGET = 1 << 20


class EmptyJoinWarning(UserWarning):
    """The join of an empty family was requested; the constant-0 ideal is returned."""


@dataclass(frozen=True)
class ValueGrid:
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(_grade(v) for v in self.values)
        if not vals or vals[0] != ZERO or vals[-1] != ONE:
            raise FuzzIdealError("a value grid must start at 0 and end at 1")
        if any(a >= b for a, b in zip(vals, vals[1:])):
            raise FuzzIdealError("grid values must be strictly ascending")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, values: Iterable) -> ValueGrid:
        """Grid made of ``values`` plus 0 and 1, sorted and deduplicated."""
        return cls(tuple(sorted({_grade(v) for v in values} | {ZERO, ONE})))

    @classmethod
    def covering(cls, *mus: FuzzySubset) -> ValueGrid:
        return cls.of(g for mu in mus for g in mu.grades)

    def __contains__(self, g) -> bool:
        return g in self.values

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return ",".join(map(str, self.values))


def fmt(mu: FuzzySubset) -> str:
    return "(" + ", ".join(str(g) for g in mu.grades) + ")"


def fi_meet(mu1: FuzzySubset, mu2: FuzzySubset) -> FuzzySubset:
    L = _same_algebra(mu1, mu2)
    return FuzzySubset._trusted(L, tuple(map(min, mu1.grades, mu2.grades)))


def fi_join(
    family: Iterable[FuzzySubset], algebra: FiniteResiduatedLattice | None = None
) -> FuzzySubset:
    """Least fuzzy ideal above every member of ``family``.

    An empty family yields the constant-0 ideal (the bottom of the lattice)
    and emits :class:`EmptyJoinWarning`; ``algebra`` is required in that case.
    """
    family = list(family)
    if not family:
        if algebra is None:
            raise FuzzIdealError("join of an empty family needs the algebra")
        warnings.warn("join of an empty family is the constant-0 ideal", EmptyJoinWarning)
        return constant(algebra, 0)
    L = _same_algebra(*family)
    if algebra is not None and as_residuated(algebra) != L:
        raise FuzzIdealError("family does not live on the given algebra")
    sup = tuple(max(gs) for gs in zip(*(mu.grades for mu in family)))
    return fuzzy_closure(FuzzySubset._trusted(L, sup))


@dataclass(frozen=True)
class BrouwerianReport:
    ok: bool
    lhs: FuzzySubset
    rhs: FuzzySubset
    witness: str | None = None


def brouwerian_check(mu: FuzzySubset, family: Sequence[FuzzySubset]) -> BrouwerianReport:
    """Compare ``mu meet join(family)`` with ``join(mu meet f for f in family)``."""
    L = _same_algebra(mu, *family)
    lhs = fi_meet(mu, fi_join(family, L))
    rhs = fi_join([fi_meet(mu, f) for f in family], L)
    for x, (a, b) in enumerate(zip(lhs.grades, rhs.grades)):
        if a != b:
            return BrouwerianReport(False, lhs, rhs, f"{L.elements[x]}: {a} != {b}")
    return BrouwerianReport(True, lhs, rhs)


# ---------------------------------------------------------------------------
# grid-valued fuzzy ideals


def grid_fuzzy_ideals(
    A, grid: ValueGrid, budget: int = DEFAULT_BUDGET
) -> list[FuzzySubset]:
    """Every fuzzy ideal with grades in ``grid``, ordered by grade vector."""
    L = as_residuated(A)
    candidates = len(grid) ** L.size
    if candidates > budget:
        raise BudgetExceededError(
            f"{len(grid)}^{L.size} = {candidates} candidate maps exceed the budget {budget}"
        )
    out = []
    for grades in itertools.product(grid.values, repeat=L.size):
        if grades[L.bottom] != max(grades):
            continue
        mu = FuzzySubset(L, grades)
        if is_fuzzy_ideal_boxplus(mu):
            out.append(mu)
    return out


def _check_on_grid(grid: ValueGrid, *mus: FuzzySubset) -> None:
    for mu in mus:
        stray = mu.image - set(grid.values)
        if stray:
            raise FuzzIdealError(f"grades {sorted(stray)} are not on the grid {grid}")


def _arrow_candidates(mu1, mu2, ideals):
    return [mu for mu in ideals if fi_meet(mu1, mu) <= mu2]


def heyting_arrow(
    mu1: FuzzySubset,
    mu2: FuzzySubset,
    grid: ValueGrid | None = None,
    budget: int = DEFAULT_BUDGET,
    *,
    _ideals: Sequence[FuzzySubset] | None = None,
) -> FuzzySubset:
    """Join of all grid-valued fuzzy ideals ``mu`` with ``mu1 meet mu <= mu2``.

    The default grid is the grades of both arguments together with 0 and 1.
    """
    L = _same_algebra(mu1, mu2)
    grid = grid or ValueGrid.covering(mu1, mu2)
    _check_on_grid(grid, mu1, mu2)
    ideals = _ideals if _ideals is not None else grid_fuzzy_ideals(L, grid, budget)
    return fi_join(_arrow_candidates(mu1, mu2, ideals), L)


def heyting_arrow_sup(
    mu1: FuzzySubset,
    mu2: FuzzySubset,
    grid: ValueGrid | None = None,
    budget: int = DEFAULT_BUDGET,
    *,
    _ideals: Sequence[FuzzySubset] | None = None,
) -> FuzzySubset | None:
    """Greatest admissible grid fuzzy ideal, or ``None`` if there is no greatest one.

    Unlike :func:`heyting_arrow` this takes the pointwise supremum of the
    admissible ideals without closing it.
    """
    L = _same_algebra(mu1, mu2)
    grid = grid or ValueGrid.covering(mu1, mu2)
    _check_on_grid(grid, mu1, mu2)
    ideals = _ideals if _ideals is not None else grid_fuzzy_ideals(L, grid, budget)
    cands = _arrow_candidates(mu1, mu2, ideals)
    sup = FuzzySubset(L, tuple(max(gs) for gs in zip(*(c.grades for c in cands))))
    return sup if sup in cands else None


# ---------------------------------------------------------------------------
# exhaustive Heyting check


@dataclass(frozen=True)
class LawResult:
    law: str
    status: str  # PASS, FAIL or BUDGET
    witness: str = ""

    def line(self) -> str:
        return f"{self.law}: {self.status}" + (f" {self.witness}" if self.witness else "")

    def tsv(self) -> str:
        return f"{self.law}\t{self.status}\t{self.witness}"


@dataclass(frozen=True)
class HeytingReport:
    results: tuple[LawResult, ...]
    ideal_count: int = 0

    @property
    def ok(self) -> bool:
        return all(r.status == "PASS" for r in self.results)


def heyting_axioms_check(
    A, grid: ValueGrid, budget: int = DEFAULT_BUDGET
) -> HeytingReport:
    """Verify the Heyting-algebra laws on every grid-valued fuzzy ideal of ``A``.

    Meets, joins and arrows are tabulated once as indices into the
    enumerated family; the laws are then checked on those tables.
    """
    L = as_residuated(A)
    try:
        F = grid_fuzzy_ideals(L, grid, budget)
    except BudgetExceededError as exc:
        return HeytingReport((LawResult("enumeration", "BUDGET", str(exc)),))
    pos = {mu.grades: i for i, mu in enumerate(F)}
    n = len(F)
    idx = range(n)
    pairs = list(itertools.product(idx, repeat=2))
    triples = list(itertools.product(idx, repeat=3))

    def s(*ks):
        return " ".join(fmt(F[k]) if k is not None else "?" for k in ks)

    def law(name, cases, pred):
        for case in cases:
            if not pred(*case):
                return LawResult(name, "FAIL", s(*case))
        return LawResult(name, "PASS")

    le = [[F[i] <= F[j] for j in idx] for i in idx]
    meet_mu = [[fi_meet(F[i], F[j]) for j in idx] for i in idx]
    join_mu = [[fi_join([F[i], F[j]]) for j in idx] for i in idx]
    M = [[pos.get(meet_mu[i][j].grades) for j in idx] for i in idx]
    J = [[pos.get(join_mu[i][j].grades) for j in idx] for i in idx]

    results = [
        LawResult("bottom-is-constant-0",
                  "PASS" if constant(L, 0).grades in pos else "FAIL"),
        LawResult("top-is-constant-1",
                  "PASS" if constant(L, 1).grades in pos else "FAIL"),
        law("meet-closed", pairs, lambda i, j: M[i][j] is not None),
        law("join-closed", pairs, lambda i, j: J[i][j] is not None),
    ]
    if any(r.status == "FAIL" for r in results[2:]):
        return HeytingReport(tuple(results), n)

    arrows = [[pos.get(heyting_arrow(F[i], F[j], grid, _ideals=F).grades) for j in idx]
              for i in idx]
    sups = []
    for i in idx:
        row = []
        for j in idx:
            sup = heyting_arrow_sup(F[i], F[j], grid, _ideals=F)
            row.append(None if sup is None else pos[sup.grades])
        sups.append(row)

    results += [
        law("join-is-least-upper-bound", pairs,
            lambda i, j: le[i][J[i][j]] and le[j][J[i][j]]
            and all(le[J[i][j]][k] for k in idx if le[i][k] and le[j][k])),
        law("meet-is-greatest-lower-bound", pairs,
            lambda i, j: le[M[i][j]][i] and le[M[i][j]][j]
            and all(le[k][M[i][j]] for k in idx if le[k][i] and le[k][j])),
        law("meet-commutative", pairs, lambda i, j: M[i][j] == M[j][i]),
        law("join-commutative", pairs, lambda i, j: J[i][j] == J[j][i]),
        law("join-idempotent", [(i,) for i in idx], lambda i: J[i][i] == i),
        law("join-associative", triples, lambda i, j, k: J[J[i][j]][k] == J[i][J[j][k]]),
        law("absorption", pairs, lambda i, j: M[i][J[i][j]] == i and J[i][M[i][j]] == i),
        law("distributive", triples,
            lambda i, j, k: M[i][J[j][k]] == J[M[i][j]][M[i][k]]),
        law("arrow-is-fuzzy-ideal", pairs, lambda i, j: arrows[i][j] is not None),
        law("arrow-sup-equals-join", pairs, lambda i, j: sups[i][j] == arrows[i][j]),
        law("adjunction", triples,
            lambda i, j, k: le[M[i][k]][j] == (arrows[i][j] is not None
                                                and le[k][arrows[i][j]])),
    ]
    return HeytingReport(tuple(results), n)
