"""Crisp ideals of finite residuated lattices.

Subsets of the universe are bitmasks: bit ``i`` is set when the ``i``-th
declared element is a member.  An ideal is a nonempty downset closed under
``boxplus``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .algebra import (
    BooleanRingView,
    FiniteResiduatedLattice,
    MVAlgebra,
    WajsbergAlgebra,
    as_residuated,
)
from .errors import EmptySubsetError, FuzzIdealError, NotAnIdealError

Algebra = Union[FiniteResiduatedLattice, WajsbergAlgebra]
Subset = Union[int, "IdealSet", Iterable[Union[int, str]]]


def bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class IdealSet:
    algebra: FiniteResiduatedLattice
    members: int

    def __contains__(self, x: int | str) -> bool:
        return bool(self.members >> self.algebra.idx(x) & 1)

    def __iter__(self) -> Iterator[int]:
        return bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def names(self) -> tuple[str, ...]:
        return tuple(self.algebra.elements[i] for i in self)

    def bitstring(self) -> str:
        return "".join(str(self.members >> i & 1) for i in range(self.algebra.size))

    def __str__(self) -> str:
        return format_subset(self.algebra, self.members)


def format_subset(A: Algebra, mask: int) -> str:
    return "{" + ", ".join(A.elements[i] for i in bits(mask)) + "}"


def as_mask(A: Algebra, subset: Subset) -> int:
    """Normalize a subset given as a mask, an :class:`IdealSet`, or element names/indices."""
    if isinstance(subset, IdealSet):
        return subset.members
    if isinstance(subset, int):
        if subset < 0 or subset >> A.size:
            raise FuzzIdealError(f"mask {subset:#x} has bits outside the universe")
        return subset
    if isinstance(subset, str):
        raise TypeError("pass a collection of element names, not a single string")
    mask = 0
    for x in subset:
        mask |= 1 << A.idx(x)
    return mask


def is_ideal(A: Algebra, S: Subset) -> bool:
    L = as_residuated(A)
    mask = as_mask(L, S)
    if not mask:
        raise EmptySubsetError("an ideal must be nonempty")
    down, bp = L.down_masks, L.boxplus_table
    members = list(bits(mask))
    if any(down[i] & ~mask for i in members):
        return False
    return all(mask >> bp[i][j] & 1 for i in members for j in members)


def close_mask(L: FiniteResiduatedLattice, mask: int) -> int:
    down, bp = L.down_masks, L.boxplus_table
    while True:
        new = mask
        for i in bits(mask):
            new |= down[i]
        members = list(bits(new))
        for i, j in itertools.combinations_with_replacement(members, 2):
            new |= down[bp[i][j]]
        if new == mask:
            return mask
        mask = new


def ideal_closure(A: Algebra, S: Subset) -> IdealSet:
    """Least ideal containing ``S``."""
    L = as_residuated(A)
    mask = as_mask(L, S)
    if not mask:
        raise EmptySubsetError("closure of the empty set is not defined")
    return IdealSet(L, close_mask(L, mask))


def make_ideal(A: Algebra, S: Subset) -> IdealSet:
    """Wrap ``S`` as an :class:`IdealSet`, rejecting non-ideals."""
    L = as_residuated(A)
    mask = as_mask(L, S)
    if not is_ideal(L, mask):
        raise NotAnIdealError(f"{format_subset(L, mask)} is not an ideal")
    return IdealSet(L, mask)


def _canonical(L, masks) -> list[IdealSet]:
    return [IdealSet(L, m) for m in sorted(masks, key=lambda m: (m.bit_count(), m))]


def _is_proper(L: FiniteResiduatedLattice, mask: int) -> bool:
    # proper: neither {0} nor the whole universe
    return mask != 1 << L.bottom and mask != (1 << L.size) - 1


def enumerate_ideals(A: Algebra, proper: bool = False) -> list[IdealSet]:
    """All ideals sorted by (cardinality, bitmask).

    With ``proper=True`` the trivial ideal ``{0}`` and the whole algebra are
    dropped.
    """
    L = as_residuated(A)
    start = close_mask(L, 1 << L.bottom)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for mask in frontier:
            for x in range(L.size):
                if mask >> x & 1:
                    continue
                grown = close_mask(L, mask | 1 << x)
                if grown not in seen:
                    seen.add(grown)
                    nxt.append(grown)
        frontier = nxt
    if proper:
        seen = {m for m in seen if _is_proper(L, m)}
    return _canonical(L, seen)


def ideals_by_subset_scan(A: Algebra, proper: bool = False) -> list[IdealSet]:
    """Reference enumeration testing every nonempty subset (``|L| <= 16``)."""
    L = as_residuated(A)
    if L.size > 16:
        raise FuzzIdealError("subset scan is limited to 16 elements")
    masks = [m for m in range(1, 1 << L.size) if is_ideal(L, m)]
    if proper:
        masks = [m for m in masks if _is_proper(L, m)]
    return _canonical(L, masks)


def is_prime_ideal(A: Algebra, P: Subset, conventional: bool = False) -> bool:
    """Prime test in Wajsberg form: ``(x o y)' in P`` or ``(y o x)' in P``.

    By default the pair ranges over ``P`` itself.  ``conventional=True``
    quantifies over the whole algebra instead.
    """
    L = as_residuated(A)
    mask = as_mask(L, P)
    if not mask or not is_ideal(L, mask):
        raise NotAnIdealError(f"{format_subset(L, mask)} is not an ideal")
    imp, neg = L.impl_table, L.neg_table
    pool = range(L.size) if conventional else list(bits(mask))
    return all(
        mask >> neg[imp[x][y]] & 1 or mask >> neg[imp[y][x]] & 1
        for x in pool
        for y in pool
    )


def is_prime_ideal_mv(M: MVAlgebra, P: Subset, conventional: bool = False) -> bool:
    """Prime test in MV form: ``(x' + y)' in P`` or ``(y' + x)' in P``."""
    mask = as_mask(M, P)
    O, pr = M.oplus_table, M.prime_table
    pool = range(M.size) if conventional else list(bits(mask))
    return all(
        mask >> pr[O[pr[x]][y]] & 1 or mask >> pr[O[pr[y]][x]] & 1
        for x in pool
        for y in pool
    )


def is_mv_ideal(M: MVAlgebra, S: Subset) -> bool:
    """Ideal test in MV form: contains zero, downward closed, closed under ``oplus``."""
    mask = as_mask(M, S)
    O, pr = M.oplus_table, M.prime_table
    one = pr[M.zero]

    def le(x, y):  # x <= y iff x' + y = 1
        return O[pr[x]][y] == one

    members = list(bits(mask))
    return (
        bool(mask >> M.zero & 1)
        and all(mask >> y & 1 for x in members for y in range(M.size) if le(y, x))
        and all(mask >> O[x][y] & 1 for x in members for y in members)
    )


def is_ring_ideal(R: BooleanRingView, S: Subset) -> bool:
    """Additive subgroup absorbing products."""
    mask = as_mask(R, S)
    A, M = R.add_table, R.mul_table
    members = list(bits(mask))
    if not mask >> R.zero & 1:
        return False
    if not all(mask >> A[x][y] & 1 for x in members for y in members):
        return False
    if not all(any(A[x][y] == R.zero for y in members) for x in members):
        return False
    return all(mask >> M[r][x] & 1 for x in members for r in range(R.size))
