"""Finite algebras given by operation tables.

Elements are identified by their position in the declared element list and
every table is a dense tuple-of-tuples of indices.  The declared order is
significant: it fixes codeword coordinates downstream.

Four presentations are supported and convertible into one another:

* :class:`FiniteResiduatedLattice` -- ``(L, join, meet, prod, impl, 0, 1)``
* :class:`WajsbergAlgebra` -- ``(W, circ, neg, 1)``
* :class:`MVAlgebra` -- ``(X, oplus, odot, prime, zero, one)``
* :class:`BooleanRingView` -- ``(B, +, *, 0, 1)``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .errors import FuzzIdealError, NotALatticeError, NotBooleanError, StructureError

Table = tuple[tuple[int, ...], ...]


def _freeze_table(name: str, table: Sequence[Sequence[int]], n: int) -> Table:
    if len(table) != n:
        raise StructureError(f"{name}: expected {n} rows, got {len(table)}")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise StructureError(f"{name}: row {i} has {len(row)} cells, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise StructureError(f"{name}: cell ({i},{j}) = {v!r} is not an element")
        rows.append(tuple(row))
    return tuple(rows)


def _freeze_unary(name: str, table: Sequence[int], n: int) -> tuple[int, ...]:
    if len(table) != n:
        raise StructureError(f"{name}: expected {n} entries, got {len(table)}")
    for i, v in enumerate(table):
        if not isinstance(v, int) or not 0 <= v < n:
            raise StructureError(f"{name}: entry {i} = {v!r} is not an element")
    return tuple(table)


def _check_elements(elements: Sequence[str]) -> tuple[str, ...]:
    elements = tuple(elements)
    if len(elements) < 2:
        raise StructureError("an algebra needs at least 2 elements")
    if len(set(elements)) != len(elements):
        raise StructureError("duplicate element names")
    for e in elements:
        if not e or any(c.isspace() for c in e) or e.startswith("#"):
            raise StructureError(f"invalid element name {e!r}")
    return elements


def _check_index(name: str, v: int, n: int) -> int:
    if not isinstance(v, int) or not 0 <= v < n:
        raise StructureError(f"{name} = {v!r} is not an element")
    return v


class _Named:
    """Name/index helpers shared by every presentation."""

    elements: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def idx(self, name: str | int) -> int:
        if isinstance(name, int):
            return _check_index("element", name, self.size)
        try:
            return self._index[name]
        except KeyError:
            raise FuzzIdealError(f"unknown element {name!r}") from None

    def idxs(self, *names: str | int) -> tuple[int, ...]:
        return tuple(self.idx(n) for n in names)

    def name(self, i: int) -> str:
        return self.elements[i]


def _table_from_names(elements, table, index):
    try:
        return [[index[c] for c in row] for row in table]
    except KeyError as exc:
        raise StructureError(f"unknown element {exc.args[0]!r}") from None


# ---------------------------------------------------------------------------
# validation reports


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple[str, ...]

    def __str__(self) -> str:
        return f"{self.law}: witness ({', '.join(self.witness)})"


@dataclass(frozen=True)
class ValidationReport:
    kind: str
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def violated_laws(self) -> set[str]:
        return {v.law for v in self.violations}


def _run_laws(
    elements: tuple[str, ...],
    laws: Iterable[tuple[str, int, Callable[..., bool]]],
) -> tuple[Violation, ...]:
    # first witness in index order, one per law
    n = len(elements)
    found = []
    for law, arity, pred in laws:
        for args in itertools.product(range(n), repeat=arity):
            if not pred(*args):
                found.append(Violation(law, tuple(elements[a] for a in args)))
                break
    return tuple(found)


# ---------------------------------------------------------------------------
# residuated lattices


@dataclass(frozen=True, eq=True)
class FiniteResiduatedLattice(_Named):
    elements: tuple[str, ...]
    join_table: Table
    meet_table: Table
    prod_table: Table
    impl_table: Table
    bottom: int
    top: int

    def __post_init__(self):
        elements = _check_elements(self.elements)
        n = len(elements)
        object.__setattr__(self, "elements", elements)
        for name in ("join_table", "meet_table", "prod_table", "impl_table"):
            object.__setattr__(self, name, _freeze_table(name, getattr(self, name), n))
        _check_index("bottom", self.bottom, n)
        _check_index("top", self.top, n)

    @classmethod
    def from_names(
        cls,
        elements: Sequence[str],
        join: Sequence[Sequence[str]],
        meet: Sequence[Sequence[str]],
        prod: Sequence[Sequence[str]],
        impl: Sequence[Sequence[str]],
        bottom: str,
        top: str,
    ) -> FiniteResiduatedLattice:
        elements = _check_elements(elements)
        index = {e: i for i, e in enumerate(elements)}
        tables = [_table_from_names(elements, t, index) for t in (join, meet, prod, impl)]
        if bottom not in index or top not in index:
            raise StructureError("bottom/top must name elements")
        return cls(elements, *tables, index[bottom], index[top])

    def __hash__(self) -> int:
        # hashed on every fuzzy-subset lookup; the tables never change
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.elements, self.join_table, self.meet_table,
                      self.prod_table, self.impl_table, self.bottom, self.top))
            self.__dict__["_hash"] = h
        return h

    def leq(self, x: int, y: int) -> bool:
        """``x <= y`` in the residuated order, i.e. ``x -> y == 1``."""
        return self.impl_table[x][y] == self.top

    def neg(self, x: int) -> int:
        return self.impl_table[x][self.bottom]

    def boxplus(self, x: int, y: int) -> int:
        return self.impl_table[self.neg(x)][self.neg(self.neg(y))]

    def uplus(self, x: int, y: int) -> int:
        return self.impl_table[self.neg(x)][y]

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(self.neg(x) for x in range(self.size))

    @cached_property
    def boxplus_table(self) -> Table:
        r = range(self.size)
        return tuple(tuple(self.boxplus(x, y) for y in r) for x in r)

    @cached_property
    def uplus_table(self) -> Table:
        r = range(self.size)
        return tuple(tuple(self.uplus(x, y) for y in r) for x in r)

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """Bitmask of the principal downset of each element."""
        n = self.size
        return tuple(
            sum(1 << x for x in range(n) if self.leq(x, y)) for y in range(n)
        )

    def lattice_leq(self, x: int, y: int) -> bool:
        return self.meet_table[x][y] == x


def validate_residuated_lattice(L: FiniteResiduatedLattice) -> ValidationReport:
    """Check the bounded-lattice, commutative-monoid and adjunction axioms.

    Also checks that the implication order (``x -> y == 1``) agrees with the
    lattice order induced by the meet.
    """
    J, M, P, I = L.join_table, L.meet_table, L.prod_table, L.impl_table
    bot, top = L.bottom, L.top

    def lat_le(x, y):
        return M[x][y] == x

    laws = [
        ("join-commutative", 2, lambda x, y: J[x][y] == J[y][x]),
        ("join-associative", 3, lambda x, y, z: J[J[x][y]][z] == J[x][J[y][z]]),
        ("meet-commutative", 2, lambda x, y: M[x][y] == M[y][x]),
        ("meet-associative", 3, lambda x, y, z: M[M[x][y]][z] == M[x][M[y][z]]),
        ("absorption", 2, lambda x, y: J[x][M[x][y]] == x and M[x][J[x][y]] == x),
        ("bounds", 1, lambda x: J[x][bot] == x and M[x][top] == x),
        ("prod-commutative", 2, lambda x, y: P[x][y] == P[y][x]),
        ("prod-associative", 3, lambda x, y, z: P[P[x][y]][z] == P[x][P[y][z]]),
        ("prod-unit", 1, lambda x: P[x][top] == x),
        ("adjunction", 3, lambda x, y, z: lat_le(P[x][z], y) == lat_le(x, I[z][y])),
        ("order-coincidence", 2, lambda x, y: (I[x][y] == top) == lat_le(x, y)),
    ]
    return ValidationReport("residuated", _run_laws(L.elements, laws))


# ---------------------------------------------------------------------------
# Wajsberg algebras


@dataclass(frozen=True)
class WajsbergAlgebra(_Named):
    elements: tuple[str, ...]
    circ_table: Table
    neg_table: tuple[int, ...]
    one: int

    def __post_init__(self):
        elements = _check_elements(self.elements)
        n = len(elements)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "circ_table", _freeze_table("circ", self.circ_table, n))
        object.__setattr__(self, "neg_table", _freeze_unary("neg", self.neg_table, n))
        _check_index("one", self.one, n)

    @classmethod
    def from_names(
        cls,
        elements: Sequence[str],
        circ: Sequence[Sequence[str]],
        neg: Sequence[str],
        one: str = "1",
    ) -> WajsbergAlgebra:
        elements = _check_elements(elements)
        index = {e: i for i, e in enumerate(elements)}
        table = _table_from_names(elements, circ, index)
        (negs,) = _table_from_names(elements, [neg], index)
        if one not in index:
            raise StructureError(f"unknown element {one!r}")
        return cls(elements, table, negs, index[one])

    @property
    def zero(self) -> int:
        """The constant ``neg(1)``."""
        return self.neg_table[self.one]

    def circ(self, x: int, y: int) -> int:
        return self.circ_table[x][y]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def leq(self, x: int, y: int) -> bool:
        return self.circ_table[x][y] == self.one

    @cached_property
    def residuated(self) -> FiniteResiduatedLattice:
        return wajsberg_to_residuated(self)


def validate_wajsberg(W: WajsbergAlgebra) -> ValidationReport:
    C, N, one = W.circ_table, W.neg_table, W.one

    def le(x, y):
        return C[x][y] == one

    laws = [
        ("W1", 1, lambda x: C[one][x] == x),
        ("W2", 3, lambda x, y, z: C[C[x][y]][C[C[y][z]][C[x][z]]] == one),
        ("W3", 2, lambda x, y: C[C[x][y]][y] == C[C[y][x]][x]),
        ("W4", 2, lambda x, y: C[C[N[x]][N[y]]][C[y][x]] == one),
        ("order-reflexive", 1, lambda x: le(x, x)),
        ("order-antisymmetric", 2, lambda x, y: not (le(x, y) and le(y, x)) or x == y),
        ("order-transitive", 3, lambda x, y, z: not (le(x, y) and le(y, z)) or le(x, z)),
    ]
    return ValidationReport("wajsberg", _run_laws(W.elements, laws))


def _lattice_from_order(
    elements: tuple[str, ...], le: Callable[[int, int], bool]
) -> tuple[Table, Table]:
    n = len(elements)
    r = range(n)

    def extremum(x, y, bounds, better):
        cands = [z for z in r if bounds(z)]
        best = [z for z in cands if all(better(z, w) for w in cands)]
        if len(best) != 1:
            kind = "join" if better is le else "meet"
            raise NotALatticeError(
                f"no {kind} for ({elements[x]}, {elements[y]}) in the natural order",
                (elements[x], elements[y]),
            )
        return best[0]

    join = tuple(
        tuple(extremum(x, y, lambda z: le(x, z) and le(y, z), le) for y in r) for x in r
    )
    meet = tuple(
        tuple(
            extremum(x, y, lambda z: le(z, x) and le(z, y), lambda a, b: le(b, a))
            for y in r
        )
        for x in r
    )
    return join, meet


def wajsberg_to_residuated(W: WajsbergAlgebra) -> FiniteResiduatedLattice:
    """Residuated-lattice form: ``impl`` is ``circ``, ``prod`` is the MV product,
    join and meet are read off the natural order (which must be a lattice)."""
    C, N = W.circ_table, W.neg_table
    r = range(W.size)
    join, meet = _lattice_from_order(W.elements, W.leq)
    prod = tuple(tuple(N[C[x][N[y]]] for y in r) for x in r)
    return FiniteResiduatedLattice(W.elements, join, meet, prod, C, W.zero, W.one)


def residuated_to_wajsberg(L: FiniteResiduatedLattice) -> WajsbergAlgebra:
    return WajsbergAlgebra(L.elements, L.impl_table, L.neg_table, L.top)


def as_residuated(A: FiniteResiduatedLattice | WajsbergAlgebra) -> FiniteResiduatedLattice:
    if isinstance(A, WajsbergAlgebra):
        return A.residuated
    if isinstance(A, FiniteResiduatedLattice):
        return A
    raise TypeError(f"expected an algebra, got {type(A).__name__}")


# ---------------------------------------------------------------------------
# MV-algebras


@dataclass(frozen=True)
class MVAlgebra(_Named):
    elements: tuple[str, ...]
    oplus_table: Table
    odot_table: Table
    prime_table: tuple[int, ...]
    zero: int
    one: int

    def oplus(self, x: int, y: int) -> int:
        return self.oplus_table[x][y]

    def prime(self, x: int) -> int:
        return self.prime_table[x]


def wajsberg_to_mv(W: WajsbergAlgebra) -> MVAlgebra:
    C, N = W.circ_table, W.neg_table
    r = range(W.size)
    oplus = tuple(tuple(C[N[x]][y] for y in r) for x in r)
    odot = tuple(tuple(N[C[x][N[y]]] for y in r) for x in r)
    return MVAlgebra(W.elements, oplus, odot, N, W.zero, W.one)


def mv_to_wajsberg(M: MVAlgebra) -> WajsbergAlgebra:
    O, P = M.oplus_table, M.prime_table
    r = range(M.size)
    circ = tuple(tuple(O[P[x]][y] for y in r) for x in r)
    return WajsbergAlgebra(M.elements, circ, P, P[M.zero])


def mv_sum(W: WajsbergAlgebra, x: int, y: int) -> int:
    """``x (+) y = neg(x) o y``."""
    return W.circ_table[W.neg_table[x]][y]


def validate_mv(M: MVAlgebra) -> ValidationReport:
    O, P, th = M.oplus_table, M.prime_table, M.zero
    top = P[th]
    laws = [
        ("oplus-commutative", 2, lambda x, y: O[x][y] == O[y][x]),
        ("oplus-associative", 3, lambda x, y, z: O[O[x][y]][z] == O[x][O[y][z]]),
        ("oplus-unit", 1, lambda x: O[x][th] == x),
        ("MV1", 1, lambda x: P[P[x]] == x),
        ("MV2", 1, lambda x: O[x][top] == top),
        ("MV3", 2, lambda x, y: O[P[O[P[x]][y]]][y] == O[P[O[P[y]][x]]][x]),
    ]
    return ValidationReport("mv", _run_laws(M.elements, laws))


# ---------------------------------------------------------------------------
# Boolean algebras and Boolean rings


@dataclass(frozen=True)
class BooleanRingView(_Named):
    elements: tuple[str, ...]
    add_table: Table
    mul_table: Table
    zero: int
    one: int


def boolean_ring_view(B: FiniteResiduatedLattice) -> BooleanRingView:
    """``x + y = (x v y) ^ d(x ^ y)``, ``x * y = x ^ y`` with ``d`` the negation.

    Raises :class:`NotBooleanError` if the lattice is not distributive or the
    negation is not a complement.
    """
    J, M, N = B.join_table, B.meet_table, B.neg_table
    n = B.size
    e = B.elements
    for x in range(n):
        if J[x][N[x]] != B.top or M[x][N[x]] != B.bottom:
            raise NotBooleanError(f"{e[x]} is not complemented by its negation", (e[x],))
    for x, y, z in itertools.product(range(n), repeat=3):
        if M[x][J[y][z]] != J[M[x][y]][M[x][z]]:
            raise NotBooleanError("lattice is not distributive", (e[x], e[y], e[z]))
    r = range(n)
    add = tuple(tuple(M[J[x][y]][N[M[x][y]]] for y in r) for x in r)
    return BooleanRingView(B.elements, add, M, B.bottom, B.top)


def validate_boolean_ring(R: BooleanRingView) -> ValidationReport:
    A, M, zero, one = R.add_table, R.mul_table, R.zero, R.one
    n = R.size
    laws = [
        ("add-commutative", 2, lambda x, y: A[x][y] == A[y][x]),
        ("add-associative", 3, lambda x, y, z: A[A[x][y]][z] == A[x][A[y][z]]),
        ("add-identity", 1, lambda x: A[x][zero] == x),
        ("add-inverse", 1, lambda x: any(A[x][y] == zero for y in range(n))),
        ("mul-commutative", 2, lambda x, y: M[x][y] == M[y][x]),
        ("mul-associative", 3, lambda x, y, z: M[M[x][y]][z] == M[x][M[y][z]]),
        ("mul-identity", 1, lambda x: M[x][one] == x),
        ("distributive", 3, lambda x, y, z: M[x][A[y][z]] == A[M[x][y]][M[x][z]]),
        ("idempotent", 1, lambda x: M[x][x] == x),
    ]
    return ValidationReport("boolean-ring", _run_laws(R.elements, laws))


def boolean_algebra_from_ring(R: BooleanRingView) -> FiniteResiduatedLattice:
    """Inverse of :func:`boolean_ring_view`.

    ``x v y = x + y + xy``, ``x ^ y = xy``, ``d x = 1 + x``; as a residuated
    lattice ``prod`` is the meet and ``x -> y = d x v y``.
    """
    A, M = R.add_table, R.mul_table
    r = range(R.size)
    join = tuple(tuple(A[A[x][y]][M[x][y]] for y in r) for x in r)
    comp = [A[R.one][x] for x in r]
    impl = tuple(tuple(join[comp[x]][y] for y in r) for x in r)
    return FiniteResiduatedLattice(R.elements, join, M, M, impl, R.zero, R.one)


# ---------------------------------------------------------------------------
# constructions


def product_wajsberg(n: int) -> WajsbergAlgebra:
    """The Wajsberg algebra ``{0,1}^n`` with componentwise operations.

    Elements are the bit strings of length ``n`` in lexicographic order, so
    the all-zero tuple comes first and the all-one tuple last.
    """
    if not isinstance(n, int) or n < 1:
        raise FuzzIdealError(f"product order must be a positive integer, got {n!r}")
    two = ((1, 1), (0, 1))  # 0o0=1, 0o1=1, 1o0=0, 1o1=1
    tuples = list(itertools.product((0, 1), repeat=n))
    index = {t: i for i, t in enumerate(tuples)}
    circ = tuple(
        tuple(index[tuple(two[a][b] for a, b in zip(x, y))] for y in tuples)
        for x in tuples
    )
    neg = tuple(index[tuple(1 - a for a in x)] for x in tuples)
    names = tuple("".join(map(str, t)) for t in tuples)
    return WajsbergAlgebra(names, circ, neg, len(tuples) - 1)


def wajsberg_isomorphism(
    V: WajsbergAlgebra, W: WajsbergAlgebra
) -> Mapping[str, str] | None:
    """Exhaustive search for an isomorphism ``V -> W`` (``None`` if there is none)."""
    if V.size != W.size:
        return None
    n = V.size
    rest_v = [x for x in range(n) if x != V.one]
    rest_w = [x for x in range(n) if x != W.one]
    for perm in itertools.permutations(rest_w):
        f = dict(zip(rest_v, perm))
        f[V.one] = W.one
        if all(f[V.neg_table[x]] == W.neg_table[f[x]] for x in range(n)) and all(
            f[V.circ_table[x][y]] == W.circ_table[f[x]][f[y]]
            for x in range(n)
            for y in range(n)
        ):
            return {V.elements[x]: W.elements[f[x]] for x in range(n)}
    return None
