"""Binary codes from ideals.

An ideal ``I`` of an algebra with declared elements ``a_1..a_n`` gives the
codeword whose ``i``-th bit says whether ``a_i`` is in ``I``.  Stacking the
codewords of several ideals gives a generator matrix over GF(2).

Rows are stored as tuples of 0/1; GF(2) arithmetic runs on Python ints with
the leftmost coordinate as the most significant bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Hashable, Iterable, Sequence

from .algebra import WajsbergAlgebra, as_residuated, product_wajsberg
from .errors import (
    DuplicateIdealError,
    FuzzIdealError,
    InvariantBreach,
    NotBooleanFormError,
    RankDeficientError,
)
from .ideals import (
    IdealSet,
    Subset,
    as_mask,
    bits,
    enumerate_ideals,
    ideal_closure,
    is_ideal,
)

Bits = tuple[int, ...]
Matrix = tuple[Bits, ...]

MAX_SPAN_DIM = 24


def _to_int(row: Sequence[int]) -> int:
    v = 0
    for b in row:
        v = v << 1 | b
    return v


def _to_bits(v: int, n: int) -> Bits:
    return tuple(v >> (n - 1 - i) & 1 for i in range(n))


def as_matrix(M: Iterable[Sequence[int]]) -> Matrix:
    rows = tuple(tuple(int(b) for b in r) for r in M)
    if not rows or not rows[0]:
        raise FuzzIdealError("empty matrix")
    if len({len(r) for r in rows}) != 1:
        raise FuzzIdealError("ragged matrix")
    if any(b not in (0, 1) for r in rows for b in r):
        raise FuzzIdealError("matrix entries must be 0 or 1")
    return rows


@dataclass(frozen=True)
class Codeword:
    bits: Bits

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __len__(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __xor__(self, other: Codeword) -> Codeword:
        if len(self) != len(other):
            raise FuzzIdealError("codewords of different lengths")
        return Codeword(tuple(a ^ b for a, b in zip(self.bits, other.bits)))


def codeword(A, B: Subset) -> Codeword:
    """Indicator vector of ``B`` in the declared element order of ``A``."""
    mask = as_mask(A, B)
    return Codeword(tuple(mask >> i & 1 for i in range(A.size)))


# ---------------------------------------------------------------------------
# symmetric difference and characteristic functions


def sym_diff(A: Iterable[Hashable], B: Iterable[Hashable]) -> frozenset:
    A, B = frozenset(A), frozenset(B)
    return (A - B) | (B - A)


def _indicator(S: frozenset, universe: Sequence) -> list[int]:
    return [1 if u in S else 0 for u in universe]


def alternating_indicator(sets: Sequence[frozenset], universe: Sequence) -> list[int]:
    """Right-hand side of the n-ary identity, evaluated with integers.

    ``sum_i mu_i - 2 sum_{i<j} mu_i mu_j + 4 sum_{i<j<k} ... + (-2)^(m-1) prod mu_i``.
    """
    chars = [_indicator(frozenset(S), universe) for S in sets]
    out = []
    for pos in range(len(universe)):
        total = 0
        for r in range(1, len(chars) + 1):
            for combo in itertools.combinations(chars, r):
                prod = 1
                for c in combo:
                    prod *= c[pos]
                total += (-2) ** (r - 1) * prod
        out.append(total)
    return out


@dataclass(frozen=True)
class IdentityReport:
    results: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def char_identity_check(sets: Sequence[Iterable[Hashable]], universe: Sequence) -> IdentityReport:
    """Check the characteristic-function identities of symmetric difference.

    * ``zero-iff-equal``: the indicator of ``A delta B`` vanishes iff ``A == B``
    * ``pairwise``: ``mu_{A delta B} = mu_A + mu_B - 2 mu_A mu_B``
    * ``n-ary``: the alternating formula for the whole family
    """
    sets = [frozenset(S) for S in sets]
    if any(not S <= set(universe) for S in sets):
        raise FuzzIdealError("sets must be subsets of the universe")
    zero_ok = pair_ok = True
    for A, B in itertools.product(sets, repeat=2):
        d = _indicator(sym_diff(A, B), universe)
        zero_ok &= (not any(d)) == (A == B)
        a, b = _indicator(A, universe), _indicator(B, universe)
        pair_ok &= d == [x + y - 2 * x * y for x, y in zip(a, b)]
    total = frozenset()
    for S in sets:
        total = sym_diff(total, S)
    nary_ok = _indicator(total, universe) == alternating_indicator(sets, universe)
    return IdentityReport({"zero-iff-equal": zero_ok, "pairwise": pair_ok, "n-ary": nary_ok})


@dataclass(frozen=True)
class XorReport:
    ok: bool
    lhs: Codeword
    rhs: Codeword


def xor_law_check(I: IdealSet, J: IdealSet) -> XorReport:
    """The codeword of ``I delta J`` equals the XOR of the two codewords."""
    L = I.algebra
    if J.algebra != L:
        raise FuzzIdealError("ideals belong to different algebras")
    lhs = codeword(L, I.members ^ J.members)
    rhs = codeword(L, I) ^ codeword(L, J)
    return XorReport(lhs == rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# GF(2) linear algebra


def dependency_witness(rows: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
    """Indices of a nonempty set of rows XOR-ing to zero, or ``None`` if independent."""
    pivots: dict[int, tuple[int, int]] = {}  # leading bit -> (row value, combination mask)
    for i, row in enumerate(rows):
        v, combo = _to_int(row), 1 << i
        while v:
            lead = v.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (v, combo)
                break
            pv, pc = pivots[lead]
            v, combo = v ^ pv, combo ^ pc
        else:
            return tuple(bits(combo))
    return None


def _rref(rows: Sequence[Sequence[int]]) -> tuple[int, ...]:
    basis: list[int] = []
    for row in rows:
        v = _to_int(row)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis = [min(b, b ^ v) for b in basis]
            basis.append(v)
    return tuple(sorted(basis, reverse=True))


def gf2_rank(M: Sequence[Sequence[int]]) -> int:
    return len(_rref(M))


def row_equivalent(M1: Sequence[Sequence[int]], M2: Sequence[Sequence[int]]) -> bool:
    """Same shape and same row space over GF(2)."""
    M1, M2 = as_matrix(M1), as_matrix(M2)
    if len(M1) != len(M2) or len(M1[0]) != len(M2[0]):
        return False
    return _rref(M1) == _rref(M2)


def span(M: Sequence[Sequence[int]]) -> list[int]:
    """Every codeword of the row space (as ints), zero first, in Gray-code order."""
    basis = _rref(M)
    if len(basis) > MAX_SPAN_DIM:
        raise FuzzIdealError(f"dimension {len(basis)} exceeds the span cap {MAX_SPAN_DIM}")
    words = [0]
    cur = 0
    for i in range(1, 1 << len(basis)):
        cur ^= basis[(i & -i).bit_length() - 1]
        words.append(cur)
    return words


def min_distance(M: Sequence[Sequence[int]]) -> int:
    """Minimum weight over the nonzero codewords of the row space."""
    return min(w.bit_count() for w in span(M)[1:])


def min_distance_pairwise(M: Sequence[Sequence[int]]) -> int:
    """Minimum Hamming distance between distinct codewords (quadratic; small codes)."""
    words = span(M)
    if len(words) > 1 << 12:
        raise FuzzIdealError("pairwise distance is limited to dimension 12")
    return min((a ^ b).bit_count() for a, b in itertools.combinations(words, 2))


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    rate: Fraction

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]_2 rate={self.rate}"

    def triple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d)


def code_params(M: Sequence[Sequence[int]]) -> CodeParams:
    M = as_matrix(M)
    k = gf2_rank(M)
    if k == 0:
        raise FuzzIdealError("the all-zero matrix generates no code")
    n = len(M[0])
    return CodeParams(n, k, min_distance(M), Fraction(k, n))


def is_hadamard_type(params: CodeParams | tuple[int, int, int]) -> bool:
    """True for parameters ``[2^t, t, 2^(t-1)]`` with ``t >= 2``."""
    n, k, d = params.triple() if isinstance(params, CodeParams) else params
    return k >= 2 and n == 1 << k and d == 1 << (k - 1)


@dataclass(frozen=True)
class BinaryCode:
    """Linear code given by a generator matrix with independent rows."""

    generator: Matrix

    def __post_init__(self):
        M = as_matrix(self.generator)
        witness = dependency_witness(M)
        if witness is not None:
            raise RankDeficientError(
                f"rows {list(witness)} sum to zero over GF(2)", witness
            )
        object.__setattr__(self, "generator", M)

    @property
    def n(self) -> int:
        return len(self.generator[0])

    @property
    def k(self) -> int:
        return len(self.generator)

    @cached_property
    def params(self) -> CodeParams:
        return code_params(self.generator)

    def rows(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.generator]


def columns_all_bitvectors(M: Sequence[Sequence[int]]) -> bool:
    """``t x 2^t`` matrix whose columns are the ``2^t`` distinct ``t``-bit vectors."""
    M = as_matrix(M)
    t, width = len(M), len(M[0])
    if width != 1 << t:
        return False
    cols = {tuple(r[j] for r in M) for j in range(width)}
    return len(cols) == width


def boolean_form_matrix(n: int) -> Matrix:
    """Row ``i`` (1-based) alternates blocks of ``2^(n-i)`` ones and zeros."""
    if not isinstance(n, int) or n < 2:
        raise FuzzIdealError(f"Boolean form needs n >= 2, got {n!r}")
    return tuple(
        tuple(0 if (j >> (n - i)) & 1 else 1 for j in range(1 << n))
        for i in range(1, n + 1)
    )


# ---------------------------------------------------------------------------
# ideal codes


def generator_order(ideals: Iterable[IdealSet]) -> list[IdealSet]:
    """Canonical row order: larger ideals first, then ascending bitmask."""
    return sorted(ideals, key=lambda I: (-len(I), I.members))


def generator_matrix(ideals: Sequence[IdealSet]) -> BinaryCode:
    """Code whose rows are the codewords of ``ideals`` in the given order.

    Raises :class:`RankDeficientError` (with a witness) if the codewords are
    dependent, and :class:`DuplicateIdealError` on repeated ideals.
    """
    ideals = list(ideals)
    if not ideals:
        raise FuzzIdealError("need at least one ideal")
    L = ideals[0].algebra
    if any(I.algebra != L for I in ideals):
        raise FuzzIdealError("ideals belong to different algebras")
    if len({I.members for I in ideals}) != len(ideals):
        raise DuplicateIdealError("duplicate ideals in the row list")
    return BinaryCode(tuple(codeword(L, I).bits for I in ideals))


@dataclass(frozen=True)
class IdealCode:
    algebra: WajsbergAlgebra
    ideals: tuple[IdealSet, ...]
    code: BinaryCode


def build_hadamard(n: int) -> IdealCode:
    """Hadamard code from the ``n`` ideals of size ``2^(n-1)`` of ``{0,1}^n``.

    Every claimed property is checked; a failure raises :class:`InvariantBreach`.
    """
    if not isinstance(n, int) or n < 2:
        raise FuzzIdealError(f"Hadamard construction needs n >= 2, got {n!r}")
    W = product_wajsberg(n)
    half = [I for I in enumerate_ideals(W) if len(I) == 1 << (n - 1)]
    if len(half) != n:
        raise InvariantBreach(f"expected {n} ideals of size {1 << (n - 1)}, found {len(half)}")
    ideals = tuple(generator_order(half))
    code = generator_matrix(ideals)
    expected = (1 << n, n, 1 << (n - 1))
    if code.params.triple() != expected:
        raise InvariantBreach(f"parameters {code.params.triple()} != {expected}")
    return IdealCode(W, ideals, code)


def hadamard_from_boolean(n: int) -> BinaryCode:
    return build_hadamard(n).code


def check_boolean_form(M: Sequence[Sequence[int]]) -> int:
    """Return ``n`` if ``M`` is the Boolean-form matrix of order ``n``."""
    M = as_matrix(M)
    n = len(M)
    if n < 2:
        raise NotBooleanFormError("Boolean form needs at least 2 rows", 0)
    if len(M[0]) != 1 << n:
        raise NotBooleanFormError(f"{n} rows need {1 << n} columns, got {len(M[0])}", 0)
    for i, (got, want) in enumerate(zip(M, boolean_form_matrix(n))):
        if got != want:
            raise NotBooleanFormError(f"row {i + 1} is not in Boolean form", i)
    return n


def boolean_from_matrix(M: Sequence[Sequence[int]]) -> tuple[WajsbergAlgebra, list[IdealSet]]:
    """Rebuild ``{0,1}^n`` and the ideals whose codewords are the rows of ``M``.

    Ideal ``i`` is the downset of the maximal element with a single zero in
    position ``i``.
    """
    n = check_boolean_form(M)
    W = product_wajsberg(n)
    ideals = []
    for i in range(n):
        m = "".join("0" if j == i else "1" for j in range(n))
        J = ideal_closure(W, [m])
        if codeword(W, J).bits != tuple(M[i]):
            raise InvariantBreach(f"ideal generated by {m} does not reproduce row {i + 1}")
        ideals.append(J)
    return W, ideals


@dataclass(frozen=True)
class EvenIdealCode:
    ideals: tuple[IdealSet, ...]
    code: BinaryCode

    @property
    def params(self) -> CodeParams:
        return self.code.params

    @property
    def distance_at_least_3(self) -> bool:
        return self.code.params.d >= 3


def even_ideal_code(A) -> EvenIdealCode:
    """Code generated by all proper ideals when their number is even (and >= 2)."""
    proper = enumerate_ideals(A, proper=True)
    if len(proper) < 2 or len(proper) % 2:
        raise FuzzIdealError(f"needs an even number >= 2 of proper ideals, found {len(proper)}")
    ideals = tuple(generator_order(proper))
    return EvenIdealCode(ideals, generator_matrix(ideals))


def ideals_from_names(A, groups: Iterable[Iterable[str]]) -> list[IdealSet]:
    """Build ideals from element-name groups, rejecting non-ideals."""
    L = as_residuated(A)
    out = []
    for g in groups:
        mask = as_mask(L, g)
        if not mask or not is_ideal(L, mask):
            raise FuzzIdealError(f"{{{', '.join(g)}}} is not an ideal")
        out.append(IdealSet(L, mask))
    return out
