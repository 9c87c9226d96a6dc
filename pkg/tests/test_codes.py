import itertools
import random

import pytest

from fuzzideal import (
    BinaryCode,
    DuplicateIdealError,
    FuzzIdealError,
    NotBooleanFormError,
    RankDeficientError,
    boolean_form_matrix,
    boolean_from_matrix,
    build_hadamard,
    code_params,
    codeword,
    columns_all_bitvectors,
    enumerate_ideals,
    generator_matrix,
    gf2_rank,
    is_ideal,
    is_hadamard_type,
    min_distance,
    product_wajsberg,
    row_equivalent,
)
from fuzzideal.codes import (
    Codeword,
    alternating_indicator,
    char_identity_check,
    dependency_witness,
    even_ideal_code,
    generator_order,
    ideals_from_names,
    min_distance_pairwise,
    span,
    sym_diff,
    xor_law_check,
)

from conftest import FIXTURES


def rank_oracle(rows):
    # textbook elimination on lists of bits
    rows = [list(r) for r in rows]
    rank, col, width = 0, 0, len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def distance_oracle(rows):
    best = None
    for msg in itertools.product((0, 1), repeat=len(rows)):
        if not any(msg):
            continue
        word = [0] * len(rows[0])
        for m, r in zip(msg, rows):
            if m:
                word = [a ^ b for a, b in zip(word, r)]
        w = sum(word)
        if w == 0:
            continue
        best = w if best is None else min(best, w)
    return best


def rows_of(code):
    return ["".join(map(str, r)) for r in code.generator]


def test_order4_code(algebras):
    W = algebras["order4"]
    ideals = enumerate_ideals(W, proper=True)
    code = generator_matrix(ideals)
    assert rows_of(code) == ["1100", "1010"]
    assert code.params.triple() == (4, 2, 2)
    assert str(code.params) == "[4,2,2]_2 rate=1/2"
    assert columns_all_bitvectors(code.generator)
    assert is_hadamard_type(code.params)


def test_order8_code(algebras):
    W = algebras["order8"]
    ideals = enumerate_ideals(W, proper=True)[3:]
    code = generator_matrix(ideals)
    assert rows_of(code) == ["11110000", "11001100", "10101010"]
    assert code.params.triple() == (8, 3, 4)
    assert columns_all_bitvectors(code.generator)
    assert row_equivalent(code.generator, boolean_form_matrix(3))


def test_order9_code(algebras):
    W = algebras["order9"]
    code = generator_matrix(enumerate_ideals(W, proper=True))
    assert rows_of(code) == ["111000000", "100100100"]
    assert code.params.triple() == (9, 2, 3)
    assert not is_hadamard_type(code.params)


def test_even_ideal_codes(algebras):
    # distance >= 3 is checked per instance, not assumed
    found = {name: even_ideal_code(algebras[name]).params.triple() for name in FIXTURES}
    assert found == {"order4": (4, 2, 2), "order8": (8, 6, 2), "order9": (9, 2, 3)}
    assert even_ideal_code(algebras["order9"]).distance_at_least_3
    assert not even_ideal_code(algebras["order8"]).distance_at_least_3


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_hadamard_construction(n):
    built = build_hadamard(n)
    M = built.code.generator
    assert built.code.params.triple() == (2**n, n, 2 ** (n - 1))
    assert columns_all_bitvectors(M)
    assert M == boolean_form_matrix(n)
    assert all(len(I) == 2 ** (n - 1) for I in built.ideals)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_boolean_roundtrip(n):
    M = boolean_form_matrix(n)
    W, ideals = boolean_from_matrix(M)
    assert W.size == 2**n
    assert tuple(codeword(W, I).bits for I in ideals) == M


def test_boolean_form_matrix():
    assert boolean_form_matrix(2) == ((1, 1, 0, 0), (1, 0, 1, 0))
    assert ["".join(map(str, r)) for r in boolean_form_matrix(3)] == [
        "11110000", "11001100", "10101010"]
    with pytest.raises(FuzzIdealError):
        boolean_form_matrix(1)


def test_boolean_form_rejected():
    with pytest.raises(NotBooleanFormError) as exc:
        boolean_from_matrix(((1, 1, 0, 0), (0, 1, 0, 1)))
    assert exc.value.row == 1
    with pytest.raises(NotBooleanFormError):
        boolean_from_matrix(((1, 1, 0), (1, 0, 1)))


def test_rank_deficient_witness():
    rows = ((1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1))
    assert dependency_witness(rows) == (0, 1, 2)
    with pytest.raises(RankDeficientError) as exc:
        BinaryCode(rows)
    assert exc.value.witness == (0, 1, 2)
    assert dependency_witness(((1, 0), (1, 0))) == (0, 1)
    assert dependency_witness(((0, 0),)) == (0,)


def test_duplicate_ideals(algebras):
    W = algebras["order4"]
    I = enumerate_ideals(W, proper=True)[0]
    with pytest.raises(DuplicateIdealError):
        generator_matrix([I, I])


def test_ideals_from_names(algebras):
    W = algebras["order8"]
    ideals = ideals_from_names(W, [["0", "a", "b", "c"], ["0", "b", "d", "f"]])
    assert [I.bitstring() for I in ideals] == ["11110000", "10101010"]
    with pytest.raises(FuzzIdealError):
        ideals_from_names(W, [["0", "a", "b"]])


def test_generator_order(algebras):
    ideals = enumerate_ideals(algebras["order8"], proper=True)
    ordered = generator_order(ideals)
    assert [len(I) for I in ordered] == [4, 4, 4, 2, 2, 2]


def test_gf2_against_oracles():
    rng = random.Random(4)
    for _ in range(300):
        k, n = rng.randint(1, 6), rng.randint(1, 10)
        M = tuple(tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(k))
        r = rank_oracle(M)
        assert gf2_rank(M) == r
        assert (dependency_witness(M) is None) == (r == k)
        if r:
            assert min_distance(M) == distance_oracle(M)
            assert min_distance(M) == min_distance_pairwise(M)
            assert len(set(span(M))) == 2**r
            perm = list(M)
            rng.shuffle(perm)
            assert row_equivalent(M, perm)


def test_row_equivalence():
    M = boolean_form_matrix(3)
    mixed = (M[0], tuple(a ^ b for a, b in zip(M[0], M[1])), M[2])
    assert row_equivalent(M, mixed)
    assert not row_equivalent(M, M[:2] + ((1,) * 8,))
    assert not row_equivalent(M, M[:2])


def test_span_order():
    words = span(((1, 1, 0), (0, 1, 1)))
    assert words[0] == 0
    assert sorted(words) == [0b000, 0b011, 0b101, 0b110]


def test_code_params_uses_rank():
    p = code_params(((1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1)))
    assert p.triple() == (4, 2, 2)
    with pytest.raises(FuzzIdealError):
        code_params(((0, 0, 0),))


def test_hadamard_type():
    assert is_hadamard_type((16, 4, 8))
    assert not is_hadamard_type((16, 4, 6))
    assert not is_hadamard_type((2, 1, 1))


def test_columns_all_bitvectors():
    assert not columns_all_bitvectors(((1, 1, 0, 0), (1, 1, 0, 0)))
    assert not columns_all_bitvectors(((1, 1, 0), (1, 0, 1)))


def test_codeword_ops(algebras):
    W = algebras["order4"]
    c = codeword(W, ["0", "a"])
    assert str(c) == "1100" and c.weight == 2
    assert str(c ^ codeword(W, ["0", "b"])) == "0110"
    with pytest.raises(FuzzIdealError):
        c ^ Codeword((1, 0))


def test_symmetric_difference_identities():
    universe = list(range(6))
    assert sym_diff({1, 2}, {2, 3}) == {1, 3}
    assert alternating_indicator([{1}, {1}], universe)[1] == 0
    rep = char_identity_check([{0, 1}, {1, 2}, {2, 3, 4}], universe)
    assert rep.ok and set(rep.results) == {"zero-iff-equal", "pairwise", "n-ary"}
    with pytest.raises(FuzzIdealError):
        char_identity_check([{9}], universe)


@pytest.mark.parametrize("name", FIXTURES)
def test_xor_law_and_sym_diff_not_ideal(name, algebras):
    W = algebras[name]
    ideals = enumerate_ideals(W)
    for I, J in itertools.product(ideals, repeat=2):
        assert xor_law_check(I, J).ok
        if I != J:
            diff = I.members ^ J.members
            assert not diff & 1  # 0 is in both
            assert not diff or not is_ideal(W, diff)


def test_product_codewords_match_bitstrings():
    W = product_wajsberg(3)
    I = enumerate_ideals(W)[-2]
    assert codeword(W, I).bits == tuple(int(x in I) for x in W.elements)
