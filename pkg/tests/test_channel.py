import itertools
from fractions import Fraction

import pytest

from fuzzideal import (
    BinaryCode,
    ChannelConfig,
    FuzzIdealError,
    build_hadamard,
    decode_min_distance,
    encode,
    enumerate_ideals,
    exhaustive_correction,
    generator_matrix,
    run_channel,
)


@pytest.fixture(scope="module")
def order8_code(algebras):
    return generator_matrix(enumerate_ideals(algebras["order8"], proper=True)[3:])


@pytest.fixture(scope="module")
def order4_code(algebras):
    return generator_matrix(enumerate_ideals(algebras["order4"], proper=True))


def test_encode(order8_code):
    assert encode([0, 0, 0], order8_code) == (0,) * 8
    assert encode([1, 0, 0], order8_code) == order8_code.generator[0]
    assert "".join(map(str, encode([1, 1, 1], order8_code))) == "10010110"
    with pytest.raises(FuzzIdealError):
        encode([1, 1], order8_code)


def test_decode_clean(order8_code):
    for msg in itertools.product((0, 1), repeat=3):
        r = decode_min_distance(encode(msg, order8_code), order8_code)
        assert r.message == msg and r.corrected == 0 and not r.ambiguous


def test_order8_single_flips(order8_code):
    for msg in itertools.product((0, 1), repeat=3):
        word = encode(msg, order8_code)
        for i in range(8):
            flipped = list(word)
            flipped[i] ^= 1
            r = decode_min_distance(flipped, order8_code)
            assert r.message == msg and r.corrected == 1


def test_order4_double_flips_ambiguous(order4_code):
    outcomes = set()
    for msg in itertools.product((0, 1), repeat=2):
        word = encode(msg, order4_code)
        for i, j in itertools.combinations(range(4), 2):
            flipped = list(word)
            flipped[i] ^= 1
            flipped[j] ^= 1
            r = decode_min_distance(flipped, order4_code)
            outcomes.add(r.ambiguous)
            if r.ambiguous:
                assert r.message is None
    assert True in outcomes


def test_exhaustive_correction():
    h16 = build_hadamard(4).code
    rep = exhaustive_correction(h16, 3)
    assert (rep.patterns, rep.messages) == (697, 16)
    assert rep.all_corrected
    h8 = build_hadamard(3).code
    assert exhaustive_correction(h8, 1).all_corrected
    assert not exhaustive_correction(h8, 2).all_corrected


def test_zero_noise():
    code = build_hadamard(3).code
    rep = run_channel(code, ChannelConfig(Fraction(0), 200, 1))
    assert (rep.successes, rep.ambiguous, rep.residual_errors) == (200, 0, 0)


def test_run_channel_deterministic():
    code = build_hadamard(4).code
    cfg = ChannelConfig(Fraction(1, 8), 300, 99)
    a, b = run_channel(code, cfg), run_channel(code, cfg)
    assert a == b and a.tsv() == b.tsv()
    assert a.successes + a.ambiguous + a.residual_errors == 300
    assert a.tsv().split("\t")[-2:] == ["99", "1/8"]
    assert "MT19937" in a.header()
    assert run_channel(code, ChannelConfig(Fraction(1, 8), 300, 100)) != a


def test_trials_are_independent_of_count():
    # trial t only depends on seed + t, so a longer run extends a shorter one
    code = build_hadamard(3).code
    short = run_channel(code, ChannelConfig(Fraction(1, 4), 1, 5))
    parts = [run_channel(code, ChannelConfig(Fraction(1, 4), 1, 5 + t)) for t in range(20)]
    full = run_channel(code, ChannelConfig(Fraction(1, 4), 20, 5))
    assert full.successes == sum(p.successes for p in parts)
    assert short == parts[0]


@pytest.mark.parametrize(
    "p, trials, seed",
    [(Fraction(1), 10, 0), (Fraction(-1, 2), 10, 0), (Fraction(1, 2), 0, 0),
     (Fraction(1, 2), 10, -1), (Fraction(1, 2), 10, 1 << 64)],
)
def test_bad_config(p, trials, seed):
    with pytest.raises(FuzzIdealError):
        ChannelConfig(p, trials, seed)


def test_decode_cap():
    rows = tuple(tuple(int(i == j) for j in range(21)) for i in range(21))
    with pytest.raises(FuzzIdealError):
        decode_min_distance((0,) * 21, BinaryCode(rows))


def test_decode_length_check(order4_code):
    with pytest.raises(FuzzIdealError):
        decode_min_distance((0, 0, 0), order4_code)
