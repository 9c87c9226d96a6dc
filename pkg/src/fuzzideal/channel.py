"""Binary symmetric channel simulation with exhaustive minimum-distance decoding."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .codes import BinaryCode, Bits, _to_bits, _to_int
from .errors import FuzzIdealError

MAX_DECODE_DIM = 20
PRNG_NAME = "MT19937 (Python random.Random), trial t seeded with seed+t"


@dataclass(frozen=True)
class ChannelConfig:
    flip_probability: Fraction
    trials: int
    seed: int

    def __post_init__(self):
        p = Fraction(self.flip_probability)
        if not 0 <= p < 1:
            raise FuzzIdealError(f"flip probability must lie in [0, 1), got {p}")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise FuzzIdealError("trials must be a positive integer")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 1 << 64:
            raise FuzzIdealError("seed must be an unsigned 64-bit integer")
        object.__setattr__(self, "flip_probability", p)


def encode(message: Sequence[int], code: BinaryCode) -> Bits:
    """``message . G`` over GF(2)."""
    if len(message) != code.k:
        raise FuzzIdealError(f"message has {len(message)} bits, code dimension is {code.k}")
    word = 0
    for bit, row in zip(message, code.generator):
        if bit:
            word ^= _to_int(row)
    return _to_bits(word, code.n)


@lru_cache(maxsize=32)
def _codebook(code: BinaryCode) -> tuple[int, ...]:
    # codebook[m] is the codeword of message m (message bit 0 = first row)
    if code.k > MAX_DECODE_DIM:
        raise FuzzIdealError(f"exhaustive decoding is capped at k={MAX_DECODE_DIM}")
    rows = [_to_int(r) for r in code.generator]
    book = [0] * (1 << code.k)
    for m in range(1, 1 << code.k):
        low = (m & -m).bit_length() - 1
        book[m] = book[m & (m - 1)] ^ rows[code.k - 1 - low]
    return tuple(book)


@dataclass(frozen=True)
class DecodeResult:
    message: Bits | None
    corrected: int
    ambiguous: bool = False


def _decode_int(word: int, code: BinaryCode) -> tuple[int | None, int]:
    best, best_m, ties = code.n + 1, None, 0
    for m, c in enumerate(_codebook(code)):
        dist = (word ^ c).bit_count()
        if dist < best:
            best, best_m, ties = dist, m, 1
        elif dist == best:
            ties += 1
    return (best_m if ties == 1 else None), best


def decode_min_distance(word: Sequence[int], code: BinaryCode) -> DecodeResult:
    """Nearest codeword; ties are reported as ambiguous, never broken."""
    if len(word) != code.n:
        raise FuzzIdealError(f"word has {len(word)} bits, code length is {code.n}")
    m, dist = _decode_int(_to_int(word), code)
    if m is None:
        return DecodeResult(None, dist, ambiguous=True)
    return DecodeResult(_to_bits(m, code.k), dist)


@dataclass(frozen=True)
class ChannelReport:
    trials: int
    successes: int
    ambiguous: int
    residual_errors: int
    seed: int
    p: Fraction

    def header(self) -> str:
        return f"# prng={PRNG_NAME}\n# trials\tsuccesses\tambiguous\tresidual_errors\tseed\tp"

    def tsv(self) -> str:
        return (
            f"{self.trials}\t{self.successes}\t{self.ambiguous}\t"
            f"{self.residual_errors}\t{self.seed}\t{self.p}"
        )


def run_channel(code: BinaryCode, config: ChannelConfig) -> ChannelReport:
    """Send random messages through independent bit flips and decode them."""
    _codebook(code)
    p = config.flip_probability
    successes = ambiguous = residual = 0
    for t in range(config.trials):
        rng = random.Random(config.seed + t)
        m = rng.getrandbits(code.k)
        word = _codebook(code)[m]
        for i in range(code.n):
            if rng.randrange(p.denominator) < p.numerator:
                word ^= 1 << i
        got, _ = _decode_int(word, code)
        if got is None:
            ambiguous += 1
        elif got == m:
            successes += 1
        else:
            residual += 1
    return ChannelReport(config.trials, successes, ambiguous, residual, config.seed, p)


@dataclass(frozen=True)
class CorrectionReport:
    max_weight: int
    patterns: int
    messages: int
    corrected: int
    ambiguous: int
    wrong: int

    @property
    def all_corrected(self) -> bool:
        return self.corrected == self.patterns * self.messages


def exhaustive_correction(code: BinaryCode, max_weight: int) -> CorrectionReport:
    """Decode every message under every error pattern of weight ``<= max_weight``."""
    book = _codebook(code)
    patterns = [
        sum(1 << i for i in pos)
        for w in range(max_weight + 1)
        for pos in itertools.combinations(range(code.n), w)
    ]
    corrected = ambiguous = wrong = 0
    for m, c in enumerate(book):
        for e in patterns:
            got, _ = _decode_int(c ^ e, code)
            if got is None:
                ambiguous += 1
            elif got == m:
                corrected += 1
            else:
                wrong += 1
    return CorrectionReport(max_weight, len(patterns), len(book), corrected, ambiguous, wrong)
