"""Bit strings, cyclic arrangements, intervals and deficiencies"""

import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from config import Config

logger = logging.getLogger(__name__)


def _check_bits(bits: Tuple[int, ...]) -> None:
    for bit in bits:
        if bit not in (0, 1):
            raise ValueError(f"Bit values must be 0 or 1, got {bit!r}")


def _parse_bits(text: str) -> Tuple[int, ...]:
    if any(ch not in "01" for ch in text):
        raise ValueError(f"Invalid bit string: {text!r}")
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class BitString:
    """Finite ordered list of bits"""

    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        _check_bits(self.bits)

    @classmethod
    def from_text(cls, text: str) -> "BitString":
        return cls(_parse_bits(text.strip()))

    @classmethod
    def from_json(cls, data: dict) -> "BitString":
        return cls.from_text(data["bits"])

    def to_text(self) -> str:
        return "".join(str(bit) for bit in self.bits)

    def to_json(self) -> dict:
        return {"bits": self.to_text(), "ones": self.ones, "zeros": self.zeros}

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def zeros(self) -> int:
        return len(self.bits) - sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self):
        return iter(self.bits)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True, eq=False)
class CyclicArrangement:
    """Rotation class of a bit list with fixed direction.

    `bits` is the representative the arrangement was built from; positions
    always refer to it. Equality and hashing go through the canonical
    (lexicographically least) rotation, so reversals stay distinct.
    """

    bits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(self.bits))
        _check_bits(self.bits)

    @classmethod
    def from_text(cls, text: str) -> "CyclicArrangement":
        """Parse the `cyc:` text form; parsing canonicalizes"""
        text = text.strip()
        if text.startswith(Config.ARRANGEMENT_PREFIX):
            text = text[len(Config.ARRANGEMENT_PREFIX):]
        return cls(_parse_bits(text)).canonical()

    @classmethod
    def from_json(cls, data: dict) -> "CyclicArrangement":
        return cls.from_text(data["arrangement"])

    def to_text(self) -> str:
        return Config.ARRANGEMENT_PREFIX + "".join(str(bit) for bit in self.canonical().bits)

    def to_json(self) -> dict:
        return {"arrangement": self.to_text(), "ones": self.ones, "zeros": self.zeros}

    @property
    def length(self) -> int:
        return len(self.bits)

    @property
    def ones(self) -> int:
        return sum(self.bits)

    @property
    def zeros(self) -> int:
        return len(self.bits) - sum(self.bits)

    def zero_positions(self) -> List[int]:
        return [i for i, bit in enumerate(self.bits) if bit == 0]

    def rotation(self, start: int) -> Tuple[int, ...]:
        """The bits read from `start` once around the cycle"""
        n = len(self.bits)
        if n == 0:
            return ()
        start %= n
        return self.bits[start:] + self.bits[:start]

    def rotations(self) -> List[Tuple[int, ...]]:
        return [self.rotation(i) for i in range(len(self.bits))] or [()]

    def canonical(self) -> "CyclicArrangement":
        return CyclicArrangement(min(self.rotations()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicArrangement):
            return NotImplemented
        return self.canonical().bits == other.canonical().bits

    def __hash__(self) -> int:
        return hash(self.canonical().bits)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class IntervalRef:
    """The list (start, end] of an arrangement, indices modulo its length"""

    start: int
    end: int

    def indices(self, n: int) -> List[int]:
        """Positions covered; (r,r] is the whole cycle, never empty"""
        if n == 0:
            return []
        r, s = self.start % n, self.end % n
        size = (s - r) % n or n
        return [(r + step) % n for step in range(1, size + 1)]


@dataclass(frozen=True)
class Deficiency:
    """q*w_1(I) - w_0(I) for an interval I"""

    value: int


class SequenceUtils:
    """Predicates and enumerations over 0/1 sequences"""

    @staticmethod
    def prefix_counts(s: BitString) -> List[Tuple[int, int]]:
        """(zeros, ones) over each prefix; entry i covers the first i+1 bits"""
        zeros, ones = SequenceUtils._prefix_arrays(s)
        return [(int(z), int(o)) for z, o in zip(zeros, ones)]

    @staticmethod
    def _prefix_arrays(s: BitString) -> Tuple[np.ndarray, np.ndarray]:
        ones = np.cumsum(np.asarray(s.bits, dtype=np.int64))
        zeros = np.arange(1, s.length + 1, dtype=np.int64) - ones
        return zeros, ones

    @staticmethod
    def is_q_dominating(s: BitString, q: int) -> bool:
        """Every nonempty prefix has more than q times as many 0s as 1s"""
        zeros, ones = SequenceUtils._prefix_arrays(s)
        return bool(np.all(zeros > q * ones))

    @staticmethod
    def is_q_satisfying(s: BitString, q: int) -> bool:
        """Every prefix has at least q times as many 0s as 1s"""
        zeros, ones = SequenceUtils._prefix_arrays(s)
        return bool(np.all(zeros >= q * ones))

    @staticmethod
    def is_q_ballot(s: BitString, q: int) -> bool:
        return s.zeros == q * s.ones and SequenceUtils.is_q_satisfying(s, q)

    @staticmethod
    def deficiency(a: CyclicArrangement, interval: IntervalRef, q: int) -> Deficiency:
        bits = [a.bits[i] for i in interval.indices(a.length)]
        ones = sum(bits)
        return Deficiency(q * ones - (len(bits) - ones))

    @staticmethod
    def good_zero_set(a: CyclicArrangement, r: int, q: int,
                      S: Optional[Iterable[int]] = None) -> FrozenSet[int]:
        """Ends j of 0-intervals (r,j] with negative deficiency, optionally restricted to S"""
        n = a.length
        if n == 0 or a.bits[r % n] != 0:
            raise ValueError(f"Position {r} does not hold a 0")
        r %= n

        allowed = None
        if S is not None:
            allowed = {j % n for j in S}
            if r not in allowed:
                raise ValueError(f"Cut {r} is not in S")
            bad = sorted(j for j in allowed if a.bits[j] != 0)
            if bad:
                raise ValueError(f"S contains positions holding 1: {bad}")

        good = set()
        delta = 0
        for step in range(1, n + 1):
            j = (r + step) % n
            if a.bits[j]:
                delta += q
            else:
                delta -= 1
                if delta < 0 and (allowed is None or j in allowed):
                    good.add(j)
        return frozenset(good)

    @staticmethod
    def linearize(a: CyclicArrangement, cut: int) -> BitString:
        """The linearization (cut, cut]: a_{cut+1}, ..., a_{cut}"""
        return BitString(a.rotation(cut + 1))

    @staticmethod
    def enumerate_bitstrings(ones: int, zeros: int) -> Iterator[BitString]:
        """Every string with the given counts, in lexicographic order"""
        n = ones + zeros
        for zero_positions in itertools.combinations(range(n), zeros):
            bits = [1] * n
            for i in zero_positions:
                bits[i] = 0
            yield BitString(tuple(bits))

    @staticmethod
    def enumerate_arrangements(ones: int, zeros: int) -> Iterator[CyclicArrangement]:
        """One canonical representative per rotation class"""
        count = 0
        for s in SequenceUtils.enumerate_bitstrings(ones, zeros):
            arrangement = CyclicArrangement(s.bits)
            if min(arrangement.rotations()) == s.bits:
                count += 1
                yield arrangement
        logger.debug("Enumerated %d (%d,%d)-arrangements", count, ones, zeros)

    @staticmethod
    def bit_matrix(m: int) -> np.ndarray:
        """All 2^m strings of length m as rows, in lexicographic order"""
        codes = np.arange(2 ** m, dtype=np.int64)[:, None]
        shifts = np.arange(m - 1, -1, -1, dtype=np.int64)[None, :]
        return ((codes >> shifts) & 1).astype(np.int8)

    @staticmethod
    def satisfying_mask(matrix: np.ndarray, q: int, strict: bool = False) -> np.ndarray:
        """Row mask of q-satisfying (or q-dominating when strict) strings"""
        ones = np.cumsum(matrix, axis=1, dtype=np.int64)
        zeros = np.arange(1, matrix.shape[1] + 1, dtype=np.int64)[None, :] - ones
        if strict:
            return np.all(zeros > q * ones, axis=1)
        return np.all(zeros >= q * ones, axis=1)
