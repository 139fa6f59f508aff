"""Chung-Feller statistics, integer cycles, Raney sequences and plane trees"""

import functools
import itertools
import logging
import string
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Tuple

import numpy as np

from config import Config
from cyclelemma import CycleLemma
from seqcore import BitString, CyclicArrangement, SequenceUtils

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegerCycle:
    """Cyclic list of integers summing to +1"""

    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise ValueError("An integer cycle needs at least one entry")
        if sum(self.values) != 1:
            raise ValueError(f"Cycle {self.to_text()} sums to {sum(self.values)}, expected 1")

    @classmethod
    def from_text(cls, text: str) -> "IntegerCycle":
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as e:
            raise ValueError(f"Invalid integer cycle {text!r}: {e}")

    def to_text(self) -> str:
        return ",".join(str(v) for v in self.values)

    @property
    def length(self) -> int:
        return len(self.values)

    def rotation(self, start: int) -> Tuple[int, ...]:
        start %= len(self.values)
        return self.values[start:] + self.values[:start]

    def positive_partial_sums(self, start: int) -> int:
        sums = np.cumsum(np.asarray(self.rotation(start), dtype=np.int64))
        return int(np.count_nonzero(sums > 0))


@dataclass(frozen=True)
class PlaneTree:
    """Rooted plane tree; a node with no children is a leaf"""

    children: Tuple["PlaneTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def internal_count(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + sum(child.internal_count() for child in self.children)

    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.leaf_count() for child in self.children)

    def is_full(self, q: int) -> bool:
        """Every internal node has exactly q+1 children"""
        if self.is_leaf:
            return True
        return len(self.children) == q + 1 and all(child.is_full(q) for child in self.children)

    def to_text(self) -> str:
        if self.is_leaf:
            return Config.LEAF_GLYPH
        return "(" + "".join(child.to_text() for child in self.children) + ")"

    @classmethod
    def from_text(cls, text: str) -> "PlaneTree":
        text = text.strip()
        tree, end = cls._parse(text, 0)
        if end != len(text):
            raise ValueError(f"Trailing characters in tree {text!r} at {end}")
        return tree

    @classmethod
    def _parse(cls, text: str, pos: int) -> Tuple["PlaneTree", int]:
        if pos >= len(text):
            raise ValueError(f"Unexpected end of tree {text!r}")
        if text[pos] == Config.LEAF_GLYPH:
            return cls(), pos + 1
        if text[pos] != "(":
            raise ValueError(f"Unexpected character {text[pos]!r} in tree {text!r}")

        children = []
        pos += 1
        while pos < len(text) and text[pos] != ")":
            child, pos = cls._parse(text, pos)
            children.append(child)
        if pos >= len(text) or not children:
            raise ValueError(f"Malformed tree {text!r}")
        return cls(tuple(children)), pos + 1

    @classmethod
    def from_json(cls, data: dict) -> "PlaneTree":
        try:
            return cls.from_text(data["tree"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid tree object {data!r}: {e}")

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RaneySequence:
    """Terms over {+1, -q} with positive partial sums"""

    q: int
    terms: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        bad = [t for t in self.terms if t not in (1, -self.q)]
        if bad:
            raise ValueError(f"Raney terms must be 1 or {-self.q}, got {bad}")
        sums = np.cumsum(np.asarray(self.terms, dtype=np.int64))
        if sums.size == 0 or not np.all(sums > 0):
            raise ValueError(f"Partial sums of {self.to_text()} are not all positive")

    def to_text(self) -> str:
        return ",".join(str(t) for t in self.terms)

    def to_json(self) -> dict:
        return {"q": self.q, "terms": list(self.terms)}

    @classmethod
    def from_json(cls, data: dict) -> "RaneySequence":
        try:
            return cls(int(data["q"]), [int(t) for t in data["terms"]])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid Raney object {data!r}: {e}")


class ChungFeller:
    """Counting i with the i-th A before the i-th B"""

    @staticmethod
    def _check_word(word: str) -> int:
        if any(ch not in "AB" for ch in word):
            raise ValueError(f"Word must use only A and B: {word!r}")
        n = word.count("A")
        if word.count("B") != n:
            raise ValueError(f"Word {word!r} has {n} A's and {word.count('B')} B's")
        return n

    @staticmethod
    def statistic(word: str) -> int:
        ChungFeller._check_word(word)
        a_positions = [i for i, ch in enumerate(word) if ch == "A"]
        b_positions = [i for i, ch in enumerate(word) if ch == "B"]
        return sum(1 for a, b in zip(a_positions, b_positions) if a < b)

    @staticmethod
    def distribution(n: int) -> Dict[int, int]:
        """Statistic histogram over all words with n A's and n B's"""
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        if n > Config.CHUNG_FELLER_MAX_N:
            raise ValueError(f"n={n} exceeds the exhaustion limit {Config.CHUNG_FELLER_MAX_N}")

        histogram = Counter()
        for s in SequenceUtils.enumerate_bitstrings(n, n):
            histogram[ChungFeller.statistic(ChungFeller.word_from_bits(s))] += 1
        return dict(sorted(histogram.items()))

    @staticmethod
    def word_from_bits(s: BitString) -> str:
        return "".join("B" if bit else "A" for bit in s)

    @staticmethod
    def via_cycle_lemma(word: str) -> int:
        """Same statistic, read from the 1-good 0-intervals of A->0, B->1 with a 0 appended"""
        ChungFeller._check_word(word)
        bits = BitString(tuple(1 if ch == "B" else 0 for ch in word) + (0,))
        return CycleLemma.good_interval_count(bits, 1) - 1


class Montagh:
    """Rotations of integer cycles by number of positive partial sums"""

    @staticmethod
    def encode(c: IntegerCycle) -> Tuple[CyclicArrangement, List[int]]:
        """(k,k+1)-arrangement of c and S, the last 0 of each entry's block"""
        bits: List[int] = []
        S: List[int] = []
        for b in c.values:
            if b >= 0:
                bits.extend([1] + [0] * (1 + b))
            else:
                bits.extend([1] * (1 - b) + [0])
            S.append(len(bits) - 1)
        return CyclicArrangement(tuple(bits)), S

    @staticmethod
    def scan_start(c: IntegerCycle, l: int) -> int:
        """Start index found by trying every rotation"""
        matches = [start for start in range(c.length) if c.positive_partial_sums(start) == l]
        if len(matches) != 1:
            raise RuntimeError(f"{c.to_text()}: {len(matches)} rotations with {l} positive partial sums")
        return matches[0]

    @staticmethod
    def start(c: IntegerCycle, l: int) -> int:
        """Start index of the unique rotation with exactly l positive partial sums"""
        n = c.length
        if not 1 <= l <= n:
            raise ValueError(f"l must lie in 1..{n}, got {l}")

        arrangement, S = Montagh.encode(c)
        report = CycleLemma.stronger_linearization(arrangement, S, l, 1)
        # cutting after block i starts the rotation at entry i+1
        start = (S.index(report.cut) + 1) % n

        scanned = Montagh.scan_start(c, l)
        if scanned != start:
            raise RuntimeError(
                f"{c.to_text()}, l={l}: reduction gives start {start}, scan gives {scanned}"
            )
        return start

    @staticmethod
    def linearization(c: IntegerCycle, l: int) -> Tuple[int, ...]:
        return c.rotation(Montagh.start(c, l))

    @staticmethod
    def walk_heights(c: IntegerCycle, periods: int = 2) -> np.ndarray:
        """Heights of the walk taking step +b_i per entry, from 0, over whole periods"""
        steps = np.tile(np.asarray(c.values, dtype=np.int64), periods)
        return np.concatenate(([0], np.cumsum(steps)))

    @staticmethod
    def raney_start(c: IntegerCycle) -> int:
        """The position after the last minimum of the walk's first period"""
        heights = Montagh.walk_heights(c, 1)[:c.length]
        return int(c.length - 1 - np.argmin(heights[::-1]))

    @staticmethod
    def start_by_walk(c: IntegerCycle, l: int) -> int:
        """Step down from the Raney start to the rotation with l positive partial sums.

        Each step moves to the previous occurrence of the same height, or to the
        last occurrence of the next larger height when there is none.
        """
        n = c.length
        if not 1 <= l <= n:
            raise ValueError(f"l must lie in 1..{n}, got {l}")

        heights = Montagh.walk_heights(c, 1)[:n]
        position = Montagh.raney_start(c)
        for _ in range(n - l):
            same = np.flatnonzero(heights[:position] == heights[position])
            if same.size:
                position = int(same[-1])
            else:
                larger = heights[heights > heights[position]].min()
                position = int(np.flatnonzero(heights == larger)[-1])
        return position


class TreeCodec:
    """Plane trees, q-Raney sequences and their postorder bit strings"""

    @staticmethod
    def enumerate_raney(k: int, q: int) -> Iterator[RaneySequence]:
        # a -q term is a 1 bit; positive partial sums means q-dominating
        for s in SequenceUtils.enumerate_bitstrings(k, q * k + 1):
            if SequenceUtils.is_q_dominating(s, q):
                yield RaneySequence(q, tuple(-q if bit else 1 for bit in s))

    @staticmethod
    @functools.lru_cache(maxsize=None)
    def _trees(n: int, q: int) -> Tuple[PlaneTree, ...]:
        if n == 0:
            return (PlaneTree(),)
        trees = []
        for sizes in TreeCodec._compositions(n - 1, q + 1):
            choices = [TreeCodec._trees(size, q) for size in sizes]
            for children in itertools.product(*choices):
                trees.append(PlaneTree(tuple(children)))
        return tuple(trees)

    @staticmethod
    def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
        """Ordered tuples of `parts` nonnegative integers summing to `total`"""
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in TreeCodec._compositions(total - first, parts - 1):
                yield (first,) + rest

    @staticmethod
    def enumerate_plane_trees(n: int, q: int) -> Iterator[PlaneTree]:
        if n < 0 or q < 1:
            raise ValueError(f"Need n >= 0 and q >= 1, got n={n}, q={q}")
        trees = TreeCodec._trees(n, q)
        logger.debug("%d plane trees with %d internal nodes, q=%d", len(trees), n, q)
        return iter(trees)

    @staticmethod
    def tree_to_sequence(tree: PlaneTree) -> BitString:
        """Postorder: 0 per leaf, 1 when an internal node's subtree completes"""
        bits: List[int] = []

        def visit(node: PlaneTree):
            if node.is_leaf:
                bits.append(0)
                return
            for child in node.children:
                visit(child)
            bits.append(1)

        visit(tree)
        return BitString(tuple(bits))

    @staticmethod
    def sequence_to_tree(s: BitString, q: int) -> PlaneTree:
        """Stack evaluation: each 1 combines the q+1 most recent items"""
        stack: List[PlaneTree] = []
        for index, bit in enumerate(s):
            if not bit:
                stack.append(PlaneTree())
                continue
            if len(stack) < q + 1:
                raise ValueError(f"{s}: marker at {index} finds only {len(stack)} items, needs {q + 1}")
            children = tuple(stack[-(q + 1):])
            del stack[-(q + 1):]
            stack.append(PlaneTree(children))

        if len(stack) != 1:
            raise ValueError(f"{s} leaves {len(stack)} items, expected 1")
        return stack[0]

    @staticmethod
    def render_labeled(tree: PlaneTree) -> str:
        """Bracketing with leaves labelled left to right, e.g. ((abc)de)"""
        labels = iter(string.ascii_lowercase + string.ascii_uppercase)

        def render(node: PlaneTree) -> str:
            if node.is_leaf:
                try:
                    return next(labels)
                except StopIteration:
                    raise ValueError(f"Tree has more than {len(string.ascii_letters)} leaves to label")
            return "(" + "".join(render(child) for child in node.children) + ")"

        return render(tree)
