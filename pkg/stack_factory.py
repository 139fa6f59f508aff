"""Exhaustive generation of brick stacks"""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from brickstack import BrickStack, StackAnalyzer

logger = logging.getLogger(__name__)


class StackFactory:
    """Generates every stack on a base, in (n, row-1 starts, upper choices) order"""

    def __init__(self):
        self.analyzer = StackAnalyzer()

    def enumerate_stacks(self, m: int, q: int) -> Iterator[BrickStack]:
        """All stacks on a base of length m, the empty stack first"""
        if m < 0 or q < 1:
            raise ValueError(f"Need m >= 0 and q >= 1, got m={m}, q={q}")

        count = 0
        for n in range(m // (q + 1) + 1):
            for base in self.base_placements(m, n, q):
                for rows in self._extend([base], q):
                    count += 1
                    yield BrickStack(q, m, rows)
        logger.debug("Enumerated %d stacks for m=%d, q=%d", count, m, q)

    def full_base_stacks(self, n: int, q: int) -> Iterator[BrickStack]:
        """Stacks whose base of length (q+1)n is covered by n bricks"""
        if n < 0 or q < 1:
            raise ValueError(f"Need n >= 0 and q >= 1, got n={n}, q={q}")

        base = tuple(j * (q + 1) for j in range(n))
        for rows in self._extend([base], q):
            yield BrickStack(q, (q + 1) * n, rows)

    @staticmethod
    def base_placements(m: int, n: int, q: int) -> Iterator[Tuple[int, ...]]:
        """Non-overlapping starts of n bricks on the base, lexicographically"""
        # s_i - i*q runs over the increasing n-subsets of range(m - n*q)
        for picks in itertools.combinations(range(m - n * q), n):
            yield tuple(t + i * q for i, t in enumerate(picks))

    def _extend(self, rows: List[Tuple[int, ...]], q: int) -> Iterator[List[Tuple[int, ...]]]:
        top = rows[-1]
        if not top:
            yield rows[:-1]
            return

        junctions = self.analyzer.junctions(top, q)
        options: List[Sequence[Optional[int]]] = [[None] + list(range(1, q + 1))] * len(junctions)
        for overhangs in itertools.product(*options):
            row = tuple(x - a for x, a in zip(junctions, overhangs) if a is not None)
            if any(right - left < q + 1 for left, right in zip(row, row[1:])):
                continue
            if row:
                yield from self._extend(rows + [row], q)
            else:
                yield rows
