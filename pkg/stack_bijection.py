"""The outline bijection between stacks and q-satisfying strings"""

import logging
from typing import List, Tuple, Union

from brickstack import BrickStack, StackAnalyzer
from seqcore import BitString, SequenceUtils

logger = logging.getLogger(__name__)

RowList = List[List[int]]


def _shift(rows: RowList, offset: int) -> RowList:
    return [[s + offset for s in row] for row in rows]


class StackBijection:
    """Maps stacks to outline strings and back"""

    def __init__(self):
        self.analyzer = StackAnalyzer()

    def stack_to_sequence(self, stack: BrickStack) -> BitString:
        """Outline string built from the first-return decomposition, checked against the shaved outline"""
        violations = self.analyzer.validate(stack)
        if violations:
            raise ValueError(f"Invalid stack {stack}: " + "; ".join(violations))

        bits = self._decompose(stack)
        outline = self.analyzer.silhouette(stack).to_bits()
        if bits != outline:
            raise RuntimeError(
                f"{stack}: decomposition gives {BitString(bits)}, outline gives {BitString(outline)}"
            )
        return BitString(bits)

    def _decompose(self, stack: BrickStack) -> Tuple[int, ...]:
        bits: List[int] = []
        # pending holds stacks still to decompose and literal closing bits, popped in outline order
        pending: List[Union[BrickStack, int]] = [stack]
        while pending:
            item = pending.pop()
            if isinstance(item, int):
                bits.append(item)
                continue
            if item.m == 0:
                continue

            gap = item.rows[0][0] if item.rows else item.m
            if gap:
                bits.extend([0] * gap)
                pending.append(item.shifted(-gap, item.m - gap))
                continue

            m_first = self.analyzer.first_return(item)
            if m_first < item.m:
                left, right = self.analyzer.split(item, m_first)
                pending.extend([right, left])
                continue

            # outline returns only at m: the second row becomes the base of the inner stack
            inner = BrickStack(item.q, item.m - 2, _shift([list(r) for r in item.rows[1:]], -1))
            bits.append(0)
            pending.extend([1, inner])
        return tuple(bits)

    def sequence_to_stack(self, b: BitString, q: int) -> BrickStack:
        """The unique stack whose outline string is b"""
        if q < 1:
            raise ValueError(f"q must be positive, got {q}")
        if not SequenceUtils.is_q_satisfying(b, q):
            raise ValueError(f"{b} is not {q}-satisfying")

        stack = BrickStack(q, b.length, self._build(b.bits, q))
        logger.debug("Built %s from %s", stack, b)
        return stack

    def _build(self, bits: Tuple[int, ...], q: int) -> RowList:
        rows: RowList = []
        # (start, end, x offset, row) segments of bits still to lay
        pending = [(0, len(bits), 0, 0)]
        while pending:
            start, end, offset, level = pending.pop()
            while start < end and SequenceUtils.is_q_dominating(BitString(bits[start:end]), q):
                start += 1
                offset += 1
            if start == end:
                continue

            m_first = self._shortest_ballot_prefix(bits[start:end], q)
            if m_first < end - start:
                pending.append((start, start + m_first, offset, level))
                pending.append((start + m_first, end, offset + m_first, level))
                continue

            while len(rows) <= level:
                rows.append([])
            ones = sum(bits[start:end])
            rows[level].extend(offset + j * (q + 1) for j in range(ones))
            pending.append((start + 1, end - 1, offset + 1, level + 1))
        return rows

    @staticmethod
    def _shortest_ballot_prefix(bits: Tuple[int, ...], q: int) -> int:
        zeros = ones = 0
        for length, bit in enumerate(bits, start=1):
            if bit:
                ones += 1
            else:
                zeros += 1
            if zeros == q * ones:
                return length
        raise ValueError(f"{BitString(bits)} has no {q}-ballot prefix")
