"""Brick stacks: representation, validation and shaved outlines"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

Rows = Tuple[Tuple[int, ...], ...]

_STACK_PATTERN = re.compile(r"^q=(\d+);m=(\d+);rows=((?:\[[-\d,]*\])*)$")
_ROW_PATTERN = re.compile(r"\[([-\d,]*)\]")


def normalize_rows(rows: Sequence[Sequence[int]]) -> Rows:
    """Sort each row and drop empty rows at the top"""
    normalized = [tuple(sorted(int(s) for s in row)) for row in rows]
    while normalized and not normalized[-1]:
        normalized.pop()
    return tuple(normalized)


@dataclass(frozen=True)
class BrickStack:
    """Rows of brick starts over a base of length m; row 0 rests on the base.

    A brick starting at s occupies [s, s+q+1).
    """

    q: int
    m: int
    rows: Rows = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", normalize_rows(self.rows))

    @property
    def brick_length(self) -> int:
        return self.q + 1

    @property
    def n(self) -> int:
        """Bricks resting directly on the base"""
        return len(self.rows[0]) if self.rows else 0

    @property
    def brick_count(self) -> int:
        return sum(len(row) for row in self.rows)

    def to_text(self) -> str:
        body = "".join("[" + ",".join(str(s) for s in row) + "]" for row in self.rows) or "[]"
        return f"q={self.q};m={self.m};rows={body}"

    @classmethod
    def from_text(cls, text: str) -> "BrickStack":
        match = _STACK_PATTERN.match(text.strip())
        if not match:
            raise ValueError(f"Invalid stack text: {text!r}")
        q, m, body = int(match.group(1)), int(match.group(2)), match.group(3)
        rows = [[int(s) for s in row.split(",") if s] for row in _ROW_PATTERN.findall(body)]
        return cls(q, m, rows)

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "BrickStack":
        try:
            return cls(int(data["q"]), int(data["m"]), data.get("rows", []))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Invalid stack object {data!r}: {e}")

    def shifted(self, offset: int, m: int) -> "BrickStack":
        """Same bricks moved by offset over a base of length m"""
        return BrickStack(self.q, m, [[s + offset for s in row] for row in self.rows])

    def __str__(self) -> str:
        return self.to_text()


class Step(Enum):
    """Unit steps of a shaved outline"""
    UP = "up"
    FLAT = "flat"
    DOWN = "down"


@dataclass(frozen=True)
class Silhouette:
    steps: Tuple[Step, ...]

    def to_bits(self) -> Tuple[int, ...]:
        """0 for each up or flat step, 1 for each down step"""
        return tuple(1 if step is Step.DOWN else 0 for step in self.steps)


class StackAnalyzer:
    """Checks stacks against the bricklaying rules and reads their outlines"""

    def validate(self, stack: BrickStack) -> List[str]:
        """Returns the rule violations; an empty list means the stack is valid"""
        violations = []
        q, length = stack.q, stack.brick_length

        if q < 1:
            violations.append(f"q must be positive, got {q}")
            return violations
        if stack.m < 0:
            violations.append(f"base length must be nonnegative, got {stack.m}")
            return violations

        for r, row in enumerate(stack.rows):
            for left, right in zip(row, row[1:]):
                if right - left < length:
                    violations.append(f"row {r + 1}: bricks at {left} and {right} overlap")

            if r == 0:
                for s in row:
                    if s < 0 or s + length > stack.m:
                        violations.append(f"row 1: brick at {s} does not fit on base of length {stack.m}")
                continue

            junctions = self.junctions(stack.rows[r - 1], q)
            for s in row:
                if not any(s + 1 <= x <= s + q for x in junctions):
                    violations.append(f"row {r + 1}: brick at {s} does not rest on two contiguous bricks")

        return violations

    def is_valid(self, stack: BrickStack) -> bool:
        return not self.validate(stack)

    @staticmethod
    def junctions(row: Sequence[int], q: int) -> List[int]:
        """Points where two bricks of a row meet"""
        members = set(row)
        return [s + q + 1 for s in row if s + q + 1 in members]

    def _require_valid(self, stack: BrickStack) -> None:
        violations = self.validate(stack)
        if violations:
            raise ValueError(f"Invalid stack {stack}: " + "; ".join(violations))

    def heights(self, stack: BrickStack) -> np.ndarray:
        """Outline height at each integer point 0..m of the shaved stack"""
        self._require_valid(stack)
        heights = np.zeros(stack.m + 1, dtype=np.int64)
        for level, row in enumerate(stack.rows, start=1):
            for s in row:
                top = heights[s + 1:s + stack.q + 1]
                np.maximum(top, level, out=top)
        return heights

    def silhouette(self, stack: BrickStack) -> Silhouette:
        diffs = np.diff(self.heights(stack))
        if np.any(np.abs(diffs) > 1):
            raise RuntimeError(f"Outline of {stack} has a step taller than one brick")
        steps = {1: Step.UP, 0: Step.FLAT, -1: Step.DOWN}
        return Silhouette(tuple(steps[int(d)] for d in diffs))

    @staticmethod
    def split(stack: BrickStack, at: int) -> Tuple[BrickStack, BrickStack]:
        """Bricks starting before `at`, and the rest moved onto a base starting at `at`"""
        left = [[s for s in row if s < at] for row in stack.rows]
        right = [[s - at for s in row if s >= at] for row in stack.rows]
        return BrickStack(stack.q, at, left), BrickStack(stack.q, stack.m - at, right)

    def first_return(self, stack: BrickStack) -> Optional[int]:
        """First positive point where the outline is back at the base, None if [0,1) is uncovered"""
        heights = self.heights(stack)
        if stack.m == 0 or heights[1] == 0:
            return None
        return int(np.flatnonzero(heights[1:] == 0)[0]) + 1
