"""ASCII drawings of brick stacks"""

from typing import List

from brickstack import BrickStack
from config import Config


class StackRenderer:
    """Draws a stack row by row above a base line, one column per base unit"""

    def __init__(self):
        self.config = Config()

    def render_ascii(self, stack: BrickStack, shaved: bool = False) -> str:
        lines = [self._render_row(row, stack, shaved) for row in reversed(stack.rows)]
        lines.append(self.config.BASE_GLYPH * stack.m)
        return "\n".join(lines)

    def _brick_glyph(self, q: int, shaved: bool) -> str:
        if shaved:
            return self.config.SHAVED_LEFT + self.config.SHAVED_FILL * (q - 1) + self.config.SHAVED_RIGHT
        return self.config.BRICK_LEFT + self.config.BRICK_FILL * (q - 1) + self.config.BRICK_RIGHT

    def _render_row(self, row, stack: BrickStack, shaved: bool) -> str:
        cells: List[str] = [self.config.EMPTY_GLYPH] * stack.m
        glyph = self._brick_glyph(stack.q, shaved)
        for s in row:
            for offset, ch in enumerate(glyph):
                if 0 <= s + offset < stack.m:
                    cells[s + offset] = ch
        return "".join(cells)
