"""Ordered bracket strings and the usual cancellation rule.

Both crystal models act through the same signature rule: write a token
sequence of ``(`` (raising contributors) and ``)`` (lowering contributors)
in a prescribed order, match each ``)`` against the nearest unmatched ``(``
to its left, then act at the extreme unmatched bracket.  After matching,
the unmatched tokens always read ``)* (*`` from left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

OPEN = "("
CLOSE = ")"


def match_brackets(sides: list[str]) -> list[int | None]:
    """Matched-partner index per token, or None; single left-to-right pass."""
    matching: list[int | None] = [None] * len(sides)
    stack: list[int] = []
    for idx, side in enumerate(sides):
        if side == OPEN:
            stack.append(idx)
        elif stack:
            j = stack.pop()
            matching[idx] = j
            matching[j] = idx
    return matching


@dataclass(frozen=True)
class BracketString:
    """Tokens in their acting order plus the computed matching.

    ``payload`` is whatever the token stands for: a box for the partition
    model, a (residue, k) pair for the monomial model.
    """

    sides: tuple[str, ...]
    payloads: tuple[Any, ...]
    matching: tuple[int | None, ...]

    @classmethod
    def build(cls, tokens: list[tuple[str, Any]]) -> "BracketString":
        sides = [side for side, _ in tokens]
        return cls(
            sides=tuple(sides),
            payloads=tuple(payload for _, payload in tokens),
            matching=tuple(match_brackets(sides)),
        )

    def __str__(self):
        return "".join(self.sides)

    def unmatched(self, side: str) -> list[int]:
        return [
            i
            for i, s in enumerate(self.sides)
            if s == side and self.matching[i] is None
        ]

    @property
    def eps(self) -> int:
        """Unmatched closing brackets."""
        return len(self.unmatched(CLOSE))

    @property
    def phi(self) -> int:
        """Unmatched opening brackets."""
        return len(self.unmatched(OPEN))

    def rightmost_unmatched_close(self) -> int | None:
        idx = self.unmatched(CLOSE)
        return idx[-1] if idx else None

    def leftmost_unmatched_open(self) -> int | None:
        idx = self.unmatched(OPEN)
        return idx[0] if idx else None
