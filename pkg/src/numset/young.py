"""Young diagrams of numerical sets, hooks and the rectangle complement."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core import NumericalSet


@dataclass(frozen=True)
class YoungDiagram:
    """Integer partition, rows listed top to bottom in weakly decreasing order."""

    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r <= 0 for r in rows):
            raise ValueError(f"row lengths must be positive: {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise ValueError(f"row lengths must be weakly decreasing: {rows}")

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def area(self) -> int:
        return sum(self.rows)

    def conjugate(self) -> "YoungDiagram":
        return YoungDiagram(
            tuple(sum(1 for r in self.rows if r > j) for j in range(self.width))
        )

    def cells(self):
        for i, r in enumerate(self.rows):
            for j in range(r):
                yield i, j

    def __len__(self) -> int:
        return len(self.rows)


def diagram_of(S: NumericalSet) -> YoungDiagram:
    """One row per gap, largest gap on top; a row counts the elements below its gap."""
    # [0, g) holds g integers, i of them gaps
    return YoungDiagram(tuple(g - i for i, g in enumerate(S.gaps))[::-1])


def set_of(D: YoungDiagram) -> NumericalSet:
    """Inverse of :func:`diagram_of`."""
    k = len(D.rows)
    return NumericalSet(tuple(r + k - 1 - i for i, r in enumerate(D.rows))[::-1])


HookField = tuple[tuple[int, ...], ...]


def hook_field(D: YoungDiagram) -> HookField:
    """Hook length of every box, row by row."""
    conj = D.conjugate().rows
    return tuple(
        tuple(r - j + conj[j] - i - 1 for j in range(r)) for i, r in enumerate(D.rows)
    )


def hook_multiset(D: YoungDiagram) -> Counter:
    return Counter(h for row in hook_field(D) for h in row)


def hook_set(D: YoungDiagram) -> frozenset[int]:
    return frozenset(h for row in hook_field(D) for h in row)


def c1(D: YoungDiagram) -> int:
    """Number of boxes with hook length 1 (the inner corners)."""
    return len(set(D.rows))


def complement_diagram(D: YoungDiagram) -> YoungDiagram:
    """Rest of the bounding rectangle, rotated by 180 degrees."""
    w = D.width
    return YoungDiagram(tuple(w - r for r in reversed(D.rows) if r < w))
