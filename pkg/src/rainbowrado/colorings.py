"""Exact colorings of [n], canonical enumeration, rainbow/mono detection."""

from __future__ import annotations

import string
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .equations import Solution
from .errors import GapError

__all__ = [
    "Coloring",
    "Witness",
    "make_coloring",
    "enumerate_exact_colorings",
    "stirling2",
    "find_rainbow",
    "find_monochromatic",
    "is_rainbow",
    "is_monochromatic",
]

_B62 = string.digits + string.ascii_lowercase + string.ascii_uppercase


@dataclass(frozen=True)
class Coloring:
    """An exact coloring of [n] with canonical (first-occurrence) color ids.

    ``colors[m - 1]`` is the color of m.  Construct through
    :func:`make_coloring` unless the ids are already canonical.
    """

    n: int
    k: int
    colors: tuple[int, ...]
    _masks: tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        if len(self.colors) != self.n:
            raise GapError(f"{len(self.colors)} colors given for n={self.n}")
        if not 1 <= self.k <= self.n and self.n > 0:
            raise ValueError(f"k={self.k} not in [1, n={self.n}]")
        if set(self.colors) != set(range(1, self.k + 1)):
            raise ValueError("coloring is not exact with ids 1..k")
        masks = [0] * (self.k + 1)
        for m, c in enumerate(self.colors, start=1):
            masks[c] |= 1 << m
        object.__setattr__(self, "_masks", tuple(masks))

    def color(self, m: int) -> int:
        return self.colors[m - 1]

    def class_mask(self, color: int) -> int:
        """Bit-set of the elements carrying ``color`` (bit m set for element m)."""
        return self._masks[color]

    def same_color(self, u: int, v: int) -> bool:
        return bool(self._masks[self.colors[u - 1]] >> v & 1)

    def classes(self) -> list[list[int]]:
        """Color classes ordered by color id."""
        out = [[] for _ in range(self.k)]
        for m, c in enumerate(self.colors, start=1):
            out[c - 1].append(m)
        return out

    def restrict(self, n: int) -> "Coloring":
        """The coloring of [n] obtained by truncation; may lose colors."""
        return make_coloring(n, self.colors[:n])

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_json(cls, data: Mapping) -> "Coloring":
        col = make_coloring(data["n"], data["colors"])
        if col.k != data.get("k", col.k) or tuple(data["colors"]) != col.colors:
            raise ValueError("colors are not canonical or k does not match")
        return col

    def compact(self) -> str:
        """Base-62 digit string; ids map 1->'1', ..., 9->'9', 10->'a', ..."""
        if self.n > 62:
            raise ValueError("compact form only defined for n <= 62")
        return "".join(_B62[c] for c in self.colors)

    @classmethod
    def from_compact(cls, text: str) -> "Coloring":
        return make_coloring(len(text), [_B62.index(ch) for ch in text])


def make_coloring(n: int, assignments) -> Coloring:
    """Build a canonical :class:`Coloring` from arbitrary labels.

    ``assignments`` is either a sequence of n labels (label of m at index
    m-1) or a mapping from each m in [n] to its label.  Labels are any
    hashables; they are renumbered by first occurrence.
    """
    if isinstance(assignments, Mapping):
        missing = [m for m in range(1, n + 1) if m not in assignments]
        if missing:
            raise GapError(f"elements {missing} are unassigned")
        labels = [assignments[m] for m in range(1, n + 1)]
    else:
        labels = list(assignments)
        if len(labels) < n:
            raise GapError(f"elements {list(range(len(labels) + 1, n + 1))} are unassigned")
        if len(labels) > n:
            raise ValueError(f"{len(labels)} labels for n={n}")
    ids: dict = {}
    colors = []
    for lab in labels:
        if lab not in ids:
            ids[lab] = len(ids) + 1
        colors.append(ids[lab])
    return Coloring(n, len(ids), tuple(colors))


def enumerate_exact_colorings(n: int, k: int) -> Iterator[Coloring]:
    """Restricted growth strings of length n using exactly k symbols.

    Yields one representative per relabeling class, in lexicographic order;
    the count is the Stirling number S2(n, k).
    """
    if not 1 <= k <= n:
        return
    colors = [0] * n

    def rec(i, used):
        # not enough positions left to introduce the missing colors
        if k - used > n - i:
            return
        if i == n:
            yield Coloring(n, k, tuple(colors))
            return
        for c in range(1, min(used + 1, k) + 1):
            colors[i] = c
            yield from rec(i + 1, max(used, c))

    colors[0] = 1
    yield from rec(1, 1)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """S2(n, k) by the recurrence S2(n,k) = k S2(n-1,k) + S2(n-1,k-1)."""
    if n == k:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@dataclass(frozen=True)
class Witness:
    """A solution together with the colors of its participating values."""

    kind: str  # "rainbow" or "monochromatic"
    solution: Solution
    colors: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "solution": self.solution.to_json(), "colors": list(self.colors)}


def is_rainbow(coloring: Coloring, values: Sequence[int]) -> bool:
    """Pairwise distinct colors; a repeated value is never rainbow."""
    cols = [coloring.colors[v - 1] for v in values]
    return len(set(cols)) == len(cols)


def is_monochromatic(coloring: Coloring, values: Sequence[int]) -> bool:
    c0 = coloring.colors[values[0] - 1]
    return all(coloring.colors[v - 1] == c0 for v in values)


def find_rainbow(coloring: Coloring, solutions) -> Witness | None:
    """First solution whose values carry pairwise distinct colors."""
    for sol in solutions:
        if is_rainbow(coloring, sol.values):
            return Witness("rainbow", sol, tuple(coloring.color(v) for v in sol.values))
    return None


def find_monochromatic(coloring: Coloring, solutions) -> Witness | None:
    """First solution whose values all share one color."""
    for sol in solutions:
        if is_monochromatic(coloring, sol.values):
            return Witness("monochromatic", sol, tuple(coloring.color(v) for v in sol.values))
    return None
