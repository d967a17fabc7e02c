"""Forward orbits of f, the maximal no-rainbow coloring, and two infinite
coloring rules (residue classes and alternating blocks)."""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .colorings import Coloring, make_coloring
from .eqdsl import Equation
from .equations import inverse_probe

__all__ = [
    "LambdaClass",
    "general_term",
    "iter_orbit",
    "lambda_class",
    "lambda_classes",
    "canonical_coloring",
    "canonical_coloring_forward",
    "structure_check",
    "BlockColoring",
    "ResidueColoring",
    "block_color",
    "RED",
    "BLUE",
]

RED = "red"
BLUE = "blue"


@dataclass(frozen=True)
class LambdaClass:
    seed: int
    members: tuple[int, ...]

    def __contains__(self, m) -> bool:
        return m in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


def general_term(a: int, b: int, x1: int, i: int, bound: int | None = None) -> int:
    """The i-th iterate of x -> a*x + b from x1 (i = 0 gives x1).

    Pure integer iteration.  Python integers do not overflow, so
    ``OverflowError`` is raised only when an explicit ``bound`` is passed
    and exceeded.
    """
    if a < 1 or b < 0 or x1 < 1 or i < 0:
        raise ValueError("need a >= 1, b >= 0, x1 >= 1, i >= 0")
    x = x1
    for _ in range(i):
        x = a * x + b
        if bound is not None and x > bound:
            raise OverflowError(f"iterate exceeds bound {bound}")
    return x


def iter_orbit(eq: Equation, seed: int) -> Iterator[int]:
    """Unbounded orbit seed, f(seed), f(f(seed)), ...

    A seed below the domain floor is a fixed singleton and yields only itself.
    """
    yield seed
    if seed < eq.domain_floor:
        return
    x = seed
    while True:
        x = eq.apply((x,))
        yield x


def lambda_class(eq: Equation, lam: int, n: int) -> LambdaClass:
    """The orbit of ``lam`` truncated to [n]."""
    members = []
    for m in iter_orbit(eq, lam):
        if m > n:
            break
        members.append(m)
    return LambdaClass(lam, tuple(members))


def _roots_parent(eq: Equation, n: int) -> list[int]:
    # parent[m] = integer preimage of m in the domain, or 0 for an orbit root
    parent = [0] * (n + 1)
    for m in range(1, n + 1):
        p = inverse_probe(eq, m)
        parent[m] = p if p is not None else 0
    return parent


def lambda_classes(eq: Equation, n: int) -> list[LambdaClass]:
    """Maximal orbits in [n], one per root (element without a preimage), by seed."""
    parent = _roots_parent(eq, n)
    return [lambda_class(eq, m, n) for m in range(1, n + 1) if parent[m] == 0]


def _check_n(eq: Equation, n: int):
    first = eq.apply((eq.domain_floor,))
    if n < first:
        raise ValueError(f"n={n} is below the first solution value f({eq.domain_floor})={first}")


def canonical_coloring(eq: Equation, n: int) -> Coloring:
    """Every orbit monochromatic, disjoint orbits distinctly colored.

    Element t inherits the color of its integer preimage when it has one
    (walked backwards with :func:`inverse_probe`), otherwise it opens a new
    color.  Same output as the forward scan in
    :func:`canonical_coloring_forward`.
    """
    _check_n(eq, n)
    colors = [0] * (n + 1)
    k = 0
    for t in range(1, n + 1):
        p = inverse_probe(eq, t)
        if p is None:
            k += 1
            colors[t] = k
        else:
            colors[t] = colors[p]
    return Coloring(n, k, tuple(colors[1:]))


def canonical_coloring_forward(eq: Equation, n: int) -> Coloring:
    """Literal forward scan: t gets a new color unless it lies in the orbit
    of an earlier seed.  Quadratic; kept as a cross-check."""
    _check_n(eq, n)
    seeds: list[tuple[int, frozenset]] = []
    colors = []
    for t in range(1, n + 1):
        for idx, (_, orbit) in enumerate(seeds):
            if t in orbit:
                colors.append(idx + 1)
                break
        else:
            seeds.append((t, frozenset(lambda_class(eq, t, n).members)))
            colors.append(len(seeds))
    return Coloring(n, len(seeds), tuple(colors))


def structure_check(coloring: Coloring, eq: Equation) -> bool:
    """True iff every lambda-class inside [n] is monochromatic."""
    n = coloring.n
    for lam in range(1, n + 1):
        cls = lambda_class(eq, lam, n)
        c0 = coloring.color(lam)
        if any(coloring.color(m) != c0 for m in cls.members[1:]):
            return False
    return True


@dataclass
class BlockColoring:
    """Red/blue coloring of the positive integers by alternating blocks.

    With g(x) = a*x + b and boundaries 1, g(1), g(g(1)), ..., block i
    (counting from 1) is [g^(i-1)(1), g^i(1) - 1]; odd blocks are red and
    even blocks blue, so m and g(m) always land in consecutive blocks.
    """

    a: int
    b: int
    _bounds: list[int] = field(default_factory=lambda: [1], repr=False)

    def __post_init__(self):
        if self.a < 1 or self.b < 0 or (self.a, self.b) == (1, 0):
            raise ValueError("block coloring needs a >= 1, b >= 0, (a, b) != (1, 0)")

    @property
    def k(self) -> int:
        return 2

    def boundaries(self, upto: int) -> list[int]:
        """Block starts, extended until the last one exceeds ``upto``."""
        bnd = self._bounds
        while bnd[-1] <= upto:
            bnd.append(self.a * bnd[-1] + self.b)
        return bnd

    def block_index(self, m: int) -> int:
        if m < 1:
            raise ValueError("m must be positive")
        return bisect.bisect_right(self.boundaries(m), m)

    def color(self, m: int) -> str:
        return RED if self.block_index(m) % 2 == 1 else BLUE

    def coloring(self, n: int) -> Coloring:
        return make_coloring(n, [self.color(m) for m in range(1, n + 1)])

    def describe(self) -> str:
        return (
            f"blocks between consecutive iterates of x -> {self.a}*x+{self.b} from 1; "
            "odd blocks red, even blocks blue"
        )

    def to_json(self) -> dict:
        return {"rule": "block", "a": self.a, "b": self.b, "description": self.describe()}


@dataclass(frozen=True)
class ResidueColoring:
    """m gets color ((m - 1) mod modulus) + 1: the orbits of y = x + modulus."""

    modulus: int

    @property
    def k(self) -> int:
        return self.modulus

    def color(self, m: int) -> int:
        return (m - 1) % self.modulus + 1

    def coloring(self, n: int) -> Coloring:
        return make_coloring(n, [self.color(m) for m in range(1, n + 1)])

    def describe(self) -> str:
        return f"color m by its residue class modulo {self.modulus}"

    def to_json(self) -> dict:
        return {"rule": "residue", "modulus": self.modulus, "description": self.describe()}


@lru_cache(maxsize=64)
def _block_rule(a: int, b: int) -> BlockColoring:
    return BlockColoring(a, b)


def block_color(a: int, b: int, m: int) -> str:
    """``"red"`` or ``"blue"``; never equal to ``block_color(a, b, a*m + b)``."""
    return _block_rule(a, b).color(m)
