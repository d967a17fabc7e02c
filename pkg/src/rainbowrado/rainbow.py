"""Rainbow numbers of y = f(x) over [n] and the monochromatic parameter mu.

mu counts the elements of [n] that cannot open a new color in a coloring
without rainbow solutions; the rainbow number is then n - mu + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .eqdsl import Equation
from .equations import floor_inverse, inverse_probe
from .errors import RangeError

__all__ = ["MuResult", "rb_linear", "mu_linear", "mu_algorithm2", "rb_general"]


@dataclass(frozen=True)
class MuResult:
    mu: int
    n: int
    visited: int = 0
    trace: list | None = field(default=None, compare=False)

    @property
    def colors(self) -> int:
        """Colors used by the maximal no-rainbow coloring, n - mu."""
        return self.n - self.mu

    def to_json(self) -> dict:
        out = {"mu": self.mu, "n": self.n, "visited": self.visited}
        if self.trace is not None:
            out["trace"] = [list(step) for step in self.trace]
        return out


def _check_linear(a, b, n):
    if a < 1 or b < 0:
        raise RangeError(f"need a >= 1 and b >= 0, got a={a}, b={b}")
    if n < a + b:
        raise RangeError(f"n={n} < a+b={a + b}")


def mu_linear(a: int, b: int, n: int) -> MuResult:
    """mu for y = a*x + b: floor((n - b) / a)."""
    _check_linear(a, b, n)
    return MuResult((n - b) // a, n)


def rb_linear(a: int, b: int, n: int) -> int:
    """rb([n], y = a*x + b) = n - floor((n - b) / a) + 1."""
    _check_linear(a, b, n)
    return n - (n - b) // a + 1


def mu_algorithm2(eq: Equation, n: int, trace: bool = False) -> MuResult:
    """Monochromatic parameter by descending preimage-chain walk.

    t runs down from floor(f^-1(n)) to the domain floor.  An unvisited t
    scores one (its image f(t) merges into t's class); if t itself has an
    integer preimage the whole chain below it is walked, marked visited and
    scored one per step.  For f(1) = 1 the floor is 2 in all three tests.
    The trace holds ``(t, action)`` pairs when requested.
    """
    if not eq.is_binary:
        raise TypeError(f"{eq} is not a binary-function equation")
    d = eq.domain_floor
    first = eq.apply((d,))
    if n < first:
        raise RangeError(f"n={n} < f({d})={first}")

    steps = [] if trace else None
    mu = 0
    visited: set[int] = set()
    t = floor_inverse(eq, n)
    while t >= d:
        if t in visited:
            if steps is not None:
                steps.append((t, "skip"))
            t -= 1
            continue
        mu += 1
        p = inverse_probe(eq, t)
        if p is not None:
            if steps is not None:
                steps.append((t, "chain"))
            s = t
            while p is not None:
                visited.add(s)
                visited.add(p)
                mu += 1
                if steps is not None:
                    steps.append((p, "merge"))
                s = p
                p = inverse_probe(eq, s)
        else:
            visited.add(t)
            if steps is not None:
                steps.append((t, "single"))
        t -= 1
    return MuResult(mu, n, len(visited), steps)


def rb_general(eq: Equation, n: int) -> int:
    """rb([n], y = f(x)) = n - mu + 1 with mu from :func:`mu_algorithm2`."""
    return n - mu_algorithm2(eq, n).mu + 1
