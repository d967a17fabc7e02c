"""Evaluation, integer preimages and in-[n] solution enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .eqdsl import Equation
from .errors import ArityCapExceeded, DomainError

__all__ = [
    "SolutionMode",
    "Solution",
    "DEFAULT_ARITY_CAP",
    "eval_f",
    "inverse_probe",
    "floor_inverse",
    "solutions_binary",
    "solutions_linear",
    "solutions",
]

DEFAULT_ARITY_CAP = 4


class SolutionMode(str, Enum):
    """Whether a solution may reuse a value in several positions."""

    REPEATS = "repeats"
    DISTINCT = "distinct"

    @classmethod
    def coerce(cls, value) -> "SolutionMode":
        if isinstance(value, cls):
            return value
        aliases = {"repeats-allowed": cls.REPEATS, "distinct-values": cls.DISTINCT}
        return aliases.get(value) or cls(value)


@dataclass(frozen=True)
class Solution:
    inputs: tuple[int, ...]
    output: int

    @property
    def values(self) -> tuple[int, ...]:
        """Every participating value, inputs first then y."""
        return self.inputs + (self.output,)

    def to_json(self) -> dict:
        return {"inputs": list(self.inputs), "output": self.output}

    def __iter__(self):
        return iter(self.values)


def _require_binary(eq: Equation):
    if not eq.is_binary:
        raise TypeError(f"{eq} is not a binary-function equation")


def eval_f(eq: Equation, x: int) -> int:
    """f(x) for a binary-function equation; x must be >= the domain floor."""
    _require_binary(eq)
    if x < eq.domain_floor:
        raise DomainError(f"x={x} is below the domain floor {eq.domain_floor} of {eq}")
    return eq.apply((x,))


def floor_inverse(eq: Equation, y: int) -> int:
    """Largest x >= 0 with f(x) <= y, or 0 if even f(1) > y.

    Monotone integer search: exponential bracketing then bisection.
    """
    _require_binary(eq)
    f = eq.apply
    if f((1,)) > y:
        return 0
    lo, hi = 1, 2
    while f((hi,)) <= y:
        lo, hi = hi, hi * 2
    # invariant: f(lo) <= y < f(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if f((mid,)) <= y:
            lo = mid
        else:
            hi = mid
    return lo


def inverse_probe(eq: Equation, y: int):
    """The x >= domain floor with f(x) == y, or ``None``."""
    x = floor_inverse(eq, y)
    if x >= eq.domain_floor and eq.apply((x,)) == y:
        return x
    return None


def solutions_binary(eq: Equation, n: int, mode=SolutionMode.DISTINCT) -> list[Solution]:
    """All (x, f(x)) with x >= domain floor and f(x) <= n, ascending in x."""
    _require_binary(eq)
    mode = SolutionMode.coerce(mode)
    out = []
    x = eq.domain_floor
    while True:
        y = eq.apply((x,))
        if y > n:
            break
        if not (mode is SolutionMode.DISTINCT and y == x):
            out.append(Solution((x,), y))
        x += 1
    return out


def solutions_linear(
    eq: Equation,
    n: int,
    mode=SolutionMode.DISTINCT,
    *,
    arity_cap: int = DEFAULT_ARITY_CAP,
    dedupe: bool = False,
) -> list[Solution]:
    """All (x_1..x_t, y) in [n] with y = sum(a_i x_i) + c.

    Tuples come out in lexicographic order of the inputs.  With ``dedupe``
    only one representative is kept among tuples that differ by permuting
    positions with equal coefficients (the non-decreasing one).
    """
    if eq.is_binary:
        raise TypeError(f"{eq} is not a general-linear equation")
    mode = SolutionMode.coerce(mode)
    a = eq.coeffs
    t = len(a)
    if t > arity_cap:
        raise ArityCapExceeded(f"{t} variables exceeds the arity cap {arity_cap}")
    c = eq.constant
    limit = n - c
    # smallest possible contribution of positions i.. (all x = 1)
    tail_min = [0] * (t + 1)
    for i in range(t - 1, -1, -1):
        tail_min[i] = tail_min[i + 1] + a[i]

    out = []
    xs = [0] * t
    distinct = mode is SolutionMode.DISTINCT

    def rec(i, partial):
        if i == t:
            y = partial + c
            vals = xs + [y]
            if distinct and len(set(vals)) != len(vals):
                return
            out.append(Solution(tuple(xs), y))
            return
        lo = 1
        if dedupe:
            for j in range(i):
                if a[j] == a[i]:
                    lo = max(lo, xs[j])
        x = lo
        while partial + a[i] * x + tail_min[i + 1] <= limit:
            xs[i] = x
            rec(i + 1, partial + a[i] * x)
            x += 1

    if limit >= tail_min[0]:
        rec(0, 0)
    return out


def solutions(eq: Equation, n: int, mode=SolutionMode.DISTINCT, **kwargs) -> list[Solution]:
    """Dispatch to :func:`solutions_binary` or :func:`solutions_linear`."""
    if eq.is_binary:
        return solutions_binary(eq, n, mode)
    return solutions_linear(eq, n, mode, **kwargs)
