"""Closed-form Gallai-Rado numbers GR_k(y = x + b : E) and Rado non-existence.

With k = b colors, a coloring of [n] without rainbow solutions of y = x + b
is forced to be the residue coloring modulo b, so each question reduces to
finding the smallest monochromatic solution of E inside one residue class.
All values assume distinct-values solution semantics.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eqdsl import Equation, EquationKind, ParsedEquation, polynomial, validate
from .colorings import is_monochromatic, is_rainbow
from .equations import SolutionMode, solutions
from .errors import UnsupportedRainbowEquation
from .lambda_classes import BlockColoring, ResidueColoring
from .oracle import SearchConfig, oracle_gr, oracle_rado
from .verdicts import NotExist, NotExistReason, Unknown, Value

__all__ = [
    "lambda_min",
    "gr_linear",
    "gr_power2",
    "x_min",
    "gr_binary",
    "gr_dispatch",
    "NonexistenceReport",
    "rado_nonexistence_check",
    "power_equation",
    "verify_notexist",
]

DISTINCT = SolutionMode.DISTINCT


def _residue_value(N: int, b: int, route: str) -> Value | Unknown:
    # exactness: a b-coloring of [N-1] needs N - 1 >= b elements
    if N < b:
        return Unknown(
            route=route,
            note=f"closed form gives {N} < k={b}; below the exactness floor",
        )
    avoider = ResidueColoring(b).coloring(N - 1) if N - 1 >= b else None
    return Value(N, avoider, route=route, mode=DISTINCT)


def lambda_min(a_vec, c: int, b: int) -> int | None:
    """Least lam in [b] with (sum(a) - 1) * lam + c divisible by b."""
    s = sum(a_vec)
    for lam in range(1, b + 1):
        if (s * lam + c - lam) % b == 0:
            return lam
    return None


def gr_linear(b: int, a_vec, c: int = 0, *, sort_coefficients: bool = True):
    """GR_b(y = x + b : y = sum(a_i x_i) + c).

    The smallest monochromatic solution in residue class lam uses the t
    smallest class members lam, lam + b, ..., each once.  Pairing the
    smallest member with the largest coefficient minimises y, so the
    coefficients are sorted in decreasing order first; pass
    ``sort_coefficients=False`` to pair them in the given order instead.

    y = x1 (t = 1, a = 1, c = 0) has no distinct-value solution at all, so
    the number does not exist.
    """
    a_vec = tuple(a_vec)
    if b < 2 or not a_vec or min(a_vec) < 1 or c < 0:
        raise ValueError("need b >= 2, t >= 1, all a_i >= 1, c >= 0")
    rule = ResidueColoring(b)
    if a_vec == (1,) and c == 0:
        return NotExist(NotExistReason.NO_SOLUTIONS, rule, route="linear-residue", mode=DISTINCT)
    lam = lambda_min(a_vec, c, b)
    if lam is None:
        return NotExist(NotExistReason.NO_LAMBDA_MIN, rule, route="linear-residue", mode=DISTINCT)
    coeffs = sorted(a_vec, reverse=True) if sort_coefficients else a_vec
    N = sum((lam + i * b) * a for i, a in enumerate(coeffs)) + c
    return _residue_value(N, b, "linear-residue")


class _ParityRule(ResidueColoring):
    def describe(self) -> str:
        return "odd numbers red, even numbers blue"


def gr_power2(a: int, b: int, c: int):
    """GR_2(y = x + 2 : y = a*x^c + b) by the parity trichotomy.

    Both odd: no parity class contains a solution, so it does not exist.
    Mixed parity: (1, a + b) is the first monochromatic solution.
    Both even: (2, a*2^c + b) is.
    """
    if a < 1 or b < 0 or c < 2:
        raise ValueError("need a >= 1, b >= 0, c >= 2")
    if a % 2 == 1 and b % 2 == 1:
        return NotExist(NotExistReason.PARITY_OBSTRUCTION, _ParityRule(2), route="power-parity", mode=DISTINCT)
    if (a + b) % 2 == 1:
        N = a + b
        if N < 2:
            # (a, b) = (1, 0): the only candidate (1, 1) has x = y
            return Unknown(
                route="power-parity",
                mode=DISTINCT,
                note="a+b=1 is below the exactness floor k=2 and (1,1) is not a distinct-value "
                "solution; see gr_binary over domain floor 2",
            )
        return _residue_value(N, 2, "power-parity")
    return _residue_value(a * 2**c + b, 2, "power-parity")


def x_min(eq: Equation, b: int) -> int | None:
    """Least admissible x with f(x) = x (mod b).

    For integer polynomials f(x + b) = f(x) (mod b), so one period starting
    at the domain floor decides existence; ``None`` is a proof of absence.
    """
    if not eq.is_binary:
        raise TypeError(f"{eq} is not a binary-function equation")
    if b < 2:
        raise ValueError("b must be >= 2")
    d = eq.domain_floor
    for x in range(d, d + b):
        if (eq.apply((x,)) - x) % b == 0:
            return x
    return None


def gr_binary(eq: Equation, b: int):
    """GR_b(y = x + b : y = f(x)) = f(x_min), or non-existence without x_min.

    Equations with f(1) = 1 are handled over their domain floor 2.
    """
    x = x_min(eq, b)
    rule = ResidueColoring(b)
    if x is None:
        return NotExist(NotExistReason.NO_X_MIN, rule, route="binary-residue", mode=DISTINCT)
    return _residue_value(eq.apply((x,)), b, "binary-residue")


def _rainbow_shift(rainbow_eq: ParsedEquation) -> int:
    """b for a rainbow equation y = x + b (b = 0 is y = x)."""
    if rainbow_eq.kind is EquationKind.BINARY and len(rainbow_eq.coeffs) == 2 and rainbow_eq.coeffs[1] == 1:
        return rainbow_eq.coeffs[0]
    raise UnsupportedRainbowEquation(f"rainbow equation must be y=x or y=x+b, got {rainbow_eq}")


def gr_dispatch(
    k: int,
    rainbow_eq: ParsedEquation,
    mono_eq: Equation,
    config: SearchConfig | None = None,
):
    """Route GR_k(rainbow : mono) to the applicable closed form or oracle.

    * y = x: no rainbow solution ever exists, so this is the Rado number,
      computed by :func:`oracle_rado` (repeats mode unless ``config`` says
      otherwise).
    * y = x + b with k >= b + 1: every exact k-coloring has a rainbow
      solution, so the value is k.
    * y = x + b with k = b: closed forms by the shape of ``mono_eq``.
    * y = x + b with 2 <= k < b: open; an oracle scan is attached to an
      :class:`Unknown`.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    b = _rainbow_shift(rainbow_eq)
    if b == 0:
        # a Rado question: repeated values are allowed unless configured otherwise
        return oracle_rado(k, mono_eq, config=config or SearchConfig(mode=SolutionMode.REPEATS))
    cfg = config or SearchConfig()
    if k >= b + 1:
        return Value(k, None, route="rainbow-forced", mode=cfg.mode)
    rainbow = validate(rainbow_eq) if not isinstance(rainbow_eq, Equation) else rainbow_eq
    if k == b:
        if not mono_eq.is_binary:
            return gr_linear(b, mono_eq.coeffs, mono_eq.constant)
        power = mono_eq.power_params()
        if b == 2 and power is not None and power[:2] != (1, 0):
            return gr_power2(*power)
        return gr_binary(mono_eq, b)
    report = oracle_gr(k, rainbow, mono_eq, config=cfg)
    return Unknown(
        cfg.n_max,
        route="oracle-open-problem",
        mode=cfg.mode,
        note=f"no closed form for 2 <= k < b; oracle candidate {report.candidate}",
        report=report,
    )


@dataclass(frozen=True)
class NonexistenceReport:
    a: int
    b: int
    n_max: int
    verified: bool
    counterexample: int | None
    rule: BlockColoring

    @property
    def message(self) -> str:
        if not self.verified:
            return f"block coloring fails at m={self.counterexample}"
        return (
            f"y={self.a}*x+{self.b} is not 2-regular (checked m <= {self.n_max}); "
            "splitting a color class of the block coloring gives a k-coloring of the "
            "positive integers without monochromatic solutions for every k >= 2, "
            "so R_k does not exist"
        )

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "n_max": self.n_max,
            "verified": self.verified,
            "counterexample": self.counterexample,
            "witness": self.rule.to_json(),
            "message": self.message,
        }


def rado_nonexistence_check(a: int, b: int, n_max: int = 10**4) -> NonexistenceReport:
    """Check that m and a*m + b get different block colors for all m <= n_max."""
    if (a, b) == (1, 0):
        raise ValueError("y=x is trivially regular; no block coloring exists")
    rule = BlockColoring(a, b)
    for m in range(1, n_max + 1):
        if rule.color(m) == rule.color(a * m + b):
            return NonexistenceReport(a, b, n_max, False, m, rule)
    return NonexistenceReport(a, b, n_max, True, None, rule)


def power_equation(a: int, b: int, c: int) -> Equation:
    """Validated y = a*x^c + b."""
    coeffs = [0] * (c + 1)
    coeffs[0] = b
    coeffs[c] += a
    return polynomial(*coeffs)



def verify_notexist(rule, rainbow_eq, mono_eq, mode=SolutionMode.DISTINCT, n_max: int = 200):
    """First n <= n_max where ``rule`` restricted to [n] fails, else ``None``.

    Failing means: the restriction is exact with ``rule.k`` colors but has a
    rainbow ``rainbow_eq`` solution or a monochromatic ``mono_eq`` solution.
    Values of n too small for all ``rule.k`` colors to appear are skipped.
    Each n only needs the solutions whose largest value is n.
    """
    by_max = {}
    for eq, kind in ((rainbow_eq, "rainbow"), (mono_eq, "mono")):
        if eq is None:
            continue
        for sol in solutions(eq, n_max, mode):
            by_max.setdefault(max(sol.values), []).append((kind, sol.values))
    col = rule.coloring(n_max)
    seen = set()
    exact_from = None
    first_bad = None
    for n in range(1, n_max + 1):
        seen.add(col.color(n))
        if exact_from is None and len(seen) == rule.k:
            exact_from = n
        if first_bad is None:
            for kind, vals in by_max.get(n, ()):
                if is_rainbow(col, vals) if kind == "rainbow" else is_monochromatic(col, vals):
                    first_bad = n
                    break
    if first_bad is None or exact_from is None:
        return None
    # every larger [n] contains the offending solution too
    return max(first_bad, exact_from)
