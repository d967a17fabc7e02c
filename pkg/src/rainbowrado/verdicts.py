"""Results of Rado / Gallai-Rado number computations."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from .colorings import Coloring
from .equations import SolutionMode

__all__ = ["NotExistReason", "Value", "NotExist", "Unknown", "Verdict", "verdict_to_json"]


class NotExistReason(str, Enum):
    NO_LAMBDA_MIN = "no-lambda-min"
    PARITY_OBSTRUCTION = "parity-obstruction"
    BLOCK_COLORING = "block-coloring"
    NO_X_MIN = "no-x-min"
    NO_SOLUTIONS = "no-solutions"


@dataclass(frozen=True)
class Value:
    """The number exists and equals ``N``.

    ``avoider`` is an exact coloring of [N-1] with neither forbidden
    structure, when one exists.
    """

    N: int
    avoider: Coloring | None = None
    route: str = ""
    mode: SolutionMode = SolutionMode.DISTINCT

    kind = "value"


@dataclass(frozen=True)
class NotExist:
    """Proven non-existence; ``rule`` is an infinite coloring witnessing it.

    ``rule`` exposes ``color(m)``, ``coloring(n)``, ``k`` and ``describe()``.
    """

    reason: NotExistReason
    rule: Any
    route: str = ""
    mode: SolutionMode = SolutionMode.DISTINCT

    kind = "notexist"


@dataclass(frozen=True)
class Unknown:
    """Undecided; ``bound`` is the largest n examined, if any search ran."""

    bound: int | None = None
    route: str = ""
    mode: SolutionMode = SolutionMode.DISTINCT
    note: str = ""
    largest_avoider: Coloring | None = None
    report: Any = None

    kind = "unknown"


Verdict = Value | NotExist | Unknown


def verdict_to_json(v: Verdict) -> dict:
    out = {"kind": v.kind, "N": None, "witness": None, "mode": SolutionMode(v.mode).value, "route": v.route}
    if isinstance(v, Value):
        out["N"] = v.N
        out["witness"] = v.avoider.to_json() if v.avoider is not None else None
    elif isinstance(v, NotExist):
        out["reason"] = v.reason.value
        out["witness"] = v.rule.to_json()
    else:
        out["bound"] = v.bound
        out["note"] = v.note
        if v.largest_avoider is not None:
            out["witness"] = v.largest_avoider.to_json()
        if v.report is not None:
            out["report"] = v.report.to_json()
    return out
