"""Brute-force ground truth: exhaustive and backtracking searches over exact
colorings of [n], straight from the quantifier definitions.

Everything here is independent of the closed forms in :mod:`rainbow` and
:mod:`gallai_rado`; the only shared pieces are solution enumeration and the
coloring type.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .colorings import (
    Coloring,
    enumerate_exact_colorings,
    find_monochromatic,
    find_rainbow,
    stirling2,
)
from .eqdsl import Equation
from .equations import Solution, SolutionMode, solutions
from .errors import BudgetExceeded, RangeError
from .lambda_classes import BlockColoring, ResidueColoring
from .verdicts import NotExist, NotExistReason, Unknown, Value

__all__ = [
    "SearchConfig",
    "SearchStats",
    "AvoiderReport",
    "avoider_search",
    "oracle_rb",
    "oracle_rado",
    "oracle_gr",
    "DEFAULT_BUDGET",
]

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class SearchConfig:
    n_max: int = 20
    mode: SolutionMode = SolutionMode.DISTINCT
    parallelism: int = 1
    strategy: str = "backtrack"
    budget: int = DEFAULT_BUDGET
    split_depth: int = 8

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.strategy not in ("backtrack", "enumerate"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        object.__setattr__(self, "mode", SolutionMode.coerce(self.mode))


@dataclass
class SearchStats:
    """Accumulates node counts across searches."""

    nodes: int = 0
    searches: int = 0


def _resolve(config, overrides) -> SearchConfig:
    config = config or SearchConfig()
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return replace(config, **overrides) if overrides else config


# -- backtracking engine -------------------------------------------------------


def _index_by_max(n, constraints, mode):
    table = [[] for _ in range(n + 1)]
    for sol in constraints:
        vals = tuple(sol.values) if isinstance(sol, Solution) else tuple(sol)
        if max(vals) > n or min(vals) < 1:
            raise ValueError(f"constraint {vals} is outside [1, {n}]")
        if mode is SolutionMode.DISTINCT and len(set(vals)) != len(vals):
            continue
        table[max(vals)].append(vals)
    return table


def _backtrack(n, k, rainbow_tab, mono_tab, prefix, budget, stop_depth=None):
    """Restricted-growth DFS over colorings of [n] with exactly k colors.

    Returns ``(result, nodes)``.  Without ``stop_depth`` the result is the
    first avoider (tuple of colors) or None.  With ``stop_depth`` the search
    stops at that many colored elements and returns every valid prefix.
    """
    col = [0] * (n + 1)
    nodes = 0
    found = []

    def ok(m, c):
        for vals in mono_tab[m]:
            if all(col[v] == c for v in vals):
                return False
        for vals in rainbow_tab[m]:
            if len({col[v] for v in vals}) == len(vals):
                return False
        return True

    def rec(m, used):
        nonlocal nodes
        if m > n or (stop_depth is not None and m > stop_depth):
            if used == k or stop_depth is not None:
                found.append(tuple(col[1:m]))
                return stop_depth is None
            return False
        if k - used > n - m + 1:
            return False
        for c in range(1, min(used + 1, k) + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"search exceeded {budget} nodes (n={n}, k={k})", nodes)
            col[m] = c
            if ok(m, c) and rec(m + 1, max(used, c)):
                return True
        col[m] = 0
        return False

    used = 0
    for m, c in enumerate(prefix, start=1):
        col[m] = c
        used = max(used, c)
    rec(len(prefix) + 1, used)
    if stop_depth is not None:
        return found, nodes
    return (found[0] if found else None), nodes


def _subtree_worker(args):
    return _backtrack(*args)


def avoider_search(
    n: int,
    k: int,
    rainbow_constraints=(),
    mono_constraints=(),
    mode=SolutionMode.DISTINCT,
    *,
    budget: int = DEFAULT_BUDGET,
    strategy: str = "backtrack",
    jobs: int = 1,
    split_depth: int = 8,
    stats: SearchStats | None = None,
) -> Coloring | None:
    """First exact k-coloring of [n] (in restricted-growth order) with no
    rainbow ``rainbow_constraints`` tuple and no monochromatic
    ``mono_constraints`` tuple, or ``None``.

    Constraints are :class:`Solution` objects or plain value tuples inside
    [n].  In distinct mode tuples with a repeated value are dropped.
    """
    if not 1 <= k <= n:
        raise RangeError(f"need 1 <= k <= n, got k={k}, n={n}")
    mode = SolutionMode.coerce(mode)
    rainbow_constraints = list(rainbow_constraints)
    mono_constraints = list(mono_constraints)

    if strategy == "enumerate":
        total = stirling2(n, k)
        if total > budget:
            raise BudgetExceeded(f"S2({n},{k}) = {total} colorings exceeds budget {budget}", 0)
        rb = [_as_solution(s) for s in rainbow_constraints]
        mono = [_as_solution(s) for s in mono_constraints]
        if mode is SolutionMode.DISTINCT:
            rb = [s for s in rb if len(set(s.values)) == len(s.values)]
            mono = [s for s in mono if len(set(s.values)) == len(s.values)]
        nodes = 0
        result = None
        for col in enumerate_exact_colorings(n, k):
            nodes += 1
            if find_rainbow(col, rb) is None and find_monochromatic(col, mono) is None:
                result = col
                break
        _record(stats, nodes)
        return result

    rainbow_tab = _index_by_max(n, rainbow_constraints, mode)
    mono_tab = _index_by_max(n, mono_constraints, mode)

    if jobs <= 1 or n <= split_depth:
        colors, nodes = _backtrack(n, k, rainbow_tab, mono_tab, (), budget)
        _record(stats, nodes)
        return Coloring(n, k, colors) if colors is not None else None

    prefixes, nodes = _backtrack(n, k, rainbow_tab, mono_tab, (), budget, stop_depth=split_depth)
    tasks = [(n, k, rainbow_tab, mono_tab, p, budget) for p in prefixes]
    result = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so the lowest prefix wins
        for colors, sub_nodes in pool.map(_subtree_worker, tasks):
            nodes += sub_nodes
            if colors is not None and result is None:
                result = colors
    _record(stats, nodes)
    if nodes > budget:
        raise BudgetExceeded(f"parallel search used {nodes} nodes, budget {budget}", nodes)
    return Coloring(n, k, result) if result is not None else None


def _as_solution(s) -> Solution:
    if isinstance(s, Solution):
        return s
    vals = tuple(s)
    return Solution(vals[:-1], vals[-1])


def _record(stats, nodes):
    if stats is not None:
        stats.nodes += nodes
        stats.searches += 1


def _search_kwargs(cfg: SearchConfig, stats):
    return dict(
        budget=cfg.budget,
        strategy=cfg.strategy,
        jobs=cfg.parallelism,
        split_depth=cfg.split_depth,
        stats=stats,
    )


# -- oracles -------------------------------------------------------------------


def oracle_rb(
    n: int,
    eq: Equation,
    mode=None,
    config: SearchConfig | None = None,
    stats: SearchStats | None = None,
) -> int:
    """Least k such that every exact k-coloring of [n] has a rainbow solution.

    Ascends k from 2; merging two colors never creates a rainbow solution,
    so the first k without an avoider is the answer.
    """
    cfg = _resolve(config, {"mode": mode})
    if eq.is_binary:
        d = eq.domain_floor
        if n < eq.apply((d,)):
            raise RangeError(f"n={n} < f({d}); no solutions in [n]")
    sols = solutions(eq, n, cfg.mode)
    if not sols:
        raise RangeError(f"{eq} has no solutions in [{n}]")
    for k in range(2, n + 1):
        if avoider_search(n, k, sols, (), cfg.mode, **_search_kwargs(cfg, stats)) is None:
            return k
    # every exact coloring, including the all-distinct one, avoids rainbows
    return n + 1


def _affine_block_rule(eq: Equation):
    params = eq.affine_params()
    if params is None or params == (1, 0):
        return None
    return BlockColoring(*params)


def oracle_rado(
    k: int,
    eq: Equation,
    mode=None,
    n_max: int | None = None,
    config: SearchConfig | None = None,
    stats: SearchStats | None = None,
):
    """Rado number by direct search: the least n in [k, n_max] such that no
    exact k-coloring of [n] avoids monochromatic solutions.

    y = a*x + b short-circuits to non-existence via the alternating block
    coloring.  Pure search never proves non-existence: past ``n_max`` the
    result is :class:`Unknown` carrying the largest avoider found.
    Repeated values are allowed unless ``mode`` or ``config`` says otherwise.
    """
    if k < 2:
        raise RangeError("k must be >= 2")
    if config is None and mode is None:
        mode = SolutionMode.REPEATS
    cfg = _resolve(config, {"mode": mode, "n_max": n_max})
    rule = _affine_block_rule(eq) if eq.is_binary else None
    if rule is not None:
        return NotExist(NotExistReason.BLOCK_COLORING, rule, route="block-coloring", mode=cfg.mode)

    last = None
    for n in range(k, cfg.n_max + 1):
        sols = solutions(eq, n, cfg.mode)
        avoider = avoider_search(n, k, (), sols, cfg.mode, **_search_kwargs(cfg, stats))
        log.debug("rado k=%d n=%d avoider=%s", k, n, avoider is not None)
        if avoider is None:
            return Value(n, last, route="oracle-search", mode=cfg.mode)
        last = avoider
    return Unknown(cfg.n_max, route="oracle-search", mode=cfg.mode, largest_avoider=last,
                   note=f"avoiders exist for every n <= {cfg.n_max}")


@dataclass
class AvoiderReport:
    """Per-n avoider existence for a Gallai-Rado question.

    ``candidate`` is (largest n with an avoider) + 1 when avoider existence
    is downward closed over the scanned range and some n has none; it is
    ``None`` otherwise.
    """

    k: int
    n_min: int
    n_max: int
    avoiders: dict[int, Coloring | None] = field(default_factory=dict)
    nodes: int = 0
    mode: SolutionMode = SolutionMode.DISTINCT

    @property
    def with_avoider(self) -> list[int]:
        return [n for n, c in self.avoiders.items() if c is not None]

    @property
    def monotone(self) -> bool:
        have = self.with_avoider
        return have == list(range(self.n_min, self.n_min + len(have)))

    @property
    def candidate(self) -> int | None:
        have = self.with_avoider
        if not self.monotone:
            return None
        top = self.n_min + len(have) - 1
        if top >= self.n_max:
            return None
        return max(top + 1, self.n_min)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "mode": self.mode.value,
            "candidate": self.candidate,
            "monotone": self.monotone,
            "nodes": self.nodes,
            "avoiders": {str(n): (c.to_json() if c else None) for n, c in self.avoiders.items()},
        }


def oracle_gr(
    k: int,
    rainbow_eq: Equation | None,
    mono_eq: Equation,
    mode=None,
    n_max: int | None = None,
    config: SearchConfig | None = None,
    collapse: bool = False,
    stats: SearchStats | None = None,
) -> AvoiderReport:
    """For each n in [k, n_max], search an exact k-coloring of [n] with no
    rainbow ``rainbow_eq`` solution and no monochromatic ``mono_eq`` one.

    ``collapse=True`` (only for rainbow y = x + k) checks just the residue
    coloring modulo k, the unique candidate structure; by default the full
    search runs.
    """
    if k < 2:
        raise RangeError("k must be >= 2")
    cfg = _resolve(config, {"mode": mode, "n_max": n_max})
    residue = None
    if collapse:
        params = rainbow_eq.affine_params() if rainbow_eq is not None else None
        if params != (1, k):
            raise ValueError("collapse requires rainbow equation y = x + k")
        residue = ResidueColoring(k)

    local = SearchStats()
    report = AvoiderReport(k, k, cfg.n_max, mode=cfg.mode)
    for n in range(k, cfg.n_max + 1):
        rb = solutions(rainbow_eq, n, cfg.mode) if rainbow_eq is not None else []
        mono = solutions(mono_eq, n, cfg.mode)
        if residue is not None:
            col = residue.coloring(n)
            local.nodes += 1
            ok = find_rainbow(col, rb) is None and find_monochromatic(col, mono) is None
            report.avoiders[n] = col if ok else None
        else:
            report.avoiders[n] = avoider_search(n, k, rb, mono, cfg.mode, **_search_kwargs(cfg, local))
    report.nodes = local.nodes
    if stats is not None:
        stats.nodes += local.nodes
        stats.searches += local.searches
    if not report.monotone:
        log.warning("avoider existence is not downward closed for k=%d on [%d, %d]", k, k, cfg.n_max)
    return report
