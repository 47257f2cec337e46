"""Exact computation of minimum cutset invariants on small lattices.

Two quantities are computed by iterative deepening on a shared
chain-hitting branch engine:

* h(n, m, l), the minimum width of a cutset, and
* g(n, m, l), the least k such that some cutset has at most k nodes on
  every level.

The decision subproblem "is there a cutset with objective <= target?" is
solved by branching on the lexicographically least maximal chain missed by
the current selection: any cutset must contain one of its nodes, so trying
each node (in ascending numeric order) is exhaustive.  The width objective
is maintained incrementally, one matching augmentation per added node; the
per-level objective keeps plain counters.  A visited-set skips selections
already proven infeasible at the current target, which only removes work
(feasible selections are never recorded).

Searches are exact or fail loudly: a budget interruption yields bounds or
UNKNOWN, never a wrong value, and every EXACT result re-verifies its
witness before returning.  The engine is sequential and fully
deterministic, so returned values and witnesses are reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from . import analysis, formulas
from .analysis import InclusionMatcher, missed_chain_masks
from .chains import Chain
from .constructions import Cutset, method_counts
from .errors import DomainError
from .lattice import NodeSet, TruncatedLattice, level_masks

DEFAULT_NODE_CAP = 64


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for one exact search call.

    ``wall_clock_limit`` is in seconds.  Node budgets make interruption
    deterministic; wall-clock limits are a safety net.
    """

    max_nodes_expanded: int = 2_000_000
    wall_clock_limit: float = 120.0

    def __post_init__(self) -> None:
        if self.max_nodes_expanded <= 0 or self.wall_clock_limit <= 0:
            raise DomainError("budget limits must be positive")


class SearchStatus(Enum):
    EXACT = "EXACT"
    BOUNDS = "LOWER_AND_UPPER_BOUNDS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exact search: a value with witness, or bounds.

    EXACT implies lower == value == upper and a witness that has been
    re-verified (it is a cutset and attains the value).  The witness
    stores the selected nodes as singleton chains; it need not admit a
    saturated chain cover of minimum size.
    """

    status: SearchStatus
    value: Optional[int]
    lower: int
    upper: int
    witness: Optional[Cutset]
    nodes_expanded: int
    elapsed: float

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "witness": None if self.witness is None else self.witness.to_json(),
            "stats": {
                "nodes_expanded": self.nodes_expanded,
                "elapsed_seconds": round(self.elapsed, 6),
            },
        }


class _Exhausted(Exception):
    pass


class _Budget:
    __slots__ = ("max_nodes", "deadline", "expanded")

    def __init__(self, budget: SearchBudget) -> None:
        self.max_nodes = budget.max_nodes_expanded
        self.deadline = time.monotonic() + budget.wall_clock_limit
        self.expanded = 0

    def tick(self) -> None:
        self.expanded += 1
        if self.expanded > self.max_nodes or time.monotonic() > self.deadline:
            raise _Exhausted


class _WidthGoal:
    """Objective for h: width of the selection, via incremental matching."""

    def __init__(self, m: int, n_levels: int) -> None:
        self._matcher = InclusionMatcher()

    def push(self, v: int) -> int:
        self._matcher.push(v)
        return self._matcher.width

    def pop(self, v: int) -> None:
        self._matcher.pop()


class _PerLevelGoal:
    """Objective for g: the count on the level just touched."""

    def __init__(self, m: int, n_levels: int) -> None:
        self._m = m
        self._counts = [0] * n_levels

    def push(self, v: int) -> int:
        i = v.bit_count() - self._m
        self._counts[i] += 1
        return self._counts[i]

    def pop(self, v: int) -> None:
        self._counts[v.bit_count() - self._m] -= 1


def _decide(levels, n, m, limit, goal_cls, bud, min_level, forced) -> Optional[list[int]]:
    """Find a selection meeting every maximal chain with objective <= limit.

    Branches on the least missed maximal chain; candidates below
    ``min_level`` are skipped and ``forced`` (if given) is preselected,
    which the symmetry wrapper uses to pin the minimum occupied level.
    Returns the selection in insertion order, or None when provably
    infeasible within the restricted class.
    """
    goal = goal_cls(m, len(levels))
    selected: set[int] = set()
    order: list[int] = []
    seen: set[frozenset[int]] = set()

    if forced is not None:
        goal.push(forced)
        selected.add(forced)
        order.append(forced)

    def dfs() -> bool:
        bud.tick()
        key = frozenset(selected)
        if key in seen:
            return False
        path = missed_chain_masks(levels, n, selected)
        if path is None:
            return True
        seen.add(key)
        for v in path:
            if v.bit_count() < min_level:
                continue
            metric = goal.push(v)
            selected.add(v)
            order.append(v)
            if metric <= limit and dfs():
                return True
            goal.pop(v)
            selected.remove(v)
            order.pop()
        return False

    return order if dfs() else None


def _decide_any(levels, n, m, limit, goal_cls, bud, symmetry) -> Optional[list[int]]:
    if not symmetry:
        return _decide(levels, n, m, limit, goal_cls, bud, min_level=m, forced=None)
    # Up to relabeling of [n], some optimal selection contains the set
    # {1..i} where i is its minimum occupied level; try each i in turn.
    l = m + len(levels) - 1
    for i0 in range(m, l + 1):
        sel = _decide(
            levels, n, m, limit, goal_cls, bud, min_level=i0, forced=(1 << i0) - 1
        )
        if sel is not None:
            return sel
    return None


def _witness(n: int, m: int, l: int, selection: list[int]) -> Cutset:
    lat = TruncatedLattice(n, m, l)
    return Cutset(lat, tuple(Chain((NodeSet(v, n),)) for v in sorted(selection)))


def _run(n, m, l, budget, node_cap, symmetry, goal_cls, verify) -> SearchResult:
    if not 0 <= m <= l <= n - m:
        raise DomainError(f"need 0 <= m <= l <= n - m, got n={n} m={m} l={l}")
    node_count = TruncatedLattice(n, m, l).node_count
    if node_count > node_cap:
        raise DomainError(
            f"lattice has {node_count} nodes, above the cap {node_cap}; "
            "raise the cap to search anyway"
        )
    levels = [level_masks(n, i) for i in range(m, l + 1)]
    bud = _Budget(budget or SearchBudget())
    start = time.monotonic()
    # Any single level between m and l is itself a cutset, which bounds both
    # objectives by the smaller of the two extreme level sizes.
    trivial_upper = min(len(levels[0]), len(levels[-1]))
    target = 1
    try:
        while target <= trivial_upper:
            selection = _decide_any(levels, n, m, target, goal_cls, bud, symmetry)
            if selection is not None:
                wit = _witness(n, m, l, selection)
                verify(wit, target)
                elapsed = time.monotonic() - start
                return SearchResult(
                    SearchStatus.EXACT, target, target, target, wit, bud.expanded, elapsed
                )
            target += 1
        raise AssertionError("deepening exceeded the trivial upper bound")
    except _Exhausted:
        elapsed = time.monotonic() - start
        status = SearchStatus.BOUNDS if target > 1 else SearchStatus.UNKNOWN
        return SearchResult(
            status, None, target, trivial_upper, None, bud.expanded, elapsed
        )


def exact_min_width(
    n: int,
    m: int,
    l: int,
    budget: Optional[SearchBudget] = None,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    symmetry: bool = False,
) -> SearchResult:
    """Exact h(n, m, l): the minimum width over all cutsets of levels m..l.

    Iterative deepening on the target width, starting from 1.  ``symmetry``
    enables canonical-selection pruning (the minimum occupied level must
    carry the set {1..i}); it can only speed the search up, never change
    the value.
    """

    def verify(wit: Cutset, value: int) -> None:
        nodes = wit.nodes()
        assert analysis.is_cutset(wit.lat, nodes).is_cutset
        assert analysis.width(nodes).width == value

    return _run(n, m, l, budget, node_cap, symmetry, _WidthGoal, verify)


def exact_min_per_level(
    n: int,
    m: int,
    l: int,
    budget: Optional[SearchBudget] = None,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    symmetry: bool = False,
) -> SearchResult:
    """Exact g(n, m, l): least k with a cutset holding <= k nodes per level."""

    def verify(wit: Cutset, value: int) -> None:
        nodes = wit.nodes()
        assert analysis.is_cutset(wit.lat, nodes).is_cutset
        per_level = [0] * (l - m + 1)
        for a in nodes:
            per_level[a.level - m] += 1
        assert max(per_level) == value

    return _run(n, m, l, budget, node_cap, symmetry, _PerLevelGoal, verify)


@dataclass(frozen=True)
class ConjectureReport:
    """Side-by-side values for one instance; draws no conclusions.

    ``equal_flags`` entries are None whenever a comparison is undecidable
    (a search did not reach EXACT, or no construction applies).  The
    conjectured formulas are stated for n much larger than m, so searched
    values on small instances may legitimately differ from them.
    ``symmetric_g_value`` carries the conjectured symmetric-case bound
    when l = n - m, as an open comparison only.
    """

    n: int
    m: int
    l: int
    c: int
    conjectured_h: int
    searched_h: SearchResult
    searched_g: SearchResult
    construction_upper_bound: Optional[int]
    symmetric_g_value: Optional[int]
    equal_flags: dict

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "l": self.l,
            "c": self.c,
            "conjectured_h": self.conjectured_h,
            "searched_h": self.searched_h.to_json(),
            "searched_g": self.searched_g.to_json(),
            "construction_upper_bound": self.construction_upper_bound,
            "symmetric_g_value": self.symmetric_g_value,
            "equal_flags": dict(self.equal_flags),
        }


def _maybe_eq(a: Optional[int], b: Optional[int]) -> Optional[bool]:
    if a is None or b is None:
        return None
    return a == b


def conjecture_report(
    n: int,
    m: int,
    l: int,
    budget: Optional[SearchBudget] = None,
    *,
    node_cap: int = DEFAULT_NODE_CAP,
    symmetry: bool = False,
) -> ConjectureReport:
    """Compare conjectured, searched, and constructed values on one instance."""
    conjectured = formulas.conjectured_min_width(n, m, l)
    searched_h = exact_min_width(n, m, l, budget, node_cap=node_cap, symmetry=symmetry)
    searched_g = exact_min_per_level(n, m, l, budget, node_cap=node_cap, symmetry=symmetry)
    counts = method_counts(n, m, l)
    upper = min(counts.values()) if counts else None
    symmetric = (
        formulas.symmetric_per_level_bound(n, m) if l == n - m and n >= 1 else None
    )
    flags = {
        "h_matches_conjectured": _maybe_eq(searched_h.value, conjectured),
        "g_matches_h": _maybe_eq(searched_g.value, searched_h.value),
        "construction_matches_conjectured": _maybe_eq(upper, conjectured),
    }
    flags["all_equal"] = (
        None if any(v is None for v in flags.values()) else all(flags.values())
    )
    return ConjectureReport(
        n=n,
        m=m,
        l=l,
        c=l - m + 1,
        conjectured_h=conjectured,
        searched_h=searched_h,
        searched_g=searched_g,
        construction_upper_bound=upper,
        symmetric_g_value=symmetric,
        equal_flags=flags,
    )
