"""Verifiers and measures: cutset membership and antichain width.

Width is computed through the classical reduction: over a finite family S
of subsets, inclusion is a transitive order, so the minimum number of
chains covering S equals |S| minus a maximum matching in the bipartite
graph with a lower and an upper copy of S and an edge u -> v whenever
u is a proper subset of v.  By Dilworth's theorem that chain count equals
the width, and Koenig's theorem turns the matching into an explicit
maximum antichain.  Both certificates (antichain and chain cover) are
returned and re-checked on every call.

Cutset membership uses a level-by-level reachability sweep: a node is
"alive" when it is unselected and reachable from an unselected bottom node
through unselected covers.  The selection is a cutset exactly when nothing
at the top level is alive; otherwise the lexicographically least alive
maximal chain is reconstructed as the counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .chains import Chain
from .errors import DomainError
from .lattice import NodeSet, TruncatedLattice, full_mask, level_masks

_MISSING = object()


@dataclass(frozen=True)
class WidthReport:
    """Width of a node family with both Dilworth certificates attached."""

    width: int
    antichain_witness: tuple[NodeSet, ...]
    chain_cover: tuple[tuple[NodeSet, ...], ...]

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "antichain": [a.to_json() for a in self.antichain_witness],
            "chain_cover": [[a.to_json() for a in seq] for seq in self.chain_cover],
        }


@dataclass(frozen=True)
class CutsetReport:
    is_cutset: bool
    missed_chain: Optional[Chain]

    def to_json(self) -> dict:
        out: dict = {"is_cutset": self.is_cutset}
        if self.missed_chain is not None:
            out["missed_chain"] = self.missed_chain.to_json()
        return out


class InclusionMatcher:
    """Maximum matching on the strict-inclusion bipartite graph, with undo.

    Nodes are bit-vector masks over a shared ground set; push() adds one
    (distinct) mask and restores maximality by augmenting from the new
    node's two copies only, pop() reverts the most recent push.  At any
    moment ``width`` is len(nodes) minus the matching size, i.e. the width
    of the current set.  Pushes and pops must nest like a stack.

    Adjacency lists are kept in insertion order, which fixes the
    augmenting-path search order and therefore the matching itself; the
    width value is independent of insertion order.
    """

    def __init__(self) -> None:
        self.nodes: list[int] = []
        self.above: dict[int, list[int]] = {}
        self.below: dict[int, list[int]] = {}
        self.pair_up: dict[int, int] = {}
        self.pair_down: dict[int, int] = {}
        self._trail: list[list[tuple]] = []

    @property
    def width(self) -> int:
        return len(self.nodes) - len(self.pair_up)

    def push(self, v: int) -> None:
        ups: list[int] = []
        downs: list[int] = []
        for u in self.nodes:
            if u & ~v == 0:
                downs.append(u)
                self.above[u].append(v)
            elif v & ~u == 0:
                ups.append(u)
                self.below[u].append(v)
        self.above[v] = ups
        self.below[v] = downs
        self.nodes.append(v)
        log: list[tuple] = []
        self._augment_lower(v, log)
        if v not in self.pair_down:
            self._augment_upper(v, log)
        self._trail.append(log)

    def pop(self) -> None:
        v = self.nodes.pop()
        for kind, key, old in reversed(self._trail.pop()):
            d = self.pair_up if kind == 0 else self.pair_down
            if old is _MISSING:
                del d[key]
            else:
                d[key] = old
        for u in self.below[v]:
            self.above[u].pop()
        for u in self.above[v]:
            self.below[u].pop()
        del self.above[v]
        del self.below[v]

    def _record_pair(self, u: int, w: int, log: list[tuple]) -> None:
        log.append((0, u, self.pair_up.get(u, _MISSING)))
        log.append((1, w, self.pair_down.get(w, _MISSING)))
        self.pair_up[u] = w
        self.pair_down[w] = u

    def _augment_lower(self, u0: int, log: list[tuple]) -> bool:
        # Alternating DFS from the lower copy of u0 to any unmatched upper.
        visited: set[int] = set()
        parent: dict[int, int] = {}
        stack: list[tuple[int, Iterator[int]]] = [(u0, iter(self.above[u0]))]
        while stack:
            u, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                continue
            if w in visited:
                continue
            visited.add(w)
            parent[w] = u
            mate = self.pair_down.get(w)
            if mate is None:
                while True:
                    u = parent[w]
                    old = self.pair_up.get(u)
                    self._record_pair(u, w, log)
                    if old is None:
                        return True
                    w = old
            stack.append((mate, iter(self.above[mate])))
        return False

    def _augment_upper(self, w0: int, log: list[tuple]) -> bool:
        visited: set[int] = set()
        parent: dict[int, int] = {}
        stack: list[tuple[int, Iterator[int]]] = [(w0, iter(self.below[w0]))]
        while stack:
            w, it = stack[-1]
            u = next(it, None)
            if u is None:
                stack.pop()
                continue
            if u in visited:
                continue
            visited.add(u)
            parent[u] = w
            mate = self.pair_up.get(u)
            if mate is None:
                while True:
                    w = parent[u]
                    old = self.pair_down.get(w)
                    self._record_pair(u, w, log)
                    if old is None:
                        return True
                    u = old
            stack.append((mate, iter(self.below[mate])))
        return False


def _shared_ground(nodes: Iterable[NodeSet]) -> tuple[list[int], int]:
    masks: set[int] = set()
    n = -1
    for a in nodes:
        if n == -1:
            n = a.n
        elif a.n != n:
            raise DomainError("nodes mix ground sizes")
        masks.add(a.bits)
    return sorted(masks), max(n, 0)


def width(nodes: Iterable[NodeSet]) -> WidthReport:
    """Width of a finite family of subsets, with certificates.

    Returns the size of the largest antichain, an antichain of that size,
    and a partition of the input into that many ascending runs.  The two
    certificate sizes are equal by Dilworth's theorem; the equality and
    the certificates themselves are re-verified before returning.
    """
    masks, n = _shared_ground(nodes)
    matcher = InclusionMatcher()
    for v in masks:
        matcher.push(v)
    w = matcher.width

    # Koenig: alternate from unmatched lower copies; the antichain is the
    # set of nodes whose lower copy is reached and upper copy is not.
    z_low = {u for u in masks if u not in matcher.pair_up}
    z_up: set[int] = set()
    stack = sorted(z_low)
    while stack:
        u = stack.pop()
        for x in matcher.above[u]:
            if x in z_up:
                continue
            z_up.add(x)
            mate = matcher.pair_down.get(x)
            if mate is not None and mate not in z_low:
                z_low.add(mate)
                stack.append(mate)
    antichain = [u for u in masks if u in z_low and u not in z_up]

    heads = [u for u in masks if u not in matcher.pair_down]
    cover: list[tuple[int, ...]] = []
    for h in heads:
        seq = [h]
        while seq[-1] in matcher.pair_up:
            seq.append(matcher.pair_up[seq[-1]])
        cover.append(tuple(seq))

    assert len(antichain) == w == len(cover)
    assert sorted(x for seq in cover for x in seq) == masks
    for i, a in enumerate(antichain):
        for b in antichain[:i]:
            assert a & ~b and b & ~a

    return WidthReport(
        width=w,
        antichain_witness=tuple(NodeSet(u, n) for u in antichain),
        chain_cover=tuple(tuple(NodeSet(x, n) for x in seq) for seq in cover),
    )


def is_antichain(nodes: Iterable[NodeSet]) -> bool:
    """True when no member properly contains another."""
    masks, _ = _shared_ground(nodes)
    for i, a in enumerate(masks):
        for b in masks[:i]:
            if a & ~b == 0 or b & ~a == 0:
                return False
    return True


def missed_chain_masks(
    levels: list[list[int]], n: int, selected: set[int]
) -> Optional[list[int]]:
    """Mask-level core of the cutset check.

    ``levels`` lists the masks of each lattice level, bottom first.
    Returns None when every maximal chain meets ``selected``; otherwise the
    lexicographically least untouched maximal chain, bottom to top.
    """
    alive: list[set[int]] = [{v for v in levels[0] if v not in selected}]
    for lv in levels[1:]:
        prev = alive[-1]
        cur: set[int] = set()
        for v in lv:
            if v in selected:
                continue
            b = v
            while b:
                low = b & -b
                if v ^ low in prev:
                    cur.add(v)
                    break
                b ^= low
        alive.append(cur)
    if not alive[-1]:
        return None

    # Keep only alive nodes from which the top level is still reachable.
    useful = [set() for _ in levels]
    useful[-1] = alive[-1]
    mask_all = full_mask(n)
    for idx in range(len(levels) - 2, -1, -1):
        up = useful[idx + 1]
        keep: set[int] = set()
        for v in alive[idx]:
            b = mask_all ^ v
            while b:
                low = b & -b
                if v | low in up:
                    keep.add(v)
                    break
                b ^= low
        useful[idx] = keep

    path = [min(useful[0])]
    for idx in range(1, len(levels)):
        v = path[-1]
        best = None
        b = mask_all ^ v
        while b:
            low = b & -b
            w = v | low
            if w in useful[idx] and (best is None or w < best):
                best = w
            b ^= low
        assert best is not None
        path.append(best)
    return path


def is_cutset(lat: TruncatedLattice, nodes: Iterable[NodeSet]) -> CutsetReport:
    """Does the node collection meet every maximal chain of the lattice?

    A maximal chain runs saturated from level m to level l.  When the
    answer is no, the report carries the lexicographically least maximal
    chain disjoint from the input.
    """
    selected: set[int] = set()
    for a in nodes:
        if a.n != lat.n:
            raise DomainError("ground size mismatch with the lattice")
        if not lat.m <= a.level <= lat.l:
            raise DomainError(
                f"node {a} at level {a.level} outside levels {lat.m}..{lat.l}"
            )
        selected.add(a.bits)
    levels = [level_masks(lat.n, i) for i in lat.levels]
    path = missed_chain_masks(levels, lat.n, selected)
    if path is None:
        return CutsetReport(True, None)
    return CutsetReport(False, Chain(tuple(NodeSet(v, lat.n) for v in path)))
