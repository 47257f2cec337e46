"""Saturated chains and bounded-size chain partitions of 2^[k].

The central construction is ``bounded_chain_partition(k, c)``, a partition
of the whole cube into saturated chains of size at most c.  Two regimes:

* c > k: the bound can never bind, and the partition is the classical
  element-by-element symmetric chain recursion (every chain starting at
  level j ends at level k - j).

* c <= k: chains are grown level by level.  Each node adopts one cover
  predecessor, found by maximum bipartite matching in which a node whose
  deepest predecessor sits at chain position p only accepts predecessors
  at position p - 1 or later (and below the size cap).  This keeps chain
  positions monotone along inclusions: whenever A lies inside B, A's
  position within its chain is at most B's.  A naive "freeze chains at
  size c" variant of the recursion produces the same chain counts but
  fails that monotonicity once k reaches 8, which silently breaks the
  product-lift cutsets built on top of it; the matching formulation is
  what ``constructions.cutset_product`` relies on.

Invoked at (k, c) = (2m, m+1) the bounded partition uses C(2m, m) chains,
of which C(2m, j) - C(2m, j-1) start at each level j <= m; these counts
and the monotonicity property are exercised directly in the test suite.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .lattice import MAX_GROUND, NodeSet, level_masks


@dataclass(frozen=True)
class Chain:
    """A saturated ascending run of subsets: each node adds one element."""

    nodes: tuple[NodeSet, ...]

    def __post_init__(self) -> None:
        if not self.nodes:
            raise DomainError("chain must be nonempty")
        n = self.nodes[0].n
        for prev, nxt in zip(self.nodes, self.nodes[1:]):
            if nxt.n != n:
                raise DomainError("chain mixes ground sizes")
            if prev.bits & ~nxt.bits or nxt.level != prev.level + 1:
                raise DomainError(f"chain not saturated ascending at {prev} -> {nxt}")

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def bottom(self) -> NodeSet:
        return self.nodes[0]

    @property
    def top(self) -> NodeSet:
        return self.nodes[-1]

    def __iter__(self):
        return iter(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def to_json(self) -> list[list[int]]:
        return [node.to_json() for node in self.nodes]


@dataclass(frozen=True)
class ChainPartition:
    """Disjoint chains over the ground set [k], each of size at most c.

    The constructor enforces disjointness and the size bound; whether the
    chains cover all of 2^[k] is a separate question (``covers_ground``),
    so that deliberately partial inputs can still be fed to the checkers.
    """

    chains: tuple[Chain, ...]
    k: int
    c: int

    def __post_init__(self) -> None:
        if not 0 <= self.k <= MAX_GROUND:
            raise DomainError(f"ground size {self.k} outside 0..{MAX_GROUND}")
        if self.c < 1:
            raise DomainError("maximum chain size c must be >= 1")
        seen: set[int] = set()
        for ch in self.chains:
            if ch.bottom.n != self.k:
                raise DomainError("chain ground size differs from partition ground size")
            if ch.size > self.c:
                raise DomainError(f"chain of size {ch.size} exceeds bound {self.c}")
            for node in ch:
                if node.bits in seen:
                    raise DomainError(f"node {node} appears in two chains")
                seen.add(node.bits)

    def node_count(self) -> int:
        return sum(ch.size for ch in self.chains)

    def covers_ground(self) -> bool:
        return self.node_count() == 1 << self.k

    def to_json(self) -> list[list[list[int]]]:
        return [ch.to_json() for ch in self.chains]


def _symmetric_chain_masks(k: int) -> list[list[int]]:
    # Element-by-element recursion: a chain either grows by the new
    # element on top, spinning off a shifted copy of its prefix, or (when
    # it is a singleton) just grows.
    chains: list[list[int]] = [[0]]
    for step in range(k):
        bit = 1 << step
        nxt: list[list[int]] = []
        for ch in chains:
            if len(ch) == 1:
                nxt.append(ch + [ch[0] | bit])
            else:
                nxt.append(ch + [ch[-1] | bit])
                nxt.append([x | bit for x in ch[:-1]])
        chains = nxt
    return chains


def _augment(start: int, adjacent: dict[int, list[int]], pair_pred: dict[int, int],
             pair_node: dict[int, int]) -> bool:
    # Iterative Kuhn augmentation from an unmatched node; levels can hold
    # thousands of nodes, so no recursion.
    visited: set[int] = set()
    parent: dict[int, int] = {}
    stack: list[tuple[int, Iterator[int]]] = [(start, iter(adjacent[start]))]
    while stack:
        y, it = stack[-1]
        p = next(it, None)
        if p is None:
            stack.pop()
            continue
        if p in visited:
            continue
        visited.add(p)
        parent[p] = y
        holder = pair_pred.get(p)
        if holder is None:
            while True:
                y = parent[p]
                old = pair_node.get(y)
                pair_pred[p] = y
                pair_node[y] = p
                if old is None:
                    return True
                p = old
        stack.append((holder, iter(adjacent[holder])))
    return False


def _bounded_chain_masks(k: int, c: int) -> list[list[int]]:
    # Level-by-level growth.  age = chain position - 1; a node may extend
    # a predecessor only while its chain stays below size c, and should
    # take one aged at least (deepest predecessor's age) - 1 so positions
    # never step backwards along inclusions.  Unmatched nodes start new
    # chains.  A second unrestricted pass is a completeness net for small
    # caps; on the (2m, m+1) instances it never fires.
    age = {0: 0}
    succ: dict[int, int] = {}
    for level in range(k):
        nodes = level_masks(k, level + 1)
        maxpred: dict[int, int] = {}
        window: dict[int, list[int]] = {}
        wide: dict[int, list[int]] = {}
        for y in nodes:
            preds = [y ^ (1 << b) for b in range(k) if y >> b & 1]
            mp = max(age[p] for p in preds)
            maxpred[y] = mp
            usable = sorted((p for p in preds if age[p] <= c - 2),
                            key=lambda p: (age[p], p))
            wide[y] = usable
            window[y] = [p for p in usable if age[p] >= mp - 1]
        pair_pred: dict[int, int] = {}
        pair_node: dict[int, int] = {}
        constrained = sorted((y for y in nodes if maxpred[y] >= 1),
                             key=lambda y: (-maxpred[y], y))
        for y in constrained:
            _augment(y, window, pair_pred, pair_node)
        for y in nodes:
            if maxpred[y] == 0 and y not in pair_node:
                _augment(y, window, pair_pred, pair_node)
        for y in nodes:
            if y not in pair_node:
                _augment(y, wide, pair_pred, pair_node)
        new_age = {}
        for y in nodes:
            p = pair_node.get(y)
            if p is None:
                new_age[y] = 0
            else:
                succ[p] = y
                new_age[y] = age[p] + 1
        age = new_age
    grown = set(succ.values())
    chains = []
    for level in range(k + 1):
        for v in level_masks(k, level):
            if v not in grown:
                ch = [v]
                while ch[-1] in succ:
                    ch.append(succ[ch[-1]])
                chains.append(ch)
    return chains


def bounded_chain_partition(k: int, c: int) -> ChainPartition:
    """Partition 2^[k] into saturated chains of size at most c.

    For c > k this is the symmetric chain recursion; otherwise the
    matching-based growth described in the module docstring.  Chains are
    returned sorted by the numeric value of their bottom node.
    """
    if not 0 <= k <= MAX_GROUND:
        raise DomainError(f"ground size {k} outside 0..{MAX_GROUND}")
    if c < 1:
        raise DomainError("maximum chain size c must be >= 1")
    if c > k:
        raw = _symmetric_chain_masks(k)
    else:
        raw = _bounded_chain_masks(k, c)
    raw.sort(key=lambda ch: ch[0])
    wrapped = tuple(Chain(tuple(NodeSet(x, k) for x in ch)) for ch in raw)
    return ChainPartition(wrapped, k=k, c=c)


def start_level_counts(p: ChainPartition) -> dict[int, int]:
    """How many chains start at each level (size of the bottom node)."""
    counts = Counter(ch.bottom.level for ch in p.chains)
    return dict(sorted(counts.items()))


def check_index_monotonicity(p: ChainPartition) -> tuple[bool, list[tuple[int, int, int, int]]]:
    """Check that inclusions between chains never step backwards.

    For every ordered pair of distinct chains A and B and 1-based positions
    i, j, the containment A_i <= B_j must imply i <= j.  Returns (ok,
    violations); each violation is (a_index, i, b_index, j) with 0-based
    chain indices and 1-based positions, listing a pair with A_i <= B_j
    and i > j.
    """
    violations: list[tuple[int, int, int, int]] = []
    seqs = [[node.bits for node in ch.nodes] for ch in p.chains]
    for ai, a in enumerate(seqs):
        for bi, b in enumerate(seqs):
            if ai == bi:
                continue
            for i in range(1, len(a)):
                for j in range(min(i, len(b))):
                    if a[i] & ~b[j] == 0:
                        violations.append((ai, i + 1, bi, j + 1))
    return (not violations), violations
