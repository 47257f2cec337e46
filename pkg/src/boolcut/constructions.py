"""Explicit cutset builders for truncated Boolean lattices.

Four strategies, each producing a cutset as a disjoint family of saturated
chains (the chain count is then an upper bound on the width, and since all
bottoms sit at the lowest level they witness that the bound is tight):

* ``cutset_level``     l = m:       the whole bottom level.
* ``cutset_bicolor``   l = m + 1:   pair every m-set avoiding element 1
                                    with itself plus 1.
* ``cutset_fourcolor`` l = m + 2:   size-3 chains through elements 1 and 2,
                                    recursing on the nodes that contain 2
                                    but not 1.
* ``cutset_product``   2m <= l:     lift each chain of the bounded
                                    partition of 2^[2m] by every possible
                                    set of outside elements.

``cutset_auto`` picks whichever applies with the fewest chains.  No
construction is known for m + 2 < l < 2m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain, bounded_chain_partition
from .errors import DomainError
from .formulas import binomial
from .lattice import NodeSet, TruncatedLattice, level_masks

_METHOD_ORDER = ("level", "bicolor", "fourcolor", "product")


@dataclass(frozen=True)
class Cutset:
    """A chain family inside a truncated lattice, claimed to be a cutset.

    Builders in this module always emit pairwise disjoint chains, so the
    chain count bounds the width of the union from above.
    """

    lat: TruncatedLattice
    chains: tuple[Chain, ...]

    def __post_init__(self) -> None:
        for ch in self.chains:
            for node in ch:
                if node.n != self.lat.n:
                    raise DomainError("chain ground size differs from lattice")
                if not self.lat.m <= node.level <= self.lat.l:
                    raise DomainError(
                        f"node {node} at level {node.level} outside levels "
                        f"{self.lat.m}..{self.lat.l}"
                    )

    @property
    def chain_count(self) -> int:
        return len(self.chains)

    def node_masks(self) -> set[int]:
        return {node.bits for ch in self.chains for node in ch}

    def nodes(self) -> tuple[NodeSet, ...]:
        return tuple(NodeSet(v, self.lat.n) for v in sorted(self.node_masks()))

    def levels_used(self) -> list[int]:
        return sorted({node.level for ch in self.chains for node in ch})

    def to_json(self) -> dict:
        return {
            "format": 1,
            "n": self.lat.n,
            "m": self.lat.m,
            "l": self.lat.l,
            "chains": [ch.to_json() for ch in self.chains],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Cutset":
        if not isinstance(data, dict):
            raise DomainError("cutset JSON must be an object")
        if data.get("format") != 1:
            raise DomainError(f"unsupported cutset format {data.get('format')!r}")
        try:
            n, m, l = int(data["n"]), int(data["m"]), int(data["l"])
            raw_chains = data["chains"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed cutset JSON: {exc}") from exc
        if not isinstance(raw_chains, list) or not all(
            isinstance(ch, list) for ch in raw_chains
        ):
            raise DomainError("cutset JSON field 'chains' must be a list of chains")
        lat = TruncatedLattice(n, m, l)
        chains = tuple(
            Chain(tuple(NodeSet.from_json(node, n) for node in ch)) for ch in raw_chains
        )
        return cls(lat, chains)


def cutset_level(n: int, m: int) -> Cutset:
    """The whole level m, as singleton chains: a cutset of levels m..m."""
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got n={n} m={m}")
    lat = TruncatedLattice(n, m, m)
    return Cutset(lat, tuple(Chain((NodeSet(v, n),)) for v in level_masks(n, m)))


def cutset_bicolor(n: int, m: int) -> Cutset:
    """Cutset of levels m..m+1: chains B c B+{1} over m-sets B avoiding 1.

    Only the m-sets containing 1 and the (m+1)-sets avoiding 1 are missed,
    and those form an antichain, so every maximal chain is met.
    """
    if not 0 <= m <= n - 1:
        raise DomainError(f"need 0 <= m <= n - 1, got n={n} m={m}")
    lat = TruncatedLattice(n, m, m + 1)
    chains = []
    for b in level_masks(n - 1, m):
        bot = b << 1  # subsets of [n] minus element 1
        chains.append(Chain((NodeSet(bot, n), NodeSet(bot | 1, n))))
    return Cutset(lat, tuple(chains))


def _fourcolor_mask_chains(n: int, m: int) -> list[list[int]]:
    # Stage chains B c B+{1} c B+{1,2} over m-sets B avoiding 1 and 2,
    # then recurse on the class containing 2 but not 1, which is a copy of
    # the (n-2, m-1) instance embedded by adding 2 and shifting the rest.
    out = [[b << 2, (b << 2) | 1, (b << 2) | 3] for b in level_masks(n - 2, m)]
    if m >= 1:
        out.extend(
            [(x << 2) | 2 for x in ch] for ch in _fourcolor_mask_chains(n - 2, m - 1)
        )
    return out


def cutset_fourcolor(n: int, m: int) -> Cutset:
    """Recursive cutset of levels m..m+2, needs n >= 2m + 2."""
    if m < 0 or n < 2 * m + 2:
        raise DomainError(f"need m >= 0 and n >= 2m + 2, got n={n} m={m}")
    lat = TruncatedLattice(n, m, m + 2)
    chains = tuple(
        Chain(tuple(NodeSet(v, n) for v in ch)) for ch in _fourcolor_mask_chains(n, m)
    )
    return Cutset(lat, chains)


def cutset_product(n: int, m: int, l: int) -> Cutset:
    """Cutset of levels m..l for l >= 2m, living entirely in levels m..2m.

    Each chain C_j c ... c C_k of the bounded partition of 2^[2m] (bottom
    at level j) is lifted by every (m - j)-subset S of the outside elements
    2m+1..n, giving a chain from level m to level m + k - j.
    """
    if not 0 <= 2 * m <= l <= n - m:
        raise DomainError(f"need 0 <= 2m <= l <= n - m, got n={n} m={m} l={l}")
    lat = TruncatedLattice(n, m, l)
    part = bounded_chain_partition(2 * m, m + 1)
    chains = []
    for ch in part.chains:
        j = ch.bottom.level
        for s in level_masks(n - 2 * m, m - j):
            smask = s << (2 * m)
            chains.append(Chain(tuple(NodeSet(node.bits | smask, n) for node in ch)))
    return Cutset(lat, tuple(chains))


def method_counts(n: int, m: int, l: int) -> dict[str, int]:
    """Chain counts of every builder applicable to the (n, m, l) instance."""
    if not 0 <= m <= l <= n - m:
        raise DomainError(f"need 0 <= m <= l <= n - m, got n={n} m={m} l={l}")
    counts: dict[str, int] = {}
    if l == m:
        counts["level"] = binomial(n, m)
    if l == m + 1 and n >= m + 1:
        counts["bicolor"] = binomial(n - 1, m)
    if l == m + 2 and n >= 2 * m + 2:
        counts["fourcolor"] = sum(binomial(n - 2 * j - 2, m - j) for j in range(m + 1))
    if 2 * m <= l:
        counts["product"] = binomial(n, m) - binomial(n, m - 1)
    return counts


def choose_method(n: int, m: int, l: int) -> str:
    """Pick the applicable builder with the fewest chains.

    Ties break toward the later entry of level < bicolor < fourcolor <
    product.  Raises when no construction covers (n, m, l), i.e. for
    m + 2 < l < 2m.
    """
    counts = method_counts(n, m, l)
    if not counts:
        raise DomainError(f"no construction known for n={n} m={m} l={l}")
    return min(counts, key=lambda name: (counts[name], -_METHOD_ORDER.index(name)))


def cutset_auto(n: int, m: int, l: int) -> Cutset:
    """Build a cutset of levels m..l with the cheapest applicable method."""
    name = choose_method(n, m, l)
    if name == "level":
        return cutset_level(n, m)
    if name == "bicolor":
        return cutset_bicolor(n, m)
    if name == "fourcolor":
        return cutset_fourcolor(n, m)
    return cutset_product(n, m, l)
