"""Ground model of the subset lattice 2^[n] and its truncated slices.

Subsets of [n] = {1, ..., n} are stored as bit vectors: element i occupies
bit i - 1, so inclusion tests, level computation, and cover enumeration are
single integer operations.  The ground set size is capped at 64 to keep the
encoding fixed-width; exact counting routines elsewhere accept larger n.

All values are immutable after construction and safe to share across
threads.  Every enumeration is in ascending numeric (bit-vector) order, so
outputs are reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

MAX_GROUND = 64


def full_mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, repr=False)
class NodeSet:
    """A subset of [n] = {1, ..., n}, encoded as a bit vector.

    ``bits`` has bit i - 1 set exactly when element i belongs to the set.
    """

    bits: int
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_GROUND:
            raise DomainError(f"ground size {self.n} outside 0..{MAX_GROUND}")
        if self.bits < 0 or self.bits >> self.n:
            raise DomainError(f"bit vector {self.bits:#x} does not fit in [{self.n}]")

    @property
    def level(self) -> int:
        """Size of the subset (its level in the lattice)."""
        return self.bits.bit_count()

    def elements(self) -> tuple[int, ...]:
        """The 1-based elements, ascending."""
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    def __contains__(self, element: int) -> bool:
        return 1 <= element <= self.n and bool(self.bits >> (element - 1) & 1)

    def issubset(self, other: "NodeSet") -> bool:
        if self.n != other.n:
            raise DomainError("ground size mismatch")
        return self.bits & ~other.bits == 0

    @classmethod
    def from_elements(cls, elements, n: int) -> "NodeSet":
        bits = 0
        for e in elements:
            if not 1 <= e <= n:
                raise DomainError(f"element {e} outside [{n}]")
            bits |= 1 << (e - 1)
        return cls(bits, n)

    def to_json(self) -> list[int]:
        """JSON form: ascending list of 1-based elements."""
        return list(self.elements())

    @classmethod
    def from_json(cls, data, n: int) -> "NodeSet":
        if not isinstance(data, list) or not all(isinstance(e, int) for e in data):
            raise DomainError(f"node must be a list of integers, got {data!r}")
        return cls.from_elements(data, n)

    def __repr__(self) -> str:
        return "{" + ",".join(str(e) for e in self.elements()) + "}"


@dataclass(frozen=True)
class TruncatedLattice:
    """The nodes of 2^[n] whose size lies between m and l, inclusive."""

    n: int
    m: int
    l: int

    def __post_init__(self) -> None:
        if not 0 <= self.m <= self.l <= self.n <= MAX_GROUND:
            raise DomainError(
                f"need 0 <= m <= l <= n <= {MAX_GROUND}, got n={self.n} m={self.m} l={self.l}"
            )

    @property
    def levels(self) -> range:
        return range(self.m, self.l + 1)

    @property
    def node_count(self) -> int:
        from math import comb

        return sum(comb(self.n, i) for i in self.levels)

    def contains(self, node: NodeSet) -> bool:
        return node.n == self.n and self.m <= node.level <= self.l


def level_masks(n: int, k: int) -> list[int]:
    """All k-subsets of [n] as bit vectors, ascending."""
    if not 0 <= k <= n <= MAX_GROUND:
        raise DomainError(f"need 0 <= k <= n <= {MAX_GROUND}, got n={n} k={k}")
    if k == 0:
        return [0]
    out = []
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        out.append(v)
        # Gosper's hack: next integer with the same popcount.
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
    return out


def level_nodes(n: int, k: int) -> list[NodeSet]:
    """All subsets of size k over [n], in ascending bit-vector order."""
    return [NodeSet(v, n) for v in level_masks(n, k)]


def color_of(a: NodeSet, m: int) -> NodeSet:
    """The color of ``a``: its intersection with [2m], as a subset of [2m]."""
    if m < 0 or 2 * m > a.n:
        raise DomainError(f"color needs 0 <= 2m <= n, got m={m}, n={a.n}")
    return NodeSet(a.bits & full_mask(2 * m), 2 * m)


def covers_in(lat: TruncatedLattice, a: NodeSet) -> list[NodeSet]:
    """The covers of ``a`` inside ``lat``: supersets with one extra element.

    ``a`` must lie strictly below the top level of the lattice.
    """
    if a.n != lat.n:
        raise DomainError("ground size mismatch")
    if not lat.m <= a.level <= lat.l:
        raise DomainError(f"node at level {a.level} outside levels {lat.m}..{lat.l}")
    if a.level == lat.l:
        raise DomainError(f"node at top level {lat.l} has no covers in the lattice")
    return [NodeSet(a.bits | 1 << i, a.n) for i in range(a.n) if not a.bits >> i & 1]
