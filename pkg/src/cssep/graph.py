"""Immutable simple graphs on vertex set {0, ..., n-1}.

Adjacency is stored as one Python-int bitmask per vertex, which keeps the
whole toolkit exact and hashable and lets the hot loops run on machine words
when the compiled kernels are available.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal

from .errors import InputError


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.  ``adj[v]`` is the bitmask of neighbours of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be >= 0, got {self.n}")
        if len(self.adj) != self.n:
            raise InputError(
                f"adjacency has {len(self.adj)} rows for {self.n} vertices"
            )
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an iterable of (u, v) pairs; duplicates collapse."""
        if n < 0:
            raise InputError(f"vertex count must be >= 0, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls.from_edges(n, ())

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise InputError(f"vertex {v} outside range 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class VertexSet:
    """A subset of {0, ..., n-1}, stored as a bitmask tied to its universe."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"universe size must be >= 0, got {self.n}")
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"mask {self.mask:#x} does not fit universe of size {self.n}")

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        m = 0
        for v in vertices:
            if not (0 <= v < n):
                raise InputError(f"vertex {v} outside range 0..{n - 1}")
            m |= 1 << v
        return cls(n, m)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    def is_empty(self) -> bool:
        return self.mask == 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def _same_universe(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise InputError(f"universe mismatch: {self.n} vs {other.n}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: VertexSet) -> bool:
        self._same_universe(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: VertexSet) -> bool:
        self._same_universe(other)
        return self.mask & other.mask == 0

    def complement(self) -> VertexSet:
        return VertexSet(self.n, self.mask ^ (1 << self.n) - 1)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self.members))}}})"


@dataclass(frozen=True)
class Partition:
    """An ordered bipartition (X, V \\ X) of a vertex universe."""

    x_side: VertexSet

    @property
    def n(self) -> int:
        return self.x_side.n

    @property
    def y_side(self) -> VertexSet:
        return self.x_side.complement()

    def __repr__(self) -> str:
        return f"Partition(x={{{', '.join(map(str, self.x_side.members))}}}, n={self.n})"


@dataclass(frozen=True)
class Relation:
    """How two disjoint vertex sets see each other across the bipartite edges."""

    complete: bool
    anticomplete: bool
    matched: bool


def _check_set(g: Graph, x: VertexSet, name: str = "set") -> None:
    if x.n != g.n:
        raise InputError(f"{name} lives on {x.n} vertices, graph has {g.n}")


def neighbors(g: Graph, x: VertexSet, mode: Literal["open", "closed"] = "open") -> VertexSet:
    """N(X) or N[X].  The open neighbourhood excludes X itself."""
    _check_set(g, x)
    if mode not in ("open", "closed"):
        raise InputError(f"mode must be 'open' or 'closed', got {mode!r}")
    acc = 0
    for v in bits(x.mask):
        acc |= g.adj[v]
    if mode == "open":
        acc &= ~x.mask
    else:
        acc |= x.mask
    return VertexSet(g.n, acc)


def is_clique(g: Graph, x: VertexSet) -> bool:
    """True when every two distinct vertices of X are adjacent (|X| <= 1 counts)."""
    _check_set(g, x)
    m = x.mask
    for v in bits(m):
        if g.adj[v] & m != m ^ (1 << v):
            return False
    return True


def is_stable(g: Graph, x: VertexSet) -> bool:
    """True when no two vertices of X are adjacent."""
    _check_set(g, x)
    m = x.mask
    for v in bits(m):
        if g.adj[v] & m:
            return False
    return True


def relation(g: Graph, x: VertexSet, y: VertexSet) -> Relation:
    """Classify the bipartite adjacency between two disjoint nonempty-or-empty sets.

    ``matched`` means |X| = |Y| and the cross edges form a perfect matching.
    Empty sets are vacuously complete, anticomplete and matched.
    """
    _check_set(g, x, "first set")
    _check_set(g, y, "second set")
    if x.mask & y.mask:
        raise InputError("relation() requires disjoint sets")
    complete = True
    anticomplete = True
    matched = len(x) == len(y)
    seen_mates = 0
    for v in bits(x.mask):
        row = g.adj[v] & y.mask
        if row != y.mask:
            complete = False
        if row:
            anticomplete = False
        if row.bit_count() != 1 or row & seen_mates:
            matched = False
        seen_mates |= row
    if x.mask == 0 or y.mask == 0:
        matched = x.mask == y.mask  # both empty
        if x.mask == 0 and y.mask == 0:
            matched = True
    return Relation(complete=complete, anticomplete=anticomplete, matched=matched)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, x: VertexSet) -> tuple[Graph, dict[int, int]]:
    """The subgraph induced on X, plus the old-index -> new-index mapping.

    New indices follow the ascending order of the old ones.
    """
    _check_set(g, x)
    old = x.members
    index = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for v in old:
        for u in bits(g.adj[v] & x.mask):
            adj[index[v]] |= 1 << index[u]
    return Graph(len(old), tuple(adj)), index
