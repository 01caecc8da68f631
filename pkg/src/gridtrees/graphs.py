"""Base graphs and their products with paths and cycles.

A product graph has k*n vertices arranged in n columns of k; vertices are
numbered column-major, v(i,j) -> (j-1)*k + i. Edge lists are multisets:
cycle products at n=2 keep the wrap edges as parallels of the rung edges,
and at n=1 the wrap edges degenerate to self-loops and are dropped (a loop
can never sit in a spanning tree).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import DomainError

PATH = "path"
CYCLE = "cycle"
TOPOLOGIES = (PATH, CYCLE)


@dataclass(frozen=True)
class BaseGraph:
    """k vertices on [k] plus an edge multiset; parallel edges allowed,
    self-loops rejected."""

    k: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("BaseGraph: k must be >= 1")
        for a, b in self.edges:
            if a == b:
                raise DomainError(f"BaseGraph: self-loop ({a},{b})")
            if not (1 <= a <= self.k and 1 <= b <= self.k):
                raise DomainError(f"BaseGraph: endpoint ({a},{b}) outside [{self.k}]")

    @staticmethod
    def from_edges(k: int, edges) -> "BaseGraph":
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
        return BaseGraph(k, norm)

    @property
    def vertex_count(self) -> int:
        return self.k

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return self.edges

    def relabel(self, mapping: dict[int, int]) -> "BaseGraph":
        return BaseGraph.from_edges(
            self.k, [(mapping[a], mapping[b]) for a, b in self.edges]
        )


def make_base(kind: str, k: int | None = None, edges=None) -> BaseGraph:
    """Build a base graph: path(k), cycle(k), complete(k) or an explicit
    edge list over [k]."""
    if kind == "explicit":
        if k is None or edges is None:
            raise DomainError("make_base: explicit graphs need k and edges")
        return BaseGraph.from_edges(k, edges)
    if k is None or k < 1:
        raise DomainError(f"make_base: {kind} needs k >= 1")
    if kind == PATH:
        return BaseGraph.from_edges(k, [(i, i + 1) for i in range(1, k)])
    if kind == CYCLE:
        if k < 3:
            raise DomainError(
                "make_base: cycle(k) needs k >= 3; cycle(2) would duplicate an "
                "edge and cycle(1) is a loop"
            )
        return BaseGraph.from_edges(k, [(i, i + 1) for i in range(1, k)] + [(1, k)])
    if kind == "complete":
        return BaseGraph.from_edges(
            k, [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
        )
    raise DomainError(f"make_base: unknown kind {kind!r}")


def base_from_file(path: str) -> BaseGraph:
    """Read the base-graph file format: first non-comment line is k, every
    following "i j" line is an edge; duplicate lines are parallel edges and
    "#" starts a comment line."""
    lines = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                lines.append(line)
    if not lines:
        raise DomainError(f"base_from_file: {path} has no content")
    try:
        k = int(lines[0])
    except ValueError:
        raise DomainError(f"base_from_file: first line must be k, got {lines[0]!r}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"base_from_file: bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return BaseGraph.from_edges(k, edges)


@dataclass(frozen=True)
class ProductGraph:
    """Explicit multigraph of base x P_n or base x C_n."""

    base: BaseGraph
    n: int
    topology: str

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("ProductGraph: n must be >= 1")
        if self.topology not in TOPOLOGIES:
            raise DomainError(f"ProductGraph: topology must be one of {TOPOLOGIES}")

    @property
    def k(self) -> int:
        return self.base.k

    @property
    def vertex_count(self) -> int:
        return self.base.k * self.n

    def vertex_id(self, i: int, j: int) -> int:
        """Column-major id of v(i,j), 1-based."""
        if not (1 <= i <= self.k and 1 <= j <= self.n):
            raise DomainError(f"vertex ({i},{j}) outside the {self.k}x{self.n} product")
        return (j - 1) * self.k + i

    @cached_property
    def _edges(self) -> tuple[tuple[int, int], ...]:
        k, n = self.k, self.n
        out = []
        for j in range(1, n + 1):
            off = (j - 1) * k
            for a, b in self.base.edges:
                out.append((off + a, off + b))
        for j in range(1, n):
            off = (j - 1) * k
            for i in range(1, k + 1):
                out.append((off + i, off + k + i))
        if self.topology == CYCLE and n >= 2:
            off = (n - 1) * k
            for i in range(1, k + 1):
                out.append((i, off + i))
        return tuple(out)

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        return self._edges


def build_product(base: BaseGraph, n: int, topology: str) -> ProductGraph:
    """The explicit product multigraph; wrap edges only for cycle topology."""
    return ProductGraph(base, n, topology)
