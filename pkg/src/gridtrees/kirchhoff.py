"""Matrix-Tree spanning-tree counts with exact integer determinants.

This module is the independent oracle: it never touches the transfer
machinery. Counts use the multigraph convention (parallel edges are
distinct), matching the products built in graphs.py. Determinants are
evaluated by fraction-free (Bareiss) elimination over Python ints; every
intermediate division is exact, so there is no precision ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class LaplacianMinor:
    """Laplacian of a multigraph with one vertex's row and column deleted."""

    dim: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.dim or any(
            len(row) != self.dim for row in self.entries
        ):
            raise DomainError("LaplacianMinor: entries must be dim x dim")
        for i in range(self.dim):
            if self.entries[i][i] < 0:
                raise DomainError("LaplacianMinor: negative degree entry")
            for j in range(i + 1, self.dim):
                if self.entries[i][j] != self.entries[j][i]:
                    raise DomainError("LaplacianMinor: not symmetric")
                if self.entries[i][j] > 0:
                    raise DomainError("LaplacianMinor: positive off-diagonal entry")


def laplacian_minor(graph, delete_vertex: int | None = None) -> LaplacianMinor:
    """Laplacian of `graph` (anything with vertex_count and edge_list())
    with `delete_vertex`'s row/column removed; defaults to the last vertex.
    Full rows are checked to sum to zero before deletion."""
    nv = graph.vertex_count
    if nv < 1:
        raise DomainError("laplacian_minor: graph must have a vertex")
    if delete_vertex is None:
        delete_vertex = nv
    if not 1 <= delete_vertex <= nv:
        raise DomainError(f"laplacian_minor: vertex {delete_vertex} outside [{nv}]")
    lap = [[0] * nv for _ in range(nv)]
    for a, b in graph.edge_list():
        if a == b:
            raise DomainError("laplacian_minor: self-loop present")
        lap[a - 1][a - 1] += 1
        lap[b - 1][b - 1] += 1
        lap[a - 1][b - 1] -= 1
        lap[b - 1][a - 1] -= 1
    assert all(sum(row) == 0 for row in lap)
    d = delete_vertex - 1
    keep = [i for i in range(nv) if i != d]
    entries = tuple(tuple(lap[i][j] for j in keep) for i in keep)
    return LaplacianMinor(nv - 1, entries)


def det_fraction_free(m) -> int:
    """Exact determinant of an integer matrix via Bareiss elimination.

    Accepts a LaplacianMinor or any square sequence of integer rows.
    """
    rows = m.entries if isinstance(m, LaplacianMinor) else m
    n = len(rows)
    if n == 0:
        return 1
    if any(len(row) != n for row in rows):
        raise DomainError("det_fraction_free: matrix must be square")
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if a[col][col] == 0:
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[col][col]
        for i in range(col + 1, n):
            ai = a[i]
            ac = a[col]
            aic = ai[col]
            for j in range(col + 1, n):
                # every division here is exact (Sylvester identity)
                ai[j] = (pivot * ai[j] - aic * ac[j]) // prev
            ai[col] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def spanning_tree_count(graph) -> int:
    """Exact number of spanning trees; 1 for a single vertex, 0 when
    disconnected. Parallel edges count as distinct."""
    if graph.vertex_count == 1:
        return 1
    return det_fraction_free(laplacian_minor(graph))
