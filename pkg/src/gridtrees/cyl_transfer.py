"""Transfer systems for products G x C_n (cylinders and tori).

Removing the k wrap edges of base x C_n leaves base x P_n, so the cylinder
count reduces to grid bookkeeping that tracks *both* ends: states are
partitions of [2k], elements 1..k naming the first column's vertices and
k+1..2k the current last column's. A forest is usable iff every tree touches
one of the two frontiers; the wrap edges are accounted for at the very end
by the tree-counting vector d, whose entry for a partition counts the
wrap-edge subsets turning its blocks into a single tree.

Stranding differs from the grid case: a block containing a first-column
element may sit unconnected through a step (a wrap edge can still reach it
later); only blocks living entirely on the old last column die.

Frontier-edge convention: old elements are 1..2k, the new column is
2k+1..3k, so rung i is (k+i, 2k+i) and a base edge (a,b) enters as
(2k+a, 2k+b).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DomainError, SizeLimitError
from .graphs import BaseGraph
from .path_transfer import _build_columns, _worker_count
from .setpart import (
    PartitionIndex,
    Rejection,
    SetPartition,
    _find,
    _seed_parents,
    _union,
    bell_number,
    enumerate_partitions,
)

MAX_CYL_BASE_VERTICES = 4


@dataclass(frozen=True)
class CylinderSystem:
    """Two-frontier transfer system over partitions of [2k].

    columns is the sparse column layout of path_transfer.TransferSystem;
    v1 is the n=1 vector (supported on partitions identifying i with k+i);
    d is the tree-counting vector for the k wrap edges.
    """

    base: BaseGraph
    index: PartitionIndex
    columns: tuple[tuple[tuple[int, int], ...], ...]
    v1: tuple[int, ...]
    d: tuple[int, ...]

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        size = len(self.index)
        rows = [[0] * size for _ in range(size)]
        for j, col in enumerate(self.columns):
            for i, c in col:
                rows[i][j] = c
        return tuple(tuple(r) for r in rows)

    def apply(self, vec):
        out = [0] * len(self.columns)
        for j, col in enumerate(self.columns):
            vj = vec[j]
            if vj:
                for i, c in col:
                    out[i] += c * vj
        return out

    def iterate(self, n_minus_1: int):
        vec = list(self.v1)
        for _ in range(n_minus_1):
            vec = self.apply(vec)
        return vec


def frontier_edges(base: BaseGraph) -> tuple[tuple[int, int], ...]:
    k = base.k
    rungs = [(k + i, 2 * k + i) for i in range(1, k + 1)]
    layer = [(2 * k + a, 2 * k + b) for a, b in base.edges]
    return tuple(rungs + layer)


def cyl_transfer_step(base: BaseGraph, p: SetPartition, x) -> SetPartition | Rejection:
    """One column extension of the two-frontier state p (a partition of
    [2k]); x is a subset of frontier_edges(base)."""
    k = base.k
    if p.m != 2 * k:
        raise DomainError(
            f"cyl_transfer_step: partition is over [{p.m}], expected [{2 * k}]"
        )
    allowed = set(frontier_edges(base))
    edges = tuple(x)
    for e in edges:
        if e not in allowed:
            raise DomainError(f"cyl_transfer_step: {e} is not a frontier edge")
    result = _raw_cyl_step(p.blocks, k, edges)
    if isinstance(result, Rejection):
        return result
    return SetPartition(2 * k, result)


def _raw_cyl_step(src_blocks, k: int, edges):
    parent = _seed_parents(src_blocks, 3 * k)
    for a, b in edges:
        if not _union(parent, a, b):
            return Rejection.CYCLE
    return _project_cyl(parent, k)


def _project_cyl(parent, k: int):
    """Partition on first column plus relabelled new column, or STRANDED
    when a block lives entirely on the old last column."""
    groups: dict[int, list[int]] = {}
    for e in range(1, k + 1):
        groups.setdefault(_find(parent, e), []).append(e)
    for e in range(2 * k + 1, 3 * k + 1):
        groups.setdefault(_find(parent, e), []).append(e - k)
    for e in range(k + 1, 2 * k + 1):
        if _find(parent, e) not in groups:
            return Rejection.STRANDED
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda t: t[0]))


def _cyl_column_counts(src_blocks, k: int, edges) -> dict[tuple, int]:
    seeded = _seed_parents(src_blocks, 3 * k)
    counts: dict[tuple, int] = {}
    for bits in range(1 << len(edges)):
        parent = seeded.copy()
        rest = bits
        ok = True
        while rest:
            low = rest & -rest
            a, b = edges[low.bit_length() - 1]
            if not _union(parent, a, b):
                ok = False
                break
            rest ^= low
        if not ok:
            continue
        key = _project_cyl(parent, k)
        if isinstance(key, Rejection):
            continue
        counts[key] = counts.get(key, 0) + 1
    return counts


def _doubled_blocks(blocks, k: int):
    """Blocks of [2k] obtained by identifying i with k+i (the n=1 state,
    where first and last column coincide)."""
    doubled = [tuple(sorted(b + tuple(e + k for e in b))) for b in blocks]
    return tuple(sorted(doubled, key=lambda t: t[0]))


def initial_vector(base: BaseGraph, index: PartitionIndex) -> tuple[int, ...]:
    """Acyclic edge subsets of the single column, indexed by their doubled
    partition of [2k]."""
    k = base.k
    singles = tuple((i,) for i in range(1, k + 1))
    out = [0] * len(index)
    edges = base.edges
    for bits in range(1 << len(edges)):
        parent = _seed_parents(singles, k)
        rest = bits
        ok = True
        while rest:
            low = rest & -rest
            a, b = edges[low.bit_length() - 1]
            if not _union(parent, a, b):
                ok = False
                break
            rest ^= low
        if not ok:
            continue
        groups: dict[int, list[int]] = {}
        for e in range(1, k + 1):
            groups.setdefault(_find(parent, e), []).append(e)
        blocks = tuple(sorted((tuple(g) for g in groups.values()), key=lambda t: t[0]))
        out[index.rank_of_blocks(_doubled_blocks(blocks, k)) - 1] += 1
    return tuple(out)


def tree_counting_vector(base: BaseGraph, index: PartitionIndex) -> tuple[int, ...]:
    """d(r) = number of wrap-edge subsets joining the blocks of partition
    rank r+1 into a single tree; wrap edge i connects element i to k+i."""
    k = base.k
    out = [0] * len(index)
    for r, p in enumerate(index.table):
        block_of = {}
        for bi, block in enumerate(p.blocks):
            for e in block:
                block_of[e] = bi
        nb = len(p.blocks)
        count = 0
        for bits in range(1 << k):
            parent = list(range(nb))
            ok = True
            rest = bits
            joined = 0
            while rest:
                low = rest & -rest
                i = low.bit_length()
                if not _union(parent, block_of[i], block_of[k + i]):
                    ok = False
                    break
                joined += 1
                rest ^= low
            # a spanning tree of nb contracted blocks needs exactly nb-1 edges
            if ok and joined == nb - 1:
                count += 1
        out[r] = count
    return tuple(out)


@lru_cache(maxsize=None)
def build_cylinder_system(base: BaseGraph) -> CylinderSystem:
    """Matrix, initial vector and tree-counting vector over B_2k states.

    k is capped at 4: k=5 would need the B_10 = 115975 partition table and
    a matrix with more than 13e9 entries.
    """
    k = base.k
    if not 1 <= k <= MAX_CYL_BASE_VERTICES:
        raise SizeLimitError(
            f"build_cylinder_system: k={k} exceeds the ceiling "
            f"{MAX_CYL_BASE_VERTICES} (states are partitions of [2k]; "
            f"B_{2 * k} = {bell_number(2 * k)} at k={k}, ceiling "
            f"B_{2 * MAX_CYL_BASE_VERTICES} = "
            f"{bell_number(2 * MAX_CYL_BASE_VERTICES)})"
        )
    index = enumerate_partitions(2 * k)
    edges = frontier_edges(base)
    blocks_list = [p.blocks for p in index.table]
    rank0 = {b: i for i, b in enumerate(blocks_list)}
    columns = _build_columns(
        blocks_list, k, edges, rank0, _worker_count(), counter=_cyl_column_counts
    )
    return CylinderSystem(
        base=base,
        index=index,
        columns=columns,
        v1=initial_vector(base, index),
        d=tree_counting_vector(base, index),
    )


def cyl_tree_sequence(base: BaseGraph, terms: int) -> list[int]:
    """T_1..T_terms for base x C_n; T_n = (matrix^(n-1) v1) . d. For n <= 2
    this is the multigraph count (wrap edges distinct from layer edges)."""
    if terms < 1:
        raise DomainError("cyl_tree_sequence: terms must be >= 1")
    system = build_cylinder_system(base)
    vec = list(system.v1)
    out = []
    for _ in range(terms):
        out.append(sum(w * dv for w, dv in zip(vec, system.d) if w and dv))
        vec = system.apply(vec)
    return out


def cyl_forest_counts(base: BaseGraph, n: int) -> tuple[int, ...]:
    """Counts of spanning forests of base x P_n cylindrically consistent
    with each partition of [2k]."""
    if n < 1:
        raise DomainError("cyl_forest_counts: n must be >= 1")
    system = build_cylinder_system(base)
    return tuple(system.iterate(n - 1))
