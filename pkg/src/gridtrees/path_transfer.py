"""Transfer systems for products G x P_n.

State space: partitions of the k frontier vertices by same-tree membership.
Extending the product by one column adds k rung edges plus a copy of the
base's edges; a subset of those either closes a cycle (rejected), strands a
tree away from the new frontier (rejected: such a tree can never rejoin), or
carries one frontier partition to another. Counting accepting subsets per
(source, target) pair gives the transfer matrix; iterating it on the
first-column forest counts yields exact spanning-tree numbers.

Element convention for frontier edges: the old frontier is 1..k, the new
column is k+1..2k, so rung i is (i, k+i) and a base edge (a,b) enters as
(k+a, k+b).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DomainError, SizeLimitError
from .graphs import BaseGraph
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

MAX_BASE_VERTICES = 7

# Worker-process override for matrix construction; 1 means serial.
WORKERS_ENV = "GRIDTREES_THREADS"


@dataclass(frozen=True)
class FrontierStep:
    """The edge set between one column and the next."""

    base: BaseGraph

    @cached_property
    def new_edges(self) -> tuple[tuple[int, int], ...]:
        k = self.base.k
        rungs = [(i, k + i) for i in range(1, k + 1)]
        layer = [(k + a, k + b) for a, b in self.base.edges]
        return tuple(rungs + layer)


@dataclass(frozen=True)
class TransferSystem:
    """Partition-indexed transfer matrix plus the first-column vector.

    columns[j] holds the nonzero entries of matrix column j as (i, count)
    pairs, both 0-based; matrix(i,j) counts the frontier-edge subsets
    stepping partition j+1 to partition i+1 (1-based ranks).
    """

    base: BaseGraph
    index: PartitionIndex
    columns: tuple[tuple[tuple[int, int], ...], ...]
    v1: tuple[int, ...]
    full_rank: int

    @cached_property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Dense row-major view."""
        size = len(self.index)
        rows = [[0] * size for _ in range(size)]
        for j, col in enumerate(self.columns):
            for i, c in col:
                rows[i][j] = c
        return tuple(tuple(r) for r in rows)

    def apply(self, vec):
        """Matrix-vector product over exact ints."""
        out = [0] * len(self.columns)
        for j, col in enumerate(self.columns):
            vj = vec[j]
            if vj:
                for i, c in col:
                    out[i] += c * vj
        return out

    def iterate(self, n_minus_1: int):
        """matrix^(n-1) applied to v1."""
        vec = list(self.v1)
        for _ in range(n_minus_1):
            vec = self.apply(vec)
        return vec


def transfer_step(base: BaseGraph, p: SetPartition, x) -> SetPartition | Rejection:
    """Carry frontier partition p across one column extension using the
    frontier-edge subset x (pairs over [2k] per the module convention)."""
    k = base.k
    if p.m != k:
        raise DomainError(f"transfer_step: partition is over [{p.m}], base has k={k}")
    allowed = set(FrontierStep(base).new_edges)
    edges = tuple(x)
    for e in edges:
        if e not in allowed:
            raise DomainError(f"transfer_step: {e} is not a frontier edge")
    result = _raw_step(p.blocks, k, edges)
    if isinstance(result, Rejection):
        return result
    return SetPartition(k, result)


def _raw_step(src_blocks, k: int, edges):
    """Blocks tuple of the new frontier partition, or a Rejection."""
    parent = _seed_parents(src_blocks, 2 * k)
    for a, b in edges:
        if not _union(parent, a, b):
            return Rejection.CYCLE
    groups: dict[int, list[int]] = {}
    for e in range(k + 1, 2 * k + 1):
        groups.setdefault(_find(parent, e), []).append(e - k)
    for e in range(1, k + 1):
        if _find(parent, e) not in groups:
            return Rejection.STRANDED
    return tuple(sorted((tuple(g) for g in groups.values()), key=lambda t: t[0]))


def _column_counts(src_blocks, k: int, edges) -> dict[tuple, int]:
    """Target-partition counts over all 2^len(edges) subsets from one source."""
    seeded = _seed_parents(src_blocks, 2 * k)
    ne = len(edges)
    counts: dict[tuple, int] = {}
    for bits in range(1 << ne):
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
        groups: dict[int, list[int]] = {}
        for e in range(k + 1, 2 * k + 1):
            groups.setdefault(_find(parent, e), []).append(e - k)
        stranded = False
        for e in range(1, k + 1):
            if _find(parent, e) not in groups:
                stranded = True
                break
        if stranded:
            continue
        key = tuple(sorted((tuple(g) for g in groups.values()), key=lambda t: t[0]))
        counts[key] = counts.get(key, 0) + 1
    return counts


def _worker_init(blocks_list, k, edges, rank0, counter):
    global _W_BLOCKS, _W_K, _W_EDGES, _W_RANK0, _W_COUNTER
    _W_BLOCKS, _W_K, _W_EDGES, _W_RANK0, _W_COUNTER = (
        blocks_list,
        k,
        edges,
        rank0,
        counter,
    )


def _worker_column(j: int):
    counts = _W_COUNTER(_W_BLOCKS[j], _W_K, _W_EDGES)
    col = tuple(sorted((_W_RANK0[t], c) for t, c in counts.items()))
    return j, col


def _build_columns(blocks_list, k, edges, rank0, workers: int, counter=None):
    """Count accepted transitions for every source partition; `counter` maps
    (source blocks, k, edges) to a target-blocks -> count dict. Parallel
    construction forks one process per worker; columns land deterministically
    regardless of completion order."""
    if counter is None:
        counter = _column_counts
    if workers <= 1 or len(blocks_list) < 4:
        cols = []
        for blocks in blocks_list:
            counts = counter(blocks, k, edges)
            cols.append(tuple(sorted((rank0[t], c) for t, c in counts.items())))
        return tuple(cols)
    out: list = [None] * len(blocks_list)
    with ProcessPoolExecutor(
        max_workers=workers,
        initializer=_worker_init,
        initargs=(blocks_list, k, edges, rank0, counter),
    ) as pool:
        for j, col in pool.map(_worker_column, range(len(blocks_list)), chunksize=16):
            out[j] = col
    return tuple(out)


def _worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"{WORKERS_ENV} must be an integer, got {raw!r}")
    return max(1, n)


def first_column_vector(base: BaseGraph, index: PartitionIndex) -> tuple[int, ...]:
    """Forest counts of the single-column product, grouped by induced
    partition. Every vertex of the first column is a frontier vertex, so
    every acyclic edge subset is consistent with its own partition."""
    k = base.k
    singles = tuple((i,) for i in range(1, k + 1))
    counts = [0] * len(index)
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
        key = tuple(sorted((tuple(g) for g in groups.values()), key=lambda t: t[0]))
        counts[index.rank_of_blocks(key) - 1] += 1
    return tuple(counts)


@lru_cache(maxsize=None)
def build_transfer_matrix(base: BaseGraph) -> TransferSystem:
    """Enumerate all frontier-edge subsets per source partition and count
    accepted transitions. Rejected for k above 7: the table alone has
    B_8 = 4140 states and the build cost grows as B_k * 2^(k+|E|)."""
    k = base.k
    if not 1 <= k <= MAX_BASE_VERTICES:
        raise SizeLimitError(
            f"build_transfer_matrix: k={k} exceeds the ceiling "
            f"{MAX_BASE_VERTICES} (B_{MAX_BASE_VERTICES} = "
            f"{bell_number(MAX_BASE_VERTICES)} states; "
            f"B_{k} = {bell_number(k)})"
        )
    index = enumerate_partitions(k)
    edges = FrontierStep(base).new_edges
    blocks_list = [p.blocks for p in index.table]
    rank0 = {b: i for i, b in enumerate(blocks_list)}
    columns = _build_columns(blocks_list, k, edges, rank0, _worker_count())
    v1 = first_column_vector(base, index)
    return TransferSystem(
        base=base, index=index, columns=columns, v1=v1, full_rank=1
    )


def tree_sequence(base: BaseGraph, terms: int) -> list[int]:
    """T_1..T_terms where T_n is the exact spanning-tree count of
    base x P_n; T_n = (matrix^(n-1) v1)[full_rank]."""
    if terms < 1:
        raise DomainError("tree_sequence: terms must be >= 1")
    system = build_transfer_matrix(base)
    vec = list(system.v1)
    out = []
    for _ in range(terms):
        out.append(vec[system.full_rank - 1])
        vec = system.apply(vec)
    return out


def forest_counts(base: BaseGraph, n: int) -> tuple[int, ...]:
    """Per-partition counts of spanning forests of base x P_n consistent
    with each frontier partition (entry r is partition rank r+1)."""
    if n < 1:
        raise DomainError("forest_counts: n must be >= 1")
    system = build_transfer_matrix(base)
    return tuple(system.iterate(n - 1))
