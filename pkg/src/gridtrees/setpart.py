"""Set partitions of [m]: enumeration, canonical ordering, union-find merging.

Partitions are kept in canonical block form (elements ascending inside each
block, blocks ascending by minimum element). The ordering used everywhere is:
fewer blocks first; among equal block counts, compare the blocks containing
the smallest element on which the two partitions disagree, element-wise.
Partition state is the index space of every transfer matrix in this package.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, SizeLimitError

# B_10 = 115975 is the largest table we agree to hold in memory.
MAX_GROUND_SET = 10

_BELL_CACHE = [1, 1]


def bell_number(m: int) -> int:
    """B_m computed by the Bell triangle."""
    if m < 0:
        raise DomainError("bell_number: m must be >= 0")
    if m < len(_BELL_CACHE):
        return _BELL_CACHE[m]
    row = [1]
    del _BELL_CACHE[2:]
    while len(_BELL_CACHE) <= m:
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        _BELL_CACHE.append(row[-1])
    return _BELL_CACHE[m]


class Rejection(Enum):
    """Why a merge or transfer step was not accepted. A counted outcome,
    not a fault."""

    CYCLE = "cycle"
    STRANDED = "stranded"


@dataclass(frozen=True)
class SetPartition:
    """A partition of {1,..,m} in canonical block form."""

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.m < 1:
            raise DomainError("SetPartition: ground set must be non-empty")
        seen = set()
        prev_min = 0
        for block in self.blocks:
            if not block:
                raise DomainError("SetPartition: empty block")
            if any(b <= a for a, b in zip(block, block[1:])):
                raise DomainError("SetPartition: block elements must increase")
            if block[0] <= prev_min:
                raise DomainError("SetPartition: blocks must ascend by minimum")
            prev_min = block[0]
            seen.update(block)
        if seen != set(range(1, self.m + 1)):
            raise DomainError(f"SetPartition: blocks do not cover [{self.m}]")

    @staticmethod
    def from_blocks(m: int, blocks) -> "SetPartition":
        """Canonicalize an arbitrary iterable of iterables."""
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        return SetPartition(m, canon)

    @staticmethod
    def from_text(text: str, m: int | None = None) -> "SetPartition":
        """Parse the "/"-joined text form, e.g. "1/23" or "1,11/2"."""
        blocks = []
        for part in text.split("/"):
            if "," in part:
                blocks.append([int(x) for x in part.split(",")])
            else:
                blocks.append([int(ch) for ch in part])
        elems = [e for b in blocks for e in b]
        return SetPartition.from_blocks(m if m is not None else max(elems), blocks)

    @staticmethod
    def singletons(m: int) -> "SetPartition":
        return SetPartition(m, tuple((i,) for i in range(1, m + 1)))

    def block_containing(self, i: int) -> tuple[int, ...]:
        for block in self.blocks:
            if i in block:
                return block
        raise DomainError(f"element {i} not in [{self.m}]")

    def relabel(self, mapping: dict[int, int]) -> "SetPartition":
        """Apply a bijection of [m] and re-canonicalize."""
        return SetPartition.from_blocks(
            self.m, [[mapping[e] for e in b] for b in self.blocks]
        )

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return format_blocks(self.blocks)


def format_blocks(blocks) -> str:
    """Text form: digits concatenated while every element is below 10,
    comma-separated otherwise."""
    if any(e >= 10 for b in blocks for e in b):
        return "/".join(",".join(str(e) for e in b) for b in blocks)
    return "/".join("".join(str(e) for e in b) for b in blocks)


def compare_partitions(p1: SetPartition, p2: SetPartition) -> int:
    """-1, 0 or 1; the canonical ordering described in the module docstring."""
    if p1.m != p2.m:
        raise DomainError("compare_partitions: mismatched ground sets")
    if p1.blocks == p2.blocks:
        return 0
    if len(p1.blocks) != len(p2.blocks):
        return -1 if len(p1.blocks) < len(p2.blocks) else 1
    for i in range(1, p1.m + 1):
        b1 = p1.block_containing(i)
        b2 = p2.block_containing(i)
        if b1 != b2:
            return -1 if b1 < b2 else 1
    return 0


def _sort_key(blocks: tuple[tuple[int, ...], ...]):
    # Equivalent to compare_partitions on canonical forms: the first block
    # (by minimum) on which two partitions disagree is also the block holding
    # the smallest disagreeing element. The equivalence is property-tested.
    return (len(blocks), blocks)


@dataclass(frozen=True)
class PartitionIndex:
    """All partitions of [m] in canonical order with 1-based rank lookup."""

    m: int
    table: tuple[SetPartition, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "_rank", {p.blocks: i + 1 for i, p in enumerate(self.table)}
        )

    def __len__(self) -> int:
        return len(self.table)

    def __iter__(self):
        return iter(self.table)

    def rank(self, p: SetPartition) -> int:
        """1-based position of p in the table."""
        if p.m != self.m:
            raise DomainError("rank: partition has a different ground set")
        return self._rank[p.blocks]

    def rank_of_blocks(self, blocks: tuple[tuple[int, ...], ...]) -> int:
        return self._rank[blocks]

    def partition(self, rank: int) -> SetPartition:
        """Inverse of rank (1-based)."""
        if not 1 <= rank <= len(self.table):
            raise DomainError(f"rank {rank} out of range 1..{len(self.table)}")
        return self.table[rank - 1]

    def labels(self) -> list[str]:
        return [str(p) for p in self.table]


@functools.lru_cache(maxsize=None)
def enumerate_partitions(m: int) -> PartitionIndex:
    """All partitions of [m] in canonical order.

    Rejects m outside 1..10: the table has B_m entries and B_11 = 678570
    already serves no purpose here.
    """
    if not isinstance(m, int) or m < 1:
        raise DomainError("enumerate_partitions: m must be a positive integer")
    if m > MAX_GROUND_SET:
        raise SizeLimitError(
            f"enumerate_partitions: m={m} needs B_{m} = {bell_number(m)} "
            f"partitions; the ceiling is m={MAX_GROUND_SET} "
            f"(B_{MAX_GROUND_SET} = {bell_number(MAX_GROUND_SET)})"
        )
    blocks_list: list[tuple[tuple[int, ...], ...]] = [((1,),)]
    for e in range(2, m + 1):
        grown = []
        for p in blocks_list:
            grown.append(p + ((e,),))
            for i, b in enumerate(p):
                grown.append(p[:i] + (b + (e,),) + p[i + 1 :])
        blocks_list = grown
    blocks_list.sort(key=_sort_key)
    return PartitionIndex(m, tuple(SetPartition(m, b) for b in blocks_list))


def merge_under_edges(
    p: SetPartition, extra: int, edges
) -> SetPartition | Rejection:
    """Union the blocks of p (plus `extra` appended singletons) along `edges`.

    Returns the merged partition of [p.m + extra], or Rejection.CYCLE as soon
    as an edge lands inside an existing component. The outcome does not
    depend on edge order.
    """
    if extra < 0:
        raise DomainError("merge_under_edges: extra must be >= 0")
    n = p.m + extra
    for a, b in edges:
        if not (1 <= a <= n and 1 <= b <= n):
            raise DomainError(f"merge_under_edges: endpoint ({a},{b}) outside [{n}]")
    parent = _seed_parents(p.blocks, n)
    for a, b in edges:
        if not _union(parent, a, b):
            return Rejection.CYCLE
    return SetPartition(n, _components(parent, n))


def _seed_parents(blocks, n: int) -> list[int]:
    parent = list(range(n + 1))
    for block in blocks:
        root = block[0]
        for e in block[1:]:
            parent[e] = root
    return parent


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], a: int, b: int) -> bool:
    """False when a and b were already connected."""
    ra, rb = _find(parent, a), _find(parent, b)
    if ra == rb:
        return False
    parent[ra] = rb
    return True


def _components(parent: list[int], n: int) -> tuple[tuple[int, ...], ...]:
    comp: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        comp.setdefault(_find(parent, x), []).append(x)
    return tuple(sorted((tuple(c) for c in comp.values()), key=lambda c: c[0]))
