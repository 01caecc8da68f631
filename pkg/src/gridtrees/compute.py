"""Shared orchestration over the transfer engines: pick the right system for
a (base, topology) pair, produce sequences, and fit recurrences at the
theorem-backed order bound (B_k states for path products, B_2k for cycle
products)."""

from __future__ import annotations

from .cyl_transfer import CylinderSystem, build_cylinder_system, cyl_tree_sequence
from .errors import DomainError
from .graphs import CYCLE, PATH, BaseGraph, make_base
from .path_transfer import TransferSystem, build_transfer_matrix, tree_sequence
from .recurrence import Recurrence, minimal_recurrence_from_terms


def system_for(base: BaseGraph, topology: str) -> TransferSystem | CylinderSystem:
    if topology == PATH:
        return build_transfer_matrix(base)
    if topology == CYCLE:
        return build_cylinder_system(base)
    raise DomainError(f"unknown topology {topology!r}")


def sequence_for(base: BaseGraph, topology: str, terms: int) -> list[int]:
    if topology == PATH:
        return tree_sequence(base, terms)
    if topology == CYCLE:
        return cyl_tree_sequence(base, terms)
    raise DomainError(f"unknown topology {topology!r}")


def order_bound(base: BaseGraph, topology: str) -> int:
    """Guaranteed recurrence order bound: the state count."""
    return len(system_for(base, topology).index)


def minimal_recurrence_for(
    base: BaseGraph, topology: str, max_order: int | None = None
) -> Recurrence:
    """Minimal recurrence of the spanning-tree sequence, computed from
    2*bound+4 exact terms."""
    bound = order_bound(base, topology) if max_order is None else max_order
    if bound < 1:
        raise DomainError("minimal_recurrence_for: max_order must be >= 1")
    terms = sequence_for(base, topology, 2 * bound + 4)
    return minimal_recurrence_from_terms(terms, bound)


def classify_base(base: BaseGraph) -> str | None:
    """"path", "cycle" or "complete" when base equals that standard graph
    on its k vertices (after edge normalization), else None."""
    k = base.k
    for kind in (PATH, "complete", CYCLE):
        if kind == CYCLE and k < 3:
            continue
        if make_base(kind, k) == base:
            return kind
    return None
