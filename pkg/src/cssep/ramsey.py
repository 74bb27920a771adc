"""Diagonal Ramsey numbers as used by the separator construction.

Two modes: ``tight`` serves the known exact diagonal values R(q, q) for
q <= 4, ``paper`` serves the closed-form upper bound 4**q = 2**(2q) that the
size analysis of the partition family is stated with.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import _kernels
from .errors import InputError, ResourceLimitError

EXACT_DIAGONAL = {1: 1, 2: 2, 3: 6, 4: 18}

RamseyMode = Literal["tight", "paper"]

DEFAULT_MAX_EDGES = 28


@dataclass(frozen=True)
class RamseyValue:
    q: int
    value: int
    provenance: Literal["exact-table", "upper-bound"]


def ramsey_upper(q: int, mode: RamseyMode = "tight") -> RamseyValue:
    """Smallest known (tight) or closed-form (paper) r with R(q, q) <= r."""
    if q < 1:
        raise InputError(f"q must be >= 1, got {q}")
    if mode == "tight" and q in EXACT_DIAGONAL:
        return RamseyValue(q, EXACT_DIAGONAL[q], "exact-table")
    if mode not in ("tight", "paper"):
        raise InputError(f"mode must be 'tight' or 'paper', got {mode!r}")
    return RamseyValue(q, 4**q, "upper-bound")


def verify_ramsey_property(r: int, q: int, max_edges: int = DEFAULT_MAX_EDGES) -> bool:
    """Exhaustively check that every 2-coloring of K_r has a monochromatic K_q.

    Walks all 2**C(r,2) edge colorings, so C(r,2) is capped by ``max_edges``.
    """
    if r < 0:
        raise InputError(f"r must be >= 0, got {r}")
    if q < 1:
        raise InputError(f"q must be >= 1, got {q}")
    n_edges = math.comb(r, 2)
    if n_edges > max_edges:
        raise ResourceLimitError(
            f"checking r={r} needs 2**{n_edges} colorings, over the "
            f"{max_edges}-edge budget",
            count=n_edges,
        )
    if q == 1:
        return r >= 1
    return _kernels.ramsey_property_holds(r, q)
