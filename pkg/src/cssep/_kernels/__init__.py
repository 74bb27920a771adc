"""Kernel dispatch: compiled extension when available, pure Python otherwise.

The compiled backend handles graphs with at most 64 vertices (masks live in
machine words); larger inputs silently fall back to the pure kernels.  Set
CSSEP_BACKEND=pure to force the fallback, CSSEP_BACKEND=native to fail loudly
when the extension is missing.
"""

from __future__ import annotations

import importlib
import os
from array import array

from . import pure as _pure

_forced = os.environ.get("CSSEP_BACKEND", "").strip().lower()
if _forced == "pure":
    _native = None
else:
    try:
        _native = importlib.import_module("._native", __name__)
    except ImportError:
        _native = None
if _forced == "native" and _native is None:
    raise ImportError("CSSEP_BACKEND=native but the compiled extension is not built")

NATIVE_MAX_N = 64


def backend_name() -> str:
    return "native" if _native is not None else "pure"


def has_native() -> bool:
    return _native is not None


def _use_native(n: int) -> bool:
    return _native is not None and 0 < n <= NATIVE_MAX_N


def _bits_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def all_cliques(adj, n, maximal_only=False):
    """All (or all maximal) clique bitmasks in canonical sorted-tuple order."""
    if _use_native(n):
        raw = _native.all_cliques(array("Q", adj), n, maximal_only)
    else:
        raw = _pure.all_cliques(adj, n, maximal_only)
    raw.sort(key=_bits_key)
    return raw


def graph_contains_induced(hadj, hn, padj, pk):
    if _use_native(hn) and pk <= NATIVE_MAX_N:
        return bool(_native.graph_contains_induced(array("Q", hadj), hn, array("Q", padj), pk))
    return _pure.graph_contains_induced(hadj, hn, padj, pk)


def ramsey_property_holds(r, q):
    if _native is not None and 0 <= r * (r - 1) // 2 <= 62:
        return bool(_native.ramsey_property_holds(r, q))
    return _pure.ramsey_property_holds(r, q)


def witness_search(adj, n, p, r_cap, k_mask, s_mask):
    if _use_native(n):
        return _native.witness_search(array("Q", adj), n, p, r_cap, k_mask, s_mask)
    return _pure.witness_search(adj, n, p, r_cap, k_mask, s_mask)


def coverage_scan(adj, n, family, cliques, stables, p, r_cap, with_witness):
    """Scan pairs; output pair lists re-sorted canonically for determinism."""
    if _use_native(n):
        pairs, uncovered, bad = _native.coverage_scan(
            array("Q", adj),
            n,
            array("Q", sorted(family)),
            array("Q", cliques),
            array("Q", stables),
            p,
            r_cap,
            with_witness,
        )
    else:
        pairs, uncovered, bad = _pure.coverage_scan(
            adj, n, family, cliques, stables, p, r_cap, with_witness
        )
    key = lambda ks: (_bits_key(ks[0]), _bits_key(ks[1]))
    return pairs, sorted(uncovered, key=key), sorted(bad, key=key)
