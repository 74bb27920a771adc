"""The separation argument run as an algorithm on a concrete pair.

Given a disjoint clique K and stable set S, ``find_separator`` runs the
constructive separation argument step by step and returns the partition it
lands on, together with the full trace:

1. Extend K and S to a maximal clique K' and maximal stable set S'.  If they
   intersect (necessarily in one vertex v), the neighbourhood partition of v
   separates: (N(v), rest) when v is in the original S, else (N[v], rest).
2. Otherwise take a minimal S1' inside S' covering K' and its matched private
   set K1'.  If |S1'| < p, the partition (N(S1'), rest) separates.
3. Otherwise S1 = first p vertices of S1', K1 = their private partners,
   Z = vertices anticomplete to K1 and S1, SC = vertices of S' minus S1
   complete to K1, S2 = a minimal subset of SC with the same reach into Z,
   W = private Z-neighbours of S2.  The triple partition (A_X, rest)
   separates, and on class members |S2| < R.

The returned partition separates the original (K, S) as well, and belongs to
the default full family built with the same Ramsey mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from . import _kernels
from .errors import InputError, InternalInvariantError
from .graph import Graph, Partition, VertexSet, is_clique, is_stable, neighbors, relation
from .patterns import is_in_class
from .ramsey import RamseyMode, ramsey_upper
from ._kernels import pure as _pure_kernels

Branch = Literal["intersection-P1", "small-cover-P1", "triple-P2"]

_BRANCH_NAMES = {
    _pure_kernels.BRANCH_INTERSECTION: "intersection-P1",
    _pure_kernels.BRANCH_SMALL_COVER: "small-cover-P1",
    _pure_kernels.BRANCH_TRIPLE: "triple-P2",
}


def extend_to_maximal(
    g: Graph, x: VertexSet, kind: Literal["clique", "stable"]
) -> VertexSet:
    """Greedy maximal superset of ``x``, adding eligible vertices in index order."""
    if x.n != g.n:
        raise InputError(f"set lives on {x.n} vertices, graph has {g.n}")
    if kind == "clique":
        if not is_clique(g, x):
            raise InputError("extend_to_maximal(clique) needs a clique")
        return VertexSet(g.n, _pure_kernels.extend_clique(g.adj, g.n, x.mask))
    if kind == "stable":
        if not is_stable(g, x):
            raise InputError("extend_to_maximal(stable) needs a stable set")
        return VertexSet(g.n, _pure_kernels.extend_stable(g.adj, g.n, x.mask))
    raise InputError(f"kind must be 'clique' or 'stable', got {kind!r}")


def minimal_neighbor_cover(
    g: Graph, k: VertexSet, s: VertexSet
) -> tuple[VertexSet, VertexSet, tuple[tuple[int, int], ...]]:
    """(S1', K1', matching): minimal S1' in S covering K, with private partners.

    Removal attempts run from the highest index down, so the minimal cover
    prefers keeping low indices.  Each kept s gets the lowest clique vertex
    whose only S1'-neighbour is s; the matching pairs are (k_vertex, s_vertex).
    """
    _check_same(g, k, s)
    for v in k:
        if g.adj[v] & s.mask == 0:
            raise InputError(f"clique vertex {v} has no neighbour in the stable set")
    s1p = _pure_kernels.minimal_neighbor_cover_mask(g.adj, k.mask, s.mask)
    try:
        k1p, pairs = _pure_kernels.private_partners(g.adj, k.mask, s1p)
    except ValueError as exc:
        raise InternalInvariantError(str(exc)) from exc
    return VertexSet(g.n, s1p), VertexSet(g.n, k1p), pairs


def minimal_z_cover(
    g: Graph, sc: VertexSet, z: VertexSet
) -> tuple[VertexSet, VertexSet, tuple[tuple[int, int], ...]]:
    """(S2, W, matching): minimal S2 in SC with N(S2) and N(SC) agreeing on Z.

    W holds one private Z-neighbour per kept vertex (lowest index); matching
    pairs are (s2_vertex, w_vertex).  Empty SC-reach gives (empty, empty).
    """
    _check_same(g, sc, z)
    if sc.mask & z.mask:
        raise InputError("SC and Z must be disjoint")
    s2 = _pure_kernels.minimal_scope_cover_mask(g.adj, sc.mask, z.mask)
    w = 0
    pairs = []
    for s in VertexSet(g.n, s2):
        rest = _pure_kernels.neighbor_union(g.adj, s2 & ~(1 << s)) & z.mask
        priv = g.adj[s] & z.mask & ~rest
        if priv == 0:
            raise InternalInvariantError(
                f"cover vertex {s} has no private Z-neighbour; cover not minimal"
            )
        low = (priv & -priv).bit_length() - 1
        w |= 1 << low
        pairs.append((s, low))
    return VertexSet(g.n, s2), VertexSet(g.n, w), tuple(pairs)


def _check_same(g: Graph, *sets: VertexSet) -> None:
    for x in sets:
        if x.n != g.n:
            raise InputError(f"set lives on {x.n} vertices, graph has {g.n}")


def _coerce_set(g: Graph, x) -> VertexSet:
    """Accept a VertexSet or any iterable of vertex indices."""
    if isinstance(x, VertexSet):
        return x
    return VertexSet.from_vertices(g.n, x)


@dataclass(frozen=True)
class WitnessTrace:
    k_prime: VertexSet
    s_prime: VertexSet
    v: Optional[int] = None
    s1_prime: Optional[VertexSet] = None
    k1_prime: Optional[VertexSet] = None
    s1: Optional[VertexSet] = None
    k1: Optional[VertexSet] = None
    z: Optional[VertexSet] = None
    sc: Optional[VertexSet] = None
    s2: Optional[VertexSet] = None
    w: Optional[VertexSet] = None


@dataclass(frozen=True)
class WitnessReport:
    partition: Partition
    branch: Branch
    trace: WitnessTrace
    p: int
    q: int
    r: int
    ramsey_mode: RamseyMode
    in_class: bool
    s2_within_bound: bool


def find_separator(
    g: Graph,
    p: int,
    q: int,
    k: VertexSet,
    s: VertexSet,
    ramsey_mode: RamseyMode = "tight",
) -> WitnessReport:
    """Separating partition for a disjoint (clique, stable set) pair.

    The pair itself need not be maximal; the result separates it and lies in
    the default full family for (p, q) under the same Ramsey mode.  Class
    membership is reported, not required: outside the class the run still
    returns a separating partition but the |S2| < R bound may fail, which the
    report flags (on a class member that would be a bug and raises).
    """
    if p < 1 or q < 1:
        raise InputError(f"p and q must be >= 1, got p={p}, q={q}")
    k = _coerce_set(g, k)
    s = _coerce_set(g, s)
    _check_same(g, k, s)
    if not is_clique(g, k):
        raise InputError("K must be a clique")
    if not is_stable(g, s):
        raise InputError("S must be a stable set")
    if k.mask & s.mask:
        raise InputError("K and S must be disjoint")
    r = ramsey_upper(q, ramsey_mode).value
    try:
        res = _kernels.witness_search(g.adj, g.n, p, r, k.mask, s.mask)
    except ValueError as exc:
        raise InternalInvariantError(str(exc)) from exc
    branch, x, kp, sp, v, s1p, k1p, s1, k1, z, sc, s2, w, s2_ok = res
    vs = lambda m: VertexSet(g.n, m)
    in_class = is_in_class(g, p, q)
    if branch == _pure_kernels.BRANCH_INTERSECTION:
        trace = WitnessTrace(k_prime=vs(kp), s_prime=vs(sp), v=v)
    elif branch == _pure_kernels.BRANCH_SMALL_COVER:
        trace = WitnessTrace(
            k_prime=vs(kp), s_prime=vs(sp), s1_prime=vs(s1p), k1_prime=vs(k1p)
        )
    else:
        trace = WitnessTrace(
            k_prime=vs(kp),
            s_prime=vs(sp),
            s1_prime=vs(s1p),
            k1_prime=vs(k1p),
            s1=vs(s1),
            k1=vs(k1),
            z=vs(z),
            sc=vs(sc),
            s2=vs(s2),
            w=vs(w),
        )
        _check_triple_trace(g, trace, r, bool(s2_ok))
    report = WitnessReport(
        partition=Partition(vs(x)),
        branch=_BRANCH_NAMES[branch],
        trace=trace,
        p=p,
        q=q,
        r=r,
        ramsey_mode=ramsey_mode,
        in_class=in_class,
        s2_within_bound=bool(s2_ok),
    )
    if k.mask & ~x or s.mask & x:
        raise InternalInvariantError(
            f"witness partition {vs(x)} fails to separate K={k} from S={s}"
        )
    if in_class and not s2_ok:
        raise InternalInvariantError(
            f"|S2| = {len(trace.s2)} >= R = {r} on a class member: the sets "
            f"K1={trace.k1}, S1={trace.s1}, S2={trace.s2}, W={trace.w} induce "
            f"a forbidden relaxed pattern that class membership rules out"
        )
    return report


def _check_triple_trace(g: Graph, t: WitnessTrace, r: int, s2_ok: bool) -> None:
    """Structural assertions every branch-3 trace must satisfy."""
    if not relation(g, t.k1, t.s1).matched:
        raise InternalInvariantError("K1 and S1 are not matched")
    for v in t.sc:
        if g.adj[v] & t.k1.mask != t.k1.mask:
            raise InternalInvariantError(f"SC vertex {v} is not complete to K1")
    n_s2_in_z = neighbors(g, t.s2, "open") & t.z
    n_sc_in_z = neighbors(g, t.sc, "open") & t.z
    if n_s2_in_z.mask != n_sc_in_z.mask:
        raise InternalInvariantError("S2 and SC reach different parts of Z")
    if t.s2.mask and not relation(g, t.s2, t.w).matched:
        raise InternalInvariantError("S2 and W are not matched")
    if s2_ok != (len(t.s2) < r):
        raise InternalInvariantError("s2_within_bound flag disagrees with |S2|")
