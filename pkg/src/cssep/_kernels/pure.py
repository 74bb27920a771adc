"""Pure-Python kernels for the enumeration-heavy inner loops.

Everything here works on raw adjacency bitmasks (one int per vertex) so the
compiled backend can mirror the exact same boundary on machine words.  All
orders are deterministic; callers rely on that.
"""

from __future__ import annotations

from itertools import combinations


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def all_cliques(adj, n, maximal_only=False):
    """Bitmasks of all (or all maximal) cliques, including the empty one.

    Maximal cliques come from Bron-Kerbosch with pivoting; the full list
    comes from lexicographic extension.  Order is not canonical here, the
    dispatch layer sorts.
    """
    if maximal_only:
        out = []
        _bron_kerbosch(adj, 0, (1 << n) - 1, 0, out)
        return out
    out = [0]
    stack = [(adj[v] & ~((2 << v) - 1), 1 << v) for v in range(n - 1, -1, -1)]
    while stack:
        ext, cur = stack.pop()
        out.append(cur)
        for v in _bits(ext):
            stack.append((ext & adj[v] & ~((2 << v) - 1), cur | 1 << v))
    return out


def _bron_kerbosch(adj, r, p, x, out):
    if p == 0 and x == 0:
        out.append(r)
        return
    pivot, best = -1, -1
    for v in _bits(p | x):
        score = (p & adj[v]).bit_count()
        if score > best:
            pivot, best = v, score
    for v in _bits(p & ~adj[pivot]):
        _bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out)
        p &= ~(1 << v)
        x |= 1 << v


def graph_contains_induced(hadj, hn, padj, pk):
    """Naive induced-subgraph oracle: does the pattern embed injectively?

    Backtracks over images of pattern vertices 0..pk-1 with adjacency checked
    against every earlier image.  Boolean only.
    """
    if pk > hn:
        return False
    image = [0] * pk

    def rec(i, used):
        if i == pk:
            return True
        want = padj[i]
        for v in range(hn):
            if used >> v & 1:
                continue
            ok = True
            for j in range(i):
                if bool(want >> j & 1) != bool(hadj[v] >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = v
                if rec(i + 1, used | 1 << v):
                    return True
        return False

    return rec(0, 0)


def ramsey_property_holds(r, q):
    """Every red/blue coloring of K_r's edges contains a monochromatic K_q.

    Enumerates all colorings with the last edge pinned red (color-swap
    symmetry); keeping C(r, 2) small is the caller's job.
    """
    if r < q:
        return False
    edge_index = {}
    for i, (u, v) in enumerate(combinations(range(r), 2)):
        edge_index[(u, v)] = i
    n_edges = len(edge_index)
    subset_masks = []
    for sub in combinations(range(r), q):
        m = 0
        for u, v in combinations(sub, 2):
            m |= 1 << edge_index[(u, v)]
        subset_masks.append(m)
    if n_edges == 0:
        return bool(subset_masks)
    full = (1 << n_edges) - 1
    for red in range(1 << (n_edges - 1)):
        blue = full & ~red
        if not any(red & m == m or blue & m == m for m in subset_masks):
            return False
    return True


def extend_clique(adj, n, mask):
    """Greedy maximal clique containing ``mask``, adding vertices in index order."""
    for v in range(n):
        if not mask >> v & 1 and adj[v] & mask == mask:
            mask |= 1 << v
    return mask


def extend_stable(adj, n, mask):
    """Greedy maximal stable set containing ``mask``, adding in index order."""
    for v in range(n):
        if not mask >> v & 1 and adj[v] & mask == 0:
            mask |= 1 << v
    return mask


def neighbor_union(adj, mask):
    acc = 0
    for v in _bits(mask):
        acc |= adj[v]
    return acc


def minimal_neighbor_cover_mask(adj, targets, candidates):
    """Inclusion-minimal subset of ``candidates`` leaving every target a neighbour.

    Removal is attempted in descending index order, which prefers keeping
    low-indexed candidates.
    """
    kept = candidates
    for s in sorted(_bits(candidates), reverse=True):
        trial = kept & ~(1 << s)
        if all(adj[t] & trial for t in _bits(targets)):
            kept = trial
    return kept


def minimal_scope_cover_mask(adj, candidates, scope):
    """Inclusion-minimal subset of ``candidates`` with the same reach into ``scope``.

    Reach means neighbor_union(.) & scope.  Removal in descending index order,
    so low indices are preferred keepers.
    """
    want = neighbor_union(adj, candidates) & scope
    kept = candidates
    for s in sorted(_bits(candidates), reverse=True):
        trial = kept & ~(1 << s)
        if neighbor_union(adj, trial) & scope == want:
            kept = trial
    return kept


def private_partners(adj, clique_mask, cover_mask):
    """For each s in the cover (ascending), its lowest private clique neighbour.

    Private means the clique vertex sees s and nothing else in the cover; an
    inclusion-minimal cover guarantees one exists.  Returns (partner_mask,
    pairs) with pairs as (clique_vertex, cover_vertex).
    """
    partners = 0
    pairs = []
    for s in _bits(cover_mask):
        found = -1
        for k in _bits(clique_mask):
            if adj[k] & cover_mask == 1 << s:
                found = k
                break
        if found < 0:
            raise ValueError(f"cover vertex {s} has no private partner; cover not minimal")
        partners |= 1 << found
        pairs.append((found, s))
    return partners, tuple(pairs)


def a_x_mask(adj, n, k1, s1, s2):
    """X-side of the partition generated by the triple (K1, S1, S2).

    Z is everything anticomplete to K1 and S1.  A vertex lands on the X side
    when it is in K1 or complete to K1, and has a neighbour in S1 or in
    Z minus N(S2).
    """
    ks = k1 | s1
    z = 0
    for v in range(n):
        if adj[v] & ks == 0:
            z |= 1 << v
    open_ns2 = neighbor_union(adj, s2) & ~s2
    reach = s1 | (z & ~open_ns2)
    out = 0
    for v in range(n):
        row = adj[v]
        if (k1 >> v & 1 or row & k1 == k1) and row & reach:
            out |= 1 << v
    return out


BRANCH_INTERSECTION = 1
BRANCH_SMALL_COVER = 2
BRANCH_TRIPLE = 3


def witness_search(adj, n, p, r_cap, k_mask, s_mask):
    """Run the constructive separation argument on one (clique, stable) pair.

    Returns (branch, x_side, k_prime, s_prime, v, s1_prime, k1_prime,
    s1, k1, z, sc, s2, w, s2_within_cap).  Unused fields are 0 (v is -1).
    The caller validates that k_mask is a clique, s_mask stable, disjoint.
    """
    kp = extend_clique(adj, n, k_mask)
    sp = extend_stable(adj, n, s_mask)
    inter = kp & sp
    if inter:
        v = (inter & -inter).bit_length() - 1
        if s_mask >> v & 1:
            x = adj[v]
        else:
            x = adj[v] | 1 << v
        return (BRANCH_INTERSECTION, x, kp, sp, v, 0, 0, 0, 0, 0, 0, 0, 0, True)
    s1p = minimal_neighbor_cover_mask(adj, kp, sp)
    k1p, _pairs = private_partners(adj, kp, s1p)
    if s1p.bit_count() < p:
        x = neighbor_union(adj, s1p) & ~s1p
        return (BRANCH_SMALL_COVER, x, kp, sp, -1, s1p, k1p, 0, 0, 0, 0, 0, 0, True)
    s1 = 0
    for i, s in enumerate(_bits(s1p)):
        if i == p:
            break
        s1 |= 1 << s
    k1 = 0
    for k in _bits(k1p):
        if adj[k] & s1:
            k1 |= 1 << k
    ks = k1 | s1
    z = 0
    for u in range(n):
        if adj[u] & ks == 0:
            z |= 1 << u
    sc = 0
    for u in _bits(sp & ~s1):
        if adj[u] & k1 == k1:
            sc |= 1 << u
    s2 = minimal_scope_cover_mask(adj, sc, z)
    w = 0
    for s in _bits(s2):
        rest = neighbor_union(adj, s2 & ~(1 << s)) & z
        priv = adj[s] & z & ~rest
        if priv == 0:
            raise ValueError(f"cover vertex {s} has no private Z-neighbour; cover not minimal")
        w |= priv & -priv
    x = a_x_mask(adj, n, k1, s1, s2)
    ok = s2.bit_count() < r_cap
    return (BRANCH_TRIPLE, x, kp, sp, -1, s1p, k1p, s1, k1, z, sc, s2, w, ok)


def coverage_scan(adj, n, family, cliques, stables, p, r_cap, with_witness):
    """Check every disjoint (clique, stable) pair against the family.

    Returns (pairs_checked, uncovered, witness_bad): uncovered pairs have no
    family partition with K inside the X side and S outside it; witness_bad
    pairs are those whose witness partition fails to separate them or is
    missing from the family.  Pair lists keep enumeration order.
    """
    fam_set = set(family)
    fam_list = list(family)
    pairs_checked = 0
    uncovered = []
    witness_bad = []
    for k in cliques:
        for s in stables:
            if k & s:
                continue
            pairs_checked += 1
            hit = False
            for x in fam_list:
                if k & ~x == 0 and s & x == 0:
                    hit = True
                    break
            if not hit:
                uncovered.append((k, s))
            if with_witness:
                res = witness_search(adj, n, p, r_cap, k, s)
                x = res[1]
                if k & ~x or s & x or x not in fam_set:
                    witness_bad.append((k, s))
    return pairs_checked, uncovered, witness_bad
