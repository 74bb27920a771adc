# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mirror of the pure kernels for graphs on at most 64 vertices.

Semantics must match cssep._kernels.pure bit for bit; the equivalence tests
hold both backends to that.
"""

from itertools import combinations

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #define CSSEP_POPCNT(x) __builtin_popcountll(x)
    #define CSSEP_CTZ(x) __builtin_ctzll(x)
    """
    int CSSEP_POPCNT(unsigned long long x) nogil
    int CSSEP_CTZ(unsigned long long x) nogil

ctypedef unsigned long long u64

cdef inline u64 _bit(int v) nogil:
    return (<u64>1) << v

cdef inline u64 _full_mask(int n) nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return _bit(n) - 1


cdef void _all_rec(u64* adj, u64 cur, u64 ext, list out):
    cdef u64 m = ext, nxt
    cdef int v
    while m:
        v = CSSEP_CTZ(m)
        m &= m - 1
        out.append(cur | _bit(v))
        nxt = ext & adj[v] & ~(((<u64>2) << v) - 1)
        if nxt:
            _all_rec(adj, cur | _bit(v), nxt, out)


cdef void _bk(u64* adj, u64 r, u64 p, u64 x, list out):
    cdef u64 m, cand
    cdef int pivot = -1, best = -1, v, score
    if p == 0 and x == 0:
        out.append(r)
        return
    m = p | x
    while m:
        v = CSSEP_CTZ(m)
        m &= m - 1
        score = CSSEP_POPCNT(p & adj[v])
        if score > best:
            best = score
            pivot = v
    cand = p & ~adj[pivot]
    m = cand
    while m:
        v = CSSEP_CTZ(m)
        m &= m - 1
        _bk(adj, r | _bit(v), p & adj[v], x & adj[v], out)
        p &= ~_bit(v)
        x |= _bit(v)


def all_cliques(u64[::1] adj, int n, bint maximal_only):
    out = []
    if n == 0:
        out.append(0)
        return out
    if maximal_only:
        _bk(&adj[0], 0, _full_mask(n), 0, out)
        return out
    out.append(0)
    _all_rec(&adj[0], 0, _full_mask(n), out)
    return out


cdef bint _emb_rec(u64* hadj, int hn, u64* padj, int pk, int i, u64 used, int* image):
    cdef u64 want
    cdef int v, j
    cdef bint ok
    if i == pk:
        return True
    want = padj[i]
    for v in range(hn):
        if used >> v & 1:
            continue
        ok = True
        for j in range(i):
            if ((want >> j) & 1) != ((hadj[v] >> image[j]) & 1):
                ok = False
                break
        if ok:
            image[i] = v
            if _emb_rec(hadj, hn, padj, pk, i + 1, used | _bit(v), image):
                return True
    return False


def graph_contains_induced(u64[::1] hadj, int hn, u64[::1] padj, int pk):
    cdef int* image
    cdef bint found
    if pk > hn:
        return False
    if pk == 0:
        return True
    image = <int*>malloc(pk * sizeof(int))
    if image == NULL:
        raise MemoryError()
    try:
        found = _emb_rec(&hadj[0], hn, &padj[0], pk, 0, 0, image)
    finally:
        free(image)
    return bool(found)


def ramsey_property_holds(int r, int q):
    cdef int n_edges, n_subsets, i
    cdef u64* masks
    cdef u64 red, blue, full, top, m
    cdef bint found
    if r < q:
        return False
    n_edges = r * (r - 1) // 2
    edge_index = {}
    i = 0
    for u in range(r):
        for v in range(u + 1, r):
            edge_index[(u, v)] = i
            i += 1
    py_masks = []
    for sub in combinations(range(r), q):
        acc = 0
        for a, b in combinations(sub, 2):
            acc |= 1 << edge_index[(a, b)]
        py_masks.append(acc)
    n_subsets = len(py_masks)
    if n_edges == 0:
        return bool(n_subsets)
    masks = <u64*>malloc(n_subsets * sizeof(u64))
    if masks == NULL:
        raise MemoryError()
    for i in range(n_subsets):
        masks[i] = py_masks[i]
    full = _full_mask(n_edges)
    top = _bit(n_edges - 1)
    try:
        for red in range(top):
            blue = full & ~red
            found = False
            for i in range(n_subsets):
                m = masks[i]
                if (red & m) == m or (blue & m) == m:
                    found = True
                    break
            if not found:
                return False
    finally:
        free(masks)
    return True


cdef u64 _extend_clique(u64* adj, int n, u64 mask) nogil:
    cdef int v
    for v in range(n):
        if not (mask >> v & 1) and (adj[v] & mask) == mask:
            mask |= _bit(v)
    return mask


cdef u64 _extend_stable(u64* adj, int n, u64 mask) nogil:
    cdef int v
    for v in range(n):
        if not (mask >> v & 1) and (adj[v] & mask) == 0:
            mask |= _bit(v)
    return mask


cdef u64 _nbr_union(u64* adj, u64 mask) nogil:
    cdef u64 acc = 0, m = mask
    cdef int v
    while m:
        v = CSSEP_CTZ(m)
        m &= m - 1
        acc |= adj[v]
    return acc


cdef bint _covers_targets(u64* adj, u64 targets, u64 trial) nogil:
    cdef u64 m = targets
    cdef int t
    while m:
        t = CSSEP_CTZ(m)
        m &= m - 1
        if (adj[t] & trial) == 0:
            return False
    return True


cdef u64 _min_neighbor_cover(u64* adj, int n, u64 targets, u64 candidates) nogil:
    cdef u64 kept = candidates, trial
    cdef int s
    for s in range(n - 1, -1, -1):
        if not (candidates >> s & 1):
            continue
        trial = kept & ~_bit(s)
        if _covers_targets(adj, targets, trial):
            kept = trial
    return kept


cdef u64 _min_scope_cover(u64* adj, int n, u64 candidates, u64 scope) nogil:
    cdef u64 want = _nbr_union(adj, candidates) & scope
    cdef u64 kept = candidates, trial
    cdef int s
    for s in range(n - 1, -1, -1):
        if not (candidates >> s & 1):
            continue
        trial = kept & ~_bit(s)
        if (_nbr_union(adj, trial) & scope) == want:
            kept = trial
    return kept


cdef u64 _a_x(u64* adj, int n, u64 k1, u64 s1, u64 s2) nogil:
    cdef u64 ks = k1 | s1, z = 0, open_ns2, reach, out = 0, row
    cdef int v
    for v in range(n):
        if (adj[v] & ks) == 0:
            z |= _bit(v)
    open_ns2 = _nbr_union(adj, s2) & ~s2
    reach = s1 | (z & ~open_ns2)
    for v in range(n):
        row = adj[v]
        if ((k1 >> v & 1) or (row & k1) == k1) and (row & reach):
            out |= _bit(v)
    return out


# Slot layout for the witness core: 0 branch, 1 x, 2 kp, 3 sp, 4 v+1,
# 5 s1p, 6 k1p, 7 s1, 8 k1, 9 z, 10 sc, 11 s2, 12 w, 13 within-cap flag.
cdef int _witness_core(u64* adj, int n, int p, long r_cap,
                       u64 kmask, u64 smask, u64* o) except -1:
    cdef u64 kp, sp, inter, s1p, k1p, s1, k1, ks, z, sc, s2, w, rest, priv, m, row
    cdef int v, i, k, s, count
    for i in range(14):
        o[i] = 0
    kp = _extend_clique(adj, n, kmask)
    sp = _extend_stable(adj, n, smask)
    o[2] = kp
    o[3] = sp
    inter = kp & sp
    if inter:
        v = CSSEP_CTZ(inter)
        if smask >> v & 1:
            o[1] = adj[v]
        else:
            o[1] = adj[v] | _bit(v)
        o[0] = 1
        o[4] = <u64>(v + 1)
        o[13] = 1
        return 0
    s1p = _min_neighbor_cover(adj, n, kp, sp)
    k1p = 0
    m = s1p
    while m:
        s = CSSEP_CTZ(m)
        m &= m - 1
        v = -1
        row = kp
        while row:
            k = CSSEP_CTZ(row)
            row &= row - 1
            if (adj[k] & s1p) == _bit(s):
                v = k
                break
        if v < 0:
            raise ValueError(
                f"cover vertex {s} has no private partner; cover not minimal"
            )
        k1p |= _bit(v)
    o[5] = s1p
    o[6] = k1p
    if CSSEP_POPCNT(s1p) < p:
        o[0] = 2
        o[1] = _nbr_union(adj, s1p) & ~s1p
        o[13] = 1
        return 0
    s1 = 0
    count = 0
    m = s1p
    while m and count < p:
        s = CSSEP_CTZ(m)
        m &= m - 1
        s1 |= _bit(s)
        count += 1
    k1 = 0
    m = k1p
    while m:
        k = CSSEP_CTZ(m)
        m &= m - 1
        if adj[k] & s1:
            k1 |= _bit(k)
    ks = k1 | s1
    z = 0
    for v in range(n):
        if (adj[v] & ks) == 0:
            z |= _bit(v)
    sc = 0
    m = sp & ~s1
    while m:
        v = CSSEP_CTZ(m)
        m &= m - 1
        if (adj[v] & k1) == k1:
            sc |= _bit(v)
    s2 = _min_scope_cover(adj, n, sc, z)
    w = 0
    m = s2
    while m:
        s = CSSEP_CTZ(m)
        m &= m - 1
        rest = _nbr_union(adj, s2 & ~_bit(s)) & z
        priv = adj[s] & z & ~rest
        if priv == 0:
            raise ValueError(
                f"cover vertex {s} has no private Z-neighbour; cover not minimal"
            )
        w |= priv & (~priv + 1)
    o[0] = 3
    o[1] = _a_x(adj, n, k1, s1, s2)
    o[7] = s1
    o[8] = k1
    o[9] = z
    o[10] = sc
    o[11] = s2
    o[12] = w
    o[13] = 1 if CSSEP_POPCNT(s2) < r_cap else 0
    return 0


def witness_search(u64[::1] adj, int n, int p, long r_cap, kmask, smask):
    cdef u64 o[14]
    cdef u64 km = kmask, sm = smask
    _witness_core(&adj[0], n, p, r_cap, km, sm, o)
    cdef long long v = <long long>o[4] - 1
    return (
        int(o[0]),
        int(o[1]),
        int(o[2]),
        int(o[3]),
        int(v),
        int(o[5]),
        int(o[6]),
        int(o[7]),
        int(o[8]),
        int(o[9]),
        int(o[10]),
        int(o[11]),
        int(o[12]),
        bool(o[13]),
    )


def coverage_scan(u64[::1] adj, int n, u64[::1] family, u64[::1] cliques,
                  u64[::1] stables, int p, long r_cap, bint with_witness):
    """family must be sorted ascending as integers (binary search)."""
    cdef Py_ssize_t fn = family.shape[0], nc = cliques.shape[0], ns = stables.shape[0]
    cdef Py_ssize_t ci, si, fi, lo, hi, mid
    cdef u64 k, s, x
    cdef u64 o[14]
    cdef long long pairs = 0
    cdef bint hit, member
    uncovered = []
    bad = []
    for ci in range(nc):
        k = cliques[ci]
        for si in range(ns):
            s = stables[si]
            if k & s:
                continue
            pairs += 1
            hit = False
            for fi in range(fn):
                x = family[fi]
                if (k & ~x) == 0 and (s & x) == 0:
                    hit = True
                    break
            if not hit:
                uncovered.append((int(k), int(s)))
            if with_witness:
                _witness_core(&adj[0], n, p, r_cap, k, s, o)
                x = o[1]
                member = False
                lo = 0
                hi = fn
                while lo < hi:
                    mid = (lo + hi) // 2
                    if family[mid] < x:
                        lo = mid + 1
                    else:
                        hi = mid
                if lo < fn and family[lo] == x:
                    member = True
                if (k & ~x) != 0 or (s & x) != 0 or not member:
                    bad.append((int(k), int(s)))
    return int(pairs), uncovered, bad
