# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled canonical-form kernel.

Port of ``_kernel_py`` with C arrays and bit tricks; outputs are
bit-identical to the pure twin.  Limited to 32 vertices, far beyond the
desk scale this engine targets.
"""

cdef extern from *:
    int __builtin_popcount(unsigned int) nogil

cdef enum:
    MAXN = 32
    MAXK = 496  # 32*31/2

cdef struct CState:
    int n
    int k
    unsigned int adj[MAXN]
    int deg[MAXN]
    int eu[MAXK]
    int ev[MAXK]
    unsigned int used
    int perm[MAXN]
    unsigned int rowbits[MAXN]
    int unb[MAXN]
    bint has_best
    unsigned int best_rows[MAXN]
    int rank[MAXN * MAXN]
    bint has_pos
    bint has_neg
    int img_pos[MAXN]
    int img_neg[MAXN]
    int images[MAXN]
    int positions[MAXK]
    char seen[MAXK]


cdef bint _img_less(int* a, int* b, int n) nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


cdef void _leaf(CState* s) nogil:
    cdef int n = s.n
    cdef int i, j, t, a, b, jj, length, cmp, parity
    cmp = 1
    if s.has_best:
        cmp = 0
        for i in range(n):
            if s.rowbits[i] != s.best_rows[i]:
                cmp = 1 if s.rowbits[i] > s.best_rows[i] else -1
                break
    if cmp < 0:
        return
    if cmp > 0:
        s.has_best = True
        t = 0
        for i in range(n):
            s.best_rows[i] = s.rowbits[i]
        for i in range(n):
            for j in range(i + 1, n):
                if (s.best_rows[i] >> (n - 1 - j)) & 1:
                    s.rank[i * MAXN + j] = t
                    t += 1
        s.has_pos = False
        s.has_neg = False
    for i in range(n):
        s.images[s.perm[i]] = i
    for t in range(s.k):
        a = s.images[s.eu[t]]
        b = s.images[s.ev[t]]
        if a < b:
            s.positions[t] = s.rank[a * MAXN + b]
        else:
            s.positions[t] = s.rank[b * MAXN + a]
    parity = 1
    for t in range(s.k):
        s.seen[t] = 0
    for t in range(s.k):
        if s.seen[t]:
            continue
        jj = t
        length = 0
        while not s.seen[jj]:
            s.seen[jj] = 1
            jj = s.positions[jj]
            length += 1
        if length % 2 == 0:
            parity = -parity
    if parity > 0:
        if not s.has_pos or _img_less(s.images, s.img_pos, n):
            for i in range(n):
                s.img_pos[i] = s.images[i]
            s.has_pos = True
    else:
        if not s.has_neg or _img_less(s.images, s.img_neg, n):
            for i in range(n):
                s.img_neg[i] = s.images[i]
            s.has_neg = True


cdef void _descend(CState* s, int m) nogil:
    cdef int n = s.n
    cdef int i, w, oi, t, b, rem, nc, score, j
    cdef unsigned int bit, aw, opt, bb
    cdef bint prune
    cdef int cands[MAXN]
    cdef int scores[MAXN]
    if m == n:
        _leaf(s)
        return
    rem = n - 1 - m
    # Candidate order: most edges into the assigned set first, then
    # degree, then index (insertion sort, descending score).
    nc = 0
    for w in range(n):
        if s.used >> w & 1:
            continue
        score = (__builtin_popcount(s.adj[w] & s.used) << 6) | s.deg[w]
        j = nc
        while j > 0 and scores[j - 1] < score:
            scores[j] = scores[j - 1]
            cands[j] = cands[j - 1]
            j -= 1
        scores[j] = score
        cands[j] = w
        nc += 1
    for oi in range(nc):
        w = cands[oi]
        bit = (<unsigned int> 1) << w
        aw = s.adj[w]
        for i in range(m):
            b = (aw >> s.perm[i]) & 1
            s.rowbits[i] = (s.rowbits[i] << 1) | <unsigned int> b
            s.unb[i] -= b
        s.used |= bit
        s.perm[m] = w
        s.unb[m] = __builtin_popcount(aw & ~s.used)
        prune = False
        if s.has_best:
            for i in range(m + 1):
                t = s.unb[i]
                if t > rem:
                    t = rem
                opt = (s.rowbits[i] << rem) | \
                    ((((<unsigned int> 1) << t) - 1) << (rem - t))
                bb = s.best_rows[i]
                if opt < bb:
                    prune = True
                    break
                if opt > bb:
                    break
        if not prune:
            _descend(s, m + 1)
        s.used &= ~bit
        for i in range(m):
            s.unb[i] += s.rowbits[i] & 1
            s.rowbits[i] >>= 1


def search_canonical(n, edges):
    """Identical contract to graphcomplex._kernel_py.search_canonical."""
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} vertices")
    cdef CState s
    cdef int i, j, t, u, v, sign
    s.n = n
    s.k = len(edges)
    if s.k > MAXK:
        raise ValueError("too many edges")
    for i in range(n):
        s.adj[i] = 0
    for t, (uu, vv) in enumerate(edges):
        u = uu - 1
        v = vv - 1
        s.eu[t] = u
        s.ev[t] = v
        s.adj[u] |= (<unsigned int> 1) << v
        s.adj[v] |= (<unsigned int> 1) << u
    for i in range(n):
        s.deg[i] = __builtin_popcount(s.adj[i])
    s.used = 0
    s.has_best = False
    s.has_pos = False
    s.has_neg = False
    _descend(&s, 0)

    canon = []
    for i in range(n):
        for j in range(i + 1, n):
            if (s.best_rows[i] >> (n - 1 - j)) & 1:
                canon.append((i + 1, j + 1))
    canon_edges = tuple(canon)

    if s.has_pos and s.has_neg:
        if _img_less(s.img_pos, s.img_neg, n):
            best = tuple(s.img_pos[i] + 1 for i in range(n))
            odd = tuple(s.img_neg[i] + 1 for i in range(n))
            sign = 1
        else:
            best = tuple(s.img_neg[i] + 1 for i in range(n))
            odd = tuple(s.img_pos[i] + 1 for i in range(n))
            sign = -1
        return canon_edges, best, sign, odd
    if s.has_pos:
        return canon_edges, tuple(s.img_pos[i] + 1 for i in range(n)), 1, None
    return canon_edges, tuple(s.img_neg[i] + 1 for i in range(n)), -1, None


cdef void _auts(int n, unsigned int* adj, int* deg, int* images,
                unsigned int* usedp, int v, list out):
    cdef int w, u
    cdef unsigned int bit, av, aw
    if v == n:
        out.append(tuple(images[u] + 1 for u in range(n)))
        return
    av = adj[v]
    for w in range(n):
        bit = (<unsigned int> 1) << w
        if usedp[0] & bit or deg[w] != deg[v]:
            continue
        aw = adj[w]
        u = 0
        while u < v:
            if ((av >> u) & 1) != ((aw >> images[u]) & 1):
                break
            u += 1
        if u == v:
            images[v] = w
            usedp[0] |= bit
            _auts(n, adj, deg, images, usedp, v + 1, out)
            usedp[0] &= ~bit


def automorphism_images(n, edges):
    """Identical contract to graphcomplex._kernel_py.automorphism_images."""
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} vertices")
    cdef unsigned int adj[MAXN]
    cdef int deg[MAXN]
    cdef int images[MAXN]
    cdef unsigned int used = 0
    cdef int i, u, v
    for i in range(n):
        adj[i] = 0
    for uu, vv in edges:
        u = uu - 1
        v = vv - 1
        adj[u] |= (<unsigned int> 1) << v
        adj[v] |= (<unsigned int> 1) << u
    for i in range(n):
        deg[i] = __builtin_popcount(adj[i])
    out = []
    _auts(n, adj, deg, images, &used, 0, out)
    return out
