"""Pure-Python canonical-form kernel.

This is the fallback twin of the compiled extension ``_kernel_c``; both
expose the same two functions with identical outputs:

``search_canonical(n, edges)``
    Exhaustive (pruned) search over all vertex relabelings for the one
    whose lexicographically sorted edge list is minimal.

``automorphism_images(n, edges)``
    All adjacency-preserving vertex bijections, as image tuples in
    lexicographic order.

Vertices are 1-based at this interface, matching the Graph type; the
search itself runs 0-based on adjacency bitmasks.

The search maximises the upper-triangular adjacency bits read in
row-major order, which is equivalent to minimising the sorted edge list
(an edge appearing earlier in the pair ordering makes the edge list
lexicographically smaller).  Pruning compares an optimistic completion
bound row by row against the incumbent, so branches are cut as soon as
no completion can reach the current best.
"""

from __future__ import annotations


def _parity(positions):
    """Parity (+1/-1) of a permutation given in one-line form."""
    seen = [False] * len(positions)
    parity = 1
    for i in range(len(positions)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = positions[j]
            length += 1
        if length % 2 == 0:
            parity = -parity
    return parity


def search_canonical(n, edges):
    """Return ``(canon_edges, images, sign, odd_images)``.

    canon_edges: the minimal sorted edge list over all relabelings
        (1-based pairs).
    images: lexicographically smallest relabeling (old->new, 1-based)
        achieving it.
    sign: parity of the permutation that sorts the edge list relabeled
        by ``images``.
    odd_images: a minimizing relabeling whose sorting parity differs
        from ``sign``, or None.  Present iff the graph equals minus
        itself under a symmetry.
    """
    adj = [0] * n
    for u, v in edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    k = len(edges)
    deg = [adj[w].bit_count() for w in range(n)]

    perm = [0] * n          # new label -> old vertex
    rowbits = [0] * n       # rowbits[i]: known bits of row i (columns i+1..m)
    unb = [0] * n           # unb[i]: unassigned neighbours of perm[i]
    used = 0

    best_rows = None
    best_rank = None        # canonical edge pair (0-based) -> position
    by_sign = {}            # sort parity -> lex-smallest images tuple

    def record_leaf():
        nonlocal best_rows, best_rank, by_sign
        improved = best_rows is None or rowbits > best_rows
        if improved:
            best_rows = rowbits.copy()
            canon = []
            for i in range(n):
                row = best_rows[i]
                for j in range(i + 1, n):
                    if (row >> (n - 1 - j)) & 1:
                        canon.append((i, j))
            best_rank = {e: t for t, e in enumerate(canon)}
            by_sign = {}
        elif rowbits != best_rows:
            return
        images = [0] * n
        for lab in range(n):
            images[perm[lab]] = lab
        positions = []
        for u, v in edges:
            a = images[u - 1]
            b = images[v - 1]
            positions.append(best_rank[(a, b) if a < b else (b, a)])
        sign = _parity(positions)
        tup = tuple(x + 1 for x in images)
        cur = by_sign.get(sign)
        if cur is None or tup < cur:
            by_sign[sign] = tup

    def descend(m):
        nonlocal used
        if m == n:
            record_leaf()
            return
        rem = n - 1 - m
        # Candidate order: most edges into the assigned set first, then
        # degree, then index.  Purely a traversal heuristic (the search
        # is exhaustive up to pruning); it tightens the incumbent early.
        cands = sorted(
            (w for w in range(n) if not used >> w & 1),
            key=lambda w: (-(adj[w] & used).bit_count(), -deg[w], w),
        )
        for w in cands:
            bit = 1 << w
            # Tentatively give w the label m.
            aw = adj[w]
            touched = []
            for i in range(m):
                b = (aw >> perm[i]) & 1
                rowbits[i] = (rowbits[i] << 1) | b
                if b:
                    unb[i] -= 1
                    touched.append(i)
            used |= bit
            perm[m] = w
            unb[m] = (aw & ~used).bit_count()

            prune = False
            if best_rows is not None:
                for i in range(m + 1):
                    t = unb[i]
                    if t > rem:
                        t = rem
                    opt = (rowbits[i] << rem) | ((1 << t) - 1) << (rem - t)
                    b = best_rows[i]
                    if opt < b:
                        prune = True
                        break
                    if opt > b:
                        break
            if not prune:
                descend(m + 1)

            used &= ~bit
            for i in range(m):
                rowbits[i] >>= 1
            for i in touched:
                unb[i] += 1

    descend(0)

    canon_edges = []
    for i in range(n):
        row = best_rows[i]
        for j in range(i + 1, n):
            if (row >> (n - 1 - j)) & 1:
                canon_edges.append((i + 1, j + 1))
    canon_edges = tuple(canon_edges)
    assert len(canon_edges) == k

    signs = sorted(by_sign)
    if len(signs) == 2:
        a, b = by_sign[signs[0]], by_sign[signs[1]]
        if a < b:
            return canon_edges, a, signs[0], b
        return canon_edges, b, signs[1], a
    sign = signs[0]
    return canon_edges, by_sign[sign], sign, None


def automorphism_images(n, edges):
    """All adjacency-preserving bijections as 1-based image tuples.

    Output is in lexicographic order and always contains the identity.
    """
    adj = [0] * n
    for u, v in edges:
        adj[u - 1] |= 1 << (v - 1)
        adj[v - 1] |= 1 << (u - 1)
    deg = [adj[i].bit_count() for i in range(n)]

    images = [0] * n
    used = 0
    out = []

    def assign(v):
        nonlocal used
        if v == n:
            out.append(tuple(x + 1 for x in images))
            return
        av = adj[v]
        for w in range(n):
            bit = 1 << w
            if used & bit or deg[w] != deg[v]:
                continue
            ok = True
            aw = adj[w]
            for u in range(v):
                if ((av >> u) & 1) != ((aw >> images[u]) & 1):
                    ok = False
                    break
            if ok:
                images[v] = w
                used |= bit
                assign(v + 1)
                used &= ~bit
        return

    assign(0)
    return out
