"""Graphs with ordered edge lists: parsing, canonical forms, symmetries.

A graph is stored with vertices labeled 1..n and an *ordered* list of
edges; the list order is the wedge ordering of the edge set.  Two
labeled graphs represent the same class when one can be relabeled onto
the other; swapping two edges in the ordering flips the sign of the
class.  A graph admitting a self-map that induces an odd permutation of
its edges equals minus itself, and is therefore a "zero graph": its
class is 0 and no sign can be attached to it.

Canonical form: over all vertex relabelings, take the one whose sorted
edge list is lexicographically minimal; the reported sign is the parity
of the permutation that sorts the relabeled list.  For non-zero graphs
this sign does not depend on which minimizing relabeling is picked (any
two differ by an edge-even automorphism).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional

from graphcomplex import kernel


class ParseError(ValueError):
    """Malformed graph or sum literal."""


class InvariantError(ValueError):
    """Structurally invalid value (loop, duplicate edge, bad index...)."""


class NotAutomorphismError(ValueError):
    """Vertex map does not preserve the edge set."""


@dataclass(frozen=True)
class Graph:
    """A labeled representative: vertex count and ordered edge list.

    Pairs are normalized to (min, max) on construction without changing
    their list positions.  Loops, repeated edges, out-of-range indices
    and empty edge lists are rejected.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvariantError(f"vertex count must be >= 1, got {self.n}")
        norm = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise InvariantError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (1 <= u and v <= self.n):
                raise InvariantError(f"edge ({e[0]},{e[1]}) out of range 1..{self.n}")
            norm.append((u, v))
        if not norm:
            raise InvariantError("graph must have at least one edge")
        if len(set(norm)) != len(norm):
            raise InvariantError("duplicate edge")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def k(self) -> int:
        return len(self.edges)

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def relabel(self, images: "VertexPermutation") -> "Graph":
        """Apply a vertex relabeling; edge list positions are kept."""
        im = images.images
        return Graph(self.n, tuple((im[u - 1], im[v - 1]) for u, v in self.edges))

    def __str__(self) -> str:
        return serialize_graph(self)


def _graph_unchecked(n: int, edges: tuple[tuple[int, int], ...]) -> Graph:
    """Build a Graph known to satisfy the invariants, skipping checks.

    Used on hot paths (blow-up term generation, canonical forms) where
    validity holds by construction.
    """
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "edges", edges)
    return g


@dataclass(frozen=True, order=True)
class VertexPermutation:
    """A bijection of {1..n}, stored as the tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvariantError(f"not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "VertexPermutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def compose(self, other: "VertexPermutation") -> "VertexPermutation":
        """self after other: (self.compose(other))(v) = self(other(v))."""
        return VertexPermutation(tuple(self.images[w - 1] for w in other.images))

    def inverse(self) -> "VertexPermutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images, start=1):
            inv[w - 1] = v
        return VertexPermutation(tuple(inv))


@dataclass(frozen=True)
class CanonicalResult:
    """Canonical representative plus a sign, or the zero-graph verdict.

    ``sign`` is None exactly when the input is a zero graph; the sign of
    a zero graph is ill-defined (the graph equals minus itself).
    """

    canonical: Graph
    sign: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.sign is None


_GRAPH_RE = re.compile(r"(\d+): *\((\d+),(\d+)\)((?:, *\(\d+,\d+\))*)")
_EDGE_RE = re.compile(r", *\((\d+),(\d+)\)")


def parse_graph(text: str) -> Graph:
    """Parse ``n: (u,v),(u,v),...`` into a Graph.

    Spaces are optional after ':' and after the commas separating edges.
    """
    m = _GRAPH_RE.fullmatch(text.strip())
    if m is None:
        raise ParseError(f"malformed graph literal: {text!r}")
    n = int(m.group(1))
    edges = [(int(m.group(2)), int(m.group(3)))]
    edges.extend((int(a), int(b)) for a, b in _EDGE_RE.findall(m.group(4)))
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph; emits edges in stored order."""
    return f"{g.n}: " + ",".join(f"({u},{v})" for u, v in g.edges)


def induced_edge_sign(g: Graph, p: VertexPermutation) -> int:
    """Parity of the edge permutation induced by an automorphism.

    Edge at position i is sent to the position holding its relabeled
    pair; raises NotAutomorphismError if some relabeled pair is not an
    edge of g.
    """
    if len(p.images) != g.n:
        raise NotAutomorphismError(f"permutation size {len(p.images)} != {g.n}")
    pos = {e: i for i, e in enumerate(g.edges)}
    im = p.images
    positions = []
    for u, v in g.edges:
        a, b = im[u - 1], im[v - 1]
        if a > b:
            a, b = b, a
        try:
            positions.append(pos[(a, b)])
        except KeyError:
            raise NotAutomorphismError(
                f"({u},{v}) maps to ({a},{b}), which is not an edge"
            ) from None
    return _permutation_parity(positions)


def _permutation_parity(positions) -> int:
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


@lru_cache(maxsize=1 << 18)
def _search(n: int, edges: tuple[tuple[int, int], ...]):
    return kernel.search_canonical(n, edges)


# Reduction hot path: raw sums reach millions of terms but far fewer
# distinct labeled graphs, and only (canonical edges, sign) is needed
# there.  Keys are packed to bytes to keep the cache small; canonical
# tuples are interned since only a handful of classes occur per run.
_CLASS_CACHE: dict[bytes, tuple] = {}
_CLASS_INTERN: dict[tuple, tuple] = {}
_CLASS_CACHE_CAP = 1_500_000


def canonical_class(n: int, edges: tuple[tuple[int, int], ...]):
    """(canonical edge list, sign) of a labeled graph; sign 0 when zero."""
    if n > 255:
        canon_edges, _, sign, odd = kernel.search_canonical(n, edges)
        return canon_edges, (0 if odd is not None else sign)
    ba = bytearray([n])
    for u, v in edges:
        ba.append(u)
        ba.append(v)
    key = bytes(ba)
    hit = _CLASS_CACHE.get(key)
    if hit is not None:
        return hit
    canon_edges, _, sign, odd = kernel.search_canonical(n, edges)
    canon_edges = _CLASS_INTERN.setdefault(canon_edges, canon_edges)
    val = (canon_edges, 0 if odd is not None else sign)
    if len(_CLASS_CACHE) >= _CLASS_CACHE_CAP:
        _CLASS_CACHE.clear()
    _CLASS_CACHE[key] = val
    return val


def canonical_search(g: Graph):
    """Full canonical data: (canonical, relabeling, sign, odd relabeling).

    ``relabeling`` is the lexicographically smallest vertex map carrying
    g onto the canonical representative; ``sign`` is its edge-sorting
    parity.  ``odd`` is a minimizing relabeling of the opposite parity
    when one exists (i.e. for zero graphs), else None.
    """
    canon_edges, images, sign, odd = _search(g.n, g.edges)
    return (
        _graph_unchecked(g.n, canon_edges),
        VertexPermutation(images),
        sign,
        None if odd is None else VertexPermutation(odd),
    )


def canonicalize(g: Graph) -> CanonicalResult:
    """Canonical representative with sign, or the zero-graph verdict."""
    canon_edges, _, sign, odd = _search(g.n, g.edges)
    return CanonicalResult(
        _graph_unchecked(g.n, canon_edges), None if odd is not None else sign
    )


def automorphisms(g: Graph) -> list[VertexPermutation]:
    """All adjacency-preserving vertex bijections, lexicographic order."""
    return [VertexPermutation(im) for im in kernel.automorphism_images(g.n, g.edges)]


def is_zero_graph(g: Graph) -> tuple[bool, Optional[VertexPermutation]]:
    """Does g equal minus itself under a symmetry?  Returns a witness.

    The witness is an automorphism inducing an odd edge permutation,
    assembled from two minimizing relabelings of opposite parity.
    """
    _, best, _, odd = _search(g.n, g.edges)
    if odd is None:
        return False, None
    witness = VertexPermutation(best).inverse().compose(VertexPermutation(odd))
    assert induced_edge_sign(g, witness) == -1
    return True, witness


def is_leafless(g: Graph) -> bool:
    """True iff every vertex has degree >= 2."""
    return min(g.degrees()) >= 2


def _is_connected(n: int, edges) -> bool:
    if n == 1:
        return True
    nbr = [[] for _ in range(n + 1)]
    for u, v in edges:
        nbr[u].append(v)
        nbr[v].append(u)
    seen = [False] * (n + 1)
    stack = [1]
    seen[1] = True
    count = 1
    while stack:
        for w in nbr[stack.pop()]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def enumerate_graphs(
    n: int,
    k: int,
    *,
    connected: bool = False,
    leafless: bool = False,
    exclude_zero: bool = False,
) -> list[Graph]:
    """Canonical representatives of all classes on (n, k), one each.

    Filters: ``connected``, ``leafless`` (min degree 2), ``exclude_zero``
    (drop graphs that equal minus themselves).  Output is sorted by edge
    list, so it is deterministic and duplicate-free; every entry is its
    own canonical form.
    """
    if n < 1:
        raise InvariantError(f"vertex count must be >= 1, got {n}")
    maxk = n * (n - 1) // 2
    if k < 1 or k > maxk:
        raise InvariantError(f"edge count must be in 1..{maxk}, got {k}")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    found: set[tuple[tuple[int, int], ...]] = set()
    for sub in combinations(pairs, k):
        if leafless:
            deg = [0] * (n + 1)
            for u, v in sub:
                deg[u] += 1
                deg[v] += 1
            if min(deg[1:]) < 2:
                continue
        if connected and not _is_connected(n, sub):
            continue
        canon_edges, _, _, odd = _search(n, sub)
        if exclude_zero and odd is not None:
            continue
        found.add(canon_edges)
    return [_graph_unchecked(n, edges) for edges in sorted(found)]


def all_graphs_up_to(
    max_vertices: int,
    *,
    max_edges: Optional[int] = None,
    leafless: bool = False,
    connected: bool = False,
    exclude_zero: bool = False,
) -> Iterator[Graph]:
    """All classes with 2..max_vertices vertices, in (n, k) order."""
    for n in range(2, max_vertices + 1):
        top = n * (n - 1) // 2
        if max_edges is not None:
            top = min(top, max_edges)
        for k in range(1, top + 1):
            yield from enumerate_graphs(
                n, k, connected=connected, leafless=leafless, exclude_zero=exclude_zero
            )
