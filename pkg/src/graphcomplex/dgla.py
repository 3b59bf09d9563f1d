"""The differential graded Lie algebra structure on graph sums.

Insertion of a graph into a vertex distributes the incident edges over
the inserted vertices, Leibniz-style: one term per ordered assignment
of the incident edges.  Every term of an insertion carries the wedge
ordering "inserted graph's edges first, host's edges after, reattached
edges keeping their host positions".  The bracket is the graded
commutator of insertions, graded by edge count; the differential
inserts the single edge.  On leafless graphs the differential reduces
to the two-non-empty-part expansion, which is what ``d_direct``
computes.

Vertex labels in a blow-up term: the host's remaining vertices are
compacted to 1..n2-1 (labels above the replaced vertex shift down by
one) and the inserted graph occupies n2..n2+n1-1.  Any deterministic
choice works -- classes are label-independent -- but this one is fixed
so raw sums are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from graphcomplex.graphs import (
    Graph,
    InvariantError,
    _graph_unchecked,
    is_leafless,
)
from graphcomplex.sums import GraphSum, RawSum, Term, reduce

SINGLE_EDGE = Graph(2, ((1, 2),))

_EDGE_SUM = GraphSum({SINGLE_EDGE: Fraction(1)})


class LeafyGraphError(InvariantError):
    """d_direct is only defined on leafless graphs."""


@dataclass(frozen=True)
class OrderedPartition:
    """Assignment of a vertex's incident edges to labeled parts.

    ``positions`` are the edge-list positions incident to the vertex;
    ``targets[i]`` is the part (1..n_parts) receiving that edge.  Parts
    may be empty unless constructed with the non-empty restriction.
    """

    positions: tuple[int, ...]
    targets: tuple[int, ...]
    n_parts: int

    def parts(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(p for p, t in zip(self.positions, self.targets) if t == part)
            for part in range(1, self.n_parts + 1)
        )


def incident_positions(g: Graph, v: int) -> tuple[int, ...]:
    if not (1 <= v <= g.n):
        raise InvariantError(f"vertex {v} out of range 1..{g.n}")
    return tuple(i for i, e in enumerate(g.edges) if v in e)


def ordered_partitions(
    g: Graph, v: int, n_parts: int, *, nonempty: bool = False
) -> Iterator[OrderedPartition]:
    """All assignments of v's incident edges to n_parts labeled parts.

    With ``nonempty``, only assignments covering every part survive.
    """
    positions = incident_positions(g, v)
    for targets in product(range(1, n_parts + 1), repeat=len(positions)):
        if nonempty and len(set(targets)) != n_parts:
            continue
        yield OrderedPartition(positions, targets, n_parts)


def _blow_up_term(g1: Graph, g2: Graph, v: int, partition: OrderedPartition) -> Graph:
    base = g2.n - 1
    edges = [(base + a, base + b) for a, b in g1.edges]
    target = dict(zip(partition.positions, partition.targets))
    for pos, (a, b) in enumerate(g2.edges):
        if a == v or b == v:
            w = b if a == v else a
            if w > v:
                w -= 1
            edges.append((w, base + target[pos]))
        else:
            edges.append((a - (a > v), b - (b > v)))
    return _graph_unchecked(g1.n + g2.n - 1, tuple(edges))


def iter_blow_up(g1: Graph, g2: Graph, v: int) -> Iterator[Graph]:
    # Inlined twin of _blow_up_term over all partitions; this is the
    # innermost generator of every bracket, so it avoids the dataclass
    # and dict machinery.  Term order matches ordered_partitions.
    base = g2.n - 1
    n_out = g1.n + g2.n - 1
    head = tuple((base + a, base + b) for a, b in g1.edges)
    tail: list = []
    open_slots = []
    for a, b in g2.edges:
        if a == v or b == v:
            w = b if a == v else a
            if w > v:
                w -= 1
            open_slots.append(len(tail))
            tail.append(w)
        else:
            tail.append((a - (a > v), b - (b > v)))
    for targets in product(range(base + 1, base + g1.n + 1), repeat=len(open_slots)):
        edges = list(tail)
        for slot, t in zip(open_slots, targets):
            edges[slot] = (tail[slot], t)
        yield _graph_unchecked(n_out, head + tuple(edges))


def blow_up(g1: Graph, g2: Graph, v: int) -> RawSum:
    """Replace vertex v of g2 by g1, summing over all reattachments.

    Exactly n1^deg(v) terms, each with coefficient +1 and edge ordering
    E(g1) before E(g2).
    """
    if not (1 <= v <= g2.n):
        raise InvariantError(f"vertex {v} out of range 1..{g2.n}")
    return [(Fraction(1), t) for t in iter_blow_up(g1, g2, v)]


def iter_insert(g1: Graph, g2: Graph) -> Iterator[Graph]:
    for v in range(1, g2.n + 1):
        yield from iter_blow_up(g1, g2, v)


def insert(g1: Graph, g2: Graph) -> RawSum:
    """Insert g1 into every vertex of g2: the blow-ups concatenated."""
    return [(Fraction(1), t) for t in iter_insert(g1, g2)]


def iter_bracket_raw(g1: Graph, g2: Graph) -> Iterator[Term]:
    """Graded commutator, term by term.

    The subtrahend's terms keep their native edge ordering (g2's edges
    first); their coefficient -(-1)^(k1 k2) accounts for the grading by
    edge count.  All normalization happens later, in reduction.
    """
    sub = -((-1) ** (g1.k * g2.k))
    for t in iter_insert(g1, g2):
        yield 1, t
    for t in iter_insert(g2, g1):
        yield sub, t


def bracket_raw(g1: Graph, g2: Graph) -> RawSum:
    return [(Fraction(c), t) for c, t in iter_bracket_raw(g1, g2)]


def bracket(a: GraphSum, b: GraphSum) -> GraphSum:
    """Bilinear extension of the graph bracket, reduced."""

    def terms():
        for ga, ca in a.items():
            for gb, cb in b.items():
                c = ca * cb
                for sgn, t in iter_bracket_raw(ga, gb):
                    yield (c if sgn > 0 else -c), t

    return reduce(terms())


def d_via_bracket(a: GraphSum) -> GraphSum:
    """The vertex-expanding differential: bracket with the single edge."""
    return bracket(_EDGE_SUM, a)


def d_direct(g: Graph) -> RawSum:
    """The differential of a leafless graph, without leaved terms.

    Sums the single-edge blow-ups over ordered partitions of each
    vertex's incident edges into two non-empty sets; that equals the
    bracket form on leafless inputs, with sum_v (2^deg(v) - 2) terms
    and the new edge first in every term's ordering.
    """
    if not is_leafless(g):
        raise LeafyGraphError(f"graph has a vertex of degree < 2: {g}")
    out: RawSum = []
    for v in range(1, g.n + 1):
        for partition in ordered_partitions(g, v, 2, nonempty=True):
            out.append((Fraction(1), _blow_up_term(SINGLE_EDGE, g, v, partition)))
    return out


def iter_jacobiator(g1: Graph, g2: Graph, g3: Graph) -> Iterator[Term]:
    k1, k2, k3 = g1.k, g2.k, g3.k
    cyc = (
        (g1, g2, g3, 1),
        (g2, g3, g1, (-1) ** (k1 * k2 + k1 * k3)),
        (g3, g1, g2, (-1) ** (k1 * k3 + k2 * k3)),
    )
    for ga, gb, gc, pref in cyc:
        for c, t in iter_bracket_raw(ga, gb):
            cc = pref * c
            for c2, u in iter_bracket_raw(t, gc):
                yield cc * c2, u


def jacobiator(g1: Graph, g2: Graph, g3: Graph) -> RawSum:
    """The graded Jacobi combination of nested brackets, unreduced.

    Edge orderings ride along through both bracket layers; the three
    summands carry the Koszul prefactors for cycling the arguments.
    """
    return [(Fraction(c), t) for c, t in iter_jacobiator(g1, g2, g3)]


def is_cocycle(a: GraphSum) -> bool:
    return d_via_bracket(a).is_zero
