"""Formal sums of graphs and their reduction.

Two layers:

* ``RawSum`` -- a plain ordered list of (rational, Graph) terms, the
  free vector space of edge-ordered graphs.  Nothing is identified.
* ``GraphSum`` -- the reduced class: canonical non-zero graphs mapped to
  nonzero rationals.  Reduction canonicalizes every term, folds the
  edge-reordering sign into the coefficient, drops zero graphs and
  cancels.

``cancellation_certificate`` witnesses the stronger statement that a
raw sum cancels pairwise under the edge-reordering relation alone,
without appealing to zero-graph elimination: it pairs up terms inside
each isomorphism class together with an explicit isomorphism per pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

from graphcomplex.graphs import (
    Graph,
    ParseError,
    VertexPermutation,
    _graph_unchecked,
    canonical_class,
    canonical_search,
    parse_graph,
    serialize_graph,
)

Term = tuple[Fraction, Graph]
RawSum = list[Term]


class NonUnitCoefficientError(ValueError):
    """Certificate matching needs all coefficients equal to +1 or -1."""


class GraphSum(Mapping[Graph, Fraction]):
    """Reduced element: canonical non-zero graphs -> nonzero rationals."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Optional[Mapping[Graph, Fraction]] = None):
        self._entries: dict[Graph, Fraction] = {}
        if entries:
            for g, c in entries.items():
                c = Fraction(c)
                if c:
                    self._entries[g] = c

    @classmethod
    def zero(cls) -> "GraphSum":
        return cls()

    @classmethod
    def from_graph(cls, g: Graph, coeff=1) -> "GraphSum":
        """The class of a single graph: canonicalized, or zero."""
        return reduce([(Fraction(coeff), g)])

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def items(self):
        return self._entries.items()

    def __getitem__(self, g: Graph) -> Fraction:
        return self._entries[g]

    def __iter__(self) -> Iterator[Graph]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, GraphSum):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __add__(self, other: "GraphSum") -> "GraphSum":
        return add(self, other)

    def __sub__(self, other: "GraphSum") -> "GraphSum":
        return add(self, scale(-1, other))

    def __neg__(self) -> "GraphSum":
        return scale(-1, self)

    def __rmul__(self, c) -> "GraphSum":
        return scale(c, self)

    def __repr__(self) -> str:
        if not self._entries:
            return "GraphSum(0)"
        parts = ", ".join(
            f"{c} * {serialize_graph(g)}" for g, c in sorted_items(self)
        )
        return f"GraphSum({parts})"


def sorted_items(s: GraphSum):
    """Entries in canonical order (vertex count, then edge list)."""
    return sorted(s.items(), key=lambda gc: (gc[0].n, gc[0].edges))


def reduce(terms: Iterable[tuple]) -> GraphSum:
    """Project a raw sum onto its class.

    Every term is canonicalized; the sorting sign multiplies the
    coefficient; zero graphs are dropped; equal representatives merge
    and vanishing totals are removed.
    """
    acc: dict[tuple[int, tuple], Fraction] = {}
    for c, g in terms:
        if not c:
            continue
        canon_edges, sign = canonical_class(g.n, g.edges)
        if sign == 0:
            continue
        key = (g.n, canon_edges)
        prev = acc.get(key)
        val = c if sign > 0 else -c
        acc[key] = val if prev is None else prev + val
    out = GraphSum()
    for (n, edges), c in acc.items():
        if c:
            out._entries[_graph_unchecked(n, edges)] = Fraction(c)
    return out


def embed(s: GraphSum) -> RawSum:
    """A raw representative of a reduced sum, in canonical order."""
    return [(Fraction(c), g) for g, c in sorted_items(s)]


def add(a: GraphSum, b: GraphSum) -> GraphSum:
    out = GraphSum(dict(a.items()))
    for g, c in b.items():
        total = out._entries.get(g, 0) + c
        if total:
            out._entries[g] = Fraction(total)
        else:
            out._entries.pop(g, None)
    return out


def scale(c, a: GraphSum) -> GraphSum:
    c = Fraction(c)
    if not c:
        return GraphSum()
    out = GraphSum()
    for g, v in a.items():
        out._entries[g] = c * v
    return out


@dataclass(frozen=True)
class PairingCertificate:
    """A pairwise cancellation witness for a raw sum.

    Each pair (a, b, iso) cancels under the edge-reordering relation:
    relabeling term a's graph by ``iso`` gives term b's graph, and the
    parity of the induced position permutation makes the two signed
    terms opposite.  ``residual`` lists the term indices that could not
    be paired; pairs and residual together partition the term list.
    """

    pairs: tuple[tuple[int, int, VertexPermutation], ...]
    residual: tuple[int, ...]

    @property
    def is_perfect(self) -> bool:
        return not self.residual


def cancellation_certificate(s: RawSum) -> PairingCertificate:
    """Greedily pair cancelling terms inside each isomorphism class.

    Within a class of non-zero graphs any two terms carry a fixed
    relative sign, so terms split into two camps that cancel across;
    inside a zero-graph class any two terms can be made to cancel by
    routing the isomorphism through an edge-odd symmetry.
    """
    data = []
    order: list[tuple[int, tuple]] = []
    buckets: dict[tuple[int, tuple], list[int]] = {}
    for i, (c, g) in enumerate(s):
        if c != 1 and c != -1:
            raise NonUnitCoefficientError(f"term {i} has coefficient {c}")
        canon, best, sign, odd = canonical_search(g)
        key = (g.n, canon.edges)
        data.append((int(c), best, sign, odd))
        if key not in buckets:
            buckets[key] = []
            order.append(key)
        buckets[key].append(i)

    pairs: list[tuple[int, int, VertexPermutation]] = []
    residual: list[int] = []

    def iso(i: int, j: int) -> VertexPermutation:
        # Map term i's graph onto term j's so that the signed terms
        # cancel: the isomorphism's edge parity must be -c_i*c_j.
        ci, pi, si, _ = data[i]
        cj, pj, sj, oddj = data[j]
        need = -ci * cj
        q = pj
        if si * sj != need:
            assert oddj is not None
            q = oddj
        return q.inverse().compose(pi)

    for key in order:
        members = buckets[key]
        if data[members[0]][3] is not None:
            # zero-graph class: any two terms cancel
            for a, b in zip(members[0::2], members[1::2]):
                pairs.append((a, b, iso(a, b)))
            if len(members) % 2:
                residual.append(members[-1])
        else:
            plus = [i for i in members if data[i][0] * data[i][2] > 0]
            minus = [i for i in members if data[i][0] * data[i][2] < 0]
            for a, b in zip(plus, minus):
                if a > b:
                    a, b = b, a
                pairs.append((a, b, iso(a, b)))
            residual.extend(plus[len(minus):])
            residual.extend(minus[len(plus):])

    pairs.sort(key=lambda p: p[0])
    residual.sort()
    return PairingCertificate(tuple(pairs), tuple(residual))


def verify_certificate(s: RawSum, cert: PairingCertificate) -> bool:
    """Audit a certificate: indices partition the sum and pairs cancel."""
    used = list(cert.residual)
    for a, b, phi in cert.pairs:
        used.extend((a, b))
        ca, ga = s[a]
        cb, gb = s[b]
        pos = {e: t for t, e in enumerate(gb.edges)}
        im = phi.images
        positions = []
        for u, v in ga.edges:
            x, y = im[u - 1], im[v - 1]
            e = (x, y) if x < y else (y, x)
            if e not in pos:
                return False
            positions.append(pos[e])
        if len(set(positions)) != len(positions):
            return False
        seen = [False] * len(positions)
        parity = 1
        for t in range(len(positions)):
            if seen[t]:
                continue
            j = t
            length = 0
            while not seen[j]:
                seen[j] = True
                j = positions[j]
                length += 1
            if length % 2 == 0:
                parity = -parity
        if ca != -parity * cb:
            return False
    return sorted(used) == list(range(len(s)))


_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_sum(text: str) -> RawSum:
    """Parse one ``RATIONAL * graph`` term per line; '#' comments out a line."""
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append(line)
    if lines == ["0"]:
        return []
    terms: RawSum = []
    for line in lines:
        head, sep, rest = line.partition(" * ")
        if not sep or _RATIONAL_RE.fullmatch(head) is None:
            raise ParseError(f"malformed sum term: {line!r}")
        terms.append((Fraction(head), parse_graph(rest)))
    return terms


def serialize_sum(s: Union[GraphSum, RawSum]) -> str:
    """One term per line, ending with a newline; the empty sum is "0"."""
    if isinstance(s, GraphSum):
        items = sorted_items(s)
    else:
        items = [(g, c) for c, g in s]
    if not items:
        return "0\n"
    return "".join(f"{c} * {serialize_graph(g)}\n" for g, c in items)
