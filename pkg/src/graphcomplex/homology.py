"""Bigraded bases, the differential as an exact matrix, cocycle search.

The differential raises both the vertex and the edge count by one, so
it restricts to a map between the bigrades (n, k) -> (n+1, k+1).  Bases
are canonical representatives of the leafless, non-zero classes
(connectedness optional).  Entries are exact rationals throughout; the
kernel is computed by Gaussian elimination over the rationals with a
deterministic leftmost pivot rule, and basis vectors are normalized to
primitive integer vectors with positive leading entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from graphcomplex.dgla import d_direct
from graphcomplex.graphs import Graph, InvariantError, enumerate_graphs
from graphcomplex.sums import GraphSum, reduce


@dataclass(frozen=True)
class DMatrix:
    """Matrix of the differential between two bigraded bases.

    ``entries[j][i]`` is the coefficient of target graph j in the
    reduced differential of source graph i.
    """

    source: tuple[Graph, ...]
    target: tuple[Graph, ...]
    entries: tuple[tuple[Fraction, ...], ...]


def bigraded_basis(n: int, k: int, *, connected: bool = False) -> list[Graph]:
    """Canonical leafless non-zero representatives at bigrade (n, k)."""
    return enumerate_graphs(
        n, k, connected=connected, leafless=True, exclude_zero=True
    )


def d_matrix(n: int, k: int, *, connected: bool = False) -> DMatrix:
    """The differential from bigrade (n, k) to (n+1, k+1), as entries.

    Every term of every differential must land in the target basis;
    a miss means the basis enumeration is wrong and raises.
    """
    source = bigraded_basis(n, k, connected=connected)
    target = bigraded_basis(n + 1, k + 1, connected=connected)
    index = {g: j for j, g in enumerate(target)}
    zero = Fraction(0)
    columns = []
    for g in source:
        image = reduce(d_direct(g))
        col = [zero] * len(target)
        for h, c in image.items():
            if h not in index:
                raise InvariantError(
                    f"differential image {h} missing from the ({n + 1},{k + 1}) basis"
                )
            col[index[h]] = c
        columns.append(col)
    entries = tuple(
        tuple(columns[i][j] for i in range(len(source)))
        for j in range(len(target))
    )
    return DMatrix(tuple(source), tuple(target), entries)


def nullspace(entries, ncols: int) -> list[tuple[Fraction, ...]]:
    """Kernel basis of a rational matrix, deterministic pivot order.

    Row-reduces with the leftmost nonzero pivot; one basis vector per
    free column, normalized primitive integer with positive leading
    coefficient.
    """
    rows = [list(r) for r in entries]
    nrows = len(rows)
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_of_col[c] = r
        r += 1

    basis = []
    free = [c for c in range(ncols) if c not in pivot_of_col]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for pc, pr in pivot_of_col.items():
            vec[pc] = -rows[pr][fc]
        basis.append(tuple(_primitive(vec)))
    return basis


def _primitive(vec):
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return [Fraction(x) for x in ints]


def rank(m: DMatrix) -> int:
    return len(m.source) - len(nullspace(m.entries, len(m.source)))


def cocycle_space(n: int, k: int, *, connected: bool = False) -> list[GraphSum]:
    """Basis of the differential's kernel at bigrade (n, k)."""
    m = d_matrix(n, k, connected=connected)
    vectors = nullspace(m.entries, len(m.source))
    return [
        GraphSum({g: c for g, c in zip(m.source, vec) if c}) for vec in vectors
    ]


def matrix_product(outer: DMatrix, inner: DMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Entries of outer @ inner; the bases must be compatible."""
    if outer.source != inner.target:
        raise InvariantError("matrix bases do not compose")
    mid = len(outer.source)
    return tuple(
        tuple(
            sum(
                (outer.entries[j][m] * inner.entries[m][i] for m in range(mid)),
                Fraction(0),
            )
            for i in range(len(inner.source))
        )
        for j in range(len(outer.target))
    )


def format_matrix(m: DMatrix) -> str:
    """Plain-text export: "rows cols" header, then space-joined rows."""
    lines = [f"{len(m.target)} {len(m.source)}"]
    for row in m.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
