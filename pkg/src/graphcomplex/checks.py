"""Property suites for the two structural identities.

Both suites are deterministic: the square-of-the-differential sweep is
exhaustive over a bigrade window, the Jacobi sweep draws its triples
from a seeded generator.  They back the ``check`` CLI subcommands and
the acceptance tests; nothing here is CLI-specific.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from graphcomplex.dgla import d_direct, iter_jacobiator
from graphcomplex.graphs import Graph, all_graphs_up_to, serialize_graph
from graphcomplex.sums import cancellation_certificate, reduce

DEFAULT_SEED = 0xC0FFEE


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None
    lines: list[str] = field(default_factory=list)


def double_differential_raw(g: Graph):
    """Terms of d(d(g)) as a raw list; all coefficients are +1."""
    out = []
    for c1, t in d_direct(g):
        for c2, u in d_direct(t):
            out.append((c1 * c2, u))
    return out


def check_d_squared(max_vertices: int, max_edges: int = 8) -> CheckResult:
    """d(d(g)) cancels identically for every leafless g in the window.

    Checks both the pairwise cancellation certificate on the raw double
    differential and the reduction to the empty sum.
    """
    cases = 0
    for g in all_graphs_up_to(max_vertices, max_edges=max_edges, leafless=True):
        cases += 1
        raw = double_differential_raw(g)
        cert = cancellation_certificate(raw)
        if cert.residual:
            return CheckResult(
                "d2",
                False,
                cases,
                f"unpaired d(d(g)) terms for g = {serialize_graph(g)}",
            )
        if not reduce(raw).is_zero:
            return CheckResult(
                "d2",
                False,
                cases,
                f"d(d(g)) does not reduce to zero for g = {serialize_graph(g)}",
            )
    return CheckResult("d2", True, cases)


def jacobi_pool(max_vertices: int) -> list[Graph]:
    return list(all_graphs_up_to(max_vertices))


def check_jacobi(
    max_vertices: int, trials: int, seed: int = DEFAULT_SEED
) -> CheckResult:
    """reduce(jacobiator) vanishes for seeded random triples.

    Repeated triples (up to argument order, under which the reduced
    Jacobi combination only changes by a Koszul sign) are computed once.
    """
    pool = jacobi_pool(max_vertices)
    rng = random.Random(seed)
    cache: dict[tuple[str, ...], bool] = {}
    for trial in range(trials):
        trio = (rng.choice(pool), rng.choice(pool), rng.choice(pool))
        key = tuple(sorted(serialize_graph(g) for g in trio))
        ok = cache.get(key)
        if ok is None:
            ok = reduce(iter_jacobiator(*trio)).is_zero
            cache[key] = ok
        if not ok:
            parts = ", ".join(serialize_graph(g) for g in trio)
            return CheckResult(
                "jacobi", False, trial + 1, f"nonzero Jacobi combination for ({parts})"
            )
    return CheckResult("jacobi", True, trials)
