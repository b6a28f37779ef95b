"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's own algorithms: row
reduction is the textbook divide-by-pivot Gauss-Jordan over Fraction, and
shape enumeration is subset brute force over a bounded grid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import pytest

from skewpairs.centralizer import CentralizerReport, analyze
from skewpairs.liealg import PairRealization, RelationReport, build_pair, verify_relations
from skewpairs.skewgraph import SkewGraph, enumerate_admissible

DESK_DIMS = (
    ("A", tuple(range(1, 11))),
    ("B", tuple(range(1, 10, 2))),
    ("C", tuple(range(2, 11, 2))),
    ("D", tuple(range(2, 11, 2))),
)


@dataclass(frozen=True)
class DeskRecord:
    series: str
    dimv: int
    graph: SkewGraph
    sign: Optional[str]
    realization: PairRealization
    relations: RelationReport
    report: Optional[CentralizerReport]


def iter_desk_graphs():
    for series, dims in DESK_DIMS:
        for dimv in dims:
            for graph in enumerate_admissible(series, dimv, "distinguished"):
                yield series, dimv, graph


@pytest.fixture(scope="session")
def desk_records() -> tuple[DeskRecord, ...]:
    """Every admissible distinguished realization with dimV <= 10, both sign
    representatives for connected series-D graphs, fully analyzed."""
    records = []
    for series, dimv, graph in iter_desk_graphs():
        signs = ("plus", "minus") if series == "D" and graph.is_connected() else (None,)
        for sign in signs:
            r = build_pair(series, graph, sign)
            relations = verify_relations(r)
            report = analyze(r) if relations.ok else None
            records.append(
                DeskRecord(
                    series=series,
                    dimv=dimv,
                    graph=graph,
                    sign=sign,
                    realization=r,
                    relations=relations,
                    report=report,
                )
            )
    return tuple(records)


@pytest.fixture(scope="session")
def principal_keys() -> dict:
    """graph_key sets of the principal-admissible graphs per (series, dimV)."""
    from skewpairs.skewgraph import graph_key

    keys = {}
    for series, dims in DESK_DIMS:
        for dimv in dims:
            keys[(series, dimv)] = {
                graph_key(g) for g in enumerate_admissible(series, dimv, "principal")
            }
    return keys


# ---------------------------------------------------------------------------
# Independent oracle: textbook Gauss-Jordan over Fraction
# ---------------------------------------------------------------------------

def naive_rref(rows):
    """Reduced row echelon form by immediate pivot normalization."""
    work = [[Fraction(x) for x in row] for row in rows]
    work = [row for row in work if any(row)]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        factor = work[r][c]
        work[r] = [x / factor for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    reduced = tuple(tuple(work[i]) for i in range(len(pivots)))
    return reduced, tuple(pivots)


def naive_nullspace(rows, ncols):
    reduced, pivots = naive_rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][free]
        basis.append(tuple(v))
    return tuple(basis)


# ---------------------------------------------------------------------------
# Independent oracle: subset brute force over the n x n grid
# ---------------------------------------------------------------------------

def _oracle_is_connected(cells: frozenset) -> bool:
    todo = [next(iter(cells))]
    seen = {todo[0]}
    while todo:
        x, y = todo.pop()
        for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cells)


def _oracle_skew_ok(cells: frozenset) -> bool:
    for (x, y) in cells:
        if (x + 1, y + 1) in cells and ((x, y + 1) not in cells or (x + 1, y) not in cells):
            return False
    return True


def oracle_connected_cellsets(n: int) -> set:
    """All n-cell connected axiom-(iv) shapes, one translation representative
    each (min corner at the origin), by exhaustive subset enumeration."""
    grid = [(x, y) for x in range(n) for y in range(n)]
    found = set()
    for combo in itertools.combinations(grid, n):
        if min(c[0] for c in combo) or min(c[1] for c in combo):
            continue
        cells = frozenset(combo)
        if not _oracle_skew_ok(cells):
            continue
        if not _oracle_is_connected(cells):
            continue
        found.add(cells)
    return found


def graph_to_cellset(graph: SkewGraph) -> frozenset:
    """Translate a one-component graph to integer cells with min corner 0."""
    assert len(graph.components) == 1
    nodes = graph.components[0].nodes
    mx = min(nd.x for nd in nodes)
    my = min(nd.y for nd in nodes)
    cells = frozenset((int(nd.x - mx), int(nd.y - my)) for nd in nodes)
    assert len(cells) == len(nodes)
    return cells
