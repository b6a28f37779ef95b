"""Exact centralizers, bi-gradings and the classification predicates.

The generic centralizer is the nullspace of the stacked commutator maps in
algebra-basis coordinates.  Realizations built by this package have diagonal
h1, h2 and bi-homogeneous e1, e2, so the same linear systems split into small
blocks indexed by ad-(h1,h2) bi-degree; analyze() uses that decomposition and
canonicalizes through the same reduced echelon form, which makes the two
routes interchangeable (and cross-checked in the test suite).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .liealg import (
    AlgebraSpec,
    BasisLabel,
    PairRealization,
    algebra_basis,
    verify_relations,
)
from .linalg import (
    Matrix,
    Vector,
    commutator,
    invert,
    is_diagonal,
    joint_eigenspaces,
    mat_mul,
    mat_vec,
    matrix,
    nullspace,
    rank,
    rref,
    solve,
    transpose,
)
from .skewgraph import (
    ORIGIN,
    Node,
    SkewGraph,
    canonical_form,
    classify_component,
    component_from_nodes,
    is_admissible,
    validate,
)

ZERO = Fraction(0)
ONE = Fraction(1)


class NormalFormError(ValueError):
    """The supplied pair is not in the classified normal form."""


@dataclass(frozen=True)
class BiGrading:
    """Joint ad-eigenspace dimensions, keyed by exact eigenvalue pairs."""

    table: tuple[tuple[tuple[Fraction, Fraction], int], ...]
    total: int

    def as_dict(self) -> dict[tuple[Fraction, Fraction], int]:
        return dict(self.table)


@dataclass(frozen=True)
class ReportFlags:
    relations_ok: bool
    cartan_h: bool
    trivial_intersection: bool
    distinguished: bool
    principal: bool
    rectangular: bool


@dataclass(frozen=True)
class CentralizerReport:
    dimension: int
    basis: tuple[Matrix, ...]
    grading: BiGrading
    biexponents: tuple[tuple[Fraction, Fraction], ...]
    flags: ReportFlags
    nonpositive_witness: Optional[tuple[Matrix, tuple[Fraction, Fraction]]]


def _flatten(m: Matrix) -> Vector:
    return tuple(x for row in m for x in row)


def _unflatten(vec: Sequence, n: int) -> Matrix:
    return tuple(tuple(vec[i * n + j] for j in range(n)) for i in range(n))


def _canonical_span(mats: Sequence[Matrix], n: int) -> tuple[Matrix, ...]:
    reduced, _ = rref([_flatten(m) for m in mats])
    return tuple(_unflatten(v, n) for v in reduced)


# ---------------------------------------------------------------------------
# Generic centralizer (algebra-basis coordinates)
# ---------------------------------------------------------------------------

def centralizer(spec: AlgebraSpec, elements: Sequence[Matrix]) -> tuple[Matrix, ...]:
    """Basis of {x in g : [x, m] = 0 for all m}, in reduced echelon form."""
    n = spec.dimv
    elements = [matrix(m) for m in elements]
    for m in elements:
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError("element dimension does not match the algebra")
    basis = algebra_basis(spec)
    rows = []
    for m in elements:
        comms = [commutator(b, m) for b in basis]
        for i in range(n):
            for j in range(n):
                row = [c[i][j] for c in comms]
                if any(row):
                    rows.append(row)
    coeff_vectors = nullspace(rows, len(basis)) if rows else tuple(
        tuple(ONE if t == k else ZERO for t in range(len(basis))) for k in range(len(basis))
    )
    mats = []
    for coeffs in coeff_vectors:
        acc = [[ZERO] * n for _ in range(n)]
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(n):
                    brow = b[i]
                    arow = acc[i]
                    for j in range(n):
                        if brow[j]:
                            arow[j] += c * brow[j]
        mats.append(tuple(tuple(r) for r in acc))
    return _canonical_span(mats, n)


# ---------------------------------------------------------------------------
# Graded fast path
# ---------------------------------------------------------------------------

def _diagonal_weights(h1: Matrix, h2: Matrix) -> Optional[tuple[tuple[Fraction, Fraction], ...]]:
    if is_diagonal(h1) and is_diagonal(h2):
        return tuple((h1[i][i], h2[i][i]) for i in range(len(h1)))
    return None


def _homogeneous_degree(m: Matrix, weights):
    """Bi-degree of a bi-homogeneous matrix, None if zero, "mixed" otherwise."""
    deg = None
    for i, row in enumerate(m):
        for j, x in enumerate(row):
            if x:
                d = (weights[i][0] - weights[j][0], weights[i][1] - weights[j][1])
                if deg is None:
                    deg = d
                elif deg != d:
                    return "mixed"
    return deg


@lru_cache(maxsize=4096)
def _weight_tables(weights):
    """Positions grouped by bi-degree, and index pairs grouped by weight sum."""
    n = len(weights)
    blocks: dict[tuple[Fraction, Fraction], list[tuple[int, int]]] = {}
    sums: dict[tuple[Fraction, Fraction], list[tuple[int, int]]] = {}
    for i in range(n):
        wi = weights[i]
        for j in range(n):
            wj = weights[j]
            blocks.setdefault((wi[0] - wj[0], wi[1] - wj[1]), []).append((i, j))
            sums.setdefault((wi[0] + wj[0], wi[1] + wj[1]), []).append((i, j))
    return blocks, sums


def _position_blocks(weights):
    return _weight_tables(weights)[0]


def _sparse_rows_cols(m: Matrix):
    rows = [tuple((t, x) for t, x in enumerate(row) if x) for row in m]
    cols = [tuple((t, m[t][j]) for t in range(len(m)) if m[t][j]) for j in range(len(m))]
    return rows, cols


def _graded_commutant(
    spec: AlgebraSpec, elements: Sequence[Matrix], weights
) -> Optional[tuple[Matrix, ...]]:
    """Block-by-bi-degree solve of the same system as centralizer(); None when
    some element is not bi-homogeneous for the given weights."""
    degrees = []
    for m in elements:
        d = _homogeneous_degree(m, weights)
        if d == "mixed":
            return None
        degrees.append(d)
    n = len(weights)
    g = spec.form
    blocks, sums = _weight_tables(weights)
    gram_cols = gram_rows = None
    if g is not None:
        gram_cols = [tuple((c, g[c][b]) for c in range(n) if g[c][b]) for b in range(n)]
        gram_rows = [tuple((c, g[a][c]) for c in range(n) if g[a][c]) for a in range(n)]
    sparse = [_sparse_rows_cols(m) for m in elements]
    solutions = []
    for delta in sorted(blocks):
        positions = blocks[delta]
        k = len(positions)
        pidx = {p: t for t, p in enumerate(positions)}
        rows = []
        if spec.series == "A":
            if delta == (ZERO, ZERO):
                rows.append([1 if i == j else 0 for (i, j) in positions])
        else:
            for a, b in sums.get((-delta[0], -delta[1]), ()):
                row = [ZERO] * k
                hit = False
                for c, val in gram_cols[b]:
                    t = pidx.get((c, a))
                    if t is not None:
                        row[t] += val
                        hit = True
                for c, val in gram_rows[a]:
                    t = pidx.get((c, b))
                    if t is not None:
                        row[t] += val
                        hit = True
                if hit and any(row):
                    rows.append(row)
        for (m_rows, m_cols), dm in zip(sparse, degrees):
            if dm is None:
                continue
            out_delta = (delta[0] + dm[0], delta[1] + dm[1])
            for (i, j) in blocks.get(out_delta, ()):
                row = [ZERO] * k
                hit = False
                for t, val in m_cols[j]:
                    pos = pidx.get((i, t))
                    if pos is not None:
                        row[pos] += val
                        hit = True
                for t, val in m_rows[i]:
                    pos = pidx.get((t, j))
                    if pos is not None:
                        row[pos] -= val
                        hit = True
                if hit and any(row):
                    rows.append(row)
        if rows:
            sols = nullspace(rows, k)
        else:
            sols = tuple(tuple(ONE if t == s else ZERO for t in range(k)) for s in range(k))
        for s in sols:
            flat = [0] * (n * n)
            for t, (i, j) in enumerate(positions):
                flat[i * n + j] = s[t]
            solutions.append(flat)
    reduced, _ = rref(solutions)
    return tuple(_unflatten(v, n) for v in reduced)


def _commutant(spec: AlgebraSpec, elements: Sequence[Matrix], weights) -> tuple[Matrix, ...]:
    if weights is not None:
        out = _graded_commutant(spec, elements, weights)
        if out is not None:
            return out
    return centralizer(spec, elements)


# ---------------------------------------------------------------------------
# Bi-grading
# ---------------------------------------------------------------------------

def _graded_pieces(h1: Matrix, h2: Matrix, mats: Sequence[Matrix]):
    """Split span(mats) into joint ad-eigenpieces; canonical bases per degree.

    Returns (pieces, total) where pieces maps a degree to an RREF basis of its
    graded piece in the original coordinates.  Raises if the span is not
    ad-stable (the graded dimensions then exceed the span dimension).
    """
    n = len(h1)
    weights = _diagonal_weights(h1, h2)
    t_mat = t_inv = None
    if weights is None:
        spaces = joint_eigenspaces(h1, h2)
        cols = []
        keys = []
        for key, vecs in spaces:
            for v in vecs:
                cols.append(v)
                keys.append(key)
        t_mat = transpose(matrix(cols))
        t_inv = invert(t_mat)
        weights = tuple(keys)
        mats = [mat_mul(t_inv, mat_mul(m, t_mat)) for m in mats]

    split: dict[tuple[Fraction, Fraction], list] = {}
    for m in mats:
        parts: dict[tuple[Fraction, Fraction], list] = {}
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if x:
                    d = (weights[i][0] - weights[j][0], weights[i][1] - weights[j][1])
                    parts.setdefault(d, []).append((i, j, x))
        for d, entries in parts.items():
            flat = [ZERO] * (n * n)
            for i, j, x in entries:
                flat[i * n + j] = x
            split.setdefault(d, []).append(flat)

    pieces = {}
    total = 0
    for d in sorted(split):
        reduced, _ = rref(split[d])
        piece = []
        for v in reduced:
            m = _unflatten(v, n)
            if t_mat is not None:
                m = mat_mul(t_mat, mat_mul(m, t_inv))
            piece.append(m)
        if t_mat is not None:
            piece = list(_canonical_span(piece, n))
        if piece:
            pieces[d] = tuple(piece)
            total += len(piece)
    return pieces, total


def bigrade(spec: AlgebraSpec, h1: Matrix, h2: Matrix, subspace_basis: Sequence[Matrix]) -> BiGrading:
    """Decompose a subspace into joint ad-(h1,h2) eigenspaces.

    The subspace must be stable under both ad h1 and ad h2; otherwise the
    decomposition does not exist and a ValueError is raised.
    """
    mats = [matrix(m) for m in subspace_basis]
    if not mats:
        return BiGrading(table=(), total=0)
    pieces, total = _graded_pieces(matrix(h1), matrix(h2), mats)
    span_dim = rank([_flatten(m) for m in mats])
    if total != span_dim:
        raise ValueError(
            f"subspace is not ad-stable: graded dimensions sum to {total}, span has dimension {span_dim}"
        )
    table = tuple((d, len(pieces[d])) for d in sorted(pieces))
    return BiGrading(table=table, total=total)


# ---------------------------------------------------------------------------
# Rectangularity
# ---------------------------------------------------------------------------

def _graded_image_solvable(spec, e: Matrix, h: Matrix, weights, direction) -> Optional[bool]:
    """Consistency of [e, x] = h with x of bi-degree -direction inside g."""
    de = _homogeneous_degree(e, weights)
    if de == "mixed" or _homogeneous_degree(h, weights) == "mixed":
        return None
    n = len(weights)
    blocks, sums = _weight_tables(weights)
    delta = (-direction[0], -direction[1])
    positions = blocks.get(delta, [])
    pidx = {p: t for t, p in enumerate(positions)}
    k = len(positions)
    rows = []
    rhs = []
    g = spec.form
    if spec.series == "A":
        if delta == (ZERO, ZERO):
            rows.append([ONE if i == j else ZERO for (i, j) in positions])
            rhs.append(ZERO)
    else:
        for a, b in sums.get((-delta[0], -delta[1]), ()):
            row = [ZERO] * k
            for c in range(n):
                if g[c][b] and (c, a) in pidx:
                    row[pidx[(c, a)]] += g[c][b]
                if g[a][c] and (c, b) in pidx:
                    row[pidx[(c, b)]] += g[a][c]
            if any(row):
                rows.append(row)
                rhs.append(ZERO)
    for (i, j) in blocks.get((ZERO, ZERO), ()):
        row = [ZERO] * k
        for t in range(n):
            if e[i][t] and (t, j) in pidx:
                row[pidx[(t, j)]] += e[i][t]
            if e[t][j] and (i, t) in pidx:
                row[pidx[(i, t)]] -= e[t][j]
        if any(row) or h[i][j]:
            rows.append(row)
            rhs.append(h[i][j])
    return solve(rows, rhs) is not None


def _dense_image_solvable(spec, e: Matrix, h: Matrix) -> bool:
    basis = algebra_basis(spec)
    comms = [commutator(e, b) for b in basis]
    n = spec.dimv
    rows = []
    rhs = []
    for i in range(n):
        for j in range(n):
            row = [c[i][j] for c in comms]
            if any(row) or h[i][j]:
                rows.append(row)
                rhs.append(h[i][j])
    return solve(rows, rhs) is not None


def is_rectangular_pair(r: PairRealization) -> bool:
    """Whether h1 lies in the image of ad e1 inside g (equivalently h2, ad e2).

    The two sides are computed independently and must agree.
    """
    rep = verify_relations(r)
    if not rep.ok:
        raise ValueError(f"relations fail: {', '.join(rep.failures)}")
    return _rectangularity(r)


def _rectangularity(r: PairRealization) -> bool:
    weights = _diagonal_weights(r.h1, r.h2)
    results = []
    for e, h, direction in ((r.e1, r.h1, (ONE, ZERO)), (r.e2, r.h2, (ZERO, ONE))):
        res = None
        if weights is not None:
            res = _graded_image_solvable(r.spec, e, h, weights, direction)
        if res is None:
            res = _dense_image_solvable(r.spec, e, h)
        results.append(res)
    if results[0] != results[1]:
        raise RuntimeError("internal consistency failure: h1- and h2-rectangularity tests disagree")
    return results[0]


# ---------------------------------------------------------------------------
# Full analysis
# ---------------------------------------------------------------------------

def analyze(r: PairRealization) -> CentralizerReport:
    """Centralizer dimensions, bi-exponents and all classification flags."""
    rep = verify_relations(r)
    if not rep.ok:
        raise ValueError(f"relations fail: {', '.join(rep.failures)}")
    spec = r.spec
    weights = _diagonal_weights(r.h1, r.h2)

    z_h = _commutant(spec, [r.h1, r.h2], weights)
    z_e = _commutant(spec, [r.e1, r.e2], weights)
    z_both = _commutant(spec, [r.h1, r.h2, r.e1, r.e2], weights)

    cartan_h = len(z_h) == spec.rank
    trivial = len(z_both) == 0
    distinguished = cartan_h and trivial
    principal = len(z_e) == spec.rank

    pieces, total = _graded_pieces(r.h1, r.h2, list(z_e)) if z_e else ({}, 0)
    if total != len(z_e):
        raise RuntimeError("centralizer is unexpectedly not ad-stable")
    table = tuple((d, len(pieces[d])) for d in sorted(pieces))
    grading = BiGrading(table=table, total=total)
    biexponents = tuple(d for d, dim in table for _ in range(dim))

    # Witness search prefers the most negative q (the column-style
    # disqualifier the sl/so/sp arguments construct), then p.
    witness = None
    for d in sorted(pieces, key=lambda t: (t[1], t[0])):
        if d[0] < 0 or d[1] < 0:
            witness = (pieces[d][0], d)
            break

    flags = ReportFlags(
        relations_ok=True,
        cartan_h=cartan_h,
        trivial_intersection=trivial,
        distinguished=distinguished,
        principal=principal,
        rectangular=_rectangularity(r),
    )
    return CentralizerReport(
        dimension=len(z_e),
        basis=z_e,
        grading=grading,
        biexponents=biexponents,
        flags=flags,
        nonpositive_witness=witness,
    )


# ---------------------------------------------------------------------------
# Closed-form centralizer descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AOperator:
    """Extra centralizer generator: label -> coeff * label actions."""

    bidegree: tuple[Fraction, Fraction]
    actions: tuple[tuple[BasisLabel, BasisLabel, Fraction], ...]


@dataclass(frozen=True)
class ClosedFormPrediction:
    case: str
    powers: frozenset[tuple[int, int]]
    a_operator: Optional[AOperator]
    rank: int

    @property
    def biexponents(self) -> tuple[tuple[Fraction, Fraction], ...]:
        degs = [(Fraction(k), Fraction(l)) for k, l in self.powers]
        if self.a_operator is not None:
            degs.append(self.a_operator.bidegree)
        return tuple(sorted(degs))


def _power_set_from_source(nodes: frozenset[Node], src: Node, parity: Optional[int]) -> frozenset[tuple[int, int]]:
    out = set()
    for nd in nodes:
        k, l = nd.x - src.x, nd.y - src.y
        if k.denominator != 1 or l.denominator != 1:
            continue
        k, l = int(k), int(l)
        if k < 0 or l < 0 or (k, l) == (0, 0):
            continue
        if parity is not None and (k + l) % 2 != parity:
            continue
        out.add((k, l))
    return frozenset(out)


def closed_form_centralizer(series: str, graph: SkewGraph) -> ClosedFormPrediction:
    """Symbolic centralizer basis for a principal-class graph.

    Powers (k, l) stand for e1^k e2^l; the extra operator A, when present,
    is given by its basis-label actions and bi-degree.
    """
    graph = canonical_form(graph)
    if not is_admissible(series, graph, "principal"):
        raise ValueError("graph is outside the closed-form (principal) case list")
    comps = graph.components
    shapes = [classify_component(c) for c in comps]
    n_total = graph.n_nodes

    if series == "A":
        comp, shape = comps[0], shapes[0]
        nodes = comp.node_set
        if shape.young in ("sw", "both"):
            sources = [nd for nd in nodes if nd.shifted(-1, 0) not in nodes and nd.shifted(0, -1) not in nodes]
            powers = _power_set_from_source(nodes, sources[0], None)
            return ClosedFormPrediction("young-sw", powers, None, n_total - 1)
        sinks = [nd for nd in nodes if nd.shifted(1, 0) not in nodes and nd.shifted(0, 1) not in nodes]
        sink = sinks[0]
        out = set()
        for nd in nodes:
            k, l = sink.x - nd.x, sink.y - nd.y
            if k.denominator == 1 and l.denominator == 1 and (k, l) != (0, 0) and k >= 0 and l >= 0:
                out.add((int(k), int(l)))
        return ClosedFormPrediction("young-ne", frozenset(out), None, n_total - 1)

    rank_g = (n_total - 1) // 2 if series == "B" else n_total // 2

    if len(comps) == 1 and shapes[0].rectangle is not None:
        comp = comps[0]
        nodes = comp.node_set
        sources = [nd for nd in nodes if nd.shifted(-1, 0) not in nodes and nd.shifted(0, -1) not in nodes]
        powers = _power_set_from_source(nodes, sources[0], 1)
        return ClosedFormPrediction("rectangular", powers, None, rank_g)

    if len(comps) == 1:
        # near-rectangular (series D)
        shape = shapes[0]
        nodes = comps[0].node_set
        xs = sorted({nd.x for nd in nodes})
        ys = sorted({nd.y for nd in nodes})
        left, right, bottom, top = xs[0], xs[-1], ys[0], ys[-1]
        half_w = int(right - left + 1) // 2
        half_h = int(top - bottom + 1) // 2
        name = shape.near_rectangular_shape
        if name == "first":
            powers = {(k, l) for k in range(2 * half_w - 2) for l in range(2 * half_h)
                      if (k + l) % 2 == 1}
            deg = (Fraction(2 * half_w - 2), ZERO)
            x, z = Node(left, top), Node(left + 2 * half_w - 2, top)
            u, y = Node(left + 1, bottom), Node(right, bottom)
        elif name == "second":
            powers = {(k, l) for k in range(2 * half_w) for l in range(2 * half_h - 2)
                      if (k + l) % 2 == 1}
            deg = (ZERO, Fraction(2 * half_h - 2))
            x, z = Node(right, bottom), Node(right, bottom + 2 * half_h - 2)
            u, y = Node(left, bottom + 1), Node(left, top)
        elif name == "third":
            cut = 2 * half_w + 2 * half_h - 3
            powers = {(k, l) for k in range(2 * half_w) for l in range(2 * half_h)
                      if (k + l) % 2 == 1 and k + l != cut}
            deg = (Fraction(2 * half_w - 2), Fraction(2 * half_h - 2))
            x, z = Node(left, bottom + 1), Node(right - 1, top)
            u, y = Node(left + 1, bottom), Node(right, top - 1)
        else:
            raise ValueError("graph is outside the closed-form (principal) case list")
        a_op = AOperator(
            bidegree=deg,
            actions=(
                (BasisLabel(0, x), BasisLabel(0, z), ONE),
                (BasisLabel(0, u), BasisLabel(0, y), -ONE),
            ),
        )
        return ClosedFormPrediction(f"near-rectangular-{name}", frozenset(powers), a_op, rank_g)

    # two components: rectangle plus point, or horizontal plus vertical chain
    sizes = [len(c) for c in comps]
    if 1 in sizes:
        rect_i = sizes.index(max(sizes))
        pt_i = 1 - rect_i
        w, h = shapes[rect_i].rectangle
        a, b = (w - 1) // 2, (h - 1) // 2
        powers = {(k, l) for k in range(w) for l in range(h) if (k + l) % 2 == 1}
        a_op = AOperator(
            bidegree=(Fraction(a), Fraction(b)),
            actions=(
                (BasisLabel(rect_i, Node(Fraction(-a), Fraction(-b))), BasisLabel(pt_i, ORIGIN), ONE),
                (BasisLabel(pt_i, ORIGIN), BasisLabel(rect_i, Node(Fraction(a), Fraction(b))), -ONE),
            ),
        )
        return ClosedFormPrediction("rectangle-plus-point", frozenset(powers), a_op, rank_g)

    horiz_i = next(i for i, s in enumerate(shapes) if s.rectangle[1] == 1)
    vert_i = 1 - horiz_i
    a = (shapes[horiz_i].rectangle[0] - 1) // 2
    b = (shapes[vert_i].rectangle[1] - 1) // 2
    powers = {(k, 0) for k in range(1, 2 * a, 2)} | {(0, l) for l in range(1, 2 * b, 2)}
    a_op = AOperator(
        bidegree=(Fraction(a), Fraction(b)),
        actions=(
            (BasisLabel(horiz_i, Node(Fraction(-a), ZERO)), BasisLabel(vert_i, Node(ZERO, Fraction(b))), ONE),
            (BasisLabel(vert_i, Node(ZERO, Fraction(-b))), BasisLabel(horiz_i, Node(Fraction(a), ZERO)), -ONE),
        ),
    )
    return ClosedFormPrediction("chains", frozenset(powers), a_op, rank_g)


def a_operator_matrix(pred: ClosedFormPrediction, r: PairRealization) -> Optional[Matrix]:
    """Materialize the predicted A operator in the realization's labeled basis.

    Minus orbit representatives are conjugated realizations, so A is
    conjugated by the same basis swap.
    """
    if pred.a_operator is None:
        return None
    n = r.spec.dimv
    index = {(lb.component_index, lb.node): i for i, lb in enumerate(r.labels)}
    rows = [[ZERO] * n for _ in range(n)]
    for src, dst, coeff in pred.a_operator.actions:
        rows[index[(dst.component_index, dst.node)]][index[(src.component_index, src.node)]] = coeff
    mat = tuple(tuple(row) for row in rows)
    if r.orbit_sign == "minus":
        from .liealg import _conjugate_by_swap

        half = Fraction(1, 2)
        i = index[(0, Node(half, half))]
        j = index[(0, Node(-half, -half))]
        mat = _conjugate_by_swap(mat, i, j)
    return mat


# ---------------------------------------------------------------------------
# Graph reconstruction
# ---------------------------------------------------------------------------

def _line_key(vec: Vector) -> Vector:
    reduced, _ = rref([vec])
    return reduced[0]


def graph_from_pair(spec: AlgebraSpec, e1: Matrix, e2: Matrix, h1: Matrix, h2: Matrix) -> SkewGraph:
    """Skew-graph of a pair in normal form: nodes are the (h1,h2)-eigenvalues
    on V, arrows record where e1 and e2 act without vanishing.

    Joint eigenspaces must be one-dimensional, except that series D allows a
    two-dimensional (0,0)-eigenspace, which is split into two lines via the
    incoming e-images (and the Gram-orthogonal complement when only one line
    is hit).
    """
    n = spec.dimv
    e1, e2, h1, h2 = (matrix(m) for m in (e1, e2, h1, h2))
    if any(x for row in commutator(e1, e2) for x in row):
        raise NormalFormError("e1 and e2 do not commute")
    if any(x for row in commutator(h1, h2) for x in row):
        raise NormalFormError("h1 and h2 do not commute")
    for h, e, expect in ((h1, e1, 1), (h1, e2, 0), (h2, e1, 0), (h2, e2, 1)):
        target = e if expect else tuple(tuple(ZERO for _ in row) for row in e)
        if commutator(h, e) != target:
            raise NormalFormError("the grading relations [h_i, e_j] = delta_ij e_j fail")

    spaces = joint_eigenspaces(h1, h2)
    singles = {key: vecs[0] for key, vecs in spaces if len(vecs) == 1}
    vertices: list[tuple[tuple[Fraction, Fraction], Vector]] = []
    for key, vecs in spaces:
        if len(vecs) == 1:
            vertices.append((key, vecs[0]))
            continue
        if key != (ZERO, ZERO) or len(vecs) != 2 or spec.series != "D":
            raise NormalFormError(
                f"eigenspace at {key} has dimension {len(vecs)}; the pair is not in normal form"
            )
        lines = []
        for e, source_key in ((e1, (-ONE, ZERO)), (e2, (ZERO, -ONE))):
            src = singles.get(source_key)
            if src is None:
                continue
            img = mat_vec(e, src)
            if any(img):
                if _line_key(img) not in [_line_key(l) for l in lines]:
                    lines.append(img)
        if len(lines) == 2:
            split = lines
        elif len(lines) == 1:
            if spec.form is None:
                raise NormalFormError("cannot split the (0,0)-eigenspace without a bilinear form")
            # Complete the hit line to a splitting with its Gram-orthogonal
            # complement inside the eigenspace: v = a*vecs[0] + b*vecs[1]
            # with (u, v) = 0.
            u = lines[0]
            gu = mat_vec(transpose(spec.form), u)
            row = [sum((gu[t] * v[t] for t in range(n)), ZERO) for v in vecs]
            coeff_space = nullspace([row], 2)
            if len(coeff_space) != 1:
                raise NormalFormError("degenerate (0,0)-eigenspace split")
            a, b = coeff_space[0]
            ortho = tuple(a * x + b * y for x, y in zip(vecs[0], vecs[1]))
            if _line_key(ortho) == _line_key(u):
                raise NormalFormError("degenerate (0,0)-eigenspace split")
            split = [u, ortho]
        else:
            raise NormalFormError("no e-image enters the (0,0)-eigenspace; not in normal form")
        for v in split:
            vertices.append((key, v))

    index_by_key: dict[tuple[Fraction, Fraction], list[int]] = {}
    for i, (key, _) in enumerate(vertices):
        index_by_key.setdefault(key, []).append(i)

    parent = list(range(len(vertices)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for i, (key, vec) in enumerate(vertices):
        for e, step in ((e1, (ONE, ZERO)), (e2, (ZERO, ONE))):
            img = mat_vec(e, vec)
            if not any(img):
                continue
            tkey = (key[0] + step[0], key[1] + step[1])
            targets = index_by_key.get(tkey, [])
            if not targets:
                raise NormalFormError(f"e-image leaves the eigenspace decomposition at {key}")
            if len(targets) == 1:
                union(i, targets[0])
                continue
            cols = transpose(matrix([vertices[t][1] for t in targets]))
            coords = solve(cols, img)
            if coords is None or sum(1 for c in coords if c) != 1:
                raise NormalFormError("an e-image mixes the two (0,0)-lines; not in normal form")
            union(i, targets[next(t for t, c in enumerate(coords) if c)])

    groups: dict[int, list[int]] = {}
    for i in range(len(vertices)):
        groups.setdefault(find(i), []).append(i)
    node_sets = []
    for members in groups.values():
        keys = [vertices[i][0] for i in members]
        if len(set(keys)) != len(keys):
            raise NormalFormError("a reconstructed component repeats a node; not in normal form")
        node_sets.append([Node(p, q) for p, q in keys])
    graph = canonical_form(SkewGraph(tuple(component_from_nodes(s) for s in node_sets)))
    findings = validate(graph)
    if findings:
        raise NormalFormError("reconstructed graph violates the axioms: " + "; ".join(findings))
    return graph


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def report_to_jsonable(report: CentralizerReport, include_basis: bool = False) -> dict:
    from .liealg import matrix_to_jsonable

    data = {
        "dimension": report.dimension,
        "grading": [
            {"p": str(p), "q": str(q), "dim": dim} for (p, q), dim in report.grading.table
        ],
        "biexponents": [[str(p), str(q)] for p, q in report.biexponents],
        "flags": {
            "relations_ok": report.flags.relations_ok,
            "cartan_h": report.flags.cartan_h,
            "trivial_intersection": report.flags.trivial_intersection,
            "distinguished": report.flags.distinguished,
            "principal": report.flags.principal,
            "rectangular": report.flags.rectangular,
        },
        "nonpositive_witness": None,
    }
    if report.nonpositive_witness is not None:
        m, (p, q) = report.nonpositive_witness
        data["nonpositive_witness"] = {
            "p": str(p),
            "q": str(q),
            "matrix": matrix_to_jsonable(m, "sparse"),
        }
    if include_basis:
        data["basis"] = [matrix_to_jsonable(m, "sparse") for m in report.basis]
    return data
