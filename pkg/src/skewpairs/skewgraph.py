"""Skew-graphs: plane diagrams classifying nilpotent pairs.

A skew-graph is a finite set of components, each a set of rational plane
nodes joined by unit arrows pointing right or up, subject to:

  (i)   nodes lie in Q x Q,
  (ii)  the barycentre of the node multiset is the origin,
  (iii) arrows have length 1 and point right or up,
  (iv)  whenever (i,j) and (i+1,j+1) lie in one component, so do (i,j+1)
        and (i+1,j), together with the four arrows of that unit square.

Connected skew-graphs are exactly skew diagrams drawn in the convention
where rows shift weakly left going up.  Components are allowed to share
a single node (0,0) (two integral components only); this is the one
overlap that actually occurs in the even orthogonal series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

DIR_H = "h"
DIR_V = "v"
SERIES = ("A", "B", "C", "D")
KINDS = ("distinguished", "principal")
DEFAULT_MAX_NODES = 12

SYM_NOT_CS = "not-cs"
SYM_INTEGRAL = "integral"
SYM_SEMI_COLSORT = "semi-integral-colsort"
SYM_SEMI_ROWSORT = "semi-integral-rowsort"
SYM_NON_INTEGRAL = "non-integral"


class EnumerationLimitError(ValueError):
    """Raised when an enumeration request exceeds the configured node bound."""


@dataclass(frozen=True, order=True)
class Node:
    x: Fraction
    y: Fraction

    def shifted(self, dx, dy) -> "Node":
        return Node(self.x + dx, self.y + dy)

    def __neg__(self) -> "Node":
        return Node(-self.x, -self.y)


ORIGIN = Node(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Component:
    """One connected piece: sorted node tuple plus its oriented unit arrows."""

    nodes: tuple[Node, ...]
    arrows: frozenset[tuple[Node, str]]

    @property
    def node_set(self) -> frozenset[Node]:
        return frozenset(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True)
class SkewGraph:
    components: tuple[Component, ...]

    @property
    def n_nodes(self) -> int:
        """Node count as a multiset (a shared node counts once per component)."""
        return sum(len(c) for c in self.components)

    def is_connected(self) -> bool:
        return len(self.components) == 1


@dataclass(frozen=True)
class ShapeClass:
    symmetry: str
    rectangle: Optional[tuple[int, int]]
    near_rectangular_shape: Optional[str]
    young: str


def _implied_arrows(nodes: frozenset[Node]) -> frozenset[tuple[Node, str]]:
    arrows = set()
    for nd in nodes:
        if nd.shifted(1, 0) in nodes:
            arrows.add((nd, DIR_H))
        if nd.shifted(0, 1) in nodes:
            arrows.add((nd, DIR_V))
    return frozenset(arrows)


def component_from_nodes(nodes: Iterable[Node]) -> Component:
    """Build a component with the arrows implied by node adjacency."""
    node_set = frozenset(nodes)
    return Component(nodes=tuple(sorted(node_set)), arrows=_implied_arrows(node_set))


def graph_from_node_sets(node_sets: Iterable[Iterable[Node]]) -> SkewGraph:
    return canonical_form(SkewGraph(tuple(component_from_nodes(s) for s in node_sets)))


def _is_int(q: Fraction) -> bool:
    return q.denominator == 1


def _neighbours(nd: Node) -> tuple[Node, ...]:
    return (nd.shifted(1, 0), nd.shifted(-1, 0), nd.shifted(0, 1), nd.shifted(0, -1))


def _is_connected(nodes: frozenset[Node]) -> bool:
    if not nodes:
        return False
    seen = {next(iter(nodes))}
    stack = list(seen)
    while stack:
        nd = stack.pop()
        for nb in _neighbours(nd):
            if nb in nodes and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(nodes)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def _component_findings(index: int, comp: Component) -> list[str]:
    tag = f"component {index}"
    findings = []
    nodes = comp.node_set
    if not nodes:
        return [f"{tag}: empty node set"]
    base = comp.nodes[0]
    if any(not _is_int(nd.x - base.x) or not _is_int(nd.y - base.y) for nd in nodes):
        findings.append(f"{tag}: nodes do not all differ by integer vectors")
        return findings
    for src, d in sorted(comp.arrows):
        if src not in nodes:
            findings.append(f"{tag}: arrow source {_node_text(src)} is not a node")
        tgt = src.shifted(1, 0) if d == DIR_H else src.shifted(0, 1)
        if tgt not in nodes:
            findings.append(f"{tag}: arrow from {_node_text(src)} ({d}) points outside the component")
    implied = _implied_arrows(nodes)
    for src, d in sorted(implied - comp.arrows):
        findings.append(f"{tag}: missing arrow at {_node_text(src)} ({d}) forced by node adjacency")
    for src, d in sorted(comp.arrows - implied):
        if src in nodes:
            findings.append(f"{tag}: arrow at {_node_text(src)} ({d}) not implied by node adjacency")
    for nd in sorted(nodes):
        if nd.shifted(1, 1) in nodes:
            for req in (nd.shifted(0, 1), nd.shifted(1, 0)):
                if req not in nodes:
                    findings.append(
                        f"{tag}: axiom (iv) fails at square {_node_text(nd)}:"
                        f" {_node_text(req)} is missing"
                    )
    if not _is_connected(nodes):
        findings.append(f"{tag}: not connected")
    return findings


def validate(graph: SkewGraph) -> list[str]:
    """Check every axiom; the graph is valid iff the returned list is empty."""
    findings = []
    for i, comp in enumerate(graph.components):
        findings.extend(_component_findings(i, comp))
    sx = sum((nd.x for c in graph.components for nd in c.nodes), Fraction(0))
    sy = sum((nd.y for c in graph.components for nd in c.nodes), Fraction(0))
    if sx or sy:
        findings.append(f"barycentre is ({sx},{sy}), not the origin")
    origin_holders = 0
    for i in range(len(graph.components)):
        if ORIGIN in graph.components[i].node_set:
            origin_holders += 1
        for j in range(i + 1, len(graph.components)):
            inter = graph.components[i].node_set & graph.components[j].node_set
            if inter and inter != frozenset({ORIGIN}):
                findings.append(
                    f"components {i} and {j} share {len(inter)} nodes;"
                    " only a single shared node (0,0) is allowed"
                )
    if origin_holders > 2:
        findings.append("more than two components contain the node (0,0)")
    return findings


# ---------------------------------------------------------------------------
# Classification of a connected component
# ---------------------------------------------------------------------------

def classify_component(comp: Component) -> ShapeClass:
    """Symmetry class, Young type, rectangle and near-rectangle detection.

    Central symmetry is taken about the origin, which is the barycentre for
    every component produced by this package.
    """
    findings = _component_findings(0, comp)
    if findings:
        raise ValueError("component is not a valid connected skew-graph: " + "; ".join(findings))
    nodes = comp.node_set

    sources = [nd for nd in nodes if nd.shifted(-1, 0) not in nodes and nd.shifted(0, -1) not in nodes]
    sinks = [nd for nd in nodes if nd.shifted(1, 0) not in nodes and nd.shifted(0, 1) not in nodes]
    if len(sources) == 1 and len(sinks) == 1:
        young = "both"
    elif len(sources) == 1:
        young = "sw"
    elif len(sinks) == 1:
        young = "ne"
    else:
        young = "neither"

    xs = sorted({nd.x for nd in nodes})
    ys = sorted({nd.y for nd in nodes})
    rectangle = None
    if len(nodes) == len(xs) * len(ys) and xs[-1] - xs[0] == len(xs) - 1 and ys[-1] - ys[0] == len(ys) - 1:
        rectangle = (len(xs), len(ys))

    if frozenset(-nd for nd in nodes) == nodes:
        sample = comp.nodes[0]
        xi, yi = _is_int(sample.x), _is_int(sample.y)
        if xi and yi:
            symmetry = SYM_INTEGRAL
        elif xi:
            symmetry = SYM_SEMI_COLSORT
        elif yi:
            symmetry = SYM_SEMI_ROWSORT
        else:
            symmetry = SYM_NON_INTEGRAL
    else:
        symmetry = SYM_NOT_CS

    near = None
    if symmetry == SYM_NON_INTEGRAL and rectangle is None and len(nodes) % 4 == 2:
        width = int(xs[-1] - xs[0]) + 1
        height = int(ys[-1] - ys[0]) + 1
        if width % 2 == 0 and height % 2 == 0:
            for name, cand in _near_rectangular_sets(width, height):
                if cand == nodes:
                    near = name
                    break

    return ShapeClass(symmetry=symmetry, rectangle=rectangle, near_rectangular_shape=near, young=young)


def rectangle_nodes(width: int, height: int) -> frozenset[Node]:
    """Centered width x height block of unit cells."""
    xs = [Fraction(2 * k - (width - 1), 2) for k in range(width)]
    ys = [Fraction(2 * k - (height - 1), 2) for k in range(height)]
    return frozenset(Node(x, y) for x in xs for y in ys)


@lru_cache(maxsize=None)
def _near_rectangular_sets(width: int, height: int) -> tuple[tuple[str, frozenset[Node]], ...]:
    """Connected near-rectangular node sets built from an even x even rectangle.

    Constructive per the defining recipe: trim the extreme columns (or rows)
    centrally-symmetrically, either one square or all squares but one.
    Degenerate coincidences (height or width 2) collapse onto the corner
    ("third") shape, which is listed first.
    """
    if width % 2 or height % 2 or width < 2 or height < 2:
        return ()
    rect = rectangle_nodes(width, height)
    xs = sorted({nd.x for nd in rect})
    ys = sorted({nd.y for nd in rect})
    left, right, bottom, top = xs[0], xs[-1], ys[0], ys[-1]
    third = rect - {Node(left, bottom), Node(right, top)}
    first = rect - {Node(left, y) for y in ys[:-1]} - {Node(right, y) for y in ys[1:]}
    second = rect - {Node(x, bottom) for x in xs[:-1]} - {Node(x, top) for x in xs[1:]}
    out: list[tuple[str, frozenset[Node]]] = []
    for name, cand in (("third", third), ("first", first), ("second", second)):
        if _is_connected(cand) and all(cand != prev for _, prev in out):
            out.append((name, cand))
    return tuple(out)


# ---------------------------------------------------------------------------
# Canonical form and enumeration
# ---------------------------------------------------------------------------

def canonical_form(graph: SkewGraph) -> SkewGraph:
    """Translate the multiset barycentre to the origin and sort everything."""
    n = graph.n_nodes
    sx = sum((nd.x for c in graph.components for nd in c.nodes), Fraction(0)) / n
    sy = sum((nd.y for c in graph.components for nd in c.nodes), Fraction(0)) / n
    comps = []
    for comp in graph.components:
        nodes = frozenset(nd.shifted(-sx, -sy) for nd in comp.nodes)
        comps.append(component_from_nodes(nodes))
    comps.sort(key=lambda c: (-len(c), c.nodes))
    return SkewGraph(tuple(comps))


def graph_key(graph: SkewGraph):
    """Hashable identity of a graph in canonical form."""
    g = canonical_form(graph)
    return tuple(tuple((nd.x, nd.y) for nd in c.nodes) for c in g.components)


@lru_cache(maxsize=None)
def _connected_cellsets(n: int) -> tuple[frozenset, ...]:
    # Grow shapes cell by cell.  Removing the leftmost cell of the bottom row
    # (or a single-cell bottom row) of any valid shape leaves a valid connected
    # shape, so every n-cell shape appears as an (n-1)-cell shape plus one
    # adjacent cell.
    if n == 1:
        return (frozenset({(0, 0)}),)
    seen = set()
    for cells in _connected_cellsets(n - 1):
        candidates = set()
        for (x, y) in cells:
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb not in cells:
                    candidates.add(nb)
        for nb in candidates:
            grown = cells | {nb}
            if not _cells_skew_valid(grown):
                continue
            mx = min(c[0] for c in grown)
            my = min(c[1] for c in grown)
            seen.add(frozenset((c[0] - mx, c[1] - my) for c in grown))
    return tuple(sorted(seen, key=sorted))


def _cells_skew_valid(cells) -> bool:
    for (x, y) in cells:
        if (x + 1, y + 1) in cells and ((x, y + 1) not in cells or (x + 1, y) not in cells):
            return False
    return True


def _cells_to_component(cells) -> Component:
    n = len(cells)
    sx = Fraction(sum(c[0] for c in cells), n)
    sy = Fraction(sum(c[1] for c in cells), n)
    return component_from_nodes(Node(Fraction(c[0]) - sx, Fraction(c[1]) - sy) for c in cells)


def enumerate_connected(n: int, *, max_nodes: int = DEFAULT_MAX_NODES) -> tuple[SkewGraph, ...]:
    """All connected skew-graphs with n nodes, canonical, sorted, no duplicates."""
    if n < 1:
        raise ValueError("node count must be positive")
    if n > max_nodes:
        raise EnumerationLimitError(
            f"enumeration of {n}-node graphs exceeds the configured bound of {max_nodes}"
        )
    graphs = [SkewGraph((_cells_to_component(c),)) for c in _connected_cellsets(n)]
    graphs.sort(key=graph_key)
    return tuple(graphs)


@lru_cache(maxsize=None)
def _cs_components(n: int, symmetry: str) -> tuple[Component, ...]:
    out = []
    for cells in _connected_cellsets(n):
        comp = _cells_to_component(cells)
        if classify_component(comp).symmetry == symmetry:
            out.append(comp)
    return tuple(out)


def _rectangle_graphs(n: int, side_test) -> list[SkewGraph]:
    out = []
    for w in range(1, n + 1):
        if n % w == 0 and side_test(w, n // w):
            out.append(SkewGraph((component_from_nodes(rectangle_nodes(w, n // w)),)))
    return out


def _point_component() -> Component:
    return component_from_nodes([ORIGIN])


def _d_integral_pair_sets(n: int, max_nodes: int) -> list[tuple[Component, ...]]:
    """Series-D two-integral-component configurations with n nodes total.

    Either a component with at least three nodes plus the point component,
    or two components with at least three nodes each sharing exactly (0,0).
    """
    if n % 2:
        return []
    out = []
    if n - 1 >= 3 and n - 1 <= max_nodes:
        for comp in _cs_components(n - 1, SYM_INTEGRAL):
            out.append((comp, _point_component()))
    for k in range(3, n // 2 + 1, 2):
        m = n - k
        if m < 3 or k > max_nodes or m > max_nodes:
            continue
        pool_a = _cs_components(k, SYM_INTEGRAL)
        pool_b = _cs_components(m, SYM_INTEGRAL)
        for i, ca in enumerate(pool_a):
            start = i if k == m else 0
            for cb in pool_b[start:]:
                if ca.node_set & cb.node_set == frozenset({ORIGIN}):
                    out.append((ca, cb))
    return out


def enumerate_admissible(
    series: str, dimv: int, kind: str, *, max_nodes: int = DEFAULT_MAX_NODES
) -> tuple[SkewGraph, ...]:
    """Admissible skew-graphs for one classical series, dimension and kind."""
    if series not in SERIES:
        raise ValueError(f"unknown series {series!r}")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if dimv < 1:
        raise ValueError("dimV must be positive")
    if series == "B" and dimv % 2 == 0:
        raise ValueError("series B requires odd dimV")
    if series in ("C", "D") and dimv % 2 == 1:
        raise ValueError(f"series {series} requires even dimV")
    if dimv > max_nodes:
        raise EnumerationLimitError(
            f"dimV {dimv} exceeds the configured bound of {max_nodes}"
        )

    graphs: list[SkewGraph] = []
    if series == "A":
        graphs = list(enumerate_connected(dimv, max_nodes=max_nodes))
        if kind == "principal":
            graphs = [g for g in graphs if classify_component(g.components[0]).young != "neither"]
    elif series == "B":
        if kind == "distinguished":
            for comp in _cs_components(dimv, SYM_INTEGRAL):
                graphs.append(SkewGraph((comp,)))
            for k in range(1, dimv, 2):
                for c0 in _cs_components(k, SYM_INTEGRAL):
                    for c1 in _cs_components(dimv - k, SYM_NON_INTEGRAL):
                        graphs.append(SkewGraph((c0, c1)))
        else:
            graphs = _rectangle_graphs(dimv, lambda w, h: w % 2 == 1 and h % 2 == 1)
    elif series == "C":
        if kind == "distinguished":
            for sym in (SYM_SEMI_COLSORT, SYM_SEMI_ROWSORT):
                for comp in _cs_components(dimv, sym):
                    graphs.append(SkewGraph((comp,)))
            for k in range(2, dimv - 1, 2):
                for c0 in _cs_components(k, SYM_SEMI_COLSORT):
                    for c1 in _cs_components(dimv - k, SYM_SEMI_ROWSORT):
                        graphs.append(SkewGraph((c0, c1)))
        else:
            graphs = _rectangle_graphs(dimv, lambda w, h: (w % 2) != (h % 2))
    else:
        if kind == "distinguished":
            for comp in _cs_components(dimv, SYM_NON_INTEGRAL):
                graphs.append(SkewGraph((comp,)))
            for comps in _d_integral_pair_sets(dimv, max_nodes):
                graphs.append(SkewGraph(comps))
            for j in range(4, dimv - 3, 2):
                for c0 in _cs_components(j, SYM_NON_INTEGRAL):
                    for comps in _d_integral_pair_sets(dimv - j, max_nodes):
                        graphs.append(SkewGraph((c0,) + comps))
        else:
            graphs = _rectangle_graphs(dimv, lambda w, h: w % 2 == 0 and h % 2 == 0)
            near_sets = set()
            for w in range(2, dimv + 3, 2):
                for h in range(2, dimv + 3, 2):
                    for _, cand in _near_rectangular_sets(w, h):
                        if len(cand) == dimv:
                            near_sets.add(cand)
            for cand in sorted(near_sets, key=sorted):
                graphs.append(SkewGraph((component_from_nodes(cand),)))
            for w in range(1, dimv, 2):
                h = (dimv - 1) // w
                if w * h == dimv - 1 and h % 2 == 1 and dimv - 1 >= 3:
                    graphs.append(
                        SkewGraph((component_from_nodes(rectangle_nodes(w, h)), _point_component()))
                    )
            for w in range(3, dimv - 2, 2):
                h = dimv - w
                if h >= 3 and h % 2 == 1:
                    graphs.append(
                        SkewGraph(
                            (
                                component_from_nodes(rectangle_nodes(w, 1)),
                                component_from_nodes(rectangle_nodes(1, h)),
                            )
                        )
                    )

    canon = {graph_key(g): canonical_form(g) for g in graphs}
    return tuple(canon[k] for k in sorted(canon))


def is_admissible(series: str, graph: SkewGraph, kind: str) -> bool:
    """Structural admissibility test; equivalent to enumeration membership."""
    if series not in SERIES or kind not in KINDS:
        raise ValueError("unknown series or kind")
    if validate(graph):
        return False
    comps = list(graph.components)
    shapes = [classify_component(c) for c in comps]

    if series == "A":
        if len(comps) != 1:
            return False
        return kind == "distinguished" or shapes[0].young != "neither"

    centered = all(
        sum((nd.x for nd in c.nodes), Fraction(0)) == 0
        and sum((nd.y for nd in c.nodes), Fraction(0)) == 0
        for c in comps
    )
    if not centered:
        return False

    if series == "B":
        if graph.n_nodes % 2 == 0:
            return False
        syms = sorted(s.symmetry for s in shapes)
        if kind == "distinguished":
            return syms == [SYM_INTEGRAL] or syms == [SYM_INTEGRAL, SYM_NON_INTEGRAL]
        return (
            len(comps) == 1
            and shapes[0].symmetry == SYM_INTEGRAL
            and shapes[0].rectangle is not None
        )

    if series == "C":
        if graph.n_nodes % 2:
            return False
        syms = sorted(s.symmetry for s in shapes)
        if kind == "distinguished":
            return syms in ([SYM_SEMI_COLSORT], [SYM_SEMI_ROWSORT], [SYM_SEMI_COLSORT, SYM_SEMI_ROWSORT])
        return (
            len(comps) == 1
            and shapes[0].symmetry in (SYM_SEMI_COLSORT, SYM_SEMI_ROWSORT)
            and shapes[0].rectangle is not None
        )

    if graph.n_nodes % 2:
        return False
    nonint = [i for i, s in enumerate(shapes) if s.symmetry == SYM_NON_INTEGRAL]
    ints = [i for i, s in enumerate(shapes) if s.symmetry == SYM_INTEGRAL]
    if len(nonint) + len(ints) != len(comps) or len(nonint) > 1 or len(ints) not in (0, 2):
        return False
    if kind == "distinguished":
        if ints:
            a, b = ints
            sizes = sorted((len(comps[a]), len(comps[b])))
            if comps[a].node_set & comps[b].node_set != frozenset({ORIGIN}):
                return False
            if not (sizes[0] >= 3 or (sizes[0] == 1 and sizes[1] >= 3)):
                return False
        return len(nonint) == 1 or len(ints) == 2

    # principal: single non-integral rectangle or near-rectangle, or rectangle
    # plus point, or a horizontal and a vertical chain.
    if len(comps) == 1:
        s = shapes[0]
        return s.symmetry == SYM_NON_INTEGRAL and (
            s.rectangle is not None or s.near_rectangular_shape is not None
        )
    if len(comps) == 2 and len(ints) == 2:
        sa, sb = shapes
        ca, cb = comps
        if len(cb) == 1:
            return sa.rectangle is not None and len(ca) >= 3
        if len(ca) == 1:
            return sb.rectangle is not None and len(cb) >= 3
        rect_a, rect_b = sa.rectangle, sb.rectangle
        if rect_a is None or rect_b is None:
            return False
        chains = sorted([rect_a, rect_b])
        return (
            len(ca) >= 3
            and len(cb) >= 3
            and chains[0][0] == 1
            and chains[1][1] == 1
        )
    return False


# ---------------------------------------------------------------------------
# Serialization and rendering
# ---------------------------------------------------------------------------

def _node_text(nd: Node) -> str:
    return (
        f"{nd.x.numerator}/{nd.x.denominator},"
        f"{nd.y.numerator}/{nd.y.denominator}"
    )


def _node_from_text(text: str) -> Node:
    xs, ys = text.split(",")
    return Node(Fraction(xs), Fraction(ys))


def graph_to_text(graph: SkewGraph) -> str:
    """One line per component; nodes as x_num/x_den,y_num/y_den pairs."""
    return "\n".join(" ".join(_node_text(nd) for nd in comp.nodes) for comp in graph.components)


def graph_from_text(text: str) -> SkewGraph:
    comps = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        comps.append(component_from_nodes(_node_from_text(tok) for tok in line.split()))
    if not comps:
        raise ValueError("no components in graph text")
    return SkewGraph(tuple(comps))


def graph_to_jsonable(graph: SkewGraph) -> dict:
    return {
        "components": [[[str(nd.x), str(nd.y)] for nd in comp.nodes] for comp in graph.components]
    }


def graph_from_jsonable(data: dict) -> SkewGraph:
    comps = []
    for nodes in data["components"]:
        comps.append(component_from_nodes(Node(Fraction(x), Fraction(y)) for x, y in nodes))
    return SkewGraph(tuple(comps))


def render_ascii(graph: SkewGraph) -> str:
    """Draw skew-diagrams; components with a common half-integer offset are
    drawn on separate grids, same-offset components share one grid."""
    groups: dict[tuple[Fraction, Fraction], list[tuple[int, Component]]] = {}
    for idx, comp in enumerate(graph.components):
        anchor = comp.nodes[0]
        groups.setdefault((anchor.x % 1, anchor.y % 1), []).append((idx, comp))
    multi = len(graph.components) > 1
    blocks = []
    for key in sorted(groups):
        cells: dict[tuple[Fraction, Fraction], str] = {}
        for idx, comp in groups[key]:
            mark = chr(ord("a") + idx) if multi else "#"
            for nd in comp.nodes:
                pos = (nd.x, nd.y)
                cells[pos] = "*" if pos in cells else mark
        xs = sorted({p[0] for p in cells})
        ys = sorted({p[1] for p in cells})
        lines = []
        y = ys[-1]
        while y >= ys[0]:
            x = xs[0]
            row = []
            while x <= xs[-1]:
                row.append(cells.get((x, y), "."))
                x += 1
            lines.append("".join(row))
            y -= 1
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)
