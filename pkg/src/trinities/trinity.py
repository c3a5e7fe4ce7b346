"""Trinities: three-coloured triangulations of the sphere built from a plane
bipartite graph, with their colour graphs, balanced directed duals, adjacency
matrix and Tutte matchings.

Triangles are indexed by darts of the input graph: the triangle of dart d is
the one immediately to the left of d, with corners (violet end, emerald end,
left face). It is white exactly when d is based at a violet vertex — in the
counter-clockwise plane picture the white triangle of an edge lies left of the
violet-to-emerald direction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .maps import Bipartition, MapError, PlanarMap, build_map_from_darts

VIOLET = "violet"
EMERALD = "emerald"
RED = "red"
COLOURS = (VIOLET, EMERALD, RED)

# Vertex classes of each colour graph, in (class_a, class_b) order.
COLOUR_CLASSES = {RED: (VIOLET, EMERALD), VIOLET: (EMERALD, RED), EMERALD: (RED, VIOLET)}

HYPERGRAPH_CODES = ("VE", "EV", "ER", "RE", "RV", "VR")
_CODE_TO_COLOUR = {"V": VIOLET, "E": EMERALD, "R": RED}


class InternalConsistencyError(RuntimeError):
    """An identity the construction guarantees failed — an implementation bug."""


@dataclass(frozen=True)
class Triangle:
    dart: int
    violet: int
    emerald: int
    red: int  # face id of the input map
    colour: str  # "white" or "black"

    def corner(self, colour: str) -> tuple[str, int]:
        if colour == VIOLET:
            return (VIOLET, self.violet)
        if colour == EMERALD:
            return (EMERALD, self.emerald)
        return (RED, self.red)

    @property
    def corners(self) -> tuple[tuple[str, int], ...]:
        return ((VIOLET, self.violet), (EMERALD, self.emerald), (RED, self.red))


@dataclass(frozen=True)
class DirectedDual:
    colour: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]  # (tail, head), oriented black -> white
    white_triangles: tuple[int, ...]  # edge i crosses this white triangle


@dataclass(frozen=True)
class AdjMatrix:
    rows: tuple[tuple[str, int], ...]  # non-root vertices (colour tag, id)
    columns: tuple[int, ...]  # non-root white triangle ids (darts)
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Trinity:
    map: PlanarMap
    violet: frozenset[int]
    emerald: frozenset[int]
    outer_face: int
    triangles: tuple[Triangle, ...]  # indexed by dart
    root_triangle: int  # a white triangle id (dart)

    @property
    def n(self) -> int:
        return self.map.n_edges

    @property
    def red_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.map.n_faces))

    @property
    def white_triangles(self) -> tuple[int, ...]:
        return tuple(t.dart for t in self.triangles if t.colour == "white")

    @property
    def root_vertices(self) -> tuple[tuple[str, int], ...]:
        return self.triangles[self.root_triangle].corners

    def vertices_of_colour(self, colour: str) -> tuple[int, ...]:
        if colour == VIOLET:
            return tuple(sorted(self.violet))
        if colour == EMERALD:
            return tuple(sorted(self.emerald))
        return self.red_vertices

    @property
    def all_vertices(self) -> tuple[tuple[str, int], ...]:
        out = [(VIOLET, v) for v in sorted(self.violet)]
        out += [(EMERALD, v) for v in sorted(self.emerald)]
        out += [(RED, r) for r in self.red_vertices]
        return tuple(out)


def build_trinity(
    m: PlanarMap,
    bip: Bipartition,
    outer_face: int = 0,
    root_triangle: Optional[int] = None,
    violet_is_class_a: bool = True,
) -> Trinity:
    violet = bip.class_a if violet_is_class_a else bip.class_b
    emerald = bip.class_b if violet_is_class_a else bip.class_a
    if not (0 <= outer_face < m.n_faces):
        raise MapError(f"outer face {outer_face} out of range")
    triangles = []
    for d in range(m.n_darts):
        base = m.vertex_of[d]
        head = m.head_of(d)
        white = base in violet
        triangles.append(
            Triangle(
                dart=d,
                violet=base if white else head,
                emerald=head if white else base,
                red=m.face_of[d],
                colour="white" if white else "black",
            )
        )
    triangles = tuple(triangles)
    t = Trinity(
        map=m,
        violet=frozenset(violet),
        emerald=frozenset(emerald),
        outer_face=outer_face,
        triangles=triangles,
        root_triangle=-1,
    )
    if root_triangle is None:
        outer_whites = [d for d in t.white_triangles if triangles[d].red == outer_face]
        if not outer_whites:
            raise InternalConsistencyError("outer face meets no white triangle")
        root_triangle = min(outer_whites)
    else:
        if not (0 <= root_triangle < m.n_darts) or triangles[root_triangle].colour != "white":
            raise MapError(f"root triangle {root_triangle} is not a white triangle")
    t = Trinity(
        map=m,
        violet=t.violet,
        emerald=t.emerald,
        outer_face=outer_face,
        triangles=triangles,
        root_triangle=root_triangle,
    )
    _validate_triangle_colouring(t)
    return t


def _black_partner_across(t: Trinity, white: int, colour: str) -> int:
    """The black triangle sharing the colour-c edge of the given white triangle."""
    m = t.map
    d = white
    if colour == RED:
        return m.alpha(d)
    if colour == VIOLET:
        # Shared violet edge joins the emerald and red corners; the partner
        # sits in the same corner at the emerald end, just clockwise.
        return m.sigma_inv(m.alpha(d))
    # Shared emerald edge joins the violet and red corners.
    return m.alpha(m.sigma[d])


def _validate_triangle_colouring(t: Trinity) -> None:
    whites = t.white_triangles
    if 2 * len(whites) != len(t.triangles):
        raise InternalConsistencyError("black/white triangle counts differ")
    for w in whites:
        for colour in COLOURS:
            b = _black_partner_across(t, w, colour)
            tb, tw = t.triangles[b], t.triangles[w]
            if tb.colour != "black":
                raise InternalConsistencyError("triangle 2-colouring is not proper")
            # The shared edge's two endpoints must agree.
            other = [c for c in COLOURS if c != colour]
            for c in other:
                if tb.corner(c) != tw.corner(c):
                    raise InternalConsistencyError("triangles paired across an edge disagree on its endpoints")


def colour_graph(t: Trinity, colour: str) -> tuple[PlanarMap, Bipartition]:
    """The colour-c subgraph of the trinity as an embedded map.

    Vertex ids: class_a vertices (in id order) then class_b vertices; edge i
    corresponds to the i-th white triangle (for red, edge ids match the input
    graph's edge ids, and the map IS the input map).
    """
    if colour == RED:
        return t.map, Bipartition(class_a=t.violet, class_b=t.emerald)
    m = t.map
    whites = t.white_triangles
    class_a_colour, class_b_colour = COLOUR_CLASSES[colour]
    a_ids = t.vertices_of_colour(class_a_colour)
    b_ids = t.vertices_of_colour(class_b_colour)
    a_index = {v: i for i, v in enumerate(a_ids)}
    b_index = {v: len(a_ids) + i for i, v in enumerate(b_ids)}

    def endpoint(tri: Triangle, c: str) -> int:
        tag, vid = tri.corner(c)
        return a_index[vid] if c == class_a_colour else b_index[vid]

    white_index = {w: i for i, w in enumerate(whites)}
    edges = []
    for w in whites:
        tri = t.triangles[w]
        edges.append((endpoint(tri, class_a_colour), endpoint(tri, class_b_colour)))
    # Rotations. Around an original (violet/emerald) vertex the new edges
    # follow the CCW dart order; around a face vertex they follow the face
    # orbit, restricted to the darts whose triangle has that red corner.
    rotations: dict[int, list[int]] = {}
    if colour == VIOLET:
        # Edges join emerald and red corners; white triangle of dart d sits at
        # its emerald end just before dart alpha(d) in CCW order.
        for x in t.vertices_of_colour(EMERALD):
            rotations[a_index[x] if class_a_colour == EMERALD else b_index[x]] = [
                white_index[m.alpha(d)] for d in m.darts_of_vertex(x)
            ]
    else:
        # Emerald edges join violet and red corners; white triangle t(d) sits
        # at its violet base just after dart d.
        for v in t.vertices_of_colour(VIOLET):
            rotations[b_index[v] if class_b_colour == VIOLET else a_index[v]] = [
                white_index[d] for d in m.darts_of_vertex(v)
            ]
    for r, orbit in enumerate(m.faces):
        key = a_index[r] if class_a_colour == RED else b_index[r]
        rotations[key] = [white_index[d] for d in orbit if d in white_index and t.triangles[d].red == r]
    n_vertices = len(a_ids) + len(b_ids)
    rotation_list = [rotations[v] for v in range(n_vertices)]
    # Convert edge-id rotations to dart rotations (multi-edges possible).
    dart_rot: list[list[int]] = [[] for _ in range(n_vertices)]
    for v, cycle in enumerate(rotation_list):
        for e in cycle:
            u0, u1 = edges[e]
            dart_rot[v].append(2 * e if u0 == v else 2 * e + 1)
    cm = build_map_from_darts(n_vertices, edges, dart_rot, allow_loops=True)
    bip = Bipartition(class_a=frozenset(range(len(a_ids))), class_b=frozenset(range(len(a_ids), n_vertices)))
    return cm, bip


def directed_dual(t: Trinity, colour: str) -> DirectedDual:
    m = t.map
    whites = t.white_triangles
    edges = []
    for w in whites:
        b = _black_partner_across(t, w, colour)
        tail = t.triangles[b].corner(colour)[1]
        head = t.triangles[w].corner(colour)[1]
        edges.append((tail, head))
    vertices = t.vertices_of_colour(colour)
    dd = DirectedDual(colour=colour, vertices=vertices, edges=tuple(edges), white_triangles=tuple(whites))
    _check_balanced(dd)
    return dd


def _check_balanced(dd: DirectedDual) -> None:
    from collections import Counter

    indeg: Counter = Counter()
    outdeg: Counter = Counter()
    for tail, head in dd.edges:
        outdeg[tail] += 1
        indeg[head] += 1
    for v in dd.vertices:
        if indeg[v] != outdeg[v]:
            raise InternalConsistencyError(f"directed dual not balanced at vertex {v}")


def non_root_vertices(t: Trinity) -> tuple[tuple[str, int], ...]:
    roots = set(t.root_vertices)
    return tuple(v for v in t.all_vertices if v not in roots)


def non_root_white_triangles(t: Trinity) -> tuple[int, ...]:
    return tuple(w for w in t.white_triangles if w != t.root_triangle)


def _adjacent(tri: Triangle, vertex: tuple[str, int]) -> bool:
    return vertex in tri.corners


def adjacency_matrix(t: Trinity) -> AdjMatrix:
    rows = non_root_vertices(t)
    cols = non_root_white_triangles(t)
    entries = tuple(
        tuple(1 if _adjacent(t.triangles[c], v) else 0 for c in cols) for v in rows
    )
    return AdjMatrix(rows=rows, columns=cols, entries=entries)


def enumerate_tutte_matchings(t: Trinity) -> tuple[tuple[tuple[tuple[str, int], int], ...], ...]:
    """All bijections from non-root vertices to adjacent non-root white triangles."""
    rows = non_root_vertices(t)
    cols = non_root_white_triangles(t)
    options = [tuple(c for c in cols if _adjacent(t.triangles[c], v)) for v in rows]
    out: list[tuple[tuple[tuple[str, int], int], ...]] = []
    used: set[int] = set()
    pick: list[int] = []

    def backtrack(i: int) -> None:
        if i == len(rows):
            out.append(tuple(zip(rows, pick)))
            return
        for c in options[i]:
            if c not in used:
                used.add(c)
                pick.append(c)
                backtrack(i + 1)
                pick.pop()
                used.remove(c)

    backtrack(0)
    return tuple(out)


def hypergraph_classes(code: str) -> tuple[str, str]:
    if code not in HYPERGRAPH_CODES:
        raise ValueError(f"unknown hypergraph selector {code!r}; expected one of {HYPERGRAPH_CODES}")
    return _CODE_TO_COLOUR[code[0]], _CODE_TO_COLOUR[code[1]]


def colour_of_hypergraph(code: str) -> str:
    """The colour graph whose classes realize the hypergraph (X,Y)."""
    x, y = hypergraph_classes(code)
    (missing,) = [c for c in COLOURS if c not in (x, y)]
    return missing


def hypergraph_view(t: Trinity, code: str):
    """(map, x vertex ids in map, y vertex ids in map) for a hypergraph selector.

    X are the hypergraph's vertices, Y its hyperedges; the backing bipartite
    graph is the colour graph of the remaining colour.
    """
    x_colour, y_colour = hypergraph_classes(code)
    colour = colour_of_hypergraph(code)
    cm, bip = colour_graph(t, colour)
    class_a_colour, _ = COLOUR_CLASSES[colour]
    a = sorted(bip.class_a)
    b = sorted(bip.class_b)
    x_ids, y_ids = (a, b) if x_colour == class_a_colour else (b, a)
    return cm, tuple(x_ids), tuple(y_ids)


def magic_number_report(t: Trinity) -> dict:
    from . import trees

    det_route = abs(int(round_det(t)))
    matchings = len(enumerate_tutte_matchings(t))
    rho = {}
    for colour in COLOURS:
        dd = directed_dual(t, colour)
        root = t.triangles[t.root_triangle].corner(colour)[1]
        rho[colour] = trees.count_arborescences(dd, root)
    hyper = {}
    for code in HYPERGRAPH_CODES:
        cm, x_ids, y_ids = hypergraph_view(t, code)
        hyper[code] = len(trees.hypertree_set_of_graph(cm, y_ids))
    values = [det_route, matchings, *rho.values(), *hyper.values()]
    return {
        "det": det_route,
        "tutte_matchings": matchings,
        "arborescences": {c: rho[c] for c in COLOURS},
        "hypertree_counts": hyper,
        "all_equal": len(set(values)) == 1,
        "magic_number": values[0] if len(set(values)) == 1 else None,
    }


def round_det(t: Trinity):
    from .linalg import det_exact

    return det_exact(adjacency_matrix(t).entries)
