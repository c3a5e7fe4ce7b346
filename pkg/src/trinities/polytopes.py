"""Polytopes attached to a trinity: sums of simplices and their trimmed
versions, hypertree polytopes, root polytopes with their tree-simplex
triangulations, slice identities and face-count polynomials.

Hypergraphs are named by two-letter colour selectors ("VE", "ER", ...): the
first letter is the vertex class X, the second the hyperedge class Y; the
backing bipartite graph is the colour graph of the remaining colour.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence

from .geometry import (
    VPolytope,
    canonical_lattice_set,
    intersect_in_common_face,
    lattice_points,
    prune_to_vertices,
    simplex_normalized_volume,
    total_normalized_volume,
)
from .linalg import RatVec, fvec, rank, solve_affine, vec_sub
from .maps import PlanarMap
from .trinity import COLOUR_CLASSES, InternalConsistencyError, Trinity, hypergraph_view
from . import trees


@dataclass(frozen=True)
class TaggedPolytope:
    polytope: VPolytope
    lattice: tuple[tuple[int, ...], ...]
    hypergraph: Optional[str] = None
    kind: str = ""


@dataclass(frozen=True)
class RootPolytope:
    polytope: VPolytope
    generators: tuple[RatVec, ...]  # one point i_u - i_v per edge id
    u_size: int
    v_size: int

    @property
    def dim(self) -> int:
        return self.polytope.affine_dim


@dataclass(frozen=True)
class Triangulation:
    parent: RootPolytope
    trees: tuple[tuple[int, ...], ...]  # spanning trees, one per simplex
    simplices: tuple[tuple[RatVec, ...], ...]


def hyperedges(m: PlanarMap, x_ids: Sequence[int], y_ids: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """For each y (in order) the sorted distinct x-positions adjacent to it."""
    x_pos = {v: i for i, v in enumerate(x_ids)}
    out = []
    for y in y_ids:
        nbrs = set()
        for u, v in m.edges:
            if u == y and v in x_pos:
                nbrs.add(x_pos[v])
            elif v == y and u in x_pos:
                nbrs.add(x_pos[u])
        if not nbrs:
            raise ValueError("hyperedge with no vertices")
        out.append(tuple(sorted(nbrs)))
    return tuple(out)


def _unit(i: int, dim: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(dim))


def _generator_sums(edges: Sequence[tuple[int, ...]], dim: int) -> tuple[tuple[int, ...], ...]:
    sums = {tuple([0] * dim)}
    for e in edges:
        sums = {tuple(s[j] + (1 if j == i else 0) for j in range(dim)) for s in sums for i in e}
    return canonical_lattice_set(sums)


def gp_polytope(m: PlanarMap, x_ids: Sequence[int], y_ids: Sequence[int], tag: str = "") -> TaggedPolytope:
    """Minkowski sum over hyperedges y of the simplex on the vertices of y."""
    dim = len(x_ids)
    he = hyperedges(m, x_ids, y_ids)
    points = _generator_sums(he, dim)
    poly = VPolytope.from_points(points)
    if lattice_points(poly) != points:
        raise InternalConsistencyError("sums of generators do not exhaust the lattice points")
    return TaggedPolytope(polytope=poly, lattice=points, hypergraph=tag or None, kind="gp")


def trimmed_gp(m: PlanarMap, x_ids: Sequence[int], y_ids: Sequence[int], tag: str = "") -> TaggedPolytope:
    """Minkowski difference of the GP polytope by the standard simplex on X."""
    dim = len(x_ids)
    gp = gp_polytope(m, x_ids, y_ids, tag)
    pts = {tuple(int(c) for c in p) for p in gp.lattice}
    candidates = {tuple(p[j] - (1 if j == i else 0) for j in range(dim)) for p in pts for i in range(dim)}
    trimmed = [
        x
        for x in candidates
        if all(tuple(x[j] + (1 if j == i else 0) for j in range(dim)) in pts for i in range(dim))
    ]
    lattice = canonical_lattice_set(trimmed)
    if not lattice:
        raise InternalConsistencyError("trimmed polytope has no lattice points")
    poly = VPolytope.from_points(lattice)
    if lattice_points(poly) != lattice:
        raise InternalConsistencyError("trimmed lattice set is not convexly closed")
    return TaggedPolytope(polytope=poly, lattice=lattice, hypergraph=tag or None, kind="trimmed")


def hypertree_polytope(m: PlanarMap, y_ids: Sequence[int], tag: str = "") -> TaggedPolytope:
    """Convex hull of the hypertree vectors, indexed by the hyperedge class."""
    hs = trees.hypertree_set_of_graph(m, y_ids)
    poly = VPolytope.from_points(hs)
    if lattice_points(poly) != hs:
        raise InternalConsistencyError("hypertree set is not convexly closed")
    return TaggedPolytope(polytope=poly, lattice=hs, hypergraph=tag or None, kind="hypertree")


def gp_polytope_of(t: Trinity, code: str) -> TaggedPolytope:
    cm, x_ids, y_ids = hypergraph_view(t, code)
    return gp_polytope(cm, x_ids, y_ids, code)


def trimmed_gp_of(t: Trinity, code: str) -> TaggedPolytope:
    cm, x_ids, y_ids = hypergraph_view(t, code)
    return trimmed_gp(cm, x_ids, y_ids, code)


def hypertree_polytope_of(t: Trinity, code: str) -> TaggedPolytope:
    cm, _x_ids, y_ids = hypergraph_view(t, code)
    return hypertree_polytope(cm, y_ids, code)


def root_polytope(m: PlanarMap, u_ids: Sequence[int], v_ids: Sequence[int]) -> RootPolytope:
    """Convex hull of i_u - i_v over the edges, U coordinates first."""
    u_pos = {x: i for i, x in enumerate(u_ids)}
    v_pos = {x: len(u_ids) + i for i, x in enumerate(v_ids)}
    dim = len(u_ids) + len(v_ids)
    gens = []
    for a, b in m.edges:
        u, v = (a, b) if a in u_pos else (b, a)
        p = [0] * dim
        p[u_pos[u]] = 1
        p[v_pos[v]] = -1
        gens.append(fvec(p))
    poly = VPolytope.from_points(gens)
    return RootPolytope(polytope=poly, generators=tuple(gens), u_size=len(u_ids), v_size=len(v_ids))


def root_polytope_of(t: Trinity, colour: str, u_colour: Optional[str] = None) -> RootPolytope:
    from .trinity import colour_graph

    cm, bip = colour_graph(t, colour)
    class_a_colour, class_b_colour = COLOUR_CLASSES[colour]
    if u_colour is None:
        u_colour = class_b_colour
    a, b = sorted(bip.class_a), sorted(bip.class_b)
    u_ids, v_ids = (a, b) if u_colour == class_a_colour else (b, a)
    return root_polytope(cm, u_ids, v_ids)


def tree_simplex(rp: RootPolytope, tree_edges: Sequence[int]) -> VPolytope:
    pts = [rp.generators[e] for e in tree_edges]
    from .geometry import affine_dim

    if affine_dim(pts) != len(pts) - 1:
        raise ValueError("edge set does not span a simplex (contains a cycle)")
    return VPolytope.from_points(pts, assume_vertices=True)


def arborescence_triangulation(t: Trinity, colour: str, root: Optional[int] = None) -> Triangulation:
    """Triangulation of the colour graph's root polytope by the simplices of
    the spanning trees dual to the arborescences at the given root."""
    from .trinity import directed_dual

    dd = directed_dual(t, colour)
    if root is None:
        root = t.triangles[t.root_triangle].corner(colour)[1]
    rp = root_polytope_of(t, colour)
    arbs = trees.enumerate_arborescences(dd, root)
    tree_sets = tuple(trees.arborescence_to_spanning_tree(t, colour, a) for a in arbs)
    simplices = tuple(tree_simplex(rp, tr).vertices for tr in tree_sets)
    # Validation: unit volumes, pairwise common-face intersections, total volume.
    for s in simplices:
        if simplex_normalized_volume(s) != 1:
            raise InternalConsistencyError("tree simplex is not unimodular")
    for s1, s2 in combinations(simplices, 2):
        p1 = VPolytope.from_points(s1, assume_vertices=True)
        p2 = VPolytope.from_points(s2, assume_vertices=True)
        if not intersect_in_common_face(p1, p2):
            raise InternalConsistencyError("simplices do not meet in a common face")
    if len(simplices) != total_normalized_volume(rp.polytope.vertices):
        raise InternalConsistencyError("triangulation volume does not cover the root polytope")
    return Triangulation(parent=rp, trees=tree_sets, simplices=simplices)


def cayley_slice(rp: RootPolytope, side: str) -> VPolytope:
    """Exact intersection of the root polytope with the side's Cayley hyperplanes.

    Side "U" fixes the first block to 1/m each; side "V" fixes the second
    block to -1/n each. The result keeps all ambient coordinates.
    """
    m, n = rp.u_size, rp.v_size
    if side == "U":
        fixed = {i: Fraction(1, m) for i in range(m)}
    elif side == "V":
        fixed = {m + i: Fraction(-1, n) for i in range(n)}
    else:
        raise ValueError("side must be 'U' or 'V'")
    verts = rp.polytope.vertices
    hits: set[RatVec] = set()
    for k in range(1, len(verts) + 1):
        for face in combinations(verts, k):
            pt = _affine_flat_point(face, fixed)
            if pt is not None:
                hits.add(pt)
    if not hits:
        raise InternalConsistencyError("slice is empty")
    return VPolytope.from_points(prune_to_vertices(hits), assume_vertices=True)


def _affine_flat_point(face: Sequence[RatVec], fixed: dict[int, Fraction]) -> Optional[RatVec]:
    """Unique point of aff(face) meeting the fixed-coordinate flat, inside
    conv(face); None when absent or not unique."""
    base = face[0]
    dirs = [vec_sub(p, base) for p in face[1:]]
    rows = [tuple(d[i] for d in dirs) for i in fixed]
    target = tuple(c - base[i] for i, c in fixed.items())
    if rank(rows) < len(dirs):
        return None
    sol = solve_affine([tuple(r[j] for r in rows) for j in range(len(dirs))], target)
    if sol is None:
        return None
    weights = [Fraction(1) - sum(sol, Fraction(0))] + list(sol)
    if any(w < 0 for w in weights):
        return None
    pt = tuple(sum(w * p[i] for w, p in zip(weights, face)) for i in range(len(base)))
    if any(pt[i] != c for i, c in fixed.items()):
        return None
    return pt


def slice_matches_scaled_gp(rp: RootPolytope, side: str, gp: TaggedPolytope) -> bool:
    """Check the slice identity: side U equals -(1/m) times the GP polytope of
    the second block's hypergraph, side V equals (1/n) times that of the first."""
    sl = cayley_slice(rp, side)
    m, n = rp.u_size, rp.v_size
    if side == "U":
        projected = {v[m:] for v in sl.vertices}
        expected = {tuple(Fraction(-x, m) for x in p) for p in gp.polytope.vertices}
    else:
        projected = {v[:m] for v in sl.vertices}
        expected = {tuple(Fraction(x, n) for x in p) for p in gp.polytope.vertices}
    return projected == expected


def f_vector(tr: Triangulation) -> tuple[int, ...]:
    """Face counts as polynomial coefficients, highest degree first.

    The coefficient of y^(d+1-k) counts the (k-1)-dimensional faces, starting
    from the single empty face at y^(d+1) down to the top simplices.
    """
    d = len(tr.simplices[0]) - 1
    faces: set[frozenset] = set()
    for s in tr.simplices:
        for k in range(len(s) + 1):
            for sub in combinations(s, k):
                faces.add(frozenset(sub))
    counts = [0] * (d + 2)
    for f in faces:
        counts[len(f)] += 1
    return tuple(counts)  # counts[k] = #(k-1)-faces = coefficient of y^(d+1-k)


def h_vector(tr: Triangulation) -> tuple[int, ...]:
    """Coefficients of h(x) = f(x-1), highest degree first."""
    from math import comb

    f = f_vector(tr)
    top = len(f) - 1
    by_power = [0] * len(f)  # by_power[j] = coefficient of x^j
    for k, coeff in enumerate(f):
        p = top - k
        for j in range(p + 1):
            by_power[j] += coeff * comb(p, j) * ((-1) ** (p - j))
    return tuple(by_power[::-1])


def verify_duality_suite(t: Trinity) -> dict:
    from .trinity import HYPERGRAPH_CODES

    trimmed_matches = {}
    for code in HYPERGRAPH_CODES:
        rev = code[::-1]
        trimmed_matches[code] = trimmed_gp_of(t, code).lattice == trees.hypertree_set(t, rev)
    reflections = {}
    for c1, c2 in (("VE", "RE"), ("RV", "EV"), ("VR", "ER")):
        s1 = trees.hypertree_set(t, c1)
        s2 = trees.hypertree_set(t, c2)
        dim = len(s1[0]) if s1 else 0
        c = tuple(
            min(p[i] for p in s1) + max(p[i] for p in s2) for i in range(dim)
        )
        holds = {tuple(c[i] - p[i] for i in range(dim)) for p in s2} == set(s1)
        reflections[f"{c1}|{c2}"] = {"holds": holds, "center": c}
    return {
        "trimmed_equals_dual_hypertrees": trimmed_matches,
        "reflections": reflections,
        "all_hold": all(trimmed_matches.values()) and all(r["holds"] for r in reflections.values()),
    }
