"""Vertex-presented polytopes with exact predicates.

Membership is LP feasibility ("is x a convex combination of the vertices"),
lattice points come from a pruned bounding-box search, and simplex volumes are
normalized to the direction lattice of the affine span.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .linalg import (
    OPTIMAL,
    DimensionError,
    RatVec,
    fvec,
    lp_solve,
    rank,
    vec_sub,
)
from .linalg import simplex_normalized_volume as _simplex_normalized_volume

simplex_normalized_volume = _simplex_normalized_volume

IntVec = tuple[int, ...]


def canonical_lattice_set(points: Iterable[Sequence[int]]) -> tuple[IntVec, ...]:
    """Deduplicate and sort integer vectors lexicographically."""
    return tuple(sorted({tuple(int(x) for x in p) for p in points}))


def _membership_rows(vertices: Sequence[RatVec]) -> list[RatVec]:
    dim = len(vertices[0])
    rows = [tuple(v[i] for v in vertices) for i in range(dim)]
    rows.append(tuple(Fraction(1) for _ in vertices))
    return rows


def points_contain(vertices: Sequence[RatVec], x: RatVec) -> bool:
    if len(x) != len(vertices[0]):
        raise DimensionError("point dimension does not match polytope")
    rows = _membership_rows(vertices)
    b = tuple(Fraction(c) for c in x) + (Fraction(1),)
    status, _, _ = lp_solve(rows, b, tuple([Fraction(0)] * len(vertices)))
    return status == OPTIMAL


def prune_to_vertices(points: Iterable[Sequence]) -> tuple[RatVec, ...]:
    """Irredundant vertex set of the convex hull of the given points."""
    pts = sorted({fvec(p) for p in points})
    if len(pts) <= 1:
        return tuple(pts)
    vertices = list(pts)
    i = 0
    while i < len(vertices):
        rest = vertices[:i] + vertices[i + 1 :]
        if points_contain(rest, vertices[i]):
            vertices.pop(i)
        else:
            i += 1
    return tuple(vertices)


@dataclass(frozen=True)
class VPolytope:
    """Convex hull given by its irredundant vertices, canonically sorted."""

    vertices: tuple[RatVec, ...]
    ambient_dim: int
    affine_dim: int

    @classmethod
    def from_points(cls, points: Iterable[Sequence], assume_vertices: bool = False) -> "VPolytope":
        pts = sorted({fvec(p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        verts = tuple(pts) if assume_vertices else prune_to_vertices(pts)
        return cls(vertices=verts, ambient_dim=len(verts[0]), affine_dim=affine_dim(verts))

    def contains(self, x: Sequence) -> bool:
        return points_contain(self.vertices, fvec(x))

    def scale(self, c) -> "VPolytope":
        c = Fraction(c)
        return VPolytope.from_points([tuple(c * x for x in v) for v in self.vertices], assume_vertices=True)

    def translate(self, t: Sequence) -> "VPolytope":
        tv = fvec(t)
        return VPolytope.from_points(
            [tuple(x + y for x, y in zip(v, tv)) for v in self.vertices], assume_vertices=True
        )


def contains_point(p: VPolytope, x: Sequence) -> bool:
    return p.contains(x)


def affine_dim(points: Sequence[Sequence]) -> int:
    pts = [fvec(p) for p in points]
    if not pts:
        raise ValueError("affine_dim of empty point set")
    return rank([vec_sub(q, pts[0]) for q in pts[1:]])


def lattice_points(p: VPolytope) -> tuple[IntVec, ...]:
    """All integer vectors in the polytope.

    Bounding-box search, pruned one coordinate at a time by exact LP
    feasibility of the partial fixing, so empty slabs are skipped wholesale.
    """
    verts = p.vertices
    dim = p.ambient_dim
    lo = [math.ceil(min(v[i] for v in verts)) for i in range(dim)]
    hi = [math.floor(max(v[i] for v in verts)) for i in range(dim)]
    if any(lo[i] > hi[i] for i in range(dim)):
        return ()
    base_rows = _membership_rows(verts)
    n = len(verts)
    zero_obj = tuple([Fraction(0)] * n)
    out: list[IntVec] = []

    def feasible(prefix: list[int]) -> bool:
        k = len(prefix)
        rows = base_rows[:k] + [base_rows[-1]]
        b = tuple(Fraction(c) for c in prefix) + (Fraction(1),)
        status, _, _ = lp_solve(rows, b, zero_obj)
        return status == OPTIMAL

    def descend(prefix: list[int]) -> None:
        k = len(prefix)
        if k == dim:
            if points_contain(verts, fvec(prefix)):
                out.append(tuple(prefix))
            return
        for value in range(lo[k], hi[k] + 1):
            prefix.append(value)
            if feasible(prefix):
                descend(prefix)
            prefix.pop()

    descend([])
    return canonical_lattice_set(out)


def intersect_in_common_face(s1: VPolytope, s2: VPolytope) -> bool:
    """True iff the two simplices intersect exactly in the hull of their shared vertices.

    Barycentric coordinates in a simplex are unique, so the intersection lies
    inside conv(shared) iff no intersection point puts positive weight on a
    non-shared vertex; each such weight is maximized by an exact LP.
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise DimensionError("simplices live in different ambient spaces")
    for s in (s1, s2):
        if affine_dim(s.vertices) != len(s.vertices) - 1:
            raise ValueError("input is not a simplex")
    shared = set(s1.vertices) & set(s2.vertices)
    n1, n2 = len(s1.vertices), len(s2.vertices)
    dim = s1.ambient_dim
    # Variables: barycentric weights of s1 then of s2.
    rows = []
    for i in range(dim):
        rows.append(tuple(v[i] for v in s1.vertices) + tuple(-w[i] for w in s2.vertices))
    rows.append(tuple(Fraction(1) for _ in range(n1)) + tuple(Fraction(0) for _ in range(n2)))
    rows.append(tuple(Fraction(0) for _ in range(n1)) + tuple(Fraction(1) for _ in range(n2)))
    b = tuple([Fraction(0)] * dim) + (Fraction(1), Fraction(1))
    free_indices = [i for i, v in enumerate(s1.vertices) if v not in shared]
    free_indices += [n1 + j for j, w in enumerate(s2.vertices) if w not in shared]
    for idx in free_indices:
        c = [Fraction(0)] * (n1 + n2)
        c[idx] = Fraction(1)
        status, value, _ = lp_solve(rows, b, tuple(c))
        if status == OPTIMAL and value > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Incremental (placing) triangulation — the independent volume oracle.
# ---------------------------------------------------------------------------


def _span_coordinates(points: Sequence[RatVec]) -> list[RatVec]:
    """Coordinates of the points in an affine basis of their span (rational)."""
    base = points[0]
    dirs = [vec_sub(p, base) for p in points]
    # Row-reduce a copy to pick an independent direction basis.
    basis: list[RatVec] = []
    for d in dirs:
        if rank(basis + [d]) > len(basis):
            basis.append(d)
    from .linalg import solve_affine

    coords = []
    for d in dirs:
        sol = solve_affine(basis, d)
        assert sol is not None
        coords.append(sol)
    return coords


def _facet_inequality(coords: Sequence[RatVec], facet: Sequence[int], opposite: int):
    """Hyperplane (normal, offset) through the facet with the opposite vertex strictly inside."""
    from .linalg import solve_affine

    pts = [coords[i] for i in facet]
    d = len(pts[0])
    # Normal n, offset c with n.p = c for facet points; fix scale via an
    # inhomogeneous solve: unknowns (n, c), equations n.p - c = 0 plus a
    # normalization picked deterministically.
    base = pts[0]
    rows = [vec_sub(p, base) for p in pts[1:]]
    # Normal = any nonzero solution of rows . n = 0.
    n_vec = _kernel_vector(rows, d)
    c = sum(a * b for a, b in zip(n_vec, base))
    opp = sum(a * b for a, b in zip(n_vec, coords[opposite]))
    if opp > c:
        n_vec = tuple(-x for x in n_vec)
        c = -c
    elif opp == c:
        raise ValueError("degenerate facet")
    return n_vec, c


def _kernel_vector(rows: Sequence[RatVec], n_cols: int) -> RatVec:
    """A nonzero vector orthogonal to all rows (rows have rank n_cols - 1)."""
    a = [list(r) for r in rows]
    pivots: dict[int, list[Fraction]] = {}
    for row in a:
        row = list(row)
        for col, prow in pivots.items():
            if row[col] != 0:
                f = row[col]
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x != 0), None)
        if lead is not None:
            inv = 1 / row[lead]
            row = [x * inv for x in row]
            for col, prow in pivots.items():
                if prow[lead] != 0:
                    f = prow[lead]
                    pivots[col] = [x - f * y for x, y in zip(prow, row)]
            pivots[lead] = row
    free = next(j for j in range(n_cols) if j not in pivots)
    v = [Fraction(0)] * n_cols
    v[free] = Fraction(1)
    for col, prow in pivots.items():
        v[col] = -prow[free]
    return tuple(v)


def placing_triangulation(points: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Triangulation of conv(points) by placing the points in the given order.

    Returns simplices as sorted index tuples. Every input point must be a
    vertex of the hull of its predecessors plus itself (true for the root
    polytopes this serves); collinear degeneracies inside the current hull are
    rejected.
    """
    pts = [fvec(p) for p in points]
    coords = _span_coordinates(pts)
    simplices: list[tuple[int, ...]] = [(0,)]
    span_basis_rank = 0
    placed = [0]
    for idx in range(1, len(pts)):
        d = rank([vec_sub(coords[j], coords[placed[0]]) for j in placed])
        d_new = rank([vec_sub(coords[j], coords[placed[0]]) for j in placed + [idx]])
        if d_new > d:
            # Dimension jump: cone every simplex over the new point.
            simplices = [tuple(sorted(s + (idx,))) for s in simplices]
        else:
            restricted = _restrict(coords, placed + [idx])
            new_simplices = []
            for facet, opposite in _boundary_facets(simplices):
                n_vec, c = _facet_inequality(restricted, facet, opposite)
                val = sum(a * b for a, b in zip(n_vec, restricted[idx]))
                if val > c:
                    new_simplices.append(tuple(sorted(facet + (idx,))))
            if not new_simplices:
                raise ValueError("placed point is not outside the current hull")
            simplices = simplices + new_simplices
        placed.append(idx)
    return tuple(sorted(simplices))


def _restrict(coords: Sequence[RatVec], active: Sequence[int]) -> dict[int, RatVec]:
    """Coordinates of the active points in a basis of their own span."""
    sub = [coords[i] for i in active]
    local = _span_coordinates(sub)
    return {i: local[k] for k, i in enumerate(active)}


def _boundary_facets(simplices: Sequence[tuple[int, ...]]):
    """Facets belonging to exactly one simplex, with the opposite vertex."""
    seen: dict[tuple[int, ...], list[int]] = {}
    for s in simplices:
        for drop in s:
            facet = tuple(v for v in s if v != drop)
            seen.setdefault(facet, []).append(drop)
    return [(facet, opps[0]) for facet, opps in seen.items() if len(opps) == 1]


def total_normalized_volume(points: Sequence[Sequence]) -> int:
    """Normalized volume of conv(points) via the placing triangulation."""
    pts = [fvec(p) for p in points]
    total = 0
    for simplex in placing_triangulation(pts):
        total += simplex_normalized_volume([pts[i] for i in simplex])
    return total
