"""Shared builders for the test suite: the worked example graph, the larger
fixture graph, and a seeded generator of random plane bipartite maps."""

from __future__ import annotations

import random

from trinities.maps import (
    MapError,
    NotConnectedError,
    NotPlanarError,
    PlanarMap,
    bipartition,
    build_map,
)
from trinities.trinity import Trinity, build_trinity

# Worked 5-edge example: violet v1,v2,v3 = 0,1,2; emerald e1,e2 = 3,4.
G1_EDGES = ((0, 3), (1, 3), (2, 3), (1, 4), (2, 4))
G1_ROTATIONS = ((0,), (1, 3), (2, 4), (0, 2, 1), (3, 4))


def g1_map() -> PlanarMap:
    return build_map(5, G1_EDGES, G1_ROTATIONS)


def g1_trinity(root_triangle: int | None = None) -> Trinity:
    m = g1_map()
    # The unbounded region is on the left of the half-edge at the violet end
    # of edge 0.
    return build_trinity(m, bipartition(m), outer_face=m.face_of[0], root_triangle=root_triangle)


def single_edge_trinity() -> Trinity:
    m = build_map(2, ((0, 1),), ((0,), (0,)))
    return build_trinity(m, bipartition(m), outer_face=0)


FIG7_EDGES = (
    (1, 6), (1, 7), (2, 7), (2, 8), (4, 5), (4, 6),
    (0, 8), (0, 6), (3, 8), (3, 5), (0, 5),
)
FIG7_ROTATIONS = (
    (10, 6, 7), (0, 1), (2, 3), (9, 8), (4, 5),
    (10, 4, 9), (5, 7, 0), (1, 2), (3, 6, 8),
)


def fig7_map() -> PlanarMap:
    return build_map(9, FIG7_EDGES, FIG7_ROTATIONS)


def fig7_trinity() -> Trinity:
    m = fig7_map()
    # Unbounded region: left of the half-edge at the emerald end of edge 6.
    return build_trinity(m, bipartition(m), outer_face=m.face_of[13])


def random_plane_bipartite(rng: random.Random, max_edges: int = 8) -> PlanarMap:
    """A random connected plane bipartite map: random edges over small vertex
    classes plus a random rotation system, rejecting anything non-planar."""
    while True:
        na = rng.randint(1, 3)
        nb = rng.randint(1, 3)
        n = na + nb
        ne = rng.randint(max(1, n - 1), max_edges)
        edges = [(rng.randrange(na), na + rng.randrange(nb)) for _ in range(ne)]
        rot: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(edges):
            rot[u].append(e)
            rot[v].append(e)
        for r in rot:
            rng.shuffle(r)
        if any(not r for r in rot):
            continue
        try:
            return build_map(n, edges, rot)
        except (NotPlanarError, NotConnectedError, MapError):
            continue


def random_trinity(rng: random.Random, max_edges: int = 8) -> Trinity:
    m = random_plane_bipartite(rng, max_edges)
    return build_trinity(m, bipartition(m), outer_face=0)
