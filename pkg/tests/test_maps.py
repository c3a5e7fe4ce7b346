import pytest

from trinities.maps import (
    MapError,
    NotBipartiteError,
    NotConnectedError,
    NotPlanarError,
    betti1,
    bipartition,
    build_map,
    build_map_from_darts,
    faces,
    maps_isomorphic,
    planar_dual,
)

from helpers import G1_EDGES, G1_ROTATIONS, g1_map


def test_g1_structure():
    m = g1_map()
    assert (m.n_vertices, m.n_edges, m.n_faces) == (5, 5, 2)
    assert faces(m) == ((0, 3, 6, 9, 4, 1), (2, 5, 8, 7))
    assert betti1(m) == 1


def test_g1_bipartition():
    b = bipartition(g1_map())
    assert sorted(b.class_a) == [0, 1, 2]
    assert sorted(b.class_b) == [3, 4]


def test_face_orbits_trace_left_side():
    m = g1_map()
    # The face on the left of a dart contains that dart in its orbit.
    for d in range(m.n_darts):
        assert d in m.faces[m.face_of[d]]
        assert m.face_of[m.next_in_face(d)] == m.face_of[d]


def test_dual_and_double_dual():
    m = g1_map()
    dual = planar_dual(m)
    assert (dual.n_vertices, dual.n_edges, dual.n_faces) == (2, 5, 5)
    assert maps_isomorphic(planar_dual(dual), m)


def test_single_edge_and_its_dual():
    m = build_map(2, ((0, 1),), ((0,), (0,)))
    assert m.n_faces == 1
    d = planar_dual(m)
    assert (d.n_vertices, d.n_edges) == (1, 1)


def test_triangle_is_not_bipartite():
    m = build_map(3, ((0, 1), (1, 2), (2, 0)), ((0, 2), (1, 0), (2, 1)))
    assert m.n_faces == 2
    with pytest.raises(NotBipartiteError):
        bipartition(m)


def test_nonplanar_rotation_system_rejected():
    # K4 has planar rotation systems and toroidal ones.
    edges = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    planar = ((0, 1, 2), (0, 4, 3), (1, 3, 5), (2, 5, 4))
    build_map(4, edges, planar)
    twisted = ((0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 5, 4))
    with pytest.raises(NotPlanarError):
        build_map(4, edges, twisted)


def test_disconnected_rejected():
    with pytest.raises(NotConnectedError):
        build_map(4, ((0, 1), (2, 3)), ((0,), (0,), (1,), (1,)))


def test_bad_rotation_rejected():
    with pytest.raises(MapError):
        build_map(2, ((0, 1),), ((0, 0), (0,)))


def test_rotation_order_is_respected():
    m = g1_map()
    # Darts 1, 3, 5 sit at vertex e1 = 3; the given cyclic order 0,2,1 of
    # edge ids makes sigma cycle them as 1 -> 5 -> 3.
    assert m.darts_of_vertex(3) == (1, 5, 3)
    assert m.sigma[1] == 5 and m.sigma[5] == 3 and m.sigma[3] == 1


def test_canonical_face_ordering():
    m = g1_map()
    for orbit in m.faces:
        assert orbit[0] == min(orbit)
    assert [orbit[0] for orbit in m.faces] == sorted(orbit[0] for orbit in m.faces)


def test_loops_allowed_only_when_requested():
    with pytest.raises(MapError):
        build_map_from_darts(1, ((0, 0),), ((0, 1),))
    m = build_map_from_darts(1, ((0, 0),), ((0, 1),), allow_loops=True)
    assert m.n_faces == 2
