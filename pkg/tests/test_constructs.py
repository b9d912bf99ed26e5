import pytest
from hypothesis import given, settings, strategies as st

from hgpoly import (
    ConstructError,
    GuardExceeded,
    Hypergraph,
    covers,
    enumerate_constructions,
    enumerate_constructs,
    leq,
    parse_construct,
    print_construct,
    rewrite_step,
    spanning_partial_constructions,
    validate_construct,
    vertices_below,
)
from hgpoly.constructs import Omega
from hgpoly import corpus

from _helpers import face_counts_by_dimension, parse_all, prints

SIMPLEX_2_FACES = [
    "x(y,z)", "y(x,z)", "z(x,y)",
    "{x,y}(z)", "{y,z}(x)", "{x,z}(y)",
    "{x,y,z}",
]

PENTAGON_VERTICES = ["x(y(z))", "x(z(y))", "y(x,z)", "z(x(y))", "z(y(x))"]

HEXAGON_CONSTRUCTIONS = [
    "x(y(z))", "y(x(z))", "y(z(x))", "x(z(y))", "z(x(y))", "z(y(x))",
]

EDGE_TRUNCATED_NEW = [
    "x(y,u(z))", "x(y,z(u))", "y(x,u(z))", "y(x,z(u))",
    "x(y,{u,z})", "y(x,{u,z})", "{x,y}(u(z))", "{x,y}(z(u))",
    "{x,y}({u,z})",
]

VERTEX_TRUNCATED_NEW = [
    "x(y(z,u))", "x(z(y,u))", "x(u(y,z))",
    "x({y,z}(u))", "x({z,u}(y))", "x({u,y}(z))",
    "x({y,z,u})",
]


def test_simplex_2_census(named):
    h = named["2-simplex"]
    assert set(enumerate_constructs(h)) == parse_all(h, SIMPLEX_2_FACES)


def test_simplex_3_census(named):
    h = named["3-simplex"]
    faces = enumerate_constructs(h)
    assert face_counts_by_dimension(h, faces) == (4, 6, 4, 1)
    assert len(faces) == 15 == 2**4 - 1


def test_pentagon_vertices(named):
    h = named["pentagon"]
    faces = enumerate_constructs(h)
    assert face_counts_by_dimension(h, faces) == (5, 5, 1)
    assert prints(h, enumerate_constructions(h)) == set(PENTAGON_VERTICES)


def test_hexagon_constructions(named):
    h = named["hexagon"]
    faces = enumerate_constructs(h)
    assert face_counts_by_dimension(h, faces) == (6, 6, 1)
    assert prints(h, enumerate_constructions(h)) == set(HEXAGON_CONSTRUCTIONS)


def test_edge_truncated_3_simplex_new_constructs(named):
    plain = set(enumerate_constructs(named["3-simplex"]))
    h = named["edge-truncated-3-simplex"]
    new = set(enumerate_constructs(h)) - plain
    assert new == parse_all(h, EDGE_TRUNCATED_NEW)


def test_vertex_truncated_3_simplex_new_constructs(named):
    plain = set(enumerate_constructs(named["3-simplex"]))
    h = named["vertex-truncated-3-simplex"]
    new = set(enumerate_constructs(h)) - plain
    assert new == parse_all(h, VERTEX_TRUNCATED_NEW)


def test_vertex_truncated_2_simplex_new_constructs(named):
    plain = set(enumerate_constructs(named["2-simplex"]))
    h = named["vertex-truncated-2-simplex"]
    new = set(enumerate_constructs(h)) - plain
    assert new == parse_all(h, ["x(y(z))", "x(z(y))", "x({y,z})"])


def test_truncation_kills_the_truncated_face(named):
    h = named["vertex-truncated-2-simplex"]
    with pytest.raises(ConstructError):
        parse_construct(h, "x(y,z)")


def test_associahedron_path_4_has_14_constructions(named):
    assert len(enumerate_constructions(named["3-associahedron"])) == 14


def test_permutohedron_4_face_counts(named):
    h = named["3-permutohedron"]
    faces = enumerate_constructs(h)
    assert face_counts_by_dimension(h, faces) == (24, 36, 14, 1)


def test_validate_rejects_wrong_components(named):
    h = named["2-simplex"]
    with pytest.raises(ConstructError):
        parse_construct(h, "x(y(z))")  # {y,z} is disconnected here


def test_validate_rejects_escaping_decoration(named):
    h = named["2-simplex"]
    with pytest.raises(ConstructError):
        validate_construct(
            h,
            parse_construct(h, "{x,y}(z)").__class__(
                frozenset({"x", "q"}), ()
            ),
        )


def test_print_uses_carrier_order(named):
    h = named["edge-truncated-3-simplex"]
    c = parse_construct(h, "{ x , y } ( { u , z } )")
    assert print_construct(h, c) == "{x,y}({z,u})"


def test_parse_print_round_trip_everywhere(small_corpus):
    for h in small_corpus:
        for c in enumerate_constructs(h):
            assert parse_construct(h, print_construct(h, c)) == c


def test_guard_blocks_large_carriers():
    atoms = [f"a{i}" for i in range(9)]
    h = Hypergraph(atoms, [[a] for a in atoms] + [atoms])
    with pytest.raises(GuardExceeded):
        enumerate_constructs(h)
    assert len(enumerate_constructions(h, max_carrier=9)) == 9


def test_leq_examples(named):
    h2 = named["2-simplex"]
    assert leq(parse_construct(h2, "x(y,z)"), parse_construct(h2, "{x,y}(z)"), h2)
    pent = named["pentagon"]
    assert not leq(
        parse_construct(pent, "x(y(z))"), parse_construct(pent, "{y,z}(x)"), pent
    )


def test_leq_variants_agree_on_named(named):
    for key in ["pentagon", "hexagon", "3-simplex", "hemiassociahedron"]:
        h = named[key]
        faces = enumerate_constructs(h)
        for s in faces:
            for t in faces:
                r = leq(s, t, h, "rules")
                assert r == leq(s, t, h, "v2") == leq(s, t, h, "v3")


def test_covers_of_a_vertex_are_edges(named):
    h = named["pentagon"]
    v = parse_construct(h, "x(y(z))")
    ups = covers(h, v)
    assert all(u.node_count == 2 for u in ups)
    assert prints(h, ups) == {"{x,y}(z)", "x({y,z})"}


def test_edge_has_its_two_endpoints_below(named):
    h = named["2-simplex"]
    edge = parse_construct(h, "{x,y}(z)")
    assert prints(h, vertices_below(h, edge)) == {"x(y,z)", "y(x,z)"}


def test_vertices_below_matches_order_filter(small_corpus):
    for h in small_corpus:
        if len(h.carrier) > 3:
            continue
        faces = enumerate_constructs(h)
        vs = [c for c in faces if c.is_construction]
        for t in faces:
            assert set(vertices_below(h, t)) == {v for v in vs if leq(v, t, h, "v2")}


def test_order_agrees_with_vertex_containment(named):
    h = named["hexagon"]
    faces = enumerate_constructs(h)
    below = {t: set(vertices_below(h, t)) for t in faces}
    for s in faces:
        for t in faces:
            assert leq(s, t, h, "v2") == (below[s] <= below[t])


def test_rewriting_grows_span_one_atom_at_a_time(named):
    h = named["pentagon"]
    p = Omega(frozenset("xyz"))
    p = rewrite_step(h, p, "y", frozenset("xy"))
    assert print_construct(h, p) == "y(?x,?z)"
    p = rewrite_step(h, p, "x", frozenset("xy"))
    assert print_construct(h, p) == "y(x,?z)"
    assert p.span == frozenset("xy")


def test_spanning_partial_constructions_pentagon(named):
    h = named["pentagon"]
    got = prints(h, spanning_partial_constructions(h, ["x", "y"]))
    assert got == {"y(x,?z)", "x(y(?z))"}


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_leq_is_a_partial_order(data):
    pool = corpus.small_corpus()
    h = data.draw(st.sampled_from([h for h in pool if 2 <= len(h.carrier) <= 4]))
    faces = enumerate_constructs(h)
    s, t, u = (data.draw(st.sampled_from(faces)) for _ in range(3))
    assert leq(s, s, h, "v2")
    if leq(s, t, h, "v2") and leq(t, s, h, "v2"):
        assert s == t
    if leq(s, t, h, "v2") and leq(t, u, h, "v2"):
        assert leq(s, u, h, "v2")
