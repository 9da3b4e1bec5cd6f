import pytest

from frontdoor import (
    AlreadyExpandedError,
    CyclicGraphError,
    DuplicateNodeError,
    SelfLoopError,
    UnexpandedBidirectedError,
    UnknownNodeError,
    build_graph,
)

from conftest import ix


def test_build_canonical(canon):
    assert canon.names == ("X", "Z", "Y")
    assert canon.nodes == frozenset({0, 1, 2})
    assert canon.directed_edges == {(0, 1), (1, 2)}
    assert canon.bidirected_edges == {(0, 2)}
    assert not any(canon.latent)


def test_build_single_node():
    g = build_graph(["A"])
    assert g.names == ("A",)
    assert not g.directed_edges and not g.bidirected_edges


def test_build_rejects_two_cycle():
    with pytest.raises(CyclicGraphError):
        build_graph(["X", "Y"], [("X", "Y"), ("Y", "X")])


def test_build_rejects_self_loop():
    with pytest.raises(SelfLoopError):
        build_graph(["X"], [("X", "X")])
    with pytest.raises(SelfLoopError):
        build_graph(["X"], bidirected=[("X", "X")])


def test_build_rejects_duplicates_and_bad_names():
    with pytest.raises(DuplicateNodeError):
        build_graph(["A", "A"])
    with pytest.raises(ValueError):
        build_graph(["1abc"])


def test_implicit_declaration_order():
    g = build_graph(["X"], [("X", "Z"), ("Z", "Y")], [("X", "Y")])
    assert g.names == ("X", "Z", "Y")
    with pytest.raises(UnknownNodeError):
        build_graph(["X"], [("X", "Z")], declare_implicitly=False)


def test_kinship_closures(canon):
    assert canon.ancestors(ix(canon, "Y")) == ix(canon, "X,Z,Y")
    assert canon.descendants(ix(canon, "Z")) == ix(canon, "Z,Y")
    assert canon.ancestors(frozenset()) == frozenset()
    # kinship sets include the argument itself
    assert canon.parents(ix(canon, "Z")) == ix(canon, "X,Z")
    assert canon.children(ix(canon, "Z")) == ix(canon, "Z,Y")


def test_closure_rejects_foreign_index(canon):
    with pytest.raises(UnknownNodeError):
        canon.ancestors({7})


def test_remove_incoming(canon):
    g = canon.remove_incoming(ix(canon, "X"))
    # the bidirected edge has an arrowhead at X and counts as incoming
    assert g.directed_edges == {(0, 1), (1, 2)}
    assert g.bidirected_edges == frozenset()
    assert canon.remove_incoming(frozenset()) == canon


def test_remove_incoming_intro(intro):
    g = intro.remove_incoming(ix(intro, "D"))
    assert (intro.index_of("A"), intro.index_of("D")) not in g.directed_edges
    assert g.bidirected_edges == {(intro.index_of("X"), intro.index_of("Y"))}


def test_remove_outgoing(canon):
    g = canon.remove_outgoing(ix(canon, "X"))
    assert g.directed_edges == {(1, 2)}
    assert g.bidirected_edges == {(0, 2)}
    assert canon.remove_outgoing(frozenset()) == canon
    bare = canon.remove_outgoing(ix(canon, "X,Z,Y"))
    assert bare.directed_edges == frozenset()
    assert bare.bidirected_edges == {(0, 2)}


def test_transforms_idempotent(canon, intro):
    for g in (canon, intro):
        for s in (ix(g, "X"), ix(g, "X,Y")):
            assert g.remove_incoming(s).remove_incoming(s) == g.remove_incoming(s)
            assert g.remove_outgoing(s).remove_outgoing(s) == g.remove_outgoing(s)


def test_induced_subgraph(canon):
    g = canon.induced_subgraph(ix(canon, "X,Z"))
    assert g.nodes == ix(canon, "X,Z")
    assert g.directed_edges == {(0, 1)}
    assert g.bidirected_edges == frozenset()
    assert canon.induced_subgraph(canon.nodes) == canon


def test_expand_latents(canon, intro):
    g = canon.expand_latents()
    assert len(g.nodes) == 4
    assert g.bidirected_edges == frozenset()
    lat = next(v for v in g.nodes if g.latent[v])
    assert g.children_of(lat) == ix(canon, "X,Y")
    assert g.parents_of(lat) == frozenset()
    # observed part untouched
    assert g.directed_edges - {(lat, 0), (lat, 2)} == canon.directed_edges

    assert sum(intro.expand_latents().latent) == 2  # one latent per pair

    plain = build_graph(["A", "B"], [("A", "B")])
    assert plain.expand_latents() == plain

    with pytest.raises(AlreadyExpandedError):
        g.expand_latents()


def test_moralize_chain_and_collider():
    chain = build_graph(["X", "Z", "Y"], [("X", "Z"), ("Z", "Y")])
    assert chain.moralize().edges == {(0, 1), (1, 2)}
    collider = build_graph(["A", "C", "B"], [("A", "C"), ("B", "C")])
    # co-parents of C get married
    assert collider.moralize().edges == {(0, 1), (1, 2), (0, 2)}


def test_moralize_expanded_canonical(canon):
    g = canon.expand_latents()
    lat = next(v for v in g.nodes if g.latent[v])
    m = g.moralize()
    x, z, y = 0, 1, 2
    assert m.edges == {
        (min(lat, x), max(lat, x)),
        (min(lat, y), max(lat, y)),
        (x, z),
        (z, y),
        (min(lat, z), max(lat, z)),  # marriage: co-parents of Y
    }


def test_moralize_requires_expansion(canon):
    with pytest.raises(UnexpandedBidirectedError):
        canon.moralize()


def test_moral_remove(canon):
    m = canon.expand_latents().moralize().remove(ix(canon, "X"))
    assert 0 in m.removed
    assert all(0 not in m.neighbors_of(v) for v in m.nodes)
    assert 0 not in m.nodes


def test_name_round_trips(intro):
    assert intro.index_of("C") == 3
    assert intro.names_of(ix(intro, "D,A")) == ["A", "D"]
    with pytest.raises(UnknownNodeError):
        intro.index_of("missing")
