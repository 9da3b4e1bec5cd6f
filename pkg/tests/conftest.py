import pytest

from frontdoor import build_graph


@pytest.fixture
def canon():
    """The textbook three-variable diagram: X -> Z -> Y with X <-> Y."""
    return build_graph(["X", "Z", "Y"], [("X", "Z"), ("Z", "Y")], [("X", "Y")])


@pytest.fixture
def intro():
    """Six-variable diagram whose admissible sets are {A}, {A,B}, {A,C},
    {A,B,C}; exercised heavily because every search stage does real work
    on it."""
    return build_graph(
        ["X", "A", "B", "C", "D", "Y"],
        [("X", "A"), ("A", "B"), ("A", "C"), ("A", "D"),
         ("A", "Y"), ("C", "Y"), ("D", "Y")],
        [("X", "Y"), ("X", "D")],
    )


def chain_family(k: int):
    """k parallel mediated chains X -> Ai -> Bi -> Y plus X <-> Y; has
    exactly 3^k admissible sets."""
    names = ["X"]
    directed = []
    for i in range(1, k + 1):
        a, b = f"A{i}", f"B{i}"
        names += [a, b]
        directed += [("X", a), (a, b), (b, "Y")]
    names.append("Y")
    return build_graph(names, directed, [("X", "Y")])


def ix(g, csv: str):
    """Shorthand: comma list of names -> VarSet."""
    if not csv:
        return frozenset()
    return g.indices(csv.split(","))


def names(g, vs) -> str:
    return ",".join(g.names_of(vs))
