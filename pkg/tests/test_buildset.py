"""Building sets: axioms, minors, Hopf operations."""

from collections import Counter

import pytest
from hypothesis import given
import hypothesis.strategies as st

from conftest import graphs
from nestoqsym.bitsets import bits, mask_of
from nestoqsym.buildset import (
    BuildingSet,
    building_set,
    components,
    contraction,
    coproduct,
    discrete_building_set,
    from_graph,
    hopf_word,
    is_connected,
    parse_building_set,
    product,
    restriction,
    serialize_building_set,
    takeuchi_antipode,
    validate,
)
from nestoqsym.errors import InputError, NotABuildingSetError, ParseError
from nestoqsym.graphs import contract, family, graph_from_edges, induced


def bs(n, *vertex_sets):
    return building_set(n, [mask_of(v - 1 for v in vs) for vs in vertex_sets])


def test_validate_examples():
    assert bs(2, [1], [2], [1, 2]).mu == 3
    with pytest.raises(NotABuildingSetError) as err:
        bs(3, [1], [2], [3], [1, 2], [2, 3])
    assert "{1,2}" in str(err.value) and "{2,3}" in str(err.value)
    assert bs(4, [1], [2], [3], [4], [1, 2], [1, 2, 3]).mu == 6


def test_validate_singleton_handling():
    b = building_set(3, [mask_of([0, 1, 2])])
    assert b.sets == (1, 2, 4, 7)
    with pytest.raises(NotABuildingSetError):
        validate([mask_of([0, 1, 2])], 3, add_singletons=False)
    with pytest.raises(InputError):
        validate([0], 2)
    with pytest.raises(InputError):
        validate([8], 2)


def test_from_graph_examples():
    b = from_graph(family("path", 4))
    assert b.members() == [
        [1], [2], [1, 2], [3], [2, 3], [1, 2, 3], [4], [3, 4], [2, 3, 4],
        [1, 2, 3, 4],
    ]
    assert from_graph(family("complete", 2)).sets == (1, 2, 3)
    assert from_graph(graph_from_edges(2, [])).sets == (1, 2)


@given(graphs(max_n=6))
def test_from_graph_always_validates(g):
    b = from_graph(g)
    assert validate(b.sets, b.n, add_singletons=False) == b


def test_restriction_examples():
    b4 = from_graph(family("path", 4))
    assert restriction(b4, mask_of([0, 1, 2])) == from_graph(family("path", 3))
    assert restriction(b4, 0) == BuildingSet(0, ())
    assert restriction(b4, 0b1111) == b4


def test_contraction_examples():
    b4 = from_graph(family("path", 4))
    assert contraction(b4, mask_of([1])) == from_graph(family("path", 3))
    assert contraction(b4, 0) == b4
    assert contraction(from_graph(family("complete", 2)), 1) == BuildingSet(1, (1,))


def test_components_examples():
    b = bs(4, [1], [2], [3], [4], [1, 2], [3, 4])
    comps = components(b)
    assert [c[0] for c in comps] == [(0, 1), (2, 3)]
    assert all(c[1] == from_graph(family("complete", 2)) for c in comps)
    assert is_connected(from_graph(family("path", 4)))
    assert components(discrete_building_set(3)) == [
        ((0,), BuildingSet(1, (1,))),
        ((1,), BuildingSet(1, (1,))),
        ((2,), BuildingSet(1, (1,))),
    ]


def test_product_examples():
    point = BuildingSet(1, (1,))
    assert product(point, point) == discrete_building_set(2)
    k2 = from_graph(family("complete", 2))
    assert product(k2, k2) == bs(4, [1], [2], [3], [4], [1, 2], [3, 4])
    assert product(k2, BuildingSet(0, ())) == k2


def test_coproduct_examples():
    point = BuildingSet(1, (1,))
    terms = coproduct(point)
    assert len(terms) == 2
    assert terms[0] == (0, BuildingSet(0, ()), point)
    assert terms[1] == (1, point, BuildingSet(0, ()))
    k2 = from_graph(family("complete", 2))
    terms = coproduct(k2)
    assert len(terms) == 4
    assert terms[1] == (1, BuildingSet(1, (1,)), BuildingSet(1, (1,)))


def _coproduct_counter(b):
    return Counter(
        (left.sets, left.n, right.sets, right.n)
        for _, left, right in coproduct(b)
    )


def test_coproduct_coassociative_on_path3():
    b = from_graph(family("path", 3))
    left = Counter()
    right = Counter()
    for _, x, y in coproduct(b):
        for _, a, c in coproduct(x):
            left[(a.sets, c.sets, y.sets, a.n, c.n, y.n)] += 1
        for _, c, d in coproduct(y):
            right[(x.sets, c.sets, d.sets, x.n, c.n, d.n)] += 1
    assert left == right


def test_takeuchi_examples():
    point = BuildingSet(1, (1,))
    s = takeuchi_antipode(point)
    assert s.as_dict() == {hopf_word([point]): -1}

    k2 = from_graph(family("complete", 2))
    s = takeuchi_antipode(k2)
    assert s.as_dict() == {
        hopf_word([k2]): -1,
        hopf_word([point, point]): 2,
    }

    d2 = discrete_building_set(2)
    s = takeuchi_antipode(d2)
    assert s.as_dict() == {
        hopf_word([d2]): -1,
        hopf_word([point, point]): 2,
    }


# ---------------------------------------------------------------------------
# minor identities (the bialgebra compatibility laws)

def _relabel_through(mask, removed, n):
    """Translate an original-label mask to post-removal coordinates."""
    survivors = [v for v in range(n) if not removed >> v & 1]
    return mask_of(survivors.index(v) for v in bits(mask))


def test_minor_identities_on_closure_generated_sets():
    from nestoqsym.invariants import random_building_sets

    full_cases = []
    for b in random_building_sets(12, seed=4242, max_n=4):
        n = b.n
        for I in range(1 << n):
            for J in range(1 << n):
                if I & J:
                    continue
                full_cases.append((b, I, J))
    for b, I, J in full_cases:
        n = b.n
        J_re = _relabel_through(J, I, n)
        lhs = restriction(contraction(b, I), J_re)
        rhs = contraction(
            restriction(b, I | J),
            _relabel_through(I, ~(I | J) & ((1 << n) - 1), n),
        )
        assert lhs == rhs
        assert contraction(contraction(b, I), J_re) == contraction(b, I | J)


@given(graphs(max_n=5), st.data())
def test_minor_identities(g, data):
    b = from_graph(g)
    n = b.n
    I = data.draw(st.integers(0, (1 << n) - 1))
    J = data.draw(st.integers(0, (1 << n) - 1)) & ~I
    # (B/I)|_J = (B|_{I u J})/I  and  (B/I)/J = B/(I u J)
    J_re = _relabel_through(J, I, n)
    assert restriction(contraction(b, I), J_re) == contraction(
        restriction(b, I | J), _relabel_through(I, ~(I | J) & ((1 << n) - 1), n)
    )
    assert contraction(contraction(b, I), J_re) == contraction(b, I | J)


@given(graphs(max_n=6), st.data())
def test_graphical_minors_commute(g, data):
    I = data.draw(st.integers(0, (1 << g.n) - 1))
    verts = list(bits(I))
    assert from_graph(induced(g, verts)) == restriction(from_graph(g), I)
    assert from_graph(contract(g, verts)) == contraction(from_graph(g), I)


@given(graphs(max_n=3), graphs(max_n=2), st.data())
def test_product_coproduct_compatibility(g1, g2, data):
    b1, b2 = from_graph(g1), from_graph(g2)
    b = product(b1, b2)
    I1 = data.draw(st.integers(0, (1 << b1.n) - 1))
    I2 = data.draw(st.integers(0, (1 << b2.n) - 1))
    I = I1 | (I2 << b1.n)
    assert restriction(b, I) == product(restriction(b1, I1), restriction(b2, I2))
    assert contraction(b, I) == product(contraction(b1, I1), contraction(b2, I2))


def test_serialization_round_trip():
    b = bs(4, [1], [2], [3], [4], [1, 2], [1, 2, 3])
    assert parse_building_set(serialize_building_set(b)) == b
    assert parse_building_set('{"n":2,"sets":[[1],[2],[1,2]]}').mu == 3
    with pytest.raises(ParseError):
        parse_building_set('{"n":2,"sets":[[0]]}')
    with pytest.raises(ParseError):
        parse_building_set('{"n":2}')
    with pytest.raises(NotABuildingSetError):
        parse_building_set(
            '{"n":3,"sets":[[1,2],[2,3]]}'
        )  # union closure fails after singleton insertion
