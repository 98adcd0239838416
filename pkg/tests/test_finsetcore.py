from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from laxtop import (
    FinMap,
    FinSetRef,
    Rel,
    coequalizer_quotient,
    compose,
    equalizer,
    image_factorize,
    kernel_pair,
    partition_of,
    product_cone,
    quotient_by_partition,
    rel_compose,
)
from tests.strategies import finmaps, relations


def test_finset_rejects_bad_labels():
    with pytest.raises(ValueError):
        FinSetRef(2, ['a', 'a'])
    with pytest.raises(ValueError):
        FinSetRef(2, ['a'])
    with pytest.raises(ValueError):
        FinSetRef(-1)


def test_finmap_checks_table():
    with pytest.raises(ValueError):
        FinMap(2, 2, [0, 2])
    with pytest.raises(ValueError):
        FinMap(2, 2, [0])


def test_compose_is_right_to_left():
    f = FinMap(2, 3, [2, 0])
    g = FinMap(3, 2, [1, 1, 0])
    assert compose(g, f).table == (0, 1)
    assert f.then(g) == g.compose(f)


def test_image_factorize_constant():
    epi, mono = image_factorize(FinMap.constant(2, 3, 2))
    assert epi.cod.size == 1
    assert epi.table == (0, 0)
    assert mono.table == (2,)


def test_image_factorize_identity():
    f = FinMap.identity(3)
    epi, mono = image_factorize(f)
    assert epi == f
    assert mono == f


def test_image_factorize_first_occurrence():
    epi, mono = image_factorize(FinMap(3, 3, [1, 1, 0]))
    assert epi.table == (0, 0, 1)
    assert mono.table == (1, 0)
    assert epi.cod.labels == ('0', '2')


@given(finmaps())
def test_image_factorize_properties(f):
    epi, mono = image_factorize(f)
    assert mono.compose(epi) == f
    assert epi.is_surjective()
    assert mono.is_injective()


def test_product_cone():
    carrier, p1, p2 = product_cone(FinSetRef(2), FinSetRef(3))
    assert carrier.size == 6
    assert p1.table == (0, 0, 0, 1, 1, 1)
    assert p2.table == (0, 1, 2, 0, 1, 2)

    empty, _, _ = product_cone(FinSetRef(0), FinSetRef(3))
    assert empty.size == 0

    _, _, p2 = product_cone(FinSetRef(1), FinSetRef(4))
    assert p2.is_bijective()


@pytest.mark.parametrize('pairs, classes', [
    ([], ((0,), (1,), (2,))),
    ([(0, 1)], ((0, 1), (2,))),
    ([(0, 1), (1, 2)], ((0, 1, 2),)),
])
def test_coequalizer_quotient_examples(pairs, classes):
    q, blocks = coequalizer_quotient(Rel(3, 3, pairs))
    assert blocks == classes
    assert q.cod.size == len(classes)


@given(st.integers(0, 4).flatmap(lambda n: relations(n=n, m=n)))
def test_coequalizer_quotient_matches_components(r):
    graph = nx.Graph()
    graph.add_nodes_from(range(r.dom.size))
    graph.add_edges_from(r.pairs)
    expected = sorted(tuple(sorted(c)) for c in nx.connected_components(graph))

    _, blocks = coequalizer_quotient(r)
    assert sorted(blocks) == expected


def test_quotient_by_partition_orders_classes():
    q, blocks = quotient_by_partition(FinSetRef(4), [[3, 1], [2, 0]])
    assert blocks == ((0, 2), (1, 3))
    assert q.table == (0, 1, 0, 1)
    assert partition_of(q) == blocks

    with pytest.raises(ValueError):
        quotient_by_partition(FinSetRef(3), [[0, 1]])


def test_rel_compose_examples():
    s = Rel(2, 2, [(0, 1), (1, 1)])
    assert rel_compose(Rel.diagonal(2), s) == s
    assert rel_compose(Rel(2, 2, [(0, 1)]), Rel(2, 2, [(1, 0)])).pairs == ((0, 0),)
    assert len(rel_compose(Rel.full(2, 2), Rel(2, 2))) == 0


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(relations(n=n, m=n), relations(n=n, m=n), relations(n=n, m=n))))
def test_rel_compose_associative_with_units(rels):
    r, s, t = rels
    unit = Rel.diagonal(r.dom.size)
    assert rel_compose(rel_compose(r, s), t) == rel_compose(r, rel_compose(s, t))
    assert rel_compose(unit, r) == r
    assert rel_compose(r, unit) == r


def test_rel_helpers():
    r = Rel(2, 3, [(1, 2), (0, 0), (1, 2)])
    assert r.pairs == ((0, 0), (1, 2))
    assert r.rows == [0b001, 0b100]
    assert r.converse().pairs == ((0, 0), (2, 1))
    assert r.index((1, 2)) == 1
    assert r.domain_projection().table == (0, 1)
    assert r.codomain_projection().table == (0, 2)
    assert Rel.from_rows(2, 3, r.rows) == r
    with pytest.raises(KeyError):
        r.index((0, 1))


def test_equalizer_and_kernel_pair():
    f = FinMap(3, 2, [0, 1, 1])
    g = FinMap(3, 2, [0, 0, 1])
    carrier, inclusion = equalizer(f, g)
    assert carrier.size == 2
    assert inclusion.table == (0, 2)

    carrier, p1, p2 = kernel_pair(f)
    assert carrier.size == 5
    assert list(zip(p1.table, p2.table)) == [(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)]
