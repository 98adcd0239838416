from __future__ import annotations
from random import Random

import networkx as nx
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from laxtop import (
    BudgetExceeded,
    EMAlgebra,
    FinMap,
    IdentityMonad,
    IncompatibleMonads,
    LawViolation,
    MonoidActionMonad,
    MonotoneMap,
    NotAlgebraic,
    NotMonotone,
    PowersetMonad,
    Rel,
    TSpace,
    WrongMonad,
    algebra_space_iso,
    algebra_to_space,
    barr_extend,
    beta_reflection,
    cartesian_lift,
    check_axioms,
    check_CF,
    check_clo_closure,
    check_khaus,
    check_monotone,
    closure_operator_violation,
    closure_to_space,
    coproduct_space,
    discrete_space,
    equalizer_space,
    final_structure,
    h_separated_by,
    image_space,
    in_extension,
    indiscrete_space,
    initial_structure,
    is_space,
    k_preserved_by_surjection,
    lifted_map,
    membership_composite,
    monotone_violation,
    product_space,
    quotient_space,
    saturate,
    space_to_algebra,
    using,
)
from laxtop.internal.helpers import is_submask
from laxtop.utils import iter_algebras, iter_maps, iter_spaces, random_space
from tests.conftest import M2
from tests.strategies import compact_spaces


def _is_preorder(n, pairs):
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    reflexive = all((x, x) in pairs for x in range(n))
    return reflexive and set(nx.transitive_closure(graph).edges()) == set(pairs)


def _components(n, pairs):
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    return nx.number_connected_components(graph)


CELLS3 = [(x, y) for x in range(3) for y in range(3)]


def _relation(choice):
    return {cell for i, cell in enumerate(CELLS3) if choice >> i & 1}


def _graphs(monad, n):
    # every relation from T n to n, indexed by its bitmask over the cells
    cells = [(t, y) for t in range(monad.size(n)) for y in range(n)]
    graphs = [TSpace(monad, n, [cell for i, cell in enumerate(cells) if choice >> i & 1]) for choice in range(1 << len(cells))]
    return graphs, len(cells)


def _one_more_pair(cells):
    for choice in range(1 << cells):
        for i in range(cells):
            if not choice >> i & 1:
                yield choice, choice | 1 << i


SMALL_GRAPHS = [(IdentityMonad(), 3), (PowersetMonad(), 2), (MonoidActionMonad(M2), 2)]
SMALL_GRAPH_IDS = ['identity', 'powerset', 'monoid']


# extension

def test_extension_of_fix_plu(fix_plu):
    ext = barr_extend(fix_plu)
    # ({{0}, {1}}, {0, 1})
    assert (0b0110, 0b11) in ext
    assert in_extension(fix_plu, 0b0110, 0b11)
    assert (0, 0) in ext


def test_extension_of_fix_m2(fix_m2):
    monad = fix_m2.monad
    big = monad.encode((1, monad.encode((0, 0), 2)), monad.size(2))
    t = monad.encode((1, 0), 2)
    assert (big, t) in barr_extend(fix_m2)
    assert in_extension(fix_m2, big, t)


def test_powerset_extension_matches_generic_on_two_points():
    monad = PowersetMonad()
    cells = [(t, y) for t in range(4) for y in range(2)]
    for choice in range(1 << len(cells)):
        s = TSpace(monad, 2, [cell for i, cell in enumerate(cells) if choice >> i & 1])
        assert barr_extend(s).pairs == barr_extend(s, generic=True).pairs


def test_powerset_extension_matches_generic_on_three_points():
    monad = PowersetMonad()
    rng = Random(20)
    cells = [(t, y) for t in range(8) for y in range(3)]
    for _ in range(200):
        s = TSpace(monad, 3, rng.sample(cells, rng.randint(0, 10)))
        assert barr_extend(s).pairs == barr_extend(s, generic=True).pairs


def test_extension_respects_budget():
    s = TSpace(PowersetMonad(), 3, [(1, 0)])
    with using(budget=16):
        with pytest.raises(BudgetExceeded) as info:
            barr_extend(s)
    assert info.value.required == 256
    assert info.value.budget == 16


@pytest.mark.parametrize('monad, n', SMALL_GRAPHS, ids=SMALL_GRAPH_IDS)
def test_extension_is_monotone(monad, n):
    graphs, cells = _graphs(monad, n)
    extended = [barr_extend(g).pairs for g in graphs]
    for smaller, larger in _one_more_pair(cells):
        assert extended[smaller] <= extended[larger]


# axioms

def test_axioms_of_fixtures(any_fixture):
    _, s = any_fixture
    report = check_axioms(s)
    assert report.ok
    assert is_space(s)


def test_missing_diagonal_pair(fix_ord):
    s = fix_ord.with_structure(fix_ord.converges.difference(Rel(3, 3, [(0, 0)])))
    report = check_axioms(s)
    assert not report.reflexive
    assert report.reflexive_witness == 0
    assert not report.ok


def test_identity_axioms_against_preorders():
    monad = IdentityMonad()
    for choice in range(1 << 9):
        pairs = _relation(choice)
        s = TSpace(monad, 3, pairs)
        assert check_axioms(s).ok == _is_preorder(3, pairs), sorted(pairs)


def test_identity_reflection_counts_components():
    monad = IdentityMonad()
    diagonal = {(x, x) for x in range(3)}
    for choice in range(1 << 9):
        pairs = _relation(choice)
        if not diagonal <= pairs:
            continue
        s = TSpace(monad, 3, pairs)
        assert beta_reflection(s).reflected.points.size == _components(3, pairs)
        if check_axioms(s).ok:
            symmetric = all((y, x) in pairs for x, y in pairs)
            assert check_CF(s).completely_regular == symmetric


def test_identity_spaces_are_preorders():
    assert len(list(iter_spaces(IdentityMonad(), 2))) == 4
    assert len(list(iter_spaces(IdentityMonad(), 3))) == 29


# monotone maps

def test_monotone_examples(fix_ord):
    assert check_monotone(FinMap.identity(3), fix_ord, fix_ord)

    point = indiscrete_space(IdentityMonad(), 1)
    assert check_monotone(FinMap.constant(3, 1, 0), fix_ord, point)

    swap = FinMap(3, 3, [1, 0, 2])
    assert not check_monotone(swap, fix_ord, fix_ord)
    assert monotone_violation(swap, fix_ord, fix_ord) == ((0, 1), (1, 0))
    with pytest.raises(NotMonotone):
        MonotoneMap(swap, fix_ord, fix_ord)


def test_lifted_map(fix_ord):
    point = indiscrete_space(IdentityMonad(), 1)
    f = MonotoneMap(FinMap.constant(3, 1, 0), fix_ord, point)
    assert lifted_map(f).table == (0, 0, 0, 0)
    assert lifted_map(MonotoneMap.identity(fix_ord)) == FinMap.identity(4)


# structures

def test_saturate_completes_fix_plu(fix_plu):
    raw = TSpace.from_payloads(PowersetMonad(), 2, [((0, 1), 1)])
    assert saturate(raw) == fix_plu


def test_discrete_and_indiscrete():
    d = discrete_space(IdentityMonad(), 3)
    assert d.converges == Rel.diagonal(3)
    i = indiscrete_space(PowersetMonad(), 2)
    assert len(i.converges) == 8
    assert check_axioms(i).ok


def test_initial_subspace(fix_plu, fix_ord):
    sub = initial_structure(1, [(FinMap(1, 2, [1]), fix_plu)])
    assert sub.converges.pairs == ((1, 0),)

    lifted = cartesian_lift(FinMap(1, 3, [1]), fix_ord)
    assert lifted.source.converges.pairs == ((0, 0),)


def test_quotient_merging_ends(fix_ord):
    q = quotient_space(fix_ord, [(0, 2)])
    assert q.f.table == (0, 1, 0)
    assert q.target.converges.pairs == ((0, 0), (0, 1), (1, 1))


def test_product_with_point(fix_ord):
    p = product_space(fix_ord, indiscrete_space(IdentityMonad(), 1))
    assert p.points.size == 3
    assert p.converges == fix_ord.converges


def test_coproduct(fix_ord):
    c = coproduct_space(fix_ord, fix_ord)
    assert c.points.size == 6
    shifted = {(t + 3, y + 3) for t, y in fix_ord.converges.pairs}
    assert set(c.converges.pairs) == set(fix_ord.converges.pairs) | shifted


def test_equalizer_space(fix_ord):
    identity = MonotoneMap.identity(fix_ord)
    collapse = MonotoneMap(FinMap(3, 3, [1, 1, 2]), fix_ord, fix_ord)
    sub, inclusion = equalizer_space(identity, collapse)
    assert inclusion.f.table == (1, 2)
    assert sub.converges == Rel.diagonal(2)


def test_image_space(fix_ord):
    point = indiscrete_space(IdentityMonad(), 2)
    f = MonotoneMap(FinMap(3, 2, [0, 0, 0]), fix_ord, point)
    image, epi, mono = image_space(f)
    assert image.points.size == 1
    assert mono.f.table == (0,)
    assert epi.f.table == (0, 0, 0)


def test_final_structure_saturates(fix_ord):
    s = final_structure(2, [(FinMap(3, 2, [0, 1, 1]), fix_ord)])
    assert s.converges.pairs == ((0, 0), (0, 1), (1, 1))


def test_incompatible_monads(fix_ord, fix_plu):
    with pytest.raises(IncompatibleMonads):
        product_space(fix_ord, fix_plu)


@pytest.mark.parametrize('monad, n', SMALL_GRAPHS, ids=SMALL_GRAPH_IDS)
def test_saturate_is_a_closure(monad, n):
    graphs, cells = _graphs(monad, n)
    closed = [saturate(g) for g in graphs]
    for g, s in zip(graphs, closed):
        assert g.converges <= s.converges
        assert check_axioms(s).ok
        assert saturate(s).converges == s.converges
    for smaller, larger in _one_more_pair(cells):
        assert closed[smaller].converges <= closed[larger].converges


@pytest.mark.parametrize('monad, n', SMALL_GRAPHS[:2], ids=SMALL_GRAPH_IDS[:2])
def test_saturate_is_least(monad, n):
    graphs, _ = _graphs(monad, n)
    spaces = list(iter_spaces(monad, n))
    for g in graphs:
        s = saturate(g)
        for z in spaces:
            if g.converges <= z.converges:
                assert s.converges <= z.converges


@pytest.mark.parametrize('monad', [IdentityMonad(), PowersetMonad()], ids=lambda m: m.kind)
def test_initial_structure_is_largest(monad):
    spaces = [s for k in range(3) for s in iter_spaces(monad, k)]
    for target in spaces:
        for source in spaces:
            n = source.points.size
            for f in iter_maps(n, target.points.size):
                initial = initial_structure(n, [(f, target)])
                assert check_axioms(initial).ok
                assert check_monotone(f, initial, target)
                assert check_monotone(f, source, target) == (source.converges <= initial.converges)


# conditions

def test_khaus_of_fix_plu(fix_plu):
    report = check_khaus(fix_plu)
    assert not report.compact
    assert report.hausdorff
    assert not report.algebraic
    assert report.violation == ('K', 0)


def test_khaus_of_fix_ord(fix_ord):
    report = check_khaus(fix_ord)
    assert report.compact
    assert not report.hausdorff
    assert report.violation == ('H', (0, (0, 1)))
    section = report.witness_section
    assert section.dom.size == 3
    assert fix_ord.converges.pairs[section(0)] == (0, 0)


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.data())
def test_products_of_compact_spaces_are_compact(data):
    monad = data.draw(st.sampled_from([IdentityMonad(), MonoidActionMonad(M2)]))
    a = data.draw(compact_spaces(monad))
    b = data.draw(compact_spaces(monad))
    assert check_khaus(a).compact and check_khaus(b).compact
    assert check_khaus(product_space(a, b)).compact


def test_k_preserved_by_surjection(fix_ord):
    q = quotient_space(fix_ord, [(0, 2)])
    assert k_preserved_by_surjection(q) == (True, None)

    with pytest.raises(ValueError):
        k_preserved_by_surjection(MonotoneMap(FinMap(3, 4, [0, 1, 2]), fix_ord, indiscrete_space(IdentityMonad(), 4)))


def test_h_separated_by_points():
    monad = IdentityMonad()
    two = discrete_space(monad, 2)
    family = [(FinMap(3, 2, [0, 1, 1]), two), (FinMap(3, 2, [0, 0, 1]), two)]
    separating, hausdorff, space = h_separated_by(3, family)
    assert separating and hausdorff
    assert space.converges == Rel.diagonal(3)

    separating, hausdorff, _ = h_separated_by(3, family[:1])
    assert not separating
    assert not hausdorff

    with pytest.raises(ValueError):
        h_separated_by(3, [(FinMap(3, 2, [0, 1, 1]), indiscrete_space(monad, 2))])


# algebras as spaces

@pytest.mark.parametrize('monad, max_points', [(IdentityMonad(), 3), (PowersetMonad(), 3), (MonoidActionMonad(M2), 2)], ids=repr)
def test_algebra_space_round_trip(monad, max_points):
    for algebra in iter_algebras(monad, max_points):
        space = algebra_space_iso(algebra)
        assert check_axioms(space).ok
        assert check_khaus(space).algebraic
        assert algebra_space_iso(space) == algebra


def test_space_to_algebra_needs_algebraic(fix_plu):
    with pytest.raises(NotAlgebraic):
        space_to_algebra(fix_plu)
    with pytest.raises(TypeError):
        algebra_space_iso(3)


def test_algebra_to_space_checks_laws():
    bad = EMAlgebra(IdentityMonad(), 2, FinMap(2, 2, [1, 0]), check=False)
    with pytest.raises(LawViolation):
        algebra_to_space(bad)


# closure spaces

def test_fix_plu_is_not_a_closure_space(fix_plu):
    report = check_clo_closure(fix_plu)
    assert not report.clo
    assert report.violation == (0b01, 0b11, 0)


def test_closure_needs_powerset(fix_ord):
    with pytest.raises(WrongMonad):
        check_clo_closure(fix_ord)


def test_closure_needs_a_space():
    # upward closed, but {1} does not converge to 1
    graph = TSpace(PowersetMonad(), 2, [(0b01, 0), (0b11, 0), (0b11, 1)])
    with pytest.raises(LawViolation) as info:
        check_clo_closure(graph)
    assert info.value.witness == 1


def _moore_families(n):
    full = (1 << n) - 1
    size = 1 << n
    for family in range(1 << size):
        if not family >> full & 1:
            continue
        members = [a for a in range(size) if family >> a & 1]
        if all(family >> (a & b) & 1 for a in members for b in members):
            yield members


def _closure_of(members, n):
    full = (1 << n) - 1
    table = []
    for a in range(1 << n):
        c = full
        for m in members:
            if is_submask(a, m):
                c &= m
        table.append(c)
    return table


def test_closure_operators_on_three_points():
    count = 0
    for members in _moore_families(3):
        table = _closure_of(members, 3)
        assert closure_operator_violation(table) is None
        s = closure_to_space(table)
        assert check_axioms(s).ok
        report = check_clo_closure(s)
        assert report.clo
        assert report.closure_table.table == tuple(table)
        count += 1
    assert count == 61


@pytest.mark.parametrize('n, expected', [(0, 1), (1, 2), (2, 7)])
def test_closure_spaces_round_trip(n, expected):
    found = 0
    for s in iter_spaces(PowersetMonad(), n):
        report = check_clo_closure(s)
        if not report.clo:
            continue
        found += 1
        assert closure_operator_violation(report.closure_table.table) is None
        assert closure_to_space(report.closure_table, n) == s
    assert found == expected


def test_closure_operator_violations():
    assert closure_operator_violation([0, 0, 2, 3]) == ('extensive', 1)
    assert closure_operator_violation([1, 1, 3, 3]) is None
    assert closure_operator_violation([1, 3, 3, 3]) == ('idempotent', 0)


def test_membership_composite(fix_ord):
    s = membership_composite(fix_ord)
    assert s.monad == PowersetMonad()
    # {0} ⇝ 1 because 0 ≤ 1
    assert (0b001, 1) in s.converges
    assert (0b100, 1) not in s.converges
    assert (0, 0) not in s.converges
    assert check_clo_closure(s).clo

    with pytest.raises(WrongMonad):
        membership_composite(s)


def test_random_space_is_a_space():
    for seed in range(10):
        s = random_space(MonoidActionMonad(M2), 3, seed)
        assert check_axioms(s).ok
