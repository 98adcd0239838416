from __future__ import annotations
from random import Random

import pytest

from laxtop import (
    DegenerateMonad,
    EnumerationPolicy,
    FinMap,
    IdentityMonad,
    LawViolation,
    MonadKind,
    MonoidActionMonad,
    MonotoneMap,
    PowersetMonad,
    ReflectionKind,
    ReflectionResult,
    Rel,
    TSpace,
    UltrafilterMonad,
    WrongMonad,
    algebra_to_space,
    beta_map,
    beta_reflection,
    c_reflection,
    cf_reflection,
    check_axioms,
    check_CF,
    check_khaus,
    check_monotone,
    congruence_closure,
    f_reflection,
    find_support_order_counterexamples,
    free_algebra,
    h_reflection,
    in_subcategory,
    induced_join,
    is_congruence,
    iter_congruences,
    iter_sup_lattices,
    joins_of_singletons,
    lattice_order,
    reflect,
    semilattice_violation,
    specialization_order,
    sup_convergence,
    support_order,
    verify_reflection,
)
from laxtop.internal.disjoint import DisjointSet
from laxtop.reflect.congruence import _close_generic
from laxtop.utils import iter_algebras, iter_partitions, iter_spaces, random_space
from tests.conftest import M2, cached_targets


def _policy(space, kind, max_points=3):
    return EnumerationPolicy(targets=cached_targets(space.monad, kind, max_points))


# algebra reflection

def test_beta_of_fix_plu(fix_plu):
    r = beta_reflection(fix_plu)
    assert r.kind == ReflectionKind.B
    assert r.source is fix_plu
    assert r.congruence.classes == ((0,), (1,), (2, 3))
    assert r.unit.f.table == (1, 2)
    assert r.reflected.points.size == 3
    assert r.reflected.points.labels == ('0', '1', '2')
    assert check_khaus(r.reflected).algebraic


def test_beta_of_fix_ord(fix_ord):
    r = beta_reflection(fix_ord)
    assert r.unit.f.table == (0, 0, 1)
    assert r.reflected.converges == Rel.diagonal(2)


def test_beta_of_fix_plu3(fix_plu3):
    r = beta_reflection(fix_plu3)
    assert r.congruence.classes == ((0,), (1,), (2, 3), (4, 5, 6, 7))
    assert r.unit.f.table == (1, 2, 3)
    assert r.unit.f.is_injective()


def test_beta_needs_reflexivity(fix_ord):
    s = fix_ord.with_structure([(0, 0), (1, 1)])
    with pytest.raises(LawViolation) as info:
        beta_reflection(s)
    assert info.value.witness == 2


def test_beta_accepts_reflexive_graphs():
    # 0 -> 1 -> 2 without 0 -> 2
    s = TSpace(IdentityMonad(), 3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    assert not check_axioms(s).ok
    assert beta_reflection(s).reflected.points.size == 1


def test_beta_map_commutes(fix_ord):
    point = TSpace(IdentityMonad(), 1, [(0, 0)])
    f = MonotoneMap(FinMap.constant(3, 1, 0), fix_ord, point)
    source = beta_reflection(fix_ord)
    target = beta_reflection(point)
    bf = beta_map(f, source, target)
    assert bf.table == (0, 0)
    assert bf.compose(source.unit.f) == target.unit.f.compose(f.f)
    assert beta_map(MonotoneMap.identity(fix_ord)) == FinMap.identity(2)


# other reflections

def test_h_reflection_of_fix_ord(fix_ord):
    r = h_reflection(fix_ord)
    assert r.kind == ReflectionKind.H
    assert r.unit.f.table == (0, 0, 1)
    assert r.reflected.converges == Rel.diagonal(2)


def test_c_reflection_of_fix_ord(fix_ord):
    r = c_reflection(fix_ord)
    assert r.unit.f == FinMap.identity(3)
    assert r.reflected.converges.pairs == ((0, 0), (0, 1), (1, 0), (1, 1), (2, 2))


def test_c_reflection_of_fix_plu3(fix_plu3):
    r = c_reflection(fix_plu3)
    gained = set(r.reflected.converges.pairs) - set(fix_plu3.converges.pairs)
    assert gained == {(0b101, 2)}
    assert fix_plu3.converges <= r.reflected.converges


def test_f_reflection_of_fix_ord(fix_ord):
    r = f_reflection(fix_ord)
    assert r.reflected.points.size == 2
    assert r.reflected.converges.pairs == ((0, 0), (1, 1))


def test_cf_reflection_of_fix_ord(fix_ord):
    r = cf_reflection(fix_ord)
    assert r.kind == ReflectionKind.CF
    assert r.unit.f.table == (0, 0, 1)
    assert r.source is fix_ord


@pytest.mark.parametrize('kind', [ReflectionKind.F, ReflectionKind.H, ReflectionKind.CF])
def test_symmetric_pair_collapses(fix_ord_eq, kind):
    r = reflect(fix_ord_eq, kind)
    assert r.reflected.points.size == 1
    assert r.unit.f.table == (0, 0)


def test_reflect_rejects_unknown_kind(fix_ord):
    with pytest.raises(ValueError):
        reflect(fix_ord, 'X')


def test_reflectors_need_spaces():
    s = TSpace(IdentityMonad(), 3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    for kind in (ReflectionKind.H, ReflectionKind.C, ReflectionKind.F, ReflectionKind.CF):
        with pytest.raises(LawViolation):
            reflect(s, kind)


@pytest.mark.parametrize('name, expected', [
    ('fix_plu', (True, True)),
    ('fix_ord', (False, False)),
    ('fix_ord_eq', (True, False)),
    ('fix_plu3', (False, True)),
])
def test_check_cf(request, name, expected):
    s = request.getfixturevalue(name)
    assert tuple(check_CF(s)) == expected


# universal properties

@pytest.mark.parametrize('kind', ReflectionKind.ALL)
def test_fixture_reflections_verify(any_fixture, kind):
    _, s = any_fixture
    r = reflect(s, kind)
    assert in_subcategory(r.reflected, kind)
    report = verify_reflection(r, _policy(s, kind))
    assert report.passed, report.failure
    assert report.targets > 0


RANDOM_SOURCES = [
    (IdentityMonad(), 3),
    (UltrafilterMonad(), 3),
    (MonoidActionMonad(M2), 3),
    (PowersetMonad(), 2),
    (DegenerateMonad(MonadKind.T0), 3),
    (DegenerateMonad(MonadKind.T1), 3),
]


@pytest.mark.parametrize('monad, max_points', RANDOM_SOURCES, ids=['identity', 'ultrafilter', 'monoid', 'powerset', 't0', 't1'])
@pytest.mark.parametrize('kind', ReflectionKind.ALL)
def test_random_reflections_verify(monad, max_points, kind):
    rng = Random(kind)
    for seed in range(50):
        n = rng.randint(0, max_points)
        s = random_space(monad, n, seed, density=rng.choice([0.1, 0.3, 0.5]))
        r = reflect(s, kind)
        report = verify_reflection(r, _policy(s, kind))
        assert report.passed, (s.converges.pairs, report.failure)


IDEMPOTENCE_SOURCES = [(IdentityMonad(), 3), (PowersetMonad(), 1), (MonoidActionMonad(M2), 2)]


@pytest.mark.parametrize('monad, max_points', IDEMPOTENCE_SOURCES, ids=['identity', 'powerset', 'monoid'])
@pytest.mark.parametrize('kind', ReflectionKind.ALL)
def test_reflections_are_idempotent(monad, max_points, kind):
    for n in range(max_points + 1):
        for s in iter_spaces(monad, n):
            once = reflect(s, kind).reflected
            twice = reflect(once, kind)
            unit = twice.unit.f
            assert unit.is_bijective(), (s.converges.pairs, kind)
            assert check_monotone(unit.inverse(), twice.reflected, once)


def test_verify_catches_a_wrong_unit(fix_ord):
    # collapsing everything is not universal among algebras
    point = TSpace(IdentityMonad(), 1, [(0, 0)])
    bad = ReflectionResult(MonotoneMap(FinMap.constant(3, 1, 0), fix_ord, point), point, ReflectionKind.B)
    report = verify_reflection(bad, _policy(fix_ord, ReflectionKind.B))
    assert not report.passed
    assert report.failure['reason'] == 'existence'


def test_verify_checks_membership(fix_ord):
    fake = ReflectionResult(MonotoneMap.identity(fix_ord), fix_ord, ReflectionKind.H)
    report = verify_reflection(fake, EnumerationPolicy(max_points=1))
    assert report.failure['reason'] == 'membership'


def test_enumeration_policy_defaults():
    assert EnumerationPolicy().max_points == 3
    assert EnumerationPolicy(2).max_points == 2
    with pytest.raises(ValueError):
        EnumerationPolicy(-1)


# congruences

@pytest.mark.parametrize('n, bell', [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15)])
def test_identity_congruences_are_partitions(n, bell):
    assert len(list(iter_congruences(free_algebra(IdentityMonad(), n)))) == bell


def _refines(fine, coarse):
    return all(coarse.related(block[0], x) for block in fine.classes for x in block)


def _generic_classes(algebra, generators):
    forest = DisjointSet(algebra.carrier.size)
    for x, y in generators:
        forest.union(x, y)
    while _close_generic(algebra, forest):
        pass
    return forest.blocks()


@pytest.mark.parametrize('algebra', [
    free_algebra(IdentityMonad(), 4),
    free_algebra(PowersetMonad(), 2),
    free_algebra(MonoidActionMonad(M2), 2),
], ids=lambda a: a.monad.kind)
def test_congruence_closure_is_least(algebra):
    rng = Random(4)
    k = algebra.carrier.size
    congruences = list(iter_congruences(algebra))
    for _ in range(30):
        generators = [(rng.randrange(k), rng.randrange(k)) for _ in range(rng.randint(0, 2))]
        closure = congruence_closure(algebra, generators)
        assert is_congruence(algebra, closure.classes)
        assert all(closure.related(x, y) for x, y in generators)
        for other in congruences:
            if all(other.related(x, y) for x, y in generators):
                assert _refines(closure, other)


def test_powerset_joins_match_generic_closure():
    algebra = free_algebra(PowersetMonad(), 2)
    for a in range(4):
        for b in range(a + 1, 4):
            closure = congruence_closure(algebra, [(a, b)])
            assert closure.classes == _generic_classes(algebra, [(a, b)])


def test_congruence_closure_rejects_outside_points():
    with pytest.raises(ValueError):
        congruence_closure(free_algebra(IdentityMonad(), 2), [(0, 5)])


def test_non_congruence_is_detected():
    algebra = free_algebra(PowersetMonad(), 2)
    # {0} ~ {1} forces {0} ~ {0, 1}
    assert not is_congruence(algebra, [[0], [1, 2], [3]])
    assert is_congruence(algebra, [[0], [1, 2, 3]])


# sup-lattices

def test_sup_lattice_counts():
    lattices = list(iter_sup_lattices(4))
    assert len(lattices) == 45
    assert sum(1 for a in lattices if a.carrier.size == 4) == 36
    assert set(iter_sup_lattices(3)) == set(iter_algebras(PowersetMonad(), 3))
    for algebra in lattices:
        assert algebra.law_violation() is None
        assert semilattice_violation(induced_join(algebra)) is None


def test_powerset_reflections_are_sup_lattices():
    targets = tuple(algebra_to_space(a, check=False) for a in iter_sup_lattices(4))
    policy = EnumerationPolicy(targets=targets)
    examined = 0
    for n in range(3):
        for s in iter_spaces(PowersetMonad(), n):
            r = beta_reflection(s)
            assert semilattice_violation(induced_join(r.algebra)) is None
            assert joins_of_singletons(r)
            report = verify_reflection(r, policy)
            assert report.passed, (s.converges.pairs, report.failure)
            examined += 1
    assert examined > 0


def test_lattice_order_of_fix_plu(fix_plu):
    r = beta_reflection(fix_plu)
    assert lattice_order(r.algebra).pairs == ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))
    assert specialization_order(fix_plu).pairs == ((0, 0), (0, 1), (1, 1))


def test_suplattice_helpers_need_powerset(fix_ord):
    with pytest.raises(WrongMonad):
        specialization_order(fix_ord)
    with pytest.raises(WrongMonad):
        induced_join(beta_reflection(fix_ord).algebra)


def test_sup_convergence_contains_completely_regular_spaces():
    for n in range(3):
        for s in iter_spaces(PowersetMonad(), n):
            if not check_CF(s).completely_regular:
                continue
            order = specialization_order(s)
            assert s.converges <= sup_convergence(order).converges


def test_empty_set_lub_need_not_converge(fix_plu):
    assert check_CF(fix_plu).completely_regular
    sup = sup_convergence(specialization_order(fix_plu))
    assert set(sup.converges.pairs) - set(fix_plu.converges.pairs) == {(0, 0)}


def test_two_point_lub_need_not_converge():
    s = TSpace.from_payloads(PowersetMonad(), 3, [
        ((0,), 0), ((1,), 1), ((2,), 2),
        ((0, 2), 2), ((1, 2), 2), ((0, 1, 2), 2),
    ])
    assert check_axioms(s).ok
    assert check_CF(s).completely_regular
    assert beta_reflection(s).reflected.points.size == 5

    sup = sup_convergence(specialization_order(s))
    assert (0b011, 2) in sup.converges
    assert (0b011, 2) not in s.converges


def test_support_order_of_fix_plu3(fix_plu3):
    order = support_order(fix_plu3)
    assert (0, 1) in order and (1, 2) in order
    assert (0, 2) not in order

    found = {space: witness for space, witness in find_support_order_counterexamples(3)}
    assert found[fix_plu3] == (0, 1, 2)
    assert all(check_khaus(space).hausdorff for space in found)


def test_iter_partitions_matches_congruences_of_identity():
    partitions = list(iter_partitions(3))
    algebra = free_algebra(IdentityMonad(), 3)
    assert all(is_congruence(algebra, p) for p in partitions)
