from __future__ import annotations

import pytest

from laxtop import (
    EMAlgebra,
    EnumerationPolicy,
    FinMap,
    IdentityMonad,
    MonoidActionMonad,
    MonotoneMap,
    NotGenerating,
    PowersetMonad,
    UltrafilterMonad,
    beta_reflection,
    c_reflection,
    cartesian_lift,
    check_adjunction,
    check_CF,
    check_c_ibar_is_b,
    discrete_space,
    gen_morphism_for,
    gen_reflect,
    gen_validate,
    ibar,
    ibar_morphism,
    is_cartesian,
    is_cartesian_by_cones,
    is_w_cartesian,
    jbar,
    search_cartesian_preservation,
    search_ibar_jbar,
)
from laxtop.tspace import check_monotone
from laxtop.utils import iter_maps, iter_spaces
from tests.conftest import M2


# cartesian maps

def test_cartesian_lift_is_cartesian(fix_ord):
    for u in iter_maps(2, 3):
        lifted = cartesian_lift(u, fix_ord)
        assert is_cartesian(lifted)


def test_beta_unit_of_fix_ord_is_not_cartesian(fix_ord):
    report = is_cartesian(beta_reflection(fix_ord).unit)
    assert not report
    assert report.witness == (1, 0)


@pytest.mark.parametrize('name', ['fix_ord', 'fix_plu', 'fix_plu3', 'fix_m2'])
def test_beta_units_of_completely_regular_spaces_are_cartesian(request, name):
    s = c_reflection(request.getfixturevalue(name)).reflected
    assert is_cartesian(beta_reflection(s).unit)


@pytest.mark.parametrize('monad', [IdentityMonad(), UltrafilterMonad()], ids=lambda m: m.kind)
def test_cartesian_agrees_with_cones(monad):
    spaces = [s for n in range(3) for s in iter_spaces(monad, n)]
    checked = 0
    for source in spaces:
        for target in spaces:
            for f in iter_maps(source.points.size, target.points.size):
                if not check_monotone(f, source, target):
                    continue
                m = MonotoneMap(f, source, target, check=False)
                assert bool(is_cartesian(m)) == bool(is_cartesian_by_cones(m)), (source, target, f)
                checked += 1
    assert checked > 0


def test_cone_witness(fix_ord):
    report = is_cartesian_by_cones(beta_reflection(fix_ord).unit)
    assert not report
    z, h = report.witness
    assert not check_monotone(h, z, fix_ord)


@pytest.mark.parametrize('monad', [IdentityMonad(), PowersetMonad()], ids=lambda m: m.kind)
def test_cartesian_maps_compose(monad):
    spaces = [s for n in range(3) for s in iter_spaces(monad, n)]
    checked = 0
    for target in spaces:
        for k in range(3):
            for v in iter_maps(k, target.points.size):
                g = cartesian_lift(v, target)
                for j in range(3):
                    for u in iter_maps(j, k):
                        f = cartesian_lift(u, g.source)
                        assert is_cartesian(f.then(g)), (target, v, u)
                        checked += 1
    assert checked > 0


@pytest.mark.parametrize('monad', [IdentityMonad(), UltrafilterMonad()], ids=lambda m: m.kind)
def test_first_factor_of_cartesian_composite(monad):
    spaces = [s for n in range(3) for s in iter_spaces(monad, n)]
    monotone = {}
    for source in spaces:
        for target in spaces:
            monotone[source, target] = [
                MonotoneMap(f, source, target, check=False)
                for f in iter_maps(source.points.size, target.points.size)
                if check_monotone(f, source, target)
            ]

    checked = 0
    for x in spaces:
        for y in spaces:
            for z in spaces:
                for g in monotone[y, z]:
                    if not is_cartesian(g):
                        continue
                    for f in monotone[x, y]:
                        if is_cartesian(f.then(g)):
                            assert is_cartesian(f), (x, y, z, f.f, g.f)
                            checked += 1
    assert checked > 0


# presented algebras

def test_ibar_of_fix_plu(fix_plu):
    g = ibar(fix_plu)
    assert g.algebra.carrier.size == 3
    assert g.p.table == (1, 2)
    assert g.psharp.is_surjective()
    assert g.generators.size == 2


def test_ibar_of_completely_regular_order(fix_ord):
    g = ibar(c_reflection(fix_ord).reflected)
    assert g.algebra.carrier.size == 2
    assert g.p.table == (0, 0, 1)


def test_ibar_needs_completely_regular(fix_ord):
    with pytest.raises(ValueError):
        ibar(fix_ord)


@pytest.mark.parametrize('name', ['fix_plu', 'fix_ord_eq'])
def test_jbar_inverts_ibar_on_completely_regular_spaces(request, name):
    s = request.getfixturevalue(name)
    assert jbar(ibar(s)) == s
    assert check_c_ibar_is_b(s)


@pytest.mark.parametrize('monad, max_points', [(IdentityMonad(), 3), (PowersetMonad(), 2), (MonoidActionMonad(M2), 2)], ids=['identity', 'powerset', 'monoid'])
def test_c_ibar_is_b_on_small_spaces(monad, max_points):
    regular = [s for n in range(max_points + 1) for s in iter_spaces(monad, n) if check_CF(s).completely_regular]
    assert regular
    for z in regular:
        g = ibar(z)
        assert g.psharp.is_surjective()
        assert check_c_ibar_is_b(z, EnumerationPolicy(max_points=2)), z


def test_gen_validate_reports_missing_elements():
    algebra = EMAlgebra(IdentityMonad(), 2, FinMap.identity(2))
    with pytest.raises(NotGenerating) as info:
        gen_validate(FinMap(1, 2, [0]), algebra)
    assert info.value.missing == (1,)

    with pytest.raises(ValueError):
        gen_validate(FinMap(1, 3, [0]), algebra)


def test_gen_reflect(fix_plu):
    g = ibar(fix_plu)
    unit, reflected = gen_reflect(g)
    assert reflected.p == FinMap.identity(3)
    assert unit.f == g.p
    assert unit.fstar == FinMap.identity(3)
    assert unit.commutes()


def test_gen_morphism_for_examples(fix_plu):
    g = ibar(fix_plu)
    identity = gen_morphism_for(FinMap.identity(2), g, g)
    assert identity is not None
    assert identity.fstar == FinMap.identity(3)
    assert identity.commutes()

    # swapping the generators breaks the order 0 ≤ 1
    assert gen_morphism_for(FinMap(2, 2, [1, 0]), g, g) is None

    with pytest.raises(ValueError):
        gen_morphism_for(FinMap.identity(3), g, g)


def test_ibar_morphism_of_identity(fix_plu):
    m = ibar_morphism(MonotoneMap.identity(fix_plu))
    assert m.fstar == FinMap.identity(3)
    assert is_w_cartesian(m)


def test_collapse_is_not_w_cartesian():
    monad = IdentityMonad()
    two = discrete_space(monad, 2)
    point = discrete_space(monad, 1)
    m = ibar_morphism(MonotoneMap(FinMap.constant(2, 1, 0), two, point))
    assert m.fstar.table == (0, 0)
    assert not is_w_cartesian(m)


def test_adjunction_on_fixtures(fix_plu, fix_ord_eq, fix_ord):
    report = check_adjunction(fix_plu, ibar(fix_plu))
    assert report.bijective
    assert report.witness is None

    report = check_adjunction(fix_ord_eq, ibar(c_reflection(fix_ord).reflected))
    assert report == (True, 5, 5, None)


@pytest.mark.parametrize('monad', [IdentityMonad(), PowersetMonad()], ids=lambda m: m.kind)
def test_adjunction_on_small_spaces(monad):
    regular = [s for n in range(3) for s in iter_spaces(monad, n) if check_CF(s).completely_regular]
    assert regular
    for z in regular:
        for w in regular:
            assert check_adjunction(z, ibar(w)).bijective


# searches

def test_ibar_jbar_search_on_sets():
    report = search_ibar_jbar(IdentityMonad(), 2)
    assert report.examined > 0
    assert report.witnesses == []


def test_ibar_jbar_search_limit():
    report = search_ibar_jbar(PowersetMonad(), 2, limit=1)
    assert report.examined > 0
    assert len(report.witnesses) <= 1


def test_cartesian_preservation_on_sets():
    report = search_cartesian_preservation(IdentityMonad(), 2)
    assert report.examined > 0
    assert report.witnesses == []
