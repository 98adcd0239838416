# MIT License

# Copyright (c) 2021 Izhar Ahmad

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

from __future__ import annotations
from typing import NamedTuple, Optional, Tuple

from laxtop.errors import InternalInvariantViolated, NotGenerating
from laxtop.finsetcore import FinMap
from laxtop.internal.logger import logger
from laxtop.models import EMAlgebra, GenMorphism, GenObject, MonotoneMap, ReflectionKind, ReflectionResult, TSpace
from laxtop.reflect import EnumerationPolicy, beta_reflection, check_CF, verify_reflection
from laxtop.tspace import algebra_to_space, check_monotone, initial_structure
from laxtop.utils import iter_maps

__all__ = (
    'gen_validate',
    'gen_reflect',
    'ibar',
    'jbar',
    'gen_morphism_for',
    'ibar_morphism',
    'is_w_cartesian',
    'AdjunctionReport',
    'check_adjunction',
    'check_c_ibar_is_b',
)

def gen_validate(p: FinMap, algebra: EMAlgebra) -> GenObject:
    """
    Presents ``algebra`` by the generators ``p``.

    Raises
    ------
    NotGenerating
        The mate ``r ∘ T p`` is not surjective.
    """
    if p.cod.size != algebra.carrier.size:
        raise ValueError('generators must map into the carrier of the algebra.')

    psharp = algebra.structure.compose(algebra.monad.apply_functor(p))
    if not psharp.is_surjective():
        image = set(psharp.table)
        raise NotGenerating(x for x in range(algebra.carrier.size) if x not in image)

    return GenObject(FinMap(p.dom, algebra.carrier, p.table), algebra, psharp)


def gen_reflect(g: GenObject) -> Tuple[GenMorphism, GenObject]:
    """
    Reflects a presented algebra onto the algebra presented by itself:
    ``(p, r) -> (1_R, r)`` with unit ``(p, 1_R)``.
    """
    identity = FinMap.identity(g.algebra.carrier)
    reflected = GenObject(identity, g.algebra, g.algebra.structure)
    return GenMorphism(g.p, identity, g, reflected), reflected


def ibar(s: TSpace) -> GenObject:
    """
    Presents the algebra reflection of a space satisfying (C) by its unit.

    Raises
    ------
    ValueError
        ``s`` does not satisfy (C).
    InternalInvariantViolated
        The unit does not generate the algebra reflection.
    """
    beta = beta_reflection(s)
    if not check_CF(s, beta).completely_regular:
        raise ValueError('space does not satisfy (C).')

    algebra = beta.algebra
    unit = FinMap(s.points, algebra.carrier, beta.unit.f.table)
    try:
        return gen_validate(unit, algebra)
    except NotGenerating as exc:
        raise InternalInvariantViolated('unit misses {0} of the algebra reflection'.format(list(exc.missing)), instance=s) from exc


def jbar(g: GenObject) -> TSpace:
    """
    The generators of ``g`` with the initial structure along ``p`` into the
    space of the algebra.

    Raises
    ------
    InternalInvariantViolated
        The result fails (C).
    """
    space = initial_structure(g.p.dom, [(g.p, algebra_to_space(g.algebra, check=False))])
    if not check_CF(space).completely_regular:
        raise InternalInvariantViolated('initial structure along generators fails (C)', instance=g)
    return space


def gen_morphism_for(f: FinMap, source: GenObject, target: GenObject) -> Optional[GenMorphism]:
    """
    The morphism ``(f, f*)`` between presented algebras, or ``None`` when no
    homomorphism ``f*`` makes the square commute. ``f*`` is forced by
    ``f* ∘ p♯ = q♯ ∘ T f``.
    """
    monad = source.algebra.monad
    if f.dom.size != source.p.dom.size or f.cod.size != target.p.dom.size:
        raise ValueError('map does not fit the generators.')

    tf = monad.apply_functor(f).table
    table = [-1] * source.algebra.carrier.size
    for t, x in enumerate(source.psharp.table):
        value = target.psharp.table[tf[t]]
        if table[x] == -1:
            table[x] = value
        elif table[x] != value:
            return None

    fstar = FinMap(source.algebra.carrier, target.algebra.carrier, table)
    if not source.algebra.is_homomorphism(fstar, target.algebra):
        return None
    if fstar.compose(source.p) != target.p.compose(f):
        return None
    return GenMorphism(f, fstar, source, target)


def ibar_morphism(f: MonotoneMap) -> GenMorphism:
    """
    The morphism of presented algebras induced by a monotone map between
    spaces satisfying (C).
    """
    morphism = gen_morphism_for(f.f, ibar(f.source), ibar(f.target))
    if morphism is None:
        raise InternalInvariantViolated('monotone map has no induced homomorphism', instance=f)
    return morphism


def is_w_cartesian(m: GenMorphism) -> bool:
    """A morphism is cartesian over the generators iff ``f*`` is injective."""
    return m.fstar.is_injective()


class AdjunctionReport(NamedTuple):
    """
    Unpacks as ``(bijective, monotone, morphisms, witness)``.

    ``monotone`` counts monotone maps ``Z -> J̄ g``, ``morphisms`` counts
    morphisms ``Ī Z -> g``; ``witness`` is a map counted by one side only.
    """
    bijective: bool
    monotone: int
    morphisms: int
    witness: Optional[Tuple[int, ...]] = None


def check_adjunction(z: TSpace, g: GenObject) -> AdjunctionReport:
    """
    Compares monotone maps from a (C)-space ``z`` into ``J̄ g`` with
    morphisms from ``Ī z`` to ``g``; both are indexed by the underlying map.
    """
    presented = ibar(z)
    space = jbar(g)

    monotone = set()
    morphisms = set()
    for f in iter_maps(z.points.size, g.p.dom.size):
        if check_monotone(f, z, space):
            monotone.add(f.table)
        if gen_morphism_for(f, presented, g) is not None:
            morphisms.add(f.table)

    difference = sorted(monotone ^ morphisms)
    return AdjunctionReport(not difference, len(monotone), len(morphisms), difference[0] if difference else None)


def check_c_ibar_is_b(z: TSpace, policy: Optional[EnumerationPolicy] = None) -> bool:
    """
    Whether the generators of ``Ī z``, read as a map into the space of the
    presented algebra, have the universal property of the algebra
    reflection of ``z``. Targets are enumerated by ``policy``.
    """
    g = ibar(z)
    space = algebra_to_space(g.algebra, check=False)
    if not check_monotone(g.p, z, space):
        return False
    unit = MonotoneMap(FinMap(z.points, space.points, g.p.table), z, space, check=False)
    report = verify_reflection(ReflectionResult(unit, space, ReflectionKind.B, algebra=g.algebra), policy)
    if not report.passed:
        logger.debug('presented algebra of %r is not its algebra reflection: %s', z, report.failure)
    return report.passed
