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
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from laxtop.errors import IncompatibleMonads
from laxtop.finsetcore import (
    FinMap,
    FinSetRef,
    Rel,
    coequalizer_quotient,
    coproduct_cone,
    equalizer,
    image_factorize,
    product_cone,
)
from laxtop.internal.helpers import mask_of
from laxtop.internal.logger import logger
from laxtop.models import MonotoneMap, TSpace, Validation
from laxtop.monads import MonadSpec
from laxtop.tspace.extension import transitivity_instances
from laxtop.typings import Pair

__all__ = (
    'saturate',
    'discrete_space',
    'indiscrete_space',
    'initial_structure',
    'final_structure',
    'product_space',
    'coproduct_space',
    'equalizer_space',
    'image_space',
    'quotient_space',
)

Family = Sequence[Tuple[FinMap, TSpace]]

def saturate(g: TSpace) -> TSpace:
    """
    The least space structure containing the relation of ``g``.

    Adds the reflexivity pairs, then adds ``(μ 𝔛, z)`` for every
    transitivity instance until nothing changes.

    Raises
    ------
    BudgetExceeded
        An intermediate extension cannot be enumerated.
    """
    n = g.points.size
    pairs: Set[Pair] = set(g.converges.pairs)
    pairs.update((g.monad.unit_code(x, n), x) for x in range(n))

    rounds = 0
    while True:
        current = g.with_structure(pairs)
        forced = {pair for *_, pair in transitivity_instances(current)} - pairs
        if not forced:
            break
        pairs |= forced
        rounds += 1

    logger.debug('saturated %r in %s rounds, %s pairs', g, rounds, len(pairs))
    return g.with_structure(pairs, Validation.SPACE)


def discrete_space(monad: MonadSpec, points: Union[FinSetRef, int]) -> TSpace:
    """The least space structure on a set."""
    return saturate(TSpace(monad, points))


def indiscrete_space(monad: MonadSpec, points: Union[FinSetRef, int]) -> TSpace:
    """The largest space structure: everything converges to every point."""
    if not isinstance(points, FinSetRef):
        points = FinSetRef(points)
    return TSpace(monad, points, Rel.full(monad.carrier(points.size), points), validated=Validation.SPACE)


def _family_monad(maps: Family, monad: Optional[MonadSpec]) -> MonadSpec:
    monads = {space.monad for _, space in maps}
    if monad is not None:
        monads.add(monad)
    if not monads:
        raise TypeError('an empty family needs an explicit monad.')
    if len(monads) > 1:
        raise IncompatibleMonads('family mixes {0}'.format(sorted(m.kind for m in monads)))
    return monads.pop()


def initial_structure(x: Union[FinSetRef, int], maps: Iterable[Tuple[FinMap, TSpace]], *, monad: Optional[MonadSpec] = None) -> TSpace:
    """
    The largest structure on ``x`` making every map of the family monotone:
    ``(t, y)`` converges iff ``(T f_i(t), f_i(y))`` converges in every
    target.

    Parameters
    ----------
    x: Union[:class:`FinSetRef`, :class:`int`]
        The carrier.
    maps: Iterable[Tuple[:class:`FinMap`, :class:`TSpace`]]
        The maps out of ``x`` with their target spaces.
    monad: Optional[:class:`MonadSpec`]
        Required when the family is empty.

    Raises
    ------
    IncompatibleMonads
        The targets are over different monads.
    """
    if not isinstance(x, FinSetRef):
        x = FinSetRef(x)
    maps = list(maps)
    monad = _family_monad(maps, monad)
    n = x.size

    everything = (1 << n) - 1
    allowed = [everything] * monad.size(n)
    for f, space in maps:
        if f.dom.size != n or f.cod.size != space.points.size:
            raise ValueError('map does not fit the carrier or its space.')
        tf = monad.apply_functor(f).table
        rows = space.rows
        for t in range(len(allowed)):
            row = rows[tf[t]]
            allowed[t] &= mask_of(y for y in range(n) if row >> f.table[y] & 1)

    validated = Validation.SPACE if all(space.validated == Validation.SPACE for _, space in maps) else Validation.UNKNOWN
    return TSpace(monad, x, Rel.from_rows(monad.carrier(n), x, allowed), validated=validated)


def final_structure(y: Union[FinSetRef, int], maps: Iterable[Tuple[FinMap, TSpace]], *, monad: Optional[MonadSpec] = None) -> TSpace:
    """
    The least space structure on ``y`` making every map of the family
    monotone: the saturation of the union of the image relations.

    Parameters
    ----------
    y: Union[:class:`FinSetRef`, :class:`int`]
        The carrier.
    maps: Iterable[Tuple[:class:`FinMap`, :class:`TSpace`]]
        The maps into ``y`` with their source spaces.
    monad: Optional[:class:`MonadSpec`]
        Required when the family is empty.
    """
    if not isinstance(y, FinSetRef):
        y = FinSetRef(y)
    maps = list(maps)
    monad = _family_monad(maps, monad)

    pairs: Set[Pair] = set()
    for f, space in maps:
        if f.cod.size != y.size or f.dom.size != space.points.size:
            raise ValueError('map does not fit the carrier or its space.')
        tf = monad.apply_functor(f).table
        pairs.update((tf[t], f.table[z]) for t, z in space.converges.pairs)

    return saturate(TSpace(monad, y, pairs))


def product_space(a: TSpace, b: TSpace) -> TSpace:
    """
    The product of two spaces: initial structure along both projections
    of the product of their carriers.
    """
    a.same_monad(b)
    carrier, proj1, proj2 = product_cone(a.points, b.points)
    return initial_structure(carrier, [(proj1, a), (proj2, b)])


def coproduct_space(a: TSpace, b: TSpace) -> TSpace:
    """The disjoint union of two spaces, final along both injections."""
    a.same_monad(b)
    carrier, inj1, inj2 = coproduct_cone(a.points, b.points)
    return final_structure(carrier, [(inj1, a), (inj2, b)])


def equalizer_space(f: MonotoneMap, g: MonotoneMap) -> Tuple[TSpace, MonotoneMap]:
    """
    The subspace where two parallel monotone maps agree, with its inclusion.
    """
    if f.source != g.source or f.target != g.target:
        raise ValueError('maps are not parallel.')
    carrier, inclusion = equalizer(f.f, g.f)
    sub = initial_structure(carrier, [(inclusion, f.source)])
    return sub, MonotoneMap(inclusion, sub, f.source, check=False)


def image_space(f: MonotoneMap) -> Tuple[TSpace, MonotoneMap, MonotoneMap]:
    """
    The image of a monotone map, carrying the final structure along the
    corestriction. Returns the image with the surjective and injective parts.
    """
    epi, mono = image_factorize(f.f)
    image = final_structure(epi.cod, [(epi, f.source)])
    return image, MonotoneMap(epi, f.source, image, check=False), MonotoneMap(mono, image, f.target)


def quotient_space(s: TSpace, r: Union[Rel, Iterable[Pair]]) -> MonotoneMap:
    """
    Quotients ``s`` by the equivalence generated by ``r`` with the final
    structure. Returns the projection.
    """
    if not isinstance(r, Rel):
        r = Rel(s.points, s.points, r)
    q, _ = coequalizer_quotient(r)
    quotient = final_structure(q.cod, [(q, s)])
    return MonotoneMap(q, s, quotient, check=False)
