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
from typing import Any, Iterable, Optional, Tuple, Union

from laxtop.errors import IncompatibleMonads, NotMonotone
from laxtop.finsetcore import FinMap, FinSetRef, Rel
from laxtop.internal.mixins import MonadBoundMixin
from laxtop.models.base import LaxtopModel
from laxtop.monads import MonadSpec
from laxtop.typings import Pair

__all__ = (
    'Validation',
    'TSpace',
    'ExtRelation',
    'MonotoneMap',
    'ConditionReport',
    'monotone_violation',
)

class Validation:
    UNKNOWN = 0
    GRAPH = 1
    SPACE = 2


class TSpace(MonadBoundMixin, LaxtopModel):
    """
    A set with a convergence relation ``C ⊆ T X × X``.

    A pair ``(t, y)`` reads "``t`` converges to ``y``". Without the two
    axioms checked by :func:`check_axioms` this is only a T-graph.

    Parameters
    ----------
    monad: :class:`MonadSpec`
        The monad.
    points: Union[:class:`FinSetRef`, :class:`int`]
        The carrier ``X``.
    converges: Union[:class:`Rel`, Iterable[Tuple[:class:`int`, :class:`int`]]]
        The relation, with ``T``-elements given by their codes.
    validated: :class:`int`
        A :class:`Validation` value. Constructions that prove the axioms
        pass ``Validation.SPACE``.

    Attributes
    ----------
    monad: :class:`MonadSpec`
        The monad.
    points: :class:`FinSetRef`
        The carrier.
    converges: :class:`Rel`
        The relation from ``T X`` to ``X``.
    """
    __slots__ = ('monad', 'points', 'converges', '_validated')
    _repr_fields = ('monad', 'points', 'validated')

    def __init__(
        self,
        monad: MonadSpec,
        points: Union[FinSetRef, int],
        converges: Union[Rel, Iterable[Pair]] = (),
        *,
        validated: int = Validation.UNKNOWN,
    ) -> None:
        if not isinstance(points, FinSetRef):
            points = FinSetRef(points)

        self.monad = monad
        self.points = points
        tx = monad.carrier(points.size)

        if isinstance(converges, Rel):
            if (converges.dom.size, converges.cod.size) != (tx.size, points.size):
                raise ValueError('relation must be from T X ({0}) to X ({1})'.format(tx.size, points.size))
            self.converges = Rel(tx, points, converges.pairs)
        else:
            self.converges = Rel(tx, points, converges)

        self._validated = validated

    @classmethod
    def from_payloads(cls, monad: MonadSpec, points: Union[FinSetRef, int], pairs: Iterable[Tuple[Any, int]], **kwargs: Any) -> TSpace:
        """
        Builds a space from readable ``T``-elements, e.g. sorted point
        tuples for the powerset monad.
        """
        n = points.size if isinstance(points, FinSetRef) else points
        return cls(monad, points, [(monad.encode(t, n), y) for t, y in pairs], **kwargs)

    def _carrier_size(self) -> int:
        return self.points.size

    @property
    def validated(self) -> int:
        return self._validated

    def mark(self, validated: int) -> None:
        # cache only; the relation itself never changes
        self._validated = validated

    @property
    def rows(self):
        """Limits of every element of ``T X`` as bitmasks."""
        return self.converges.rows

    def limits(self, t: int) -> Tuple[int, ...]:
        return self.converges.targets(t)

    def with_structure(self, converges: Union[Rel, Iterable[Pair]], validated: int = Validation.UNKNOWN) -> TSpace:
        return TSpace(self.monad, self.points, converges, validated=validated)

    def readable_pairs(self) -> Tuple[Tuple[Any, int], ...]:
        n = self.points.size
        return tuple((self.monad.decode(t, n), y) for t, y in self.converges.pairs)

    def same_monad(self, other: TSpace) -> None:
        if self.monad != other.monad:
            raise IncompatibleMonads('{0!r} and {1!r} differ'.format(self.monad, other.monad))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TSpace):
            return NotImplemented
        return (self.monad, self.points.size, self.converges) == (other.monad, other.points.size, other.converges)

    def __hash__(self) -> int:
        return hash((self.monad, self.points.size, self.converges))


class ExtRelation(LaxtopModel):
    """
    The extension ``Ĉ ⊆ T T X × T X`` of a space's convergence.

    Attributes
    ----------
    base: :class:`TSpace`
        The space it extends.
    pairs: :class:`Rel`
        The relation, in codes of ``T T X`` and ``T X``.
    """
    __slots__ = ('base', 'pairs')
    _repr_fields = ('base',)

    def __init__(self, base: TSpace, pairs: Rel) -> None:
        self.base = base
        self.pairs = pairs

    def __contains__(self, pair: Any) -> bool:
        return pair in self.pairs

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def monotone_violation(f: FinMap, src: TSpace, tgt: TSpace) -> Optional[Tuple[Pair, Pair]]:
    """
    Returns a pair of ``src`` whose image does not converge in ``tgt``,
    together with that image, or ``None`` when ``f`` is monotone.

    Raises
    ------
    IncompatibleMonads
        The two spaces are over different monads.
    """
    src.same_monad(tgt)
    if f.dom.size != src.points.size or f.cod.size != tgt.points.size:
        raise ValueError('map does not fit the spaces.')

    tf = src.monad.apply_functor(f).table
    table = f.table
    target = tgt.converges
    for t, y in src.converges.pairs:
        image = (tf[t], table[y])
        if image not in target:
            return (t, y), image
    return None


class MonotoneMap(LaxtopModel):
    """
    A map between the carriers of two spaces that preserves convergence.

    Parameters
    ----------
    f: :class:`FinMap`
        The point map.
    source: :class:`TSpace`
        The domain space.
    target: :class:`TSpace`
        The codomain space.
    check: :class:`bool`
        Whether to verify monotonicity. Defaults to ``True``.

    Raises
    ------
    NotMonotone
        ``check`` is set and some pair is not preserved.
    """
    __slots__ = ('f', 'source', 'target')
    _repr_fields = ('source', 'target')

    def __init__(self, f: FinMap, source: TSpace, target: TSpace, *, check: bool = True) -> None:
        if check:
            witness = monotone_violation(f, source, target)
            if witness is not None:
                raise NotMonotone(witness)
        else:
            source.same_monad(target)

        self.f = f
        self.source = source
        self.target = target

    @classmethod
    def identity(cls, space: TSpace) -> MonotoneMap:
        return cls(FinMap.identity(space.points), space, space, check=False)

    def lifted(self) -> FinMap:
        """
        The induced map on convergence pairs, from the source's pair
        carrier to the target's.
        """
        tf = self.source.monad.apply_functor(self.f).table
        target = self.target.converges
        return FinMap(
            len(self.source.converges),
            len(target),
            (target.index((tf[t], self.f.table[y])) for t, y in self.source.converges.pairs),
        )

    def then(self, other: MonotoneMap) -> MonotoneMap:
        """Returns ``other ∘ self``."""
        return MonotoneMap(self.f.then(other.f), self.source, other.target, check=False)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MonotoneMap):
            return NotImplemented
        return (self.f, self.source, self.target) == (other.f, other.source, other.target)

    def __hash__(self) -> int:
        return hash((self.f, self.source, self.target))


class ConditionReport(LaxtopModel):
    """
    The compactness and separation conditions of a space.

    Attributes
    ----------
    compact: :class:`bool`
        (K): every element of ``T X`` converges.
    hausdorff: :class:`bool`
        (H): every element of ``T X`` converges to at most one point.
    witness_section: Optional[:class:`FinMap`]
        When compact, a section of the domain projection choosing the
        least limit of every element, as a map from ``T X`` to the pair
        carrier of the relation.
    violation: Optional[Tuple[:class:`str`, Any]]
        ``('K', t)`` for an element without limit, else ``('H', (t, limits))``
        for one with several limits.
    """
    __slots__ = ('compact', 'hausdorff', 'witness_section', 'violation')
    _repr_fields = ('compact', 'hausdorff', 'algebraic')

    def __init__(self, compact: bool, hausdorff: bool, witness_section: Optional[FinMap] = None, violation: Any = None) -> None:
        self.compact = compact
        self.hausdorff = hausdorff
        self.witness_section = witness_section
        self.violation = violation

    @property
    def algebraic(self) -> bool:
        """(A): compact and hausdorff."""
        return self.compact and self.hausdorff
