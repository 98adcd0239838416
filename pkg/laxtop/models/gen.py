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
from typing import Any, Optional

from laxtop.finsetcore import FinMap
from laxtop.models.algebra import EMAlgebra
from laxtop.models.base import LaxtopModel

__all__ = (
    'GenObject',
    'GenMorphism',
    'CartesianReport',
)

class GenObject(LaxtopModel):
    """
    An algebra presented by a generating map ``p: X -> R``.

    Use :func:`gen_validate` to build one; the constructor does not check
    that :attr:`psharp` is surjective.

    Attributes
    ----------
    p: :class:`FinMap`
        The generators.
    algebra: :class:`EMAlgebra`
        The algebra ``(R, r)``.
    psharp: :class:`FinMap`
        The mate ``r ∘ T p: T X -> R``.
    """
    __slots__ = ('p', 'algebra', 'psharp')
    _repr_fields = ('p', 'algebra')

    def __init__(self, p: FinMap, algebra: EMAlgebra, psharp: FinMap) -> None:
        self.p = p
        self.algebra = algebra
        self.psharp = psharp

    @property
    def generators(self):
        return self.p.dom

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GenObject):
            return NotImplemented
        return (self.p, self.algebra) == (other.p, other.algebra)

    def __hash__(self) -> int:
        return hash((self.p, self.algebra))


class GenMorphism(LaxtopModel):
    """
    A morphism ``(f, f*)`` of presented algebras, with
    ``f* ∘ p_source = p_target ∘ f`` and ``f*`` a homomorphism.

    Attributes
    ----------
    f: :class:`FinMap`
        The map on generators.
    fstar: :class:`FinMap`
        The homomorphism on algebras.
    source: Optional[:class:`GenObject`]
        The domain.
    target: Optional[:class:`GenObject`]
        The codomain.
    """
    __slots__ = ('f', 'fstar', 'source', 'target')
    _repr_fields = ('f', 'fstar')

    def __init__(self, f: FinMap, fstar: FinMap, source: Optional[GenObject] = None, target: Optional[GenObject] = None) -> None:
        self.f = f
        self.fstar = fstar
        self.source = source
        self.target = target

    def commutes(self) -> bool:
        if self.source is None or self.target is None:
            raise ValueError('source and target are needed.')
        return self.fstar.compose(self.source.p) == self.target.p.compose(self.f)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, GenMorphism):
            return NotImplemented
        return (self.f, self.fstar) == (other.f, other.fstar)

    def __hash__(self) -> int:
        return hash((self.f, self.fstar))


class CartesianReport(LaxtopModel):
    """
    Whether a monotone map is cartesian.

    Attributes
    ----------
    is_cartesian: :class:`bool`
        The verdict.
    witness:
        A convergence pair present in the initial structure but missing
        from the source, or for the cone checker the failing test cone.
    """
    __slots__ = ('is_cartesian', 'witness')
    _repr_fields = ('is_cartesian',)

    def __init__(self, is_cartesian: bool, witness: Any = None) -> None:
        self.is_cartesian = is_cartesian
        self.witness = witness

    def __bool__(self) -> bool:
        return self.is_cartesian
