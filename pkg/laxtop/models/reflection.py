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
from typing import Any, Dict, Optional

from laxtop.models.algebra import CongruenceResult, EMAlgebra
from laxtop.models.base import LaxtopModel
from laxtop.models.space import MonotoneMap, TSpace

__all__ = (
    'ReflectionKind',
    'ReflectionResult',
    'VerificationReport',
)

class ReflectionKind:
    B = 'B'
    H = 'H'
    C = 'C'
    F = 'F'
    CF = 'CF'

    ALL = (B, H, C, F, CF)


class ReflectionResult(LaxtopModel):
    """
    The unit of a reflection together with the reflected space.

    Attributes
    ----------
    unit: :class:`MonotoneMap`
        The unit, from the original space to :attr:`reflected`.
    reflected: :class:`TSpace`
        The reflected space.
    kind: :class:`str`
        The :class:`ReflectionKind` that produced it.
    algebra: Optional[:class:`EMAlgebra`]
        For ``B``, the quotient algebra whose space is :attr:`reflected`.
    congruence: Optional[:class:`CongruenceResult`]
        For ``B``, the congruence of the free algebra.
    """
    __slots__ = ('unit', 'reflected', 'kind', 'algebra', 'congruence')
    _repr_fields = ('kind', 'reflected')

    def __init__(
        self,
        unit: MonotoneMap,
        reflected: TSpace,
        kind: str,
        algebra: Optional[EMAlgebra] = None,
        congruence: Optional[CongruenceResult] = None,
    ) -> None:
        self.unit = unit
        self.reflected = reflected
        self.kind = kind
        self.algebra = algebra
        self.congruence = congruence

    @property
    def source(self) -> TSpace:
        return self.unit.source


class VerificationReport(LaxtopModel):
    """
    The outcome of checking a reflection's universal property.

    Attributes
    ----------
    kind: :class:`str`
        The reflection kind that was verified.
    passed: :class:`bool`
        Whether every map factored uniquely.
    targets: :class:`int`
        How many target spaces were enumerated.
    maps_checked: :class:`int`
        How many monotone maps into targets were factored.
    failure: Optional[:class:`dict`]
        The first failure: ``reason`` (``'existence'`` or ``'uniqueness'``),
        the ``target`` space, the map ``f`` and the number of
        ``factorizations`` found.
    """
    __slots__ = ('kind', 'targets', 'maps_checked', 'failure')
    _repr_fields = ('kind', 'passed', 'targets', 'maps_checked')

    def __init__(self, kind: str, targets: int, maps_checked: int, failure: Optional[Dict[str, Any]] = None) -> None:
        self.kind = kind
        self.targets = targets
        self.maps_checked = maps_checked
        self.failure = failure

    @property
    def passed(self) -> bool:
        return self.failure is None
