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
from typing import Any, Optional, Tuple, Union

from laxtop.errors import LawViolation
from laxtop.finsetcore import FinMap, FinSetRef
from laxtop.internal.mixins import MonadBoundMixin
from laxtop.models.base import LaxtopModel
from laxtop.monads import MonadSpec
from laxtop.typings import Partition

__all__ = (
    'EMAlgebra',
    'CongruenceResult',
)

class EMAlgebra(MonadBoundMixin, LaxtopModel):
    """
    An Eilenberg-Moore algebra ``(X, c: T X -> X)``.

    Parameters
    ----------
    monad: :class:`MonadSpec`
        The monad.
    carrier: Union[:class:`FinSetRef`, :class:`int`]
        The carrier ``X``.
    structure: :class:`FinMap`
        The structure map from ``T X`` to ``X``.
    check: :class:`bool`
        Whether to verify ``c ∘ η = id`` and ``c ∘ T c = c ∘ μ``. Defaults
        to ``True``.

    Raises
    ------
    LawViolation
        ``check`` is set and a law fails; the witness is ``(law, element)``.
    """
    __slots__ = ('monad', 'carrier', 'structure')
    _repr_fields = ('monad', 'carrier')

    def __init__(self, monad: MonadSpec, carrier: Union[FinSetRef, int], structure: FinMap, *, check: bool = True) -> None:
        if not isinstance(carrier, FinSetRef):
            carrier = FinSetRef(carrier)
        if structure.dom.size != monad.size(carrier.size) or structure.cod.size != carrier.size:
            raise ValueError('structure must be a map from T X to X.')

        self.monad = monad
        self.carrier = carrier
        self.structure = FinMap(monad.carrier(carrier.size), carrier, structure.table)

        if check:
            violation = self.law_violation()
            if violation is not None:
                raise LawViolation('{0} law fails at element {1}'.format(*violation), witness=violation)

    @classmethod
    def free(cls, monad: MonadSpec, n: int) -> EMAlgebra:
        """The free algebra ``(T X, μ_X)`` on ``n`` points."""
        return cls(monad, monad.carrier(n), monad.mult_component(n), check=False)

    def _carrier_size(self) -> int:
        return self.carrier.size

    def law_violation(self) -> Optional[Tuple[str, Any]]:
        return self.monad.algebra_violation(self.structure.table, self.carrier.size)

    def __call__(self, t: int) -> int:
        return self.structure.table[t]

    def is_homomorphism(self, f: FinMap, other: EMAlgebra) -> bool:
        """Whether ``f`` from this algebra to ``other`` commutes with the structures."""
        if f.dom.size != self.carrier.size or f.cod.size != other.carrier.size:
            return False
        tf = self.monad.apply_functor(f).table
        return all(
            f.table[self.structure.table[t]] == other.structure.table[tf[t]]
            for t in range(len(tf))
        )

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, EMAlgebra):
            return NotImplemented
        return (self.monad, self.carrier.size, self.structure) == (other.monad, other.carrier.size, other.structure)

    def __hash__(self) -> int:
        return hash((self.monad, self.carrier.size, self.structure))


class CongruenceResult(LaxtopModel):
    """
    A congruence of an algebra with its quotient.

    Attributes
    ----------
    base: :class:`EMAlgebra`
        The algebra that was quotiented.
    algebra: :class:`EMAlgebra`
        The quotient algebra.
    q: :class:`FinMap`
        The projection, a surjective homomorphism.
    classes: Tuple[Tuple[:class:`int`, ...], ...]
        The congruence classes in order of least member.
    """
    __slots__ = ('base', 'algebra', 'q', 'classes')
    _repr_fields = ('base', 'algebra')

    def __init__(self, base: EMAlgebra, algebra: EMAlgebra, q: FinMap, classes: Partition) -> None:
        self.base = base
        self.algebra = algebra
        self.q = q
        self.classes = classes

    def related(self, a: int, b: int) -> bool:
        return self.q.table[a] == self.q.table[b]
