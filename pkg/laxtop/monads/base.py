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
from typing import Any, ClassVar, Dict, Iterator, List, Optional, Sequence, Tuple

from laxtop.finsetcore import FinMap, FinSetRef
from laxtop.errors import EncodingError
from laxtop.internal.helpers import check_budget
from laxtop.typings import Code, Payload

__all__ = (
    'MonadKind',
    'MonadSpec',
    'TElem',
    'apply_functor',
    'unit_component',
    'mult_component',
)

class MonadKind:
    IDENTITY = 'identity'
    POWERSET = 'powerset'
    ULTRAFILTER = 'ultrafilter'
    MONOID_ACTION = 'monoid_action'
    T0 = 't0'
    T1 = 't1'

    ALL = (IDENTITY, POWERSET, ULTRAFILTER, MONOID_ACTION, T0, T1)


class MonadSpec:
    """
    Base class of computable monads on finite sets.

    ``T`` applied to a carrier of size ``n`` is a finite set whose elements
    are numbered densely from ``0`` to ``size(n) - 1``. ``T(T n)`` is
    numbered the same way by applying the codec to a carrier of size
    ``size(n)``. Subclasses implement the element level operations
    :meth:`fmap_code`, :meth:`unit_code` and :meth:`mult_code`; the map
    level operations are derived from those.

    Attributes
    ----------
    kind: :class:`str`
        One of :class:`MonadKind`.
    """
    kind: ClassVar[str]

    __slots__ = ()

    # element level

    def size(self, n: int) -> int:
        raise NotImplementedError

    def encode(self, payload: Any, n: int) -> Code:
        raise NotImplementedError

    def decode(self, code: Code, n: int) -> Payload:
        raise NotImplementedError

    def fmap_code(self, table: Sequence[int], m: int, code: Code, n: int) -> Code:
        """Image of ``code ∈ T n`` under ``T f`` where ``f: n -> m`` is given by ``table``."""
        raise NotImplementedError

    def unit_code(self, x: int, n: int) -> Code:
        raise NotImplementedError

    def mult_code(self, code: Code, n: int) -> Code:
        """Image of ``code ∈ T(T n)`` under the multiplication."""
        raise NotImplementedError

    def join_generators(self, n: int) -> Optional[List[Code]]:
        """
        Codes generating ``T n`` under a union that every composite of
        functor actions and multiplications preserves, or ``None`` when the
        monad has no such union. Law checks on ``T n`` too large to enumerate
        are then exact on these generators.
        """
        return None

    # map level

    def carrier(self, n: int) -> FinSetRef:
        return FinSetRef(self.size(n))

    def elements(self, n: int) -> range:
        """All codes of ``T n``, checked against the budget."""
        size = self.size(n)
        check_budget(size, '{0} of a {1}-element set'.format(self.kind, n))
        return range(size)

    def apply_functor(self, f: FinMap) -> FinMap:
        n, m = f.dom.size, f.cod.size
        table = f.table
        return FinMap(self.carrier(n), self.carrier(m), (self.fmap_code(table, m, t, n) for t in self.elements(n)))

    def unit_component(self, n: int) -> FinMap:
        check_budget(n, 'unit component')
        return FinMap(n, self.carrier(n), (self.unit_code(x, n) for x in range(n)))

    def mult_component(self, n: int) -> FinMap:
        inner = self.size(n)
        return FinMap(self.carrier(inner), self.carrier(n), (self.mult_code(t, n) for t in self.elements(inner)))

    def element(self, payload: Any, n: int) -> TElem:
        return TElem(self, n, self.decode(self.encode(payload, n), n))

    def decode_element(self, code: Code, n: int) -> TElem:
        return TElem(self, n, self.decode(code, n))

    # algebras

    def algebra_violation(self, table: Sequence[int], k: int) -> Optional[Tuple[str, Any]]:
        """
        Checks the two algebra laws of a structure ``T k -> k`` given by
        ``table``. Returns ``None`` or ``(law, element)``.
        """
        for x in range(k):
            if table[self.unit_code(x, k)] != x:
                return ('unit', x)

        tk = self.size(k)
        for big in self.elements(tk):
            # c(T c (big)) == c(mu(big))
            left = table[self.fmap_code(table, k, big, tk)]
            right = table[self.mult_code(big, k)]
            if left != right:
                return ('associativity', big)
        return None

    def iter_algebra_structures(self, k: int) -> Iterator[Tuple[int, ...]]:
        """
        Yields all algebra structures on a ``k``-element carrier as tables.

        The unit law fixes the structure on unit elements; the remaining
        entries are enumerated within the budget.
        """
        tk = self.size(k)
        fixed: Dict[int, int] = {}
        for x in range(k):
            t = self.unit_code(x, k)
            if fixed.get(t, x) != x:
                return
            fixed[t] = x

        free = [t for t in range(tk) if t not in fixed]
        if free and k == 0:
            return
        check_budget(k ** len(free), 'algebra structures on {0} points'.format(k))

        table: List[int] = [fixed.get(t, 0) for t in range(tk)]
        for values in _product(k, len(free)):
            for t, v in zip(free, values):
                table[t] = v
            if self.algebra_violation(table, k) is None:
                yield tuple(table)

    # identity

    def descriptor(self) -> Dict[str, Any]:
        return {'kind': self.kind}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MonadSpec):
            return NotImplemented
        return self.descriptor() == other.descriptor()

    def __hash__(self) -> int:
        return hash(repr(self.descriptor()))

    def __repr__(self):
        return '<%s kind=%s>' % (self.__class__.__name__, self.kind)


def _product(base: int, length: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    if base == 0:
        return
    digits = [0] * length
    while True:
        yield tuple(digits)
        i = 0
        while i < length:
            digits[i] += 1
            if digits[i] < base:
                break
            digits[i] = 0
            i += 1
        if i == length:
            return


class TElem:
    """
    An element of ``T X`` in canonical form.

    Attributes
    ----------
    monad: :class:`MonadSpec`
        The monad.
    carrier_size: :class:`int`
        The size of ``X``.
    payload:
        The monad specific description: an :class:`int` for identity and
        ultrafilter, a sorted tuple for powerset, an ``(m, x)`` pair for
        monoid actions and ``()`` for t0/t1.
    """
    __slots__ = ('monad', 'carrier_size', 'payload')

    def __init__(self, monad: MonadSpec, carrier_size: int, payload: Payload) -> None:
        self.monad = monad
        self.carrier_size = carrier_size
        self.payload = payload

    @property
    def code(self) -> Code:
        return self.monad.encode(self.payload, self.carrier_size)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, TElem):
            return NotImplemented
        return (self.monad, self.carrier_size, self.payload) == (other.monad, other.carrier_size, other.payload)

    def __hash__(self) -> int:
        return hash((self.monad, self.carrier_size, self.payload))

    def __repr__(self):
        return '<TElem kind=%s carrier_size=%s payload=%r>' % (self.monad.kind, self.carrier_size, self.payload)


def _check_index(value: Any, n: int, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise EncodingError('{0} must be an integer, got {1!r}'.format(what, value))
    if not 0 <= value < n:
        raise EncodingError('{0} {1} is out of range for a carrier of size {2}'.format(what, value, n))
    return value


def apply_functor(monad: MonadSpec, f: FinMap) -> FinMap:
    """Returns ``T f`` between the coded carriers ``T X`` and ``T Y``."""
    return monad.apply_functor(f)

def unit_component(monad: MonadSpec, n: int) -> FinMap:
    """Returns the unit ``X -> T X`` for a carrier of size ``n``."""
    return monad.unit_component(n)

def mult_component(monad: MonadSpec, n: int) -> FinMap:
    """Returns the multiplication ``T T X -> T X`` for a carrier of size ``n``."""
    return monad.mult_component(n)
