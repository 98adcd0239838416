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
from typing import Any, Dict, Sequence, Tuple

from laxtop.errors import EncodingError, LawViolation
from laxtop.monads.base import MonadKind, MonadSpec, _check_index

__all__ = (
    'MonoidTable',
    'MonoidActionMonad',
)

class MonoidTable:
    """
    A finite commutative monoid given by its multiplication table.

    Associativity, the unit laws and commutativity are validated on
    construction.

    Parameters
    ----------
    size: :class:`int`
        The number of elements.
    unit: :class:`int`
        The index of the neutral element.
    table: Sequence[Sequence[:class:`int`]]
        ``table[a][b]`` is the product ``a·b``.

    Raises
    ------
    LawViolation
        A monoid law or commutativity fails.
    """
    __slots__ = ('size', 'unit', 'table')

    def __init__(self, size: int, unit: int, table: Sequence[Sequence[int]]) -> None:
        if isinstance(size, bool) or not isinstance(size, int) or size <= 0:
            raise ValueError('monoid size must be a positive int.')
        if not 0 <= unit < size:
            raise ValueError('unit {0} is out of range.'.format(unit))

        rows = tuple(tuple(row) for row in table)
        if len(rows) != size or any(len(row) != size for row in rows):
            raise ValueError('table must be {0}x{0}.'.format(size))
        if any(not 0 <= v < size for row in rows for v in row):
            raise ValueError('table entries must be monoid indices.')

        self.size = size
        self.unit = unit
        self.table: Tuple[Tuple[int, ...], ...] = rows
        self._validate()

    def _validate(self) -> None:
        m, e = self.table, self.unit
        for a in range(self.size):
            if m[e][a] != a or m[a][e] != a:
                raise LawViolation('{0} is not a unit for {1}'.format(e, a), witness=(e, a))
            for b in range(self.size):
                if m[a][b] != m[b][a]:
                    raise LawViolation('table is not commutative at {0}'.format((a, b)), witness=(a, b))
                for c in range(self.size):
                    if m[m[a][b]][c] != m[a][m[b][c]]:
                        raise LawViolation('table is not associative at {0}'.format((a, b, c)), witness=(a, b, c))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def to_dict(self) -> Dict[str, Any]:
        return {'size': self.size, 'unit': self.unit, 'table': [list(row) for row in self.table]}

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, MonoidTable):
            return NotImplemented
        return (self.size, self.unit, self.table) == (other.size, other.unit, other.table)

    def __hash__(self) -> int:
        return hash((self.size, self.unit, self.table))

    def __repr__(self):
        return '<MonoidTable size=%s unit=%s>' % (self.size, self.unit)


class MonoidActionMonad(MonadSpec):
    """
    The monad ``M × (–)`` of a commutative monoid ``M``.

    The pair ``(m, x)`` is coded as ``m * n + x``. The unit is
    ``x ↦ (e, x)`` and the multiplication is ``(a, (b, x)) ↦ (a·b, x)``.

    Attributes
    ----------
    monoid: :class:`MonoidTable`
        The monoid.
    """
    kind = MonadKind.MONOID_ACTION

    __slots__ = ('monoid',)

    def __init__(self, monoid: MonoidTable) -> None:
        if not isinstance(monoid, MonoidTable):
            raise TypeError('monoid must be a MonoidTable.')
        self.monoid = monoid

    def size(self, n: int) -> int:
        return self.monoid.size * n

    def encode(self, payload: Any, n: int) -> int:
        try:
            m, x = payload
        except (TypeError, ValueError):
            raise EncodingError('expected an [m, x] pair, got {0!r}'.format(payload)) from None
        m = _check_index(m, self.monoid.size, 'monoid element')
        x = _check_index(x, n, 'point')
        return m * n + x

    def decode(self, code: int, n: int) -> Tuple[int, int]:
        _check_index(code, self.size(n), 'code')
        return divmod(code, n)

    def fmap_code(self, table: Sequence[int], m: int, code: int, n: int) -> int:
        a, x = divmod(code, n)
        return a * m + table[x]

    def unit_code(self, x: int, n: int) -> int:
        return self.monoid.unit * n + x

    def mult_code(self, code: int, n: int) -> int:
        a, inner = divmod(code, self.size(n))
        b, x = divmod(inner, n)
        return self.monoid.mul(a, b) * n + x

    def descriptor(self) -> Dict[str, Any]:
        return {'kind': self.kind, 'monoid': self.monoid.to_dict()}

    def __repr__(self):
        return '<MonoidActionMonad kind=%s monoid=%r>' % (self.kind, self.monoid)
