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
from typing import Any, Iterator, List, Optional, Sequence, Tuple

from laxtop.errors import EncodingError
from laxtop.internal.helpers import bits, check_budget, iter_bits
from laxtop.monads.base import MonadKind, MonadSpec, _check_index

__all__ = (
    'PowersetMonad',
)

class PowersetMonad(MonadSpec):
    """
    The powerset monad.

    A subset of an ``n``-element carrier is coded by its bitmask, so the
    code of ``{0, 2}`` is ``0b101 == 5``. A family of subsets, i.e. an
    element of ``P P X``, is the bitmask over those codes. The unit is
    ``x ↦ {x}`` and the multiplication is union.
    """
    kind = MonadKind.POWERSET

    __slots__ = ()

    def size(self, n: int) -> int:
        return 1 << n

    def encode(self, payload: Any, n: int) -> int:
        if isinstance(payload, (int, str, bytes)) or not hasattr(payload, '__iter__'):
            raise EncodingError('subset must be an array of points, got {0!r}'.format(payload))

        mask = 0
        for x in payload:
            mask |= 1 << _check_index(x, n, 'point')
        return mask

    def decode(self, code: int, n: int) -> Tuple[int, ...]:
        _check_index(code, 1 << n, 'code')
        return bits(code)

    def fmap_code(self, table: Sequence[int], m: int, code: int, n: int) -> int:
        out = 0
        for x in iter_bits(code):
            out |= 1 << table[x]
        return out

    def unit_code(self, x: int, n: int) -> int:
        return 1 << x

    def mult_code(self, code: int, n: int) -> int:
        # members of the family are themselves subset codes
        out = 0
        for member in iter_bits(code):
            out |= member
        return out

    def join_generators(self, n: int) -> List[int]:
        # the empty set and the singletons; functor actions and unions preserve unions
        check_budget(n + 1, 'generators of a powerset of {0} points'.format(n))
        return [0] + [1 << x for x in range(n)]

    def join_violation(self, table: Sequence[int], k: int) -> Optional[Tuple[str, Any]]:
        """
        Algebras of this monad are the complete lattices with the structure
        map taking suprema. Checks exactly that: the relation
        ``x ≤ y :⟺ c({x, y}) = y`` is a partial order and ``c(A)`` is the
        least upper bound of ``A`` for every subset ``A``.
        """
        for x in range(k):
            if table[1 << x] != x:
                return ('unit', 1 << x)

        le = [[table[(1 << x) | (1 << y)] == y for y in range(k)] for x in range(k)]
        for x in range(k):
            for y in range(k):
                if x != y and le[x][y] and le[y][x]:
                    return ('antisymmetry', (1 << x) | (1 << y))
                for z in range(k):
                    if le[x][y] and le[y][z] and not le[x][z]:
                        return ('transitivity', (1 << x) | (1 << z))

        for a in self.elements(k):
            s = table[a]
            members = bits(a)
            if not all(le[x][s] for x in members):
                return ('upper bound', a)
            for u in range(k):
                if all(le[x][u] for x in members) and not le[s][u]:
                    return ('least upper bound', a)
        return None

    def algebra_violation(self, table: Sequence[int], k: int) -> Optional[Tuple[str, Any]]:
        return self.join_violation(table, k)

    def iter_algebra_structures(self, k: int) -> Iterator[Tuple[int, ...]]:
        """
        Yields the supremum maps of all complete lattice orders on ``k``
        labeled points.
        """
        if k == 0:
            # the empty family has no supremum in an empty carrier
            return

        off_diagonal = [(x, y) for x in range(k) for y in range(k) if x != y]
        check_budget(1 << len(off_diagonal), 'orders on {0} points'.format(k))

        for choice in range(1 << len(off_diagonal)):
            le = [[x == y for y in range(k)] for x in range(k)]
            for i in iter_bits(choice):
                x, y = off_diagonal[i]
                le[x][y] = True
            table = _suprema(le, k)
            if table is not None:
                yield table


def _suprema(le: List[List[bool]], k: int) -> Optional[Tuple[int, ...]]:
    for x in range(k):
        for y in range(k):
            if x != y and le[x][y] and le[y][x]:
                return None
            if le[x][y] and not all(le[x][z] for z in range(k) if le[y][z]):
                return None

    table = []
    for a in range(1 << k):
        members = bits(a)
        uppers = [u for u in range(k) if all(le[x][u] for x in members)]
        least = [u for u in uppers if all(le[u][v] for v in uppers)]
        if not least:
            return None
        table.append(least[0])
    return tuple(table)
