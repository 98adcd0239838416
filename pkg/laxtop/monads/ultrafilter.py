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
from typing import Any, FrozenSet, Sequence

from laxtop.errors import EncodingError
from laxtop.finsetcore import FinMap
from laxtop.monads.base import MonadKind, MonadSpec, _check_index

__all__ = (
    'UltrafilterMonad',
)

class UltrafilterMonad(MonadSpec):
    """
    The ultrafilter monad restricted to finite sets.

    Every ultrafilter on a finite set is principal, so ``U X`` is coded by
    the point generating it. Functor action, unit and multiplication are
    nevertheless computed on the filters themselves (sets of subset
    bitmasks) via :meth:`filter_of` and :meth:`from_filter`.
    """
    kind = MonadKind.ULTRAFILTER

    __slots__ = ()

    def size(self, n: int) -> int:
        return n

    def encode(self, payload: Any, n: int) -> int:
        return _check_index(payload, n, 'point')

    def decode(self, code: int, n: int) -> int:
        return _check_index(code, n, 'code')

    def filter_of(self, code: int, n: int) -> FrozenSet[int]:
        """The principal ultrafilter ``{A ⊆ X : x ∈ A}`` as subset bitmasks."""
        return frozenset(a for a in range(1 << n) if a >> code & 1)

    def from_filter(self, ultrafilter: FrozenSet[int], n: int) -> int:
        """Recovers the generating point of an ultrafilter on ``n`` points."""
        points = [x for x in range(n) if (1 << x) in ultrafilter]
        if len(points) != 1 or (1 << n) - 1 not in ultrafilter:
            raise EncodingError('not an ultrafilter on {0} points'.format(n))
        return points[0]

    def fmap_code(self, table: Sequence[int], m: int, code: int, n: int) -> int:
        # U f (x) = {B ⊆ Y : f⁻¹(B) ∈ x}; x is principal at code
        image = frozenset(
            b for b in range(1 << m)
            if _preimage(table, b) >> code & 1
        )
        return self.from_filter(image, m)

    def unit_code(self, x: int, n: int) -> int:
        return self.from_filter(frozenset(a for a in range(1 << n) if a >> x & 1), n)

    def mult_code(self, code: int, n: int) -> int:
        # Σ(X) = {A ⊆ X : {x ∈ U X : A ∈ x} ∈ X}
        outer = self.filter_of(code, n)
        members = [self.filter_of(u, n) for u in range(n)]
        result = frozenset(
            a for a in range(1 << n)
            if sum(1 << u for u in range(n) if a in members[u]) in outer
        )
        return self.from_filter(result, n)

    def principal_bijection(self, n: int) -> FinMap:
        """The bijection ``X -> U X`` sending a point to its principal ultrafilter."""
        return FinMap(n, self.carrier(n), (self.from_filter(self.filter_of(x, n), n) for x in range(n)))


def _preimage(table: Sequence[int], mask: int) -> int:
    out = 0
    for i, v in enumerate(table):
        if mask >> v & 1:
            out |= 1 << i
    return out
