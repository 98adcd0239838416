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
from typing import Any, Sequence, Tuple

from laxtop.errors import EncodingError
from laxtop.monads.base import MonadKind, MonadSpec, _check_index

__all__ = (
    'DegenerateMonad',
)

class DegenerateMonad(MonadSpec):
    """
    The monads collapsing every nonempty set to a point.

    ``T X = 1`` for nonempty ``X``. On the empty set, ``t0`` gives the
    empty set and ``t1`` gives a point. The only element is encoded by the
    empty array ``[]``.

    Parameters
    ----------
    kind: :class:`str`
        Either ``'t0'`` or ``'t1'``.
    """
    __slots__ = ('_kind',)

    def __init__(self, kind: str = MonadKind.T0) -> None:
        if kind not in (MonadKind.T0, MonadKind.T1):
            raise ValueError('kind must be t0 or t1, not {0!r}'.format(kind))
        self._kind = kind

    @property
    def kind(self) -> str:  # type: ignore[override]
        return self._kind

    def size(self, n: int) -> int:
        if n > 0:
            return 1
        return 0 if self._kind == MonadKind.T0 else 1

    def encode(self, payload: Any, n: int) -> int:
        if payload not in ((), []):
            raise EncodingError('expected [], got {0!r}'.format(payload))
        return _check_index(0, self.size(n), 'code')

    def decode(self, code: int, n: int) -> Tuple[()]:
        _check_index(code, self.size(n), 'code')
        return ()

    def fmap_code(self, table: Sequence[int], m: int, code: int, n: int) -> int:
        return 0

    def unit_code(self, x: int, n: int) -> int:
        return 0

    def mult_code(self, code: int, n: int) -> int:
        return 0
