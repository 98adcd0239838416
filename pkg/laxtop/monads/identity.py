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
from typing import Any, Sequence

from laxtop.monads.base import MonadKind, MonadSpec, _check_index

__all__ = (
    'IdentityMonad',
)

class IdentityMonad(MonadSpec):
    """
    The identity monad. Its spaces are the preordered sets.
    """
    kind = MonadKind.IDENTITY

    __slots__ = ()

    def size(self, n: int) -> int:
        return n

    def encode(self, payload: Any, n: int) -> int:
        return _check_index(payload, n, 'point')

    def decode(self, code: int, n: int) -> int:
        return _check_index(code, n, 'code')

    def fmap_code(self, table: Sequence[int], m: int, code: int, n: int) -> int:
        return table[code]

    def unit_code(self, x: int, n: int) -> int:
        return x

    def mult_code(self, code: int, n: int) -> int:
        return code
