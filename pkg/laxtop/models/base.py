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
from typing import Tuple

class LaxtopModel:
    __slots__ = ()

    # attributes shown by __repr__
    _repr_fields: Tuple[str, ...] = ()

    def __repr__(self) -> str:
        fields = ' '.join('%s=%s' % (name, _short(getattr(self, name))) for name in self._repr_fields)
        return '<%s %s>' % (self.__class__.__name__, fields) if fields else '<%s>' % self.__class__.__name__


def _short(value: object) -> str:
    size = getattr(value, 'size', None)
    if isinstance(size, int):
        return str(size)
    kind = getattr(value, 'kind', None)
    if isinstance(kind, str):
        return kind
    return str(value)
