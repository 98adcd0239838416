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
from typing import Dict

from laxtop.flags.base import BaseFlags, flag

__all__ = (
    'Conditions',
)

class Conditions(BaseFlags):
    """
    The conditions a space satisfies, stored as bit flags.

    Flags that were not computed (e.g. ``completely_regular`` of a space
    that failed the axioms) are tracked by :attr:`known`.
    """
    __slots__ = ('known',)

    def __init__(self, value: int = 0, *, known: int = 0, **flags: bool):
        super().__init__(value, **flags)
        self.known = known | self._value
        for name in flags:
            self.known |= getattr(self.__class__, name)

    @flag
    def reflexive(self):
        """(R): every point is a limit of its unit element."""
        return 1 << 0

    @flag
    def transitive(self):
        """(T): the transitivity rule along the extension holds."""
        return 1 << 1

    @flag
    def compact(self):
        """(K): every element converges."""
        return 1 << 2

    @flag
    def hausdorff(self):
        """(H): every element converges to at most one point."""
        return 1 << 3

    @flag
    def algebraic(self):
        """(A): compact and hausdorff."""
        return 1 << 4

    @flag
    def completely_regular(self):
        """(C): initial along the unit of the algebra reflection."""
        return 1 << 5

    @flag
    def functionally_hausdorff(self):
        """(F): the unit of the algebra reflection is injective."""
        return 1 << 6

    LETTERS: Dict[str, str] = {
        'reflexive': 'R',
        'transitive': 'T',
        'compact': 'K',
        'hausdorff': 'H',
        'algebraic': 'A',
        'completely_regular': 'C',
        'functionally_hausdorff': 'F',
    }

    def is_known(self, name: str) -> bool:
        return bool(self.known & getattr(self.__class__, name))

    def summary(self) -> str:
        """Renders flags as ``R ✓ T ✓ K ✗ ...``; unknown ones are shown as ``?``."""
        parts = []
        for name, value in self:
            if not self.is_known(name):
                mark = '?'
            else:
                mark = '✓' if value else '✗'
            parts.append('{0} {1}'.format(self.LETTERS[name], mark))
        return ' '.join(parts)

    def to_dict(self) -> Dict[str, object]:
        return {self.LETTERS[name]: (value if self.is_known(name) else None) for name, value in self}
