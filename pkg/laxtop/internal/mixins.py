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
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from laxtop.finsetcore import FinMap, FinSetRef
    from laxtop.monads import MonadSpec

class MonadBoundMixin:
    monad: MonadSpec

    def _carrier_size(self) -> int:
        raise NotImplementedError

    @property
    def tx(self) -> FinSetRef:
        """The coded carrier ``T X``."""
        return self.monad.carrier(self._carrier_size())

    @property
    def unit_map(self) -> FinMap:
        """The unit ``X -> T X``."""
        return self.monad.unit_component(self._carrier_size())

    def fmap(self, f: FinMap) -> FinMap:
        return self.monad.apply_functor(f)
