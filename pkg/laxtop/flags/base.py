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
from typing import Any, Callable, Iterator, Optional, Set, Tuple

__all__ = (
    'flag',
    'BaseFlags',
)

class flag:
    def __init__(self, func: Callable[[Any], int]):
        self.func = func
        self.value = func(None)

        self.__doc__ = func.__doc__
        self.__name__ = func.__name__

    def __get__(self, instance: Optional[BaseFlags], *_: Any):
        if instance is None:
            return self.value

        return (self.value & instance.value) == self.value

    def __set__(self, instance: BaseFlags, val: bool) -> None:
        if val:
            instance._value |= self.value
        else:
            instance._value &= ~self.value

    def __repr__(self):
        return f'<flag value={self.value}>'


class BaseFlags:
    VALID_FLAGS: Set[str]

    __slots__ = ('_value',)

    def __init_subclass__(cls, **kwargs: Any) -> None:
        super().__init_subclass__(**kwargs)
        cls.VALID_FLAGS = {name for name, attr in vars(cls).items() if isinstance(attr, flag)}

    def __init__(self, value: int = 0, **flags: bool):
        invalid = set(flags.keys()) - self.VALID_FLAGS
        if invalid:
            raise TypeError('Invalid keyword arguments {0} for {1}()'.format(invalid, self.__class__.__name__))

        self._value = value
        for k, v in flags.items():
            setattr(self, k, v)

    @property
    def value(self) -> int:
        return self._value

    def __iter__(self) -> Iterator[Tuple[str, bool]]:
        for name, attr in vars(self.__class__).items():
            if isinstance(attr, flag):
                yield name, getattr(self, name)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, self.__class__):
            return other.value == self.value

        return False

    def __hash__(self) -> int:
        return hash((self.__class__, self._value))

    # subset ordering of the enabled flags
    def __le__(self, other: Any) -> bool:
        if isinstance(other, self.__class__):
            return self.value & ~other.value == 0

        return NotImplemented

    def __ge__(self, other: Any) -> bool:
        if isinstance(other, self.__class__):
            return other.value & ~self.value == 0

        return NotImplemented

    def __repr__(self):
        return '<%s value=%s>' % (self.__class__.__name__, self._value)
