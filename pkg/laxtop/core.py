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
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any, Iterator

from laxtop.internal.logger import logger

__all__ = (
    'Settings',
    'get_settings',
    'configure',
    'using',
)

class Settings:
    """
    Runtime settings of the library.

    This class takes no required parameters, all parameters are optional
    and keyword-only. Settings are immutable; use :func:`configure` or
    :func:`using` to change the ones in effect.

    Parameters
    ----------
    budget: :class:`int`
        The largest number of elements any single enumeration may visit. This
        covers T- and TT-carriers, generic enumerations of ``T(C)`` and the
        candidate counts of exhaustive enumerators. Defaults to ``2**20``.
    verify_bound: :class:`int`
        Default largest carrier used when enumerating codomains for
        :func:`verify_reflection`. Defaults to ``3``.
    law_map_limit: :class:`int`
        When there are more maps ``n -> m`` than this, law checks fall back to
        a fixed generator set of maps. Defaults to ``256``.
    """
    __slots__ = ('budget', 'verify_bound', 'law_map_limit')

    def __init__(self, **params: Any) -> None:
        invalid = set(params) - set(self.__slots__)
        if invalid:
            raise TypeError('Invalid keyword arguments {0} for Settings()'.format(invalid))

        self.budget = self._positive(params, 'budget', 2 ** 20)
        self.verify_bound = self._positive(params, 'verify_bound', 3)
        self.law_map_limit = self._positive(params, 'law_map_limit', 256)

    @staticmethod
    def _positive(params: dict, key: str, default: int) -> int:
        value = params.get(key, default)
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError('{0} must be an int, not {1.__class__.__name__}'.format(key, value))
        if value <= 0:
            raise ValueError('{0} must be positive.'.format(key))
        return value

    def replace(self, **params: Any) -> Settings:
        current = {key: getattr(self, key) for key in self.__slots__}
        current.update(params)
        return Settings(**current)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Settings):
            return NotImplemented
        return all(getattr(self, key) == getattr(other, key) for key in self.__slots__)

    def __repr__(self):
        return '<Settings budget=%s verify_bound=%s law_map_limit=%s>' % (self.budget, self.verify_bound, self.law_map_limit)


_current: ContextVar[Settings] = ContextVar('laxtop_settings', default=Settings())

def get_settings() -> Settings:
    """Returns the settings in effect for the current context."""
    return _current.get()

def configure(**params: Any) -> Settings:
    """
    Replaces the given settings for the current context and returns the new
    settings.
    """
    settings = _current.get().replace(**params)
    _current.set(settings)
    logger.debug('settings changed to %r', settings)
    return settings

@contextmanager
def using(**params: Any) -> Iterator[Settings]:
    """
    A context manager that overrides settings inside the ``with`` block only.

    Example::

        with laxtop.using(budget=4096):
            laxtop.barr_extend(space)
    """
    token = _current.set(_current.get().replace(**params))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
