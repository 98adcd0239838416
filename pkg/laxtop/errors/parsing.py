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
from typing import Optional

from laxtop.errors.core import LaxtopError

__all__ = (
    'ParseError',
    'EncodingError',
)

class ParseError(LaxtopError):
    """
    Raised when a space file is not valid JSON or violates the schema.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    line: Optional[:class:`int`]
        The line of the JSON syntax error, if any.
    field: Optional[:class:`str`]
        Path of the offending field, e.g. ``converges[2][0]``.
    """
    DEFAULT_ERROR_MESSAGE = 'Space file could not be parsed.'

    def __init__(self, message: Optional[str] = None, *, line: Optional[int] = None, field: Optional[str] = None) -> None:
        self.line = line
        self.field = field

        if message and field:
            message = '{0}: {1}'.format(field, message)
        elif message and line is not None:
            message = 'line {0}: {1}'.format(line, message)

        super().__init__(message)

    def to_dict(self) -> dict:
        payload = super().to_dict()
        payload.update(line=self.line, field=self.field)
        return payload


class EncodingError(LaxtopError):
    """
    Raised when an element encoding does not describe an element of the
    carrier it is given for.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    field: Optional[:class:`str`]
        Path of the offending field.
    """
    DEFAULT_ERROR_MESSAGE = 'Invalid element encoding.'

    def __init__(self, message: Optional[str] = None, *, field: Optional[str] = None) -> None:
        self.field = field
        if message and field:
            message = '{0}: {1}'.format(field, message)
        super().__init__(message)

    def to_dict(self) -> dict:
        payload = super().to_dict()
        payload['field'] = self.field
        return payload
