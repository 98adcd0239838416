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

# This module exists to avoid circular imports.

from __future__ import annotations
from typing import Any, Mapping, Optional

from laxtop.errors import ParseError
from laxtop.monads import (
    DegenerateMonad,
    IdentityMonad,
    MonadKind,
    MonadSpec,
    MonoidActionMonad,
    MonoidTable,
    PowersetMonad,
    UltrafilterMonad,
)

def monad_factory(kind: str, monoid: Optional[MonoidTable] = None) -> MonadSpec:
    if kind == MonadKind.IDENTITY:
        return IdentityMonad()
    if kind == MonadKind.POWERSET:
        return PowersetMonad()
    if kind == MonadKind.ULTRAFILTER:
        return UltrafilterMonad()
    if kind in (MonadKind.T0, MonadKind.T1):
        return DegenerateMonad(kind)
    if kind == MonadKind.MONOID_ACTION:
        if monoid is None:
            raise ParseError('monoid_action needs a monoid table', field='monad.monoid')
        return MonoidActionMonad(monoid)

    raise ParseError('unknown monad kind {0!r}'.format(kind), field='monad.kind')

def monad_from_descriptor(data: Mapping[str, Any], field: str = 'monad') -> MonadSpec:
    if not isinstance(data, Mapping):
        raise ParseError('expected an object', field=field)

    kind = data.get('kind')
    if not isinstance(kind, str):
        raise ParseError('kind must be a string', field=field + '.kind')

    monoid = None
    if kind == MonadKind.MONOID_ACTION:
        raw = data.get('monoid')
        if not isinstance(raw, Mapping):
            raise ParseError('monoid_action needs a monoid table', field=field + '.monoid')
        try:
            monoid = MonoidTable(raw['size'], raw['unit'], raw['table'])
        except KeyError as exc:
            raise ParseError('missing key {0}'.format(exc), field=field + '.monoid') from None
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc), field=field + '.monoid') from None

    return monad_factory(kind, monoid)
