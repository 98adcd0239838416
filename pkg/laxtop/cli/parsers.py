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
from typing import Any, Dict, Mapping
import json

from laxtop.errors import EncodingError, ParseError
from laxtop.finsetcore import FinSetRef
from laxtop.internal.factories import monad_factory, monad_from_descriptor
from laxtop.models import TSpace
from laxtop.monads import MonadKind, MonadSpec
from laxtop.typings import SpaceFilePayload

__all__ = (
    'parse_space_file',
    'space_to_payload',
    'serialize_space',
    'parse_monad_spec',
    'encode_element',
    'encode_nested',
)

_KEYS = ('monad', 'points', 'labels', 'converges')

def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno) from None


def _index(value: Any, n: int, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise EncodingError('point must be an integer, got {0!r}'.format(value), field=field)
    if not 0 <= value < n:
        raise EncodingError('point {0} is out of range for {1} points'.format(value, n), field=field)
    return value


def parse_space_file(text: str) -> TSpace:
    """
    Parses a space file.

    Duplicate pairs are dropped and element encodings are brought to
    canonical form.

    Raises
    ------
    ParseError
        The text is not JSON or does not follow the schema.
    EncodingError
        An element does not describe an element of its carrier.
    """
    data = _load(text)
    if not isinstance(data, Mapping):
        raise ParseError('space file must be a JSON object')

    unknown = sorted(set(data) - set(_KEYS))
    if unknown:
        raise ParseError('unknown key', field=unknown[0])
    for key in ('monad', 'points', 'converges'):
        if key not in data:
            raise ParseError('missing key', field=key)

    monad = monad_from_descriptor(data['monad'])

    n = data['points']
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError('must be a non-negative integer', field='points')

    labels = data.get('labels')
    try:
        points = FinSetRef(n, labels)
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc), field='labels') from None

    converges = data['converges']
    if not isinstance(converges, list):
        raise ParseError('must be an array', field='converges')

    pairs = set()
    for i, entry in enumerate(converges):
        field = 'converges[{0}]'.format(i)
        if not isinstance(entry, list) or len(entry) != 2:
            raise ParseError('must be a [element, point] pair', field=field)
        try:
            t = monad.encode(entry[0], n)
        except EncodingError as exc:
            raise EncodingError(str(exc), field=field + '[0]') from None
        pairs.add((t, _index(entry[1], n, field + '[1]')))

    return TSpace(monad, points, pairs)


def encode_element(monad: MonadSpec, code: int, n: int) -> Any:
    """The JSON form of an element of ``T n``: tuples become arrays."""
    return _jsonable(monad.decode(code, n))


def encode_nested(monad: MonadSpec, code: int, n: int) -> Any:
    """The JSON form of an element of ``T T n``, with inner elements spelled out."""
    outer = monad.decode(code, monad.size(n))
    kind = monad.kind
    if kind == MonadKind.POWERSET:
        return [encode_element(monad, inner, n) for inner in outer]
    if kind == MonadKind.MONOID_ACTION:
        m, inner = outer
        return [m, encode_element(monad, inner, n)]
    if kind in (MonadKind.IDENTITY, MonadKind.ULTRAFILTER):
        return encode_element(monad, outer, n)
    return _jsonable(outer)


def _jsonable(payload: Any) -> Any:
    if isinstance(payload, tuple):
        return [_jsonable(item) for item in payload]
    return payload


def space_to_payload(s: TSpace) -> SpaceFilePayload:
    n = s.points.size
    payload: Dict[str, Any] = {'monad': s.monad.descriptor(), 'points': n}
    if s.points.labels is not None:
        payload['labels'] = list(s.points.labels)
    payload['converges'] = [[encode_element(s.monad, t, n), y] for t, y in s.converges.pairs]
    return payload  # type: ignore[return-value]


def serialize_space(s: TSpace) -> str:
    """The canonical space file of ``s``, on one line."""
    return json.dumps(space_to_payload(s), ensure_ascii=False)


def parse_monad_spec(text: str) -> MonadSpec:
    """
    Reads a monad from a kind name, an inline JSON descriptor or the path of
    a JSON file holding a descriptor or a whole space file.

    Raises
    ------
    ParseError
        Nothing readable was given.
    """
    stripped = text.strip()
    if stripped in MonadKind.ALL:
        return monad_factory(stripped)

    if stripped.startswith('{'):
        data = _load(stripped)
    else:
        try:
            with open(stripped, encoding='utf-8') as fp:
                data = _load(fp.read())
        except OSError as exc:
            raise ParseError('cannot read monad from {0!r}: {1}'.format(stripped, exc.strerror)) from None

    if isinstance(data, Mapping) and 'monad' in data:
        return monad_from_descriptor(data['monad'])
    return monad_from_descriptor(data)
