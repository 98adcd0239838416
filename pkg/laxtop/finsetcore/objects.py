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
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from bisect import bisect_left

from laxtop.internal.helpers import bits, iter_bits
from laxtop.typings import Pair

__all__ = (
    'FinSetRef',
    'FinMap',
    'Rel',
)

class FinSetRef:
    """
    A finite set, whose elements are the indices ``0 .. size - 1``.

    Labels are for display only and never take part in computations.

    Parameters
    ----------
    size: :class:`int`
        The number of elements.
    labels: Optional[Sequence[:class:`str`]]
        Pairwise distinct display strings, one per element.
    """
    __slots__ = ('size', 'labels')

    def __init__(self, size: int, labels: Optional[Sequence[str]] = None) -> None:
        if isinstance(size, bool) or not isinstance(size, int):
            raise TypeError('size must be an int.')
        if size < 0:
            raise ValueError('size cannot be negative.')

        if labels is not None:
            labels = tuple(str(label) for label in labels)
            if len(labels) != size:
                raise ValueError('expected {0} labels, got {1}'.format(size, len(labels)))
            if len(set(labels)) != size:
                raise ValueError('labels must be pairwise distinct.')

        self.size = size
        self.labels: Optional[Tuple[str, ...]] = labels

    def label(self, i: int) -> str:
        if self.labels is None:
            return str(i)
        return self.labels[i]

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def __contains__(self, i: Any) -> bool:
        return isinstance(i, int) and 0 <= i < self.size

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FinSetRef):
            return NotImplemented
        return self.size == other.size and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.size, self.labels))

    def __repr__(self):
        return '<FinSetRef size=%s>' % self.size


def _as_set(x: Any) -> FinSetRef:
    if isinstance(x, FinSetRef):
        return x
    return FinSetRef(x)


class FinMap:
    """
    A map between finite sets, stored as the table of its values.

    Two maps are equal when their domain and codomain sizes and tables
    agree; labels are ignored.

    Attributes
    ----------
    dom: :class:`FinSetRef`
        The domain.
    cod: :class:`FinSetRef`
        The codomain.
    table: Tuple[:class:`int`, ...]
        ``table[i]`` is the image of ``i``.
    """
    __slots__ = ('dom', 'cod', 'table')

    def __init__(self, dom: Any, cod: Any, table: Iterable[int]) -> None:
        self.dom = _as_set(dom)
        self.cod = _as_set(cod)
        self.table = tuple(table)

        if len(self.table) != self.dom.size:
            raise ValueError('table has {0} entries, domain has {1} elements'.format(len(self.table), self.dom.size))
        for i, v in enumerate(self.table):
            if not 0 <= v < self.cod.size:
                raise ValueError('entry {0} of table is {1}, out of range for a codomain of size {2}'.format(i, v, self.cod.size))

    @classmethod
    def identity(cls, x: Any) -> FinMap:
        x = _as_set(x)
        return cls(x, x, range(x.size))

    @classmethod
    def constant(cls, dom: Any, cod: Any, value: int) -> FinMap:
        dom = _as_set(dom)
        return cls(dom, cod, [value] * dom.size)

    @classmethod
    def from_function(cls, dom: Any, cod: Any, func: Callable[[int], int]) -> FinMap:
        dom = _as_set(dom)
        return cls(dom, cod, (func(i) for i in range(dom.size)))

    def __call__(self, i: int) -> int:
        return self.table[i]

    def compose(self, other: FinMap) -> FinMap:
        """Returns ``self ∘ other``."""
        if other.cod.size != self.dom.size:
            raise ValueError('cannot compose, codomain of size {0} does not match domain of size {1}'.format(other.cod.size, self.dom.size))
        return FinMap(other.dom, self.cod, (self.table[v] for v in other.table))

    def then(self, other: FinMap) -> FinMap:
        """Returns ``other ∘ self``."""
        return other.compose(self)

    def image(self) -> Tuple[int, ...]:
        """Image elements in order of first occurrence."""
        seen = {}
        for v in self.table:
            seen.setdefault(v, None)
        return tuple(seen)

    def preimage(self, j: int) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.table) if v == j)

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def inverse(self) -> FinMap:
        if not self.is_bijective():
            raise ValueError('map is not a bijection.')
        table = [0] * self.cod.size
        for i, v in enumerate(self.table):
            table[v] = i
        return FinMap(self.cod, self.dom, table)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FinMap):
            return NotImplemented
        return (self.dom.size, self.cod.size, self.table) == (other.dom.size, other.cod.size, other.table)

    def __hash__(self) -> int:
        return hash((self.dom.size, self.cod.size, self.table))

    def __repr__(self):
        return '<FinMap dom=%s cod=%s table=%s>' % (self.dom.size, self.cod.size, list(self.table))


class Rel:
    """
    A relation between two finite sets.

    Pairs are stored deduplicated and in lexicographic order. A row-wise
    bitmatrix (one :class:`int` per domain element) is built on first use.

    Attributes
    ----------
    dom: :class:`FinSetRef`
        The domain.
    cod: :class:`FinSetRef`
        The codomain.
    pairs: Tuple[Tuple[:class:`int`, :class:`int`], ...]
        The pairs of the relation.
    """
    __slots__ = ('dom', 'cod', 'pairs', '_set', '_rows')

    def __init__(self, dom: Any, cod: Any, pairs: Iterable[Pair] = ()) -> None:
        self.dom = _as_set(dom)
        self.cod = _as_set(cod)

        unique = set()
        for pair in pairs:
            x, y = pair
            if not (0 <= x < self.dom.size and 0 <= y < self.cod.size):
                raise ValueError('pair {0} is out of range for a {1}x{2} relation'.format((x, y), self.dom.size, self.cod.size))
            unique.add((x, y))

        self.pairs: Tuple[Pair, ...] = tuple(sorted(unique))
        self._set = frozenset(unique)
        self._rows: Optional[List[int]] = None

    @classmethod
    def from_rows(cls, dom: Any, cod: Any, rows: Sequence[int]) -> Rel:
        return cls(dom, cod, ((x, y) for x, row in enumerate(rows) for y in iter_bits(row)))

    @classmethod
    def diagonal(cls, x: Any) -> Rel:
        x = _as_set(x)
        return cls(x, x, ((i, i) for i in range(x.size)))

    @classmethod
    def full(cls, dom: Any, cod: Any) -> Rel:
        dom, cod = _as_set(dom), _as_set(cod)
        return cls(dom, cod, ((i, j) for i in range(dom.size) for j in range(cod.size)))

    @classmethod
    def graph(cls, f: FinMap) -> Rel:
        return cls(f.dom, f.cod, enumerate(f.table))

    @property
    def rows(self) -> List[int]:
        """Targets of each domain element as a bitmask."""
        if self._rows is None:
            rows = [0] * self.dom.size
            for x, y in self.pairs:
                rows[x] |= 1 << y
            self._rows = rows
        return self._rows

    def targets(self, x: int) -> Tuple[int, ...]:
        return bits(self.rows[x])

    def converse(self) -> Rel:
        return Rel(self.cod, self.dom, ((y, x) for x, y in self.pairs))

    def union(self, other: Rel) -> Rel:
        self._check_shape(other)
        return Rel(self.dom, self.cod, self._set | other._set)

    def intersection(self, other: Rel) -> Rel:
        self._check_shape(other)
        return Rel(self.dom, self.cod, self._set & other._set)

    def difference(self, other: Rel) -> Rel:
        self._check_shape(other)
        return Rel(self.dom, self.cod, self._set - other._set)

    def domain_projection(self) -> FinMap:
        """``d``: the pair carrier (pairs in stored order) onto the domain."""
        return FinMap(len(self.pairs), self.dom, (x for x, _ in self.pairs))

    def codomain_projection(self) -> FinMap:
        """``c``: the pair carrier onto the codomain."""
        return FinMap(len(self.pairs), self.cod, (y for _, y in self.pairs))

    def index(self, pair: Pair) -> int:
        """Position of ``pair`` on the pair carrier."""
        i = bisect_left(self.pairs, tuple(pair))
        if i == len(self.pairs) or self.pairs[i] != tuple(pair):
            raise KeyError(pair)
        return i

    def _check_shape(self, other: Rel) -> None:
        if (self.dom.size, self.cod.size) != (other.dom.size, other.cod.size):
            raise ValueError('relations have different shapes.')

    def __contains__(self, pair: Any) -> bool:
        return tuple(pair) in self._set

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def __le__(self, other: Rel) -> bool:
        return self._set <= other._set

    def __lt__(self, other: Rel) -> bool:
        return self._set < other._set

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Rel):
            return NotImplemented
        return (self.dom.size, self.cod.size, self.pairs) == (other.dom.size, other.cod.size, other.pairs)

    def __hash__(self) -> int:
        return hash((self.dom.size, self.cod.size, self.pairs))

    def __repr__(self):
        return '<Rel dom=%s cod=%s pairs=%s>' % (self.dom.size, self.cod.size, list(self.pairs))

