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
from typing import Iterable, Tuple

from laxtop.finsetcore.objects import FinMap, FinSetRef, Rel
from laxtop.internal.disjoint import DisjointSet
from laxtop.typings import Pair, Partition

__all__ = (
    'compose',
    'image_factorize',
    'product_cone',
    'coproduct_cone',
    'coequalizer_quotient',
    'quotient_by_partition',
    'partition_of',
    'rel_compose',
    'equalizer',
    'kernel_pair',
)

def compose(*maps: FinMap) -> FinMap:
    """
    Composes maps right to left, ``compose(h, g, f) = h ∘ g ∘ f``.
    """
    if not maps:
        raise TypeError('compose() needs at least one map.')
    result = maps[-1]
    for f in reversed(maps[:-1]):
        result = f.compose(result)
    return result

def image_factorize(f: FinMap) -> Tuple[FinMap, FinMap]:
    """
    Factors ``f`` as a surjection followed by an injection.

    The image carrier lists image elements in order of first occurrence in
    the domain and is labeled by the first preimage of each element.

    Returns
    -------
    Tuple[:class:`FinMap`, :class:`FinMap`]
        The ``(epi, mono)`` pair with ``mono ∘ epi == f``.
    """
    position = {}
    representatives = []
    table = []
    for i, v in enumerate(f.table):
        if v not in position:
            position[v] = len(representatives)
            representatives.append(i)
        table.append(position[v])

    image = FinSetRef(len(representatives), [f.dom.label(i) for i in representatives])
    epi = FinMap(f.dom, image, table)
    mono = FinMap(image, f.cod, (f.table[i] for i in representatives))
    return epi, mono

def product_cone(a: FinSetRef, b: FinSetRef) -> Tuple[FinSetRef, FinMap, FinMap]:
    """
    The product of two finite sets; ``(i, j)`` is encoded as ``i * b.size + j``.
    """
    labels = None
    if a.labels is not None or b.labels is not None:
        labels = ['({0},{1})'.format(a.label(i), b.label(j)) for i in range(a.size) for j in range(b.size)]

    carrier = FinSetRef(a.size * b.size, labels)
    proj1 = FinMap(carrier, a, (k // b.size for k in range(carrier.size)))
    proj2 = FinMap(carrier, b, (k % b.size for k in range(carrier.size)))
    return carrier, proj1, proj2

def coproduct_cone(a: FinSetRef, b: FinSetRef) -> Tuple[FinSetRef, FinMap, FinMap]:
    """
    The disjoint union of two finite sets; ``a`` comes first, then ``b``.
    """
    labels = None
    if a.labels is not None or b.labels is not None:
        labels = ['{0}.1'.format(a.label(i)) for i in range(a.size)] + ['{0}.2'.format(b.label(j)) for j in range(b.size)]

    carrier = FinSetRef(a.size + b.size, labels)
    inj1 = FinMap(a, carrier, range(a.size))
    inj2 = FinMap(b, carrier, range(a.size, a.size + b.size))
    return carrier, inj1, inj2

def coequalizer_quotient(r: Rel) -> Tuple[FinMap, Partition]:
    """
    Quotients a set by the least equivalence relation containing ``r``.

    Returns
    -------
    Tuple[:class:`FinMap`, Tuple[Tuple[:class:`int`, ...], ...]]
        The projection and the classes, listed in order of least member.
    """
    if r.dom.size != r.cod.size:
        raise ValueError('relation must be on a single set.')

    forest = DisjointSet(r.dom.size)
    for x, y in r.pairs:
        forest.union(x, y)

    return quotient_by_partition(r.dom, forest.blocks())

def quotient_by_partition(x: FinSetRef, classes: Iterable[Iterable[int]]) -> Tuple[FinMap, Partition]:
    """
    The projection onto a partition. Classes are sorted and reordered by
    their least member; each class is labeled by its least member.
    """
    blocks = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0])
    table = [-1] * x.size
    for k, block in enumerate(blocks):
        for e in block:
            table[e] = k
    if -1 in table:
        raise ValueError('classes do not cover the set.')

    quotient = FinSetRef(len(blocks), [x.label(block[0]) for block in blocks])
    return FinMap(x, quotient, table), tuple(blocks)

def partition_of(f: FinMap) -> Partition:
    """The kernel of ``f`` as a partition of its domain."""
    blocks: dict = {}
    for i, v in enumerate(f.table):
        blocks.setdefault(v, []).append(i)
    return tuple(sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0]))

def rel_compose(r: Rel, s: Rel) -> Rel:
    """
    Relational composite: ``(x, z)`` is related iff ``x r y`` and ``y s z``
    for some ``y``.
    """
    if r.cod.size != s.dom.size:
        raise ValueError('relations are not composable.')

    srows = s.rows
    rows = []
    for row in r.rows:
        out = 0
        y = 0
        while row:
            if row & 1:
                out |= srows[y]
            row >>= 1
            y += 1
        rows.append(out)
    return Rel.from_rows(r.dom, s.cod, rows)

def equalizer(f: FinMap, g: FinMap) -> Tuple[FinSetRef, FinMap]:
    """
    The subset where two parallel maps agree, with its inclusion.
    """
    if (f.dom.size, f.cod.size) != (g.dom.size, g.cod.size):
        raise ValueError('maps are not parallel.')

    members = [i for i in range(f.dom.size) if f.table[i] == g.table[i]]
    carrier = FinSetRef(len(members), [f.dom.label(i) for i in members])
    return carrier, FinMap(carrier, f.dom, members)

def kernel_pair(f: FinMap) -> Tuple[FinSetRef, FinMap, FinMap]:
    """
    The pullback of ``f`` along itself: all ``(i, j)`` with ``f(i) == f(j)``,
    in lexicographic order.
    """
    pairs = [(i, j) for i in range(f.dom.size) for j in range(f.dom.size) if f.table[i] == f.table[j]]
    carrier = FinSetRef(len(pairs))
    return carrier, FinMap(carrier, f.dom, (i for i, _ in pairs)), FinMap(carrier, f.dom, (j for _, j in pairs))
