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
from typing import List

from laxtop.internal.helpers import bits
from laxtop.models import TSpace
from laxtop.monads import MonadKind

__all__ = (
    'emit_dot',
)

def _gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('\\', '\\\\').replace('"', r'\"'))


def emit_dot(s: TSpace) -> str:
    """
    Renders a space as a graphviz digraph.

    Points are circles. Identity and ultrafilter spaces get one edge per
    convergence pair, monoid action spaces label the edge with the monoid
    element. Every other element that converges is drawn as a square node
    with dashed edges from its points and an edge to each limit.

    The output only depends on the space, so equal spaces render to equal
    text.
    """
    monad = s.monad
    n = s.points.size
    lines: List[str] = ['digraph {']
    append = lines.append

    for x in range(n):
        append('  p{0} [label={1}, shape="circle"];'.format(x, _gvquote(s.points.label(x))))

    if monad.kind in (MonadKind.IDENTITY, MonadKind.ULTRAFILTER):
        for t, y in s.converges.pairs:
            append('  p{0} -> p{1};'.format(monad.decode(t, n), y))
    elif monad.kind == MonadKind.MONOID_ACTION:
        for t, y in s.converges.pairs:
            m, x = monad.decode(t, n)
            append('  p{0} -> p{1} [label={2}];'.format(x, y, _gvquote(str(m))))
    else:
        rows = s.rows
        converging = [t for t, row in enumerate(rows) if row]
        for t in converging:
            if monad.kind == MonadKind.POWERSET:
                label = '{' + ','.join(s.points.label(x) for x in bits(t)) + '}'
            else:
                label = '[]'
            append('  t{0} [label={1}, shape="square"];'.format(t, _gvquote(label)))
        for t in converging:
            if monad.kind == MonadKind.POWERSET:
                for x in bits(t):
                    append('  p{0} -> t{1} [arrowhead="none", style="dashed"];'.format(x, t))
            for y in bits(rows[t]):
                append('  t{0} -> p{1};'.format(t, y))

    append('}')
    return '\n'.join(lines) + '\n'
