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
from typing import Any, Iterator, Optional, Tuple

from laxtop.errors import WrongMonad
from laxtop.finsetcore import FinMap, FinSetRef, Rel
from laxtop.internal.helpers import bits, iter_bits
from laxtop.models import EMAlgebra, ReflectionResult, TSpace
from laxtop.monads import IdentityMonad, MonadKind, PowersetMonad
from laxtop.reflect.beta import beta_reflection
from laxtop.utils import iter_spaces

__all__ = (
    'induced_join',
    'semilattice_violation',
    'lattice_order',
    'joins_of_singletons',
    'specialization_order',
    'sup_convergence',
    'support_order',
    'find_support_order_counterexamples',
    'iter_sup_lattices',
)

Join = Tuple[Tuple[int, ...], ...]

def _require_powerset(kind: str) -> None:
    if kind != MonadKind.POWERSET:
        raise WrongMonad('expected the powerset monad, got {0}'.format(kind))


def induced_join(a: EMAlgebra) -> Join:
    """
    The binary join of a powerset algebra, ``x ∨ y = c({x, y})``, as a
    table.

    Raises
    ------
    WrongMonad
        ``a`` is not a powerset algebra.
    """
    _require_powerset(a.monad.kind)
    c = a.structure.table
    k = a.carrier.size
    return tuple(tuple(c[(1 << x) | (1 << y)] for y in range(k)) for x in range(k))


def semilattice_violation(join: Join) -> Optional[Tuple[str, Any]]:
    """
    Checks idempotence, commutativity and associativity of a join table.
    Returns ``(property, witness)`` on failure.
    """
    k = len(join)
    for x in range(k):
        if join[x][x] != x:
            return ('idempotent', x)
        for y in range(k):
            if join[x][y] != join[y][x]:
                return ('commutative', (x, y))
            for z in range(k):
                if join[join[x][y]][z] != join[x][join[y][z]]:
                    return ('associative', (x, y, z))
    return None


def lattice_order(a: EMAlgebra) -> Rel:
    """``x ≤ y`` iff ``x ∨ y = y``."""
    join = induced_join(a)
    k = len(join)
    return Rel(k, k, ((x, y) for x in range(k) for y in range(k) if join[x][y] == y))


def joins_of_singletons(beta: ReflectionResult) -> bool:
    """
    Whether the quotient map of a powerset algebra reflection sends every
    subset ``A`` to the join of the images of its points.
    """
    _require_powerset(beta.source.monad.kind)
    q = beta.congruence.q.table
    join = induced_join(beta.algebra)
    bottom = q[0]

    for a in range(len(q)):
        value = bottom
        for x in iter_bits(a):
            value = join[value][q[1 << x]]
        if value != q[a]:
            return False
    return True


def specialization_order(s: TSpace, beta: Optional[ReflectionResult] = None) -> Rel:
    """
    The preorder ``x ≤ y`` iff ``β(x) ≤ β(y)`` in the algebra reflection of
    a powerset space.
    """
    _require_powerset(s.monad.kind)
    beta = beta or beta_reflection(s)
    unit = beta.unit.f.table
    order = lattice_order(beta.algebra)
    n = s.points.size
    return Rel(n, n, ((x, y) for x in range(n) for y in range(n) if (unit[x], unit[y]) in order))


def sup_convergence(order: Rel) -> TSpace:
    """
    The powerset space of a preorder in which ``A`` converges to every
    least upper bound of ``A``.

    Spaces satisfying (C) are contained in the sup convergence of their
    specialization order, but need not coincide with it: the empty set
    converges to a least point only when it converges at all.
    """
    n = order.dom.size
    rows = order.rows
    below = [0] * n
    for x in range(n):
        for y in iter_bits(rows[x]):
            below[y] |= 1 << x

    pairs = []
    for a in range(1 << n):
        uppers = [u for u in range(n) if a & ~below[u] == 0]
        for y in uppers:
            if all(rows[y] >> u & 1 for u in uppers):
                pairs.append((a, y))
    return TSpace(PowersetMonad(), FinSetRef(n), pairs)


def support_order(s: TSpace) -> Rel:
    """``x ≤ y`` iff ``{x, y}`` converges to ``y``."""
    _require_powerset(s.monad.kind)
    n = s.points.size
    c = s.converges
    return Rel(n, n, ((x, y) for x in range(n) for y in range(n) if ((1 << x) | (1 << y), y) in c))


def _intransitive(order: Rel) -> Optional[Tuple[int, int, int]]:
    rows = order.rows
    for x, row in enumerate(rows):
        for y in bits(row):
            missing = rows[y] & ~row
            if missing:
                return (x, y, (missing & -missing).bit_length() - 1)
    return None


def find_support_order_counterexamples(n: int = 3) -> Iterator[Tuple[TSpace, Tuple[int, int, int]]]:
    """
    Yields Hausdorff powerset spaces on ``n`` points whose
    :func:`support_order` is not transitive, with ``(x, y, z)`` such that
    ``x ≤ y ≤ z`` but not ``x ≤ z``.
    """
    for space in iter_spaces(PowersetMonad(), n, hausdorff_only=True):
        witness = _intransitive(support_order(space))
        if witness is not None:
            yield space, witness


def _join_table(rows: Tuple[int, ...], k: int) -> Optional[Tuple[int, ...]]:
    below = [0] * k
    for x in range(k):
        for y in iter_bits(rows[x]):
            below[y] |= 1 << x

    table = []
    for a in range(1 << k):
        uppers = [u for u in range(k) if a & ~below[u] == 0]
        least = [y for y in uppers if all(rows[y] >> u & 1 for u in uppers)]
        if not least:
            return None
        table.append(least[0])
    return tuple(table)


def iter_sup_lattices(max_points: int) -> Iterator[EMAlgebra]:
    """
    Yields every powerset algebra with at most ``max_points`` points, built
    from the partial orders in which every subset has a join.

    This reaches carriers that :func:`~laxtop.utils.iter_algebras` cannot
    enumerate within the budget.
    """
    monad = PowersetMonad()
    for k in range(1, max_points + 1):
        for order in iter_spaces(IdentityMonad(), k):
            rows = tuple(order.rows)
            if any(rows[x] >> y & 1 and rows[y] >> x & 1 for x in range(k) for y in range(x + 1, k)):
                continue
            table = _join_table(rows, k)
            if table is not None:
                yield EMAlgebra(monad, k, FinMap(1 << k, k, table), check=False)
