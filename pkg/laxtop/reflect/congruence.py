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
from typing import Iterable, Iterator, Union

from laxtop.errors import InternalInvariantViolated
from laxtop.finsetcore import FinMap, Rel, quotient_by_partition
from laxtop.internal.disjoint import DisjointSet
from laxtop.internal.logger import logger
from laxtop.models import CongruenceResult, EMAlgebra
from laxtop.monads import MonadKind, MonadSpec
from laxtop.typings import Pair
from laxtop.utils import iter_partitions

__all__ = (
    'free_algebra',
    'congruence_closure',
    'is_congruence',
    'quotient_algebra',
    'iter_congruences',
)

def free_algebra(monad: MonadSpec, n: int) -> EMAlgebra:
    """The free algebra ``(T X, μ_X)`` on ``n`` points."""
    return EMAlgebra.free(monad, n)


def _close_generic(a: EMAlgebra, forest: DisjointSet) -> bool:
    monad = a.monad
    k = a.carrier.size
    structure = a.structure.table

    related = [(i, j) for i in range(k) for j in range(k) if forest.same(i, j)]
    first = [i for i, _ in related]
    second = [j for _, j in related]
    size = len(related)

    changed = False
    for w in monad.elements(size):
        left = structure[monad.fmap_code(first, k, w, size)]
        right = structure[monad.fmap_code(second, k, w, size)]
        changed |= forest.union(left, right)
    return changed


def _close_binary_joins(a: EMAlgebra, forest: DisjointSet) -> bool:
    # x ∼ y implies x ∨ z ∼ y ∨ z; finite joins are iterated binary ones
    structure = a.structure.table
    k = a.carrier.size

    changed = False
    for x in range(k):
        for y in range(x + 1, k):
            if not forest.same(x, y):
                continue
            for z in range(k):
                joined_x = structure[(1 << x) | (1 << z)]
                joined_y = structure[(1 << y) | (1 << z)]
                changed |= forest.union(joined_x, joined_y)
    return changed


def congruence_closure(a: EMAlgebra, generators: Union[Rel, Iterable[Pair]] = ()) -> CongruenceResult:
    """
    The least congruence of ``a`` containing ``generators``, with its
    quotient.

    An equivalence ``∼`` is a congruence when, for every ``w ∈ T(∼)``, the
    structure map identifies the images of ``w`` under the two projections.
    Powerset algebras are closed under binary joins instead, which is
    equivalent and polynomial.

    Raises
    ------
    BudgetExceeded
        ``T(∼)`` cannot be enumerated.
    """
    k = a.carrier.size
    forest = DisjointSet(k)
    for x, y in generators:
        if not (0 <= x < k and 0 <= y < k):
            raise ValueError('generator {0} is outside the carrier.'.format((x, y)))
        forest.union(x, y)

    close = _close_binary_joins if a.monad.kind == MonadKind.POWERSET else _close_generic
    rounds = 0
    while close(a, forest):
        rounds += 1

    classes = forest.blocks()
    logger.debug('congruence closure of %r: %s classes after %s rounds', a, len(classes), rounds)
    return quotient_algebra(a, classes)


def is_congruence(a: EMAlgebra, partition: Iterable[Iterable[int]]) -> bool:
    """
    Whether a partition of the carrier is a congruence: the class of
    ``c(t)`` depends only on ``T q(t)``.
    """
    q, _ = quotient_by_partition(a.carrier, partition)
    tq = a.monad.apply_functor(q).table
    structure = a.structure.table

    seen = {}
    for t, image in enumerate(tq):
        value = q.table[structure[t]]
        if seen.setdefault(image, value) != value:
            return False
    return True


def quotient_algebra(a: EMAlgebra, partition: Iterable[Iterable[int]]) -> CongruenceResult:
    """
    The quotient of ``a`` by a congruence. The quotient structure is read
    off the least member of every class.

    Raises
    ------
    InternalInvariantViolated
        The partition is not a congruence, so the structure depends on the
        chosen members.
    """
    monad = a.monad
    q, classes = quotient_by_partition(a.carrier, partition)
    section = FinMap(q.cod, a.carrier, (block[0] for block in classes))

    tsection = monad.apply_functor(section).table
    structure = a.structure.table
    table = [q.table[structure[t]] for t in tsection]

    tq = monad.apply_functor(q).table
    for t, image in enumerate(tq):
        if table[image] != q.table[structure[t]]:
            raise InternalInvariantViolated(
                'quotient structure depends on representatives at element {0}'.format(t),
                instance={'algebra': a, 'classes': classes},
            )

    quotient = EMAlgebra(monad, q.cod, FinMap(monad.carrier(q.cod.size), q.cod, table), check=False)
    violation = quotient.law_violation()
    if violation is not None:
        raise InternalInvariantViolated(
            'quotient fails the {0} law at {1}'.format(*violation),
            instance={'algebra': a, 'classes': classes},
        )
    return CongruenceResult(a, quotient, q, classes)


def iter_congruences(a: EMAlgebra) -> Iterator[CongruenceResult]:
    """Yields every congruence of a finite algebra with its quotient."""
    for partition in iter_partitions(a.carrier.size):
        if is_congruence(a, partition):
            yield quotient_algebra(a, partition)
