"""
laxtop.utils
~~~~~~~~~~~~

Enumerators of small structures, used by the exhaustive checks.
"""
from __future__ import annotations
from random import Random
from typing import Iterator, List, Optional, Tuple

from laxtop.errors import LawViolation
from laxtop.finsetcore import FinMap, Rel
from laxtop.internal.helpers import check_budget, iter_bits
from laxtop.models import EMAlgebra, TSpace
from laxtop.monads import MonadSpec, MonoidTable
from laxtop.monads.base import _product
from laxtop.tspace import check_axioms, saturate
from laxtop.typings import Partition

__all__ = (
    'iter_maps',
    'iter_partitions',
    'iter_commutative_monoids',
    'iter_algebras',
    'iter_spaces',
    'random_space',
)

def iter_maps(n: int, m: int) -> Iterator[FinMap]:
    """
    Yields every map from an ``n``-element set to an ``m``-element set, in
    lexicographic order of the reversed table.

    Raises
    ------
    BudgetExceeded
        There are more than budget maps.
    """
    check_budget(m ** n, 'maps from {0} to {1} points'.format(n, m))
    for table in _product(m, n):
        yield FinMap(n, m, table)


def iter_partitions(n: int) -> Iterator[Partition]:
    """
    Yields every partition of ``range(n)`` as blocks listed in order of
    least member.
    """
    if n == 0:
        yield ()
        return

    # restricted growth strings
    labels = [0] * n
    while True:
        blocks: List[List[int]] = []
        for i, b in enumerate(labels):
            if b == len(blocks):
                blocks.append([])
            blocks[b].append(i)
        yield tuple(tuple(b) for b in blocks)

        i = n - 1
        while i > 0:
            if labels[i] <= max(labels[:i]):
                labels[i] += 1
                labels[i + 1:] = [0] * (n - i - 1)
                break
            i -= 1
        if i == 0:
            return


def iter_commutative_monoids(size: int) -> Iterator[MonoidTable]:
    """
    Yields every commutative monoid table of the given size with unit ``0``.
    Isomorphic monoids are not identified.
    """
    others = range(1, size)
    cells = [(a, b) for a in others for b in others if a <= b]
    check_budget(size ** len(cells), 'monoid tables of size {0}'.format(size))

    for values in _product(size, len(cells)):
        table = [[a if b == 0 else b if a == 0 else 0 for b in range(size)] for a in range(size)]
        for (a, b), v in zip(cells, values):
            table[a][b] = table[b][a] = v
        try:
            yield MonoidTable(size, 0, table)
        except LawViolation:
            continue


def iter_algebras(monad: MonadSpec, max_points: int, *, min_points: int = 0) -> Iterator[EMAlgebra]:
    """Yields every algebra with ``min_points`` to ``max_points`` points."""
    for k in range(min_points, max_points + 1):
        for table in monad.iter_algebra_structures(k):
            yield EMAlgebra(monad, k, FinMap(monad.size(k), k, table), check=False)


def _unit_rows(monad: MonadSpec, n: int) -> List[int]:
    rows = [0] * monad.size(n)
    for x in range(n):
        rows[monad.unit_code(x, n)] |= 1 << x
    return rows


def iter_spaces(monad: MonadSpec, n: int, *, hausdorff_only: bool = False) -> Iterator[TSpace]:
    """
    Yields every space structure on ``n`` points.

    Candidates contain the reflexivity pairs and are filtered by
    :func:`check_axioms`. With ``hausdorff_only`` only relations in which
    every element has at most one limit are generated.

    Raises
    ------
    BudgetExceeded
        There are more candidates than the budget allows.
    """
    forced = _unit_rows(monad, n)
    carrier = monad.carrier(n)

    if hausdorff_only:
        if any(row & (row - 1) for row in forced):
            return
        free = [t for t, row in enumerate(forced) if not row]
        check_budget((n + 1) ** len(free), 'hausdorff candidates on {0} points'.format(n))
        choices = [0] + [1 << y for y in range(n)]
        for values in _product(n + 1, len(free)):
            rows = list(forced)
            for t, v in zip(free, values):
                rows[t] = choices[v]
            s = TSpace(monad, n, Rel.from_rows(carrier, n, rows))
            if check_axioms(s).ok:
                yield s
        return

    slots = [(t, y) for t, row in enumerate(forced) for y in range(n) if not row >> y & 1]
    check_budget(1 << len(slots), 'candidate relations on {0} points'.format(n))
    for choice in range(1 << len(slots)):
        rows = list(forced)
        for i in iter_bits(choice):
            t, y = slots[i]
            rows[t] |= 1 << y
        s = TSpace(monad, n, Rel.from_rows(carrier, n, rows))
        if check_axioms(s).ok:
            yield s


def random_space(monad: MonadSpec, n: int, seed: Optional[int] = None, *, density: float = 0.3) -> TSpace:
    """
    Saturates a random relation on ``n`` points. ``density`` is the
    probability of each pair.
    """
    rng = Random(seed)
    tx = monad.size(n)
    pairs: List[Tuple[int, int]] = [(t, y) for t in range(tx) for y in range(n) if rng.random() < density]
    return saturate(TSpace(monad, n, pairs))
