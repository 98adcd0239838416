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
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from laxtop.finsetcore import Rel
from laxtop.internal.helpers import bits, check_budget
from laxtop.internal.logger import logger
from laxtop.models import ExtRelation, TSpace
from laxtop.monads import MonadKind
from laxtop.typings import Pair

__all__ = (
    'barr_extend',
    'in_extension',
    'transitivity_instances',
)

def barr_extend(s: TSpace, *, generic: bool = False) -> ExtRelation:
    """
    Extends the convergence of ``s`` to ``Ĉ ⊆ T T X × T X``.

    ``Ĉ`` is the image of ``T C`` under the images of the two projections
    of ``C``, where ``C`` is treated as a finite set of its own. For the
    powerset monad a pair ``(𝔄, B)`` is in ``Ĉ`` iff ``C ∩ (𝔄 × B)``
    projects onto both ``𝔄`` and ``B``; that test is used unless
    ``generic`` is set.

    Raises
    ------
    BudgetExceeded
        ``T C`` (or, for the powerset, ``P P X``) is over budget.
    """
    monad = s.monad
    tx = monad.size(s.points.size)
    if monad.kind == MonadKind.POWERSET and not generic:
        pairs = _powerset_extension(s)
    else:
        pairs = _generic_extension(s)

    logger.debug('extension of %r has %s pairs', s, len(pairs))
    return ExtRelation(s, Rel(monad.carrier(tx), tx, pairs))


def _generic_extension(s: TSpace) -> Set[Pair]:
    monad = s.monad
    n = s.points.size
    tx = monad.size(n)
    pairs = s.converges.pairs
    k = len(pairs)
    first = [t for t, _ in pairs]
    second = [y for _, y in pairs]

    out = set()
    for w in monad.elements(k):
        out.add((monad.fmap_code(first, tx, w, k), monad.fmap_code(second, n, w, k)))
    return out


def _covers(members: Sequence[int], rows: Sequence[int], subset: int) -> bool:
    reached = 0
    for t in members:
        hit = rows[t] & subset
        if not hit:
            return False
        reached |= hit
    return reached == subset


def _powerset_extension(s: TSpace) -> List[Pair]:
    tx = 1 << s.points.size
    rows = s.rows
    check_budget(1 << tx, 'families of subsets of a {0}-element set'.format(s.points.size))

    out = []
    for family in range(1 << tx):
        members = bits(family)
        reach = 0
        for t in members:
            reach |= rows[t]

        # every subset of reach, including the empty one
        sub = reach
        while True:
            if _covers(members, rows, sub):
                out.append((family, sub))
            if sub == 0:
                break
            sub = (sub - 1) & reach
    return out


def in_extension(s: TSpace, family: int, t: int) -> bool:
    """
    Whether ``(family, t)`` lies in ``Ĉ``. For the powerset monad this
    is the polynomial witness test and nothing is enumerated.
    """
    if s.monad.kind == MonadKind.POWERSET:
        return _covers(bits(family), s.rows, t)
    return (family, t) in barr_extend(s).pairs


def _unions_per_point(s: TSpace) -> List[Dict[int, int]]:
    # for each y: every union of a nonempty set of subsets converging to y,
    # mapped to one such set (as a family code)
    n = s.points.size
    sources: List[Dict[int, int]] = [{} for _ in range(n)]
    for a, y in s.converges.pairs:
        sources[y][a] = 1 << a

    unions = []
    for y in range(n):
        reached = dict(sources[y])
        frontier = list(reached.items())
        while frontier:
            fresh = []
            for u, fu in frontier:
                for a, fa in sources[y].items():
                    v = u | a
                    if v not in reached:
                        reached[v] = fu | fa
                        fresh.append((v, reached[v]))
            frontier = fresh
        unions.append(reached)
    return unions


def _achievable(subset: int, per_point: List[Dict[int, int]]) -> Dict[int, int]:
    current = {0: 0}
    for y in bits(subset):
        combined: Dict[int, int] = {}
        for u, fu in current.items():
            for v, fv in per_point[y].items():
                combined.setdefault(u | v, fu | fv)
        current = combined
    return current


def transitivity_instances(s: TSpace) -> Iterator[Tuple[int, int, int, Pair]]:
    """
    Yields ``(𝔛, 𝔶, z, (μ 𝔛, z))`` for every ``(𝔛, 𝔶) ∈ Ĉ`` and
    ``(𝔶, z) ∈ C``. Transitivity demands every last component in ``C``.

    For the powerset monad only one ``𝔛`` is reported per union ``μ 𝔛``,
    which leaves the set of required pairs unchanged.
    """
    monad = s.monad
    n = s.points.size
    pairs = s.converges.pairs

    if monad.kind == MonadKind.POWERSET:
        per_point = _unions_per_point(s)
        memo: Dict[int, Dict[int, int]] = {}
        for b, z in pairs:
            if b not in memo:
                memo[b] = _achievable(b, per_point)
            for u, family in memo[b].items():
                yield family, b, z, (u, z)
        return

    rows = s.rows
    for big, t in sorted(_generic_extension(s)):
        if t >= len(rows) or not rows[t]:
            continue
        m = monad.mult_code(big, n)
        for z in bits(rows[t]):
            yield big, t, z, (m, z)
