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
from typing import Any, Dict, Iterable, Iterator, List, Optional

from laxtop.core import get_settings
from laxtop.finsetcore import FinMap
from laxtop.internal.helpers import check_budget
from laxtop.internal.logger import logger
from laxtop.models import ReflectionKind, ReflectionResult, TSpace, VerificationReport
from laxtop.monads import MonadSpec
from laxtop.monads.base import _product
from laxtop.reflect.congruence import free_algebra, iter_congruences
from laxtop.reflect.reflectors import check_CF
from laxtop.tspace import algebra_to_space, check_khaus, check_monotone, initial_structure
from laxtop.utils import iter_algebras, iter_maps, iter_spaces

__all__ = (
    'EnumerationPolicy',
    'iter_targets',
    'in_subcategory',
    'verify_reflection',
)

class EnumerationPolicy:
    """
    Which target spaces :func:`verify_reflection` enumerates.

    Parameters
    ----------
    max_points: Optional[:class:`int`]
        The largest target carrier. Defaults to the ``verify_bound``
        setting in effect when the policy is used.
    targets: Optional[Iterable[:class:`TSpace`]]
        Explicit targets; replaces the enumeration.
    """
    __slots__ = ('_max_points', 'targets')

    def __init__(self, max_points: Optional[int] = None, targets: Optional[Iterable[TSpace]] = None) -> None:
        if max_points is not None and max_points < 0:
            raise ValueError('max_points must not be negative.')
        self._max_points = max_points
        self.targets = None if targets is None else tuple(targets)

    @property
    def max_points(self) -> int:
        if self._max_points is None:
            return get_settings().verify_bound
        return self._max_points

    def __repr__(self):
        return '<EnumerationPolicy max_points=%s>' % self.max_points


def in_subcategory(s: TSpace, kind: str) -> bool:
    """Whether ``s`` lies in the subcategory a reflection kind reflects into."""
    if kind == ReflectionKind.B:
        return check_khaus(s).algebraic
    if kind == ReflectionKind.H:
        return check_khaus(s).hausdorff
    if kind in (ReflectionKind.F, ReflectionKind.CF) and not check_khaus(s).hausdorff:
        return False

    c, f = check_CF(s)
    if kind == ReflectionKind.C:
        return c
    if kind == ReflectionKind.F:
        return f
    if kind == ReflectionKind.CF:
        return c and f
    raise ValueError('unknown reflection {0!r}'.format(kind))


def _completely_regular_spaces(monad: MonadSpec, k: int) -> Iterator[TSpace]:
    # every (C)-space is initial along q ∘ η for a congruence q of the free algebra
    seen = set()
    units = [monad.unit_code(x, k) for x in range(k)]
    for congruence in iter_congruences(free_algebra(monad, k)):
        algebra_space = algebra_to_space(congruence.algebra, check=False)
        along = FinMap(k, algebra_space.points, (congruence.q.table[t] for t in units))
        space = initial_structure(k, [(along, algebra_space)])
        if space.converges not in seen and check_CF(space).completely_regular:
            seen.add(space.converges)
            yield space


def iter_targets(monad: MonadSpec, kind: str, max_points: int) -> Iterator[TSpace]:
    """
    Yields every space of the subcategory for ``kind`` with at most
    ``max_points`` points.

    Algebras come from :meth:`MonadSpec.iter_algebra_structures`; (H), (F)
    and (CF) spaces from Hausdorff candidates; (C) spaces as initial
    structures along quotients of free algebras.
    """
    if kind == ReflectionKind.B:
        for algebra in iter_algebras(monad, max_points):
            yield algebra_to_space(algebra, check=False)
        return

    if kind == ReflectionKind.C:
        for k in range(max_points + 1):
            yield from _completely_regular_spaces(monad, k)
        return

    if kind not in ReflectionKind.ALL:
        raise ValueError('unknown reflection {0!r}'.format(kind))

    for k in range(max_points + 1):
        for space in iter_spaces(monad, k, hausdorff_only=True):
            if kind == ReflectionKind.H or in_subcategory(space, kind):
                yield space


def _factorizations(r: ReflectionResult, f: FinMap, target: TSpace, limit: int = 2) -> int:
    unit = r.unit.f
    reflected = r.reflected
    size = reflected.points.size

    fixed: Dict[int, int] = {}
    for x, image in enumerate(unit.table):
        if fixed.setdefault(image, f.table[x]) != f.table[x]:
            return 0

    free = [p for p in range(size) if p not in fixed]
    m = target.points.size
    check_budget(m ** len(free), 'factorization candidates')

    found = 0
    table: List[int] = [fixed.get(p, 0) for p in range(size)]
    for values in _product(m, len(free)):
        for p, v in zip(free, values):
            table[p] = v
        if check_monotone(FinMap(size, m, table), reflected, target):
            found += 1
            if found >= limit:
                break
    return found


def verify_reflection(r: ReflectionResult, policy: Optional[EnumerationPolicy] = None) -> VerificationReport:
    """
    Checks the universal property of a reflection: every monotone map from
    the source into an enumerated target factors through the unit by
    exactly one monotone map.

    The reflected space itself is also checked to lie in the target
    subcategory.

    Raises
    ------
    BudgetExceeded
        An enumeration is over budget.
    """
    policy = policy or EnumerationPolicy()
    source = r.source
    monad = source.monad

    if not in_subcategory(r.reflected, r.kind):
        return VerificationReport(r.kind, 0, 0, {'reason': 'membership', 'target': r.reflected, 'f': None, 'factorizations': 0})

    targets: Iterable[TSpace]
    if policy.targets is not None:
        targets = policy.targets
    else:
        targets = iter_targets(monad, r.kind, policy.max_points)

    count = 0
    checked = 0
    for target in targets:
        count += 1
        for f in iter_maps(source.points.size, target.points.size):
            if not check_monotone(f, source, target):
                continue
            checked += 1
            found = _factorizations(r, f, target)
            if found != 1:
                failure: Dict[str, Any] = {
                    'reason': 'existence' if found == 0 else 'uniqueness',
                    'target': target,
                    'f': f.table,
                    'factorizations': found,
                }
                logger.debug('reflection %s fails %s for %r', r.kind, failure['reason'], target)
                return VerificationReport(r.kind, count, checked, failure)

    logger.debug('reflection %s verified against %s targets, %s maps', r.kind, count, checked)
    return VerificationReport(r.kind, count, checked)
