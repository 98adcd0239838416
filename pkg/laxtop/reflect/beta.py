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
from typing import Optional

from laxtop.errors import InternalInvariantViolated, LawViolation
from laxtop.finsetcore import FinMap
from laxtop.internal.logger import logger
from laxtop.models import MonotoneMap, ReflectionKind, ReflectionResult, TSpace, monotone_violation
from laxtop.reflect.congruence import congruence_closure, free_algebra
from laxtop.tspace import algebra_to_space

__all__ = (
    'beta_reflection',
    'beta_map',
)

def _require_reflexive(s: TSpace) -> None:
    n = s.points.size
    for x in range(n):
        if (s.monad.unit_code(x, n), x) not in s.converges:
            raise LawViolation('(R) fails at point {0}'.format(x), witness=x)


def beta_reflection(s: TSpace) -> ReflectionResult:
    """
    Reflects ``s`` into the algebras of its monad.

    The free algebra ``(T X, μ_X)`` is divided by the least congruence
    identifying ``t`` with ``η(y)`` whenever ``t`` converges to ``y``. The
    unit is ``q ∘ η``. Reflexive graphs that are not transitive are
    accepted as well.

    Raises
    ------
    LawViolation
        ``s`` is not reflexive.
    BudgetExceeded
        The congruence closure cannot be enumerated.
    """
    _require_reflexive(s)
    monad = s.monad
    n = s.points.size

    free = free_algebra(monad, n)
    generators = [(t, monad.unit_code(y, n)) for t, y in s.converges.pairs]
    congruence = congruence_closure(free, generators)

    reflected = algebra_to_space(congruence.algebra, check=False)
    unit = FinMap(s.points, reflected.points, (congruence.q.table[monad.unit_code(x, n)] for x in range(n)))
    if monotone_violation(unit, s, reflected) is not None:
        raise InternalInvariantViolated('unit of the algebra reflection is not monotone', instance=s)

    logger.debug('algebra reflection of %r has %s points', s, reflected.points.size)
    return ReflectionResult(
        MonotoneMap(unit, s, reflected, check=False),
        reflected,
        ReflectionKind.B,
        algebra=congruence.algebra,
        congruence=congruence,
    )


def beta_map(f: MonotoneMap, source: Optional[ReflectionResult] = None, target: Optional[ReflectionResult] = None) -> FinMap:
    """
    The homomorphism ``B f`` with ``B f ∘ β_X = β_Y ∘ f``.

    Parameters
    ----------
    f: :class:`MonotoneMap`
        The monotone map ``X -> Y``.
    source: Optional[:class:`ReflectionResult`]
        The algebra reflection of ``X``, computed when omitted.
    target: Optional[:class:`ReflectionResult`]
        The algebra reflection of ``Y``, computed when omitted.
    """
    source = source or beta_reflection(f.source)
    target = target or beta_reflection(f.target)
    qx = source.congruence.q.table
    qy = target.congruence.q.table
    tf = f.source.monad.apply_functor(f.f).table

    table = [-1] * source.reflected.points.size
    for t, cls in enumerate(qx):
        value = qy[tf[t]]
        if table[cls] == -1:
            table[cls] = value
        elif table[cls] != value:
            raise InternalInvariantViolated('B f is not well defined at element {0}'.format(t), instance=f)

    return FinMap(source.reflected.points, target.reflected.points, table)
