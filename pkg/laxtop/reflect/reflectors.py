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
from typing import NamedTuple, Optional, Set

from laxtop.errors import InternalInvariantViolated
from laxtop.finsetcore import FinMap, partition_of
from laxtop.internal.helpers import bits
from laxtop.internal.logger import logger
from laxtop.models import MonotoneMap, ReflectionKind, ReflectionResult, TSpace
from laxtop.reflect.beta import beta_reflection
from laxtop.tspace import initial_structure, quotient_space
from laxtop.tspace.axioms import require_space
from laxtop.typings import Pair

__all__ = (
    'CFReport',
    'check_CF',
    'h_reflection',
    'c_reflection',
    'f_reflection',
    'cf_reflection',
    'reflect',
)

class CFReport(NamedTuple):
    """
    Unpacks as ``(completely_regular, functionally_hausdorff)``, i.e. the
    conditions (C) and (F).
    """
    completely_regular: bool
    functionally_hausdorff: bool


def check_CF(s: TSpace, beta: Optional[ReflectionResult] = None) -> CFReport:
    """
    Checks (C), that ``s`` carries the initial structure along its algebra
    reflection, and (F), that the reflection is injective.

    Parameters
    ----------
    s: :class:`TSpace`
        The space.
    beta: Optional[:class:`ReflectionResult`]
        The algebra reflection of ``s``, computed when omitted.
    """
    beta = beta or beta_reflection(s)
    unit = beta.unit.f
    initial = initial_structure(s.points, [(unit, beta.reflected)])
    return CFReport(initial.converges == s.converges, unit.is_injective())


def h_reflection(s: TSpace) -> ReflectionResult:
    """
    The Hausdorff reflection: points with a common limit are merged and the
    quotient gets the final structure, until no element has two limits.

    Raises
    ------
    LawViolation
        ``s`` is not a space.
    """
    require_space(s)
    unit = MonotoneMap.identity(s)
    rounds = 0
    while True:
        current = unit.target
        merges: Set[Pair] = set()
        for row in current.rows:
            limits = bits(row)
            merges.update((limits[0], y) for y in limits[1:])
        if not merges:
            break
        unit = unit.then(quotient_space(current, merges))
        rounds += 1

    logger.debug('hausdorff reflection of %r after %s merge rounds', s, rounds)
    return ReflectionResult(unit, unit.target, ReflectionKind.H)


def c_reflection(s: TSpace, beta: Optional[ReflectionResult] = None) -> ReflectionResult:
    """
    Replaces the structure of ``s`` by the initial one along its algebra
    reflection. The unit is the identity on points.
    """
    require_space(s)
    beta = beta or beta_reflection(s)
    reflected = initial_structure(s.points, [(beta.unit.f, beta.reflected)])
    return ReflectionResult(MonotoneMap(FinMap.identity(s.points), s, reflected, check=False), reflected, ReflectionKind.C)


def f_reflection(s: TSpace, beta: Optional[ReflectionResult] = None) -> ReflectionResult:
    """
    Identifies the points the algebra reflection identifies and gives the
    quotient the final structure.

    Raises
    ------
    InternalInvariantViolated
        The quotient fails (F).
    """
    require_space(s)
    beta = beta or beta_reflection(s)
    merges = [(block[0], y) for block in partition_of(beta.unit.f) for y in block[1:]]
    unit = quotient_space(s, merges)

    if not check_CF(unit.target).functionally_hausdorff:
        raise InternalInvariantViolated('quotient by the algebra reflection fails (F)', instance=s)
    return ReflectionResult(unit, unit.target, ReflectionKind.F)


def cf_reflection(s: TSpace) -> ReflectionResult:
    """:func:`f_reflection` followed by :func:`c_reflection`."""
    first = f_reflection(s)
    second = c_reflection(first.reflected)
    return ReflectionResult(first.unit.then(second.unit), second.reflected, ReflectionKind.CF)


def reflect(s: TSpace, kind: str) -> ReflectionResult:
    """
    Dispatches to the reflector named by a :class:`ReflectionKind`.

    Raises
    ------
    ValueError
        Unknown kind.
    """
    try:
        reflector = _REFLECTORS[kind]
    except KeyError:
        raise ValueError('unknown reflection {0!r}, expected one of {1}'.format(kind, ', '.join(ReflectionKind.ALL))) from None
    return reflector(s)


_REFLECTORS = {
    ReflectionKind.B: beta_reflection,
    ReflectionKind.H: h_reflection,
    ReflectionKind.C: c_reflection,
    ReflectionKind.F: f_reflection,
    ReflectionKind.CF: cf_reflection,
}
