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
from typing import Union

from laxtop.errors import LawViolation, NotAlgebraic
from laxtop.finsetcore import FinMap
from laxtop.models import EMAlgebra, TSpace, Validation
from laxtop.tspace.axioms import check_khaus

__all__ = (
    'algebra_to_space',
    'space_to_algebra',
    'algebra_space_iso',
)

def algebra_to_space(a: EMAlgebra, *, check: bool = True) -> TSpace:
    """
    The space whose convergence is the graph of the structure map:
    ``t`` converges exactly to ``c(t)``.

    Raises
    ------
    LawViolation
        ``check`` is set and ``a`` is not an algebra.
    """
    if check:
        violation = a.law_violation()
        if violation is not None:
            raise LawViolation('{0} law fails at element {1}'.format(*violation), witness=violation)

    return TSpace(a.monad, a.carrier, enumerate(a.structure.table), validated=Validation.SPACE)


def space_to_algebra(s: TSpace) -> EMAlgebra:
    """
    The algebra of an algebraic space, sending every element to its unique
    limit.

    Raises
    ------
    NotAlgebraic
        Some element has no limit or more than one.
    """
    report = check_khaus(s)
    if not report.algebraic:
        raise NotAlgebraic('space fails {0} at {1}'.format(*report.violation))

    structure = FinMap(s.tx, s.points, (s.limits(t)[0] for t in range(s.tx.size)))
    return EMAlgebra(s.monad, s.points, structure, check=False)


def algebra_space_iso(x: Union[EMAlgebra, TSpace]) -> Union[TSpace, EMAlgebra]:
    """
    Converts an algebra into its space and an algebraic space into its
    algebra.
    """
    if isinstance(x, EMAlgebra):
        return algebra_to_space(x)
    if isinstance(x, TSpace):
        return space_to_algebra(x)
    raise TypeError('expected EMAlgebra or TSpace, got {0.__class__.__name__}'.format(x))
