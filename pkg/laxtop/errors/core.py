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
from typing import Any, ClassVar, Optional

__all__ = (
    'LaxtopError',
    'BudgetExceeded',
    'IncompatibleMonads',
    'NotAlgebraic',
    'LawViolation',
    'WrongMonad',
    'NotGenerating',
    'NotMonotone',
    'InternalInvariantViolated',
)

class LaxtopError(Exception):
    """
    Base exception class for all the errors raised by the library.

    Every error carries a human readable message and can be rendered to a
    machine readable payload using :meth:`to_dict`.
    """
    DEFAULT_ERROR_MESSAGE: ClassVar[str] = 'An error occured.'

    def __init__(self, message: Optional[str] = None) -> None:
        super().__init__(message or self.DEFAULT_ERROR_MESSAGE)

    def to_dict(self) -> dict:
        return {'type': self.__class__.__name__, 'message': str(self)}


class BudgetExceeded(LaxtopError):
    """
    Raised when an enumeration would exceed the configured budget.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    what: :class:`str`
        Short description of the enumerated set.
    required: :class:`int`
        The number of elements that would have been enumerated.
    budget: :class:`int`
        The budget in effect.
    """
    DEFAULT_ERROR_MESSAGE = 'Enumeration budget exceeded.'

    def __init__(self, what: str, required: int, budget: int) -> None:
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__('{0} needs {1} elements, budget is {2}'.format(what, required, budget))

    def to_dict(self) -> dict:
        payload = super().to_dict()
        payload.update(what=self.what, required=self.required, budget=self.budget)
        return payload


class IncompatibleMonads(LaxtopError):
    """
    Raised when structures over different monads are combined.

    This class inherits :exc:`LaxtopError`.
    """
    DEFAULT_ERROR_MESSAGE = 'Structures are defined over different monads.'


class NotAlgebraic(LaxtopError):
    """
    Raised when a space is asked for its algebra but some element converges
    to no point or to more than one point.

    This class inherits :exc:`LaxtopError`.
    """
    DEFAULT_ERROR_MESSAGE = 'Space is not algebraic.'


class LawViolation(LaxtopError):
    """
    Raised when an algebra or a monoid table breaks one of its laws.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    witness:
        The offending element(s), if known.
    """
    DEFAULT_ERROR_MESSAGE = 'A law is violated.'

    def __init__(self, message: Optional[str] = None, witness: Any = None) -> None:
        self.witness = witness
        super().__init__(message)


class WrongMonad(LaxtopError):
    """
    Raised when an operation only defined for one monad kind receives another.

    This class inherits :exc:`LaxtopError`.
    """
    DEFAULT_ERROR_MESSAGE = 'Operation is not defined for this monad.'


class NotGenerating(LaxtopError):
    """
    Raised when the mate of a generator map is not surjective.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    missing: :class:`tuple`
        Algebra elements outside of the image.
    """
    DEFAULT_ERROR_MESSAGE = 'Map does not generate the algebra.'

    def __init__(self, missing: Any = ()) -> None:
        self.missing = tuple(missing)
        super().__init__('elements {0} are not generated'.format(list(self.missing)))


class NotMonotone(LaxtopError):
    """
    Raised when a map is wrapped as monotone but does not preserve convergence.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    witness: :class:`tuple`
        A source pair and its image, the latter missing from the target.
    """
    DEFAULT_ERROR_MESSAGE = 'Map is not monotone.'

    def __init__(self, witness: Any = None) -> None:
        self.witness = witness
        super().__init__('pair {0} is mapped to {1}, which does not converge'.format(*witness) if witness else None)


class InternalInvariantViolated(LaxtopError):
    """
    Raised when a construction produced a result that fails its own
    post-condition. This always indicates a bug in the library.

    This class inherits :exc:`LaxtopError`.

    Attributes
    ----------
    instance:
        The input that triggered the failure.
    """
    DEFAULT_ERROR_MESSAGE = 'An internal invariant was violated.'

    def __init__(self, message: Optional[str] = None, instance: Any = None) -> None:
        self.instance = instance
        super().__init__(message)
