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
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from laxtop.errors import WrongMonad
from laxtop.finsetcore import FinMap, Rel, rel_compose
from laxtop.internal.helpers import is_submask
from laxtop.models import TSpace, Validation
from laxtop.monads import MonadKind, PowersetMonad
from laxtop.tspace.axioms import require_space

__all__ = (
    'ClosureReport',
    'check_clo_closure',
    'closure_operator_violation',
    'closure_to_space',
    'membership_composite',
)

class ClosureReport(NamedTuple):
    """
    The outcome of :func:`check_clo_closure`. Unpacks as
    ``(clo, closure_table, violation)``.

    ``closure_table`` maps every subset code ``A`` to the code of
    ``{y : A ⇝ y}``. ``violation`` is ``(A, B, y)`` with ``A ⊆ B``,
    ``A ⇝ y`` and not ``B ⇝ y``.
    """
    clo: bool
    closure_table: Optional[FinMap] = None
    violation: Optional[Tuple[int, int, int]] = None


def _require_powerset(s: TSpace) -> None:
    if s.monad.kind != MonadKind.POWERSET:
        raise WrongMonad('expected a powerset space, got {0}'.format(s.monad.kind))


def check_clo_closure(s: TSpace) -> ClosureReport:
    """
    Checks whether convergence is inherited by supersets: ``A ⇝ y`` and
    ``A ⊆ B`` imply ``B ⇝ y``. Such spaces are closure spaces, with
    closure ``A ↦ {y : A ⇝ y}``.

    Raises
    ------
    WrongMonad
        ``s`` is not a powerset space.
    LawViolation
        ``s`` fails (R) or (T).
    """
    _require_powerset(s)
    require_space(s)
    rows = s.rows
    size = len(rows)

    for a in range(size):
        for b in range(size):
            if a != b and is_submask(a, b) and not is_submask(rows[a], rows[b]):
                missing = rows[a] & ~rows[b]
                return ClosureReport(False, None, (a, b, (missing & -missing).bit_length() - 1))

    return ClosureReport(True, FinMap(size, size, rows))


def closure_operator_violation(table: Sequence[int]) -> Optional[Tuple[str, int]]:
    """
    Checks that ``table`` (subset code to subset code) is extensive,
    monotone and idempotent. Returns ``(property, subset)`` on failure.
    """
    size = len(table)
    for a in range(size):
        if not is_submask(a, table[a]):
            return ('extensive', a)
        if table[table[a]] != table[a]:
            return ('idempotent', a)
        for b in range(size):
            if is_submask(a, b) and not is_submask(table[a], table[b]):
                return ('monotone', a)
    return None


def closure_to_space(table: Union[FinMap, Sequence[int]], n: Optional[int] = None) -> TSpace:
    """
    The powerset space of a closure operation: ``A ⇝ y`` iff ``y ∈ c(A)``.

    Parameters
    ----------
    table: Union[:class:`FinMap`, Sequence[:class:`int`]]
        The closure as a map from subset codes to subset codes.
    n: Optional[:class:`int`]
        The number of points; derived from the table when omitted.
    """
    rows = table.table if isinstance(table, FinMap) else tuple(table)
    if n is None:
        n = len(rows).bit_length() - 1
    if len(rows) != 1 << n:
        raise ValueError('table must have 2**n entries.')

    monad = PowersetMonad()
    return TSpace(monad, n, Rel.from_rows(len(rows), n, rows), validated=Validation.UNKNOWN)


def membership_composite(s: TSpace) -> TSpace:
    """
    Turns a space over the identity or ultrafilter monad into a powerset
    space in which ``A ⇝ y`` iff some ``x ∈ A`` converges to ``y``.

    Ultrafilters on a finite set are principal, so ``A`` belongs to the
    ultrafilter of ``x`` exactly when ``x ∈ A``.

    Raises
    ------
    WrongMonad
        ``s`` is over another monad.
    """
    if s.monad.kind not in (MonadKind.IDENTITY, MonadKind.ULTRAFILTER):
        raise WrongMonad('expected an identity or ultrafilter space, got {0}'.format(s.monad.kind))

    n = s.points.size
    subsets = 1 << n
    membership = Rel(subsets, n, ((a, x) for a in range(subsets) for x in range(n) if a >> x & 1))
    # rows of s are indexed by codes of T X, which are points for both monads
    converges = Rel(n, n, s.converges.pairs)
    composite = rel_compose(membership, converges)
    return TSpace(PowersetMonad(), s.points, composite)
