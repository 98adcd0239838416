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
from typing import NamedTuple, Optional, Tuple

from laxtop.errors import LawViolation
from laxtop.finsetcore import FinMap
from laxtop.models import ConditionReport, TSpace, Validation, monotone_violation
from laxtop.tspace.extension import transitivity_instances

__all__ = (
    'AxiomReport',
    'check_axioms',
    'is_space',
    'check_monotone',
    'check_khaus',
)

class AxiomReport(NamedTuple):
    """
    The outcome of :func:`check_axioms`. Unpacks as
    ``(reflexive, transitive, reflexive_witness, transitive_witness)``.

    ``reflexive_witness`` is a point ``x`` with ``η(x)`` not converging to
    ``x``; ``transitive_witness`` is ``(𝔛, 𝔶, z)`` with ``(𝔛, 𝔶) ∈ Ĉ``,
    ``(𝔶, z) ∈ C`` but ``(μ 𝔛, z) ∉ C``.
    """
    reflexive: bool
    transitive: bool
    reflexive_witness: Optional[int] = None
    transitive_witness: Optional[Tuple[int, int, int]] = None

    @property
    def ok(self) -> bool:
        return self.reflexive and self.transitive


def check_axioms(s: TSpace) -> AxiomReport:
    """
    Checks reflexivity and transitivity, and caches the verdict on ``s``.

    Raises
    ------
    BudgetExceeded
        The extension of ``s`` cannot be enumerated.
    """
    n = s.points.size
    c = s.converges

    reflexive_witness = None
    for x in range(n):
        if (s.monad.unit_code(x, n), x) not in c:
            reflexive_witness = x
            break

    transitive_witness = None
    for big, t, z, forced in transitivity_instances(s):
        if forced not in c:
            transitive_witness = (big, t, z)
            break

    report = AxiomReport(reflexive_witness is None, transitive_witness is None, reflexive_witness, transitive_witness)
    s.mark(Validation.SPACE if report.ok else Validation.GRAPH)
    return report


def is_space(s: TSpace) -> bool:
    if s.validated == Validation.SPACE:
        return True
    return check_axioms(s).ok


def require_space(s: TSpace) -> None:
    if s.validated == Validation.SPACE:
        return
    report = check_axioms(s)
    if not report.reflexive:
        raise LawViolation('(R) fails at point {0}'.format(report.reflexive_witness), witness=report.reflexive_witness)
    if not report.transitive:
        raise LawViolation('(T) fails at {0}'.format(report.transitive_witness), witness=report.transitive_witness)


def check_monotone(f: FinMap, src: TSpace, tgt: TSpace) -> bool:
    """
    Whether ``f`` maps every convergence pair of ``src`` to one of ``tgt``.
    :func:`monotone_violation` returns the failing pair instead.

    Raises
    ------
    IncompatibleMonads
        The spaces are over different monads.
    """
    return monotone_violation(f, src, tgt) is None


def check_khaus(s: TSpace) -> ConditionReport:
    """
    Checks (K), (H) and (A) = (K) and (H) by scanning the rows of the
    convergence relation.
    """
    rows = s.rows
    empty = next((t for t, row in enumerate(rows) if not row), None)
    several = next((t for t, row in enumerate(rows) if row & (row - 1)), None)
    compact = empty is None
    hausdorff = several is None

    violation = None
    if not compact:
        violation = ('K', empty)
    elif not hausdorff:
        violation = ('H', (several, s.limits(several)))

    section = None
    if compact:
        c = s.converges
        section = FinMap(len(rows), len(c), (c.index((t, _least(row))) for t, row in enumerate(rows)))

    return ConditionReport(compact, hausdorff, section, violation)


def _least(row: int) -> int:
    return (row & -row).bit_length() - 1
