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
from typing import Iterable, NamedTuple, Optional, Tuple, Union

from laxtop.finsetcore import FinMap, FinSetRef
from laxtop.models import MonotoneMap, TSpace
from laxtop.tspace.axioms import check_khaus
from laxtop.tspace.structures import initial_structure

__all__ = (
    'lifted_map',
    'PreservationReport',
    'k_preserved_by_surjection',
    'SeparationReport',
    'h_separated_by',
)

def lifted_map(f: MonotoneMap) -> FinMap:
    """The map on convergence pairs induced by a monotone map."""
    return f.lifted()


class PreservationReport(NamedTuple):
    """
    Unpacks as ``(preserved, witness)``. ``witness`` is an element of
    ``T Y`` with no limit in the target.
    """
    preserved: bool
    witness: Optional[int] = None


def k_preserved_by_surjection(f: MonotoneMap) -> PreservationReport:
    """
    Checks that the target of a surjective monotone map out of a compact
    space is compact.

    Raises
    ------
    ValueError
        ``f`` is not surjective or its source is not compact.
    """
    if not f.f.is_surjective():
        raise ValueError('map is not surjective.')
    if not check_khaus(f.source).compact:
        raise ValueError('source does not satisfy (K).')

    report = check_khaus(f.target)
    if report.compact:
        return PreservationReport(True)
    return PreservationReport(False, report.violation[1])


class SeparationReport(NamedTuple):
    """
    Unpacks as ``(separating, hausdorff, space)``: whether the family
    separates points, whether the initial structure satisfies (H), and that
    structure.
    """
    separating: bool
    hausdorff: bool
    space: TSpace


def h_separated_by(x: Union[FinSetRef, int], family: Iterable[Tuple[FinMap, TSpace]]) -> SeparationReport:
    """
    Puts the initial structure on ``x`` along a family of maps into
    Hausdorff spaces and checks (H) on the result.

    Raises
    ------
    ValueError
        A target of the family is not Hausdorff.
    IncompatibleMonads
        The targets are over different monads.
    """
    if not isinstance(x, FinSetRef):
        x = FinSetRef(x)
    family = list(family)
    for _, target in family:
        if not check_khaus(target).hausdorff:
            raise ValueError('family contains a target without (H).')

    separating = all(
        any(f.table[a] != f.table[b] for f, _ in family)
        for a in range(x.size)
        for b in range(a + 1, x.size)
    )
    space = initial_structure(x, family)
    return SeparationReport(separating, check_khaus(space).hausdorff, space)
