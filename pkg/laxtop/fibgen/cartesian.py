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

from laxtop.finsetcore import FinMap
from laxtop.models import CartesianReport, MonotoneMap, TSpace
from laxtop.tspace import check_monotone, initial_structure
from laxtop.utils import iter_maps, iter_spaces

__all__ = (
    'cartesian_lift',
    'is_cartesian',
    'is_cartesian_by_cones',
)

def cartesian_lift(u: FinMap, target: TSpace) -> MonotoneMap:
    """
    Lifts a map into the carrier of ``target`` to a cartesian monotone map,
    by giving its domain the initial structure along ``u``.
    """
    if u.cod.size != target.points.size:
        raise ValueError('map does not end in the carrier of the target.')
    source = initial_structure(u.dom, [(u, target)])
    return MonotoneMap(u, source, target, check=False)


def is_cartesian(f: MonotoneMap) -> CartesianReport:
    """
    Whether the source of ``f`` carries the initial structure along it.
    The witness is a pair of the initial structure missing from the source.
    """
    initial = initial_structure(f.source.points, [(f.f, f.target)])
    missing = initial.converges.difference(f.source.converges)
    if len(missing):
        return CartesianReport(False, next(iter(missing)))
    return CartesianReport(True)


def is_cartesian_by_cones(f: MonotoneMap, max_points: Optional[int] = None) -> CartesianReport:
    """
    Checks the cartesian property against every test space ``Z`` with at
    most ``max_points`` points: a map ``h: Z -> X`` must be monotone
    whenever ``f ∘ h`` is.

    The witness is ``(Z, h)``. ``max_points`` defaults to 2.
    """
    if max_points is None:
        max_points = 2

    source, target = f.source, f.target
    for k in range(max_points + 1):
        for z in iter_spaces(source.monad, k):
            for h in iter_maps(k, source.points.size):
                if check_monotone(h.then(f.f), z, target) and not check_monotone(h, z, source):
                    return CartesianReport(False, (z, h))
    return CartesianReport(True)
