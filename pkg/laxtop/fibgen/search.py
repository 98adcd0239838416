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
from typing import Any, List, NamedTuple, Optional

from laxtop.errors import NotGenerating
from laxtop.fibgen.cartesian import is_cartesian
from laxtop.fibgen.gen import gen_morphism_for, gen_validate, ibar, ibar_morphism, is_w_cartesian, jbar
from laxtop.finsetcore import FinMap
from laxtop.internal.logger import logger
from laxtop.models import MonotoneMap, ReflectionKind
from laxtop.monads import MonadSpec
from laxtop.reflect import iter_targets
from laxtop.tspace import check_monotone
from laxtop.utils import iter_algebras, iter_maps

__all__ = (
    'SearchReport',
    'search_ibar_jbar',
    'search_cartesian_preservation',
)

class SearchReport(NamedTuple):
    """Unpacks as ``(examined, witnesses)``."""
    examined: int
    witnesses: List[Any]


def search_ibar_jbar(monad: MonadSpec, max_points: int = 2, *, limit: Optional[int] = None) -> SearchReport:
    """
    Looks for presented algebras ``g`` with at most ``max_points``
    generators and algebra points for which ``Ī J̄ g`` is not isomorphic to
    ``g`` over the identity of the generators.

    Witnesses are ``(g, Ī J̄ g)`` pairs.
    """
    examined = 0
    witnesses: List[Any] = []
    for algebra in iter_algebras(monad, max_points):
        for n in range(max_points + 1):
            for p in iter_maps(n, algebra.carrier.size):
                try:
                    g = gen_validate(p, algebra)
                except NotGenerating:
                    continue

                examined += 1
                back = ibar(jbar(g))
                morphism = gen_morphism_for(FinMap.identity(n), back, g)
                if morphism is None or not morphism.fstar.is_bijective():
                    witnesses.append((g, back))
                    if limit is not None and len(witnesses) >= limit:
                        return SearchReport(examined, witnesses)

    logger.debug('searched %s presented algebras, %s witnesses', examined, len(witnesses))
    return SearchReport(examined, witnesses)


def search_cartesian_preservation(monad: MonadSpec, max_points: int = 2, *, limit: Optional[int] = None) -> SearchReport:
    """
    Looks for cartesian monotone maps between (C)-spaces with at most
    ``max_points`` points whose induced morphism of presented algebras is
    not cartesian over the generators.

    Witnesses are the offending :class:`MonotoneMap` objects.
    """
    spaces = list(iter_targets(monad, ReflectionKind.C, max_points))
    examined = 0
    witnesses: List[Any] = []
    for source in spaces:
        for target in spaces:
            for f in iter_maps(source.points.size, target.points.size):
                if not check_monotone(f, source, target):
                    continue
                m = MonotoneMap(f, source, target, check=False)
                if not is_cartesian(m):
                    continue

                examined += 1
                if not is_w_cartesian(ibar_morphism(m)):
                    witnesses.append(m)
                    if limit is not None and len(witnesses) >= limit:
                        return SearchReport(examined, witnesses)

    logger.debug('searched %s cartesian maps, %s witnesses', examined, len(witnesses))
    return SearchReport(examined, witnesses)
