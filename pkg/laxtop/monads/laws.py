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
from random import Random
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from laxtop.core import get_settings
from laxtop.finsetcore import FinMap
from laxtop.internal.logger import logger
from laxtop.monads.base import MonadSpec, _product

__all__ = (
    'LawResult',
    'LawReport',
    'check_monad_laws',
    'test_maps',
)

# Sample size for composites whose domain cannot be enumerated.
SAMPLE_SIZE = 4096

class LawResult:
    """
    The outcome of checking one law.

    Attributes
    ----------
    name: :class:`str`
        The law, e.g. ``'associativity'``.
    passed: :class:`bool`
        Whether no counterexample was found.
    counterexample:
        A description of the first failure, or ``None``.
    checked: :class:`int`
        How many instances were evaluated.
    exhaustive: :class:`bool`
        ``False`` when some domain was sampled instead of enumerated.
    """
    __slots__ = ('name', 'passed', 'counterexample', 'checked', 'exhaustive')

    def __init__(self, name: str, counterexample: Any = None, checked: int = 0, exhaustive: bool = True) -> None:
        self.name = name
        self.counterexample = counterexample
        self.passed = counterexample is None
        self.checked = checked
        self.exhaustive = exhaustive

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'passed': self.passed,
            'counterexample': self.counterexample,
            'checked': self.checked,
            'exhaustive': self.exhaustive,
        }

    def __repr__(self):
        return '<LawResult name=%s passed=%s>' % (self.name, self.passed)


class LawReport:
    """
    All law results of one :func:`check_monad_laws` run.

    Results can be looked up by law name, ``report['associativity']``.
    """
    __slots__ = ('monad', 'max_n', 'results')

    def __init__(self, monad: MonadSpec, max_n: int, results: Iterable[LawResult]) -> None:
        self.monad = monad
        self.max_n = max_n
        self.results: Tuple[LawResult, ...] = tuple(results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> LawResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def __iter__(self) -> Iterator[LawResult]:
        return iter(self.results)

    def lines(self) -> List[str]:
        out = []
        for r in self.results:
            status = 'pass' if r.passed else 'FAIL ({0})'.format(r.counterexample)
            if not r.exhaustive:
                status += ' [sampled]'
            out.append('{0}: {1}'.format(r.name, status))
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            'monad': self.monad.descriptor(),
            'max_n': self.max_n,
            'passed': self.passed,
            'laws': [r.to_dict() for r in self.results],
        }

    def __repr__(self):
        return '<LawReport kind=%s max_n=%s passed=%s>' % (self.monad.kind, self.max_n, self.passed)


def test_maps(n: int, m: int, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """
    Tables of the maps ``n -> m`` used by law checks: all of them when
    there are at most ``limit``, otherwise a fixed generator set of
    constants, shifts, reversals and collapses.
    """
    if limit is None:
        limit = get_settings().law_map_limit
    if n == 0:
        return [()]
    if m == 0:
        return []
    if m ** n <= limit:
        return list(_product(m, n))

    tables = {tuple([c] * n) for c in range(m)}
    tables.add(tuple(i % m for i in range(n)))
    tables.add(tuple((i + 1) % m for i in range(n)))
    tables.add(tuple((n - 1 - i) % m for i in range(n)))
    tables.add(tuple(min(i, m - 1) for i in range(n)))
    tables.add(tuple((i * i + 1) % m for i in range(n)))
    return sorted(tables)

# pytest must not collect the helper above
test_maps.__test__ = False  # type: ignore[attr-defined]


def _domain(monad: MonadSpec, n: int, seed: int) -> Tuple[Iterable[int], bool]:
    # codes of T n a law is checked on
    size = monad.size(n)
    if size <= get_settings().budget:
        return range(size), True

    generators = monad.join_generators(n)
    if generators is not None:
        logger.debug('checking %s generators instead of %s elements', len(generators), size)
        return generators, True

    rng = Random(seed)
    logger.warning('sampling %s of %s elements for a law check', SAMPLE_SIZE, size)
    return [rng.randrange(size) for _ in range(SAMPLE_SIZE)], False


def check_monad_laws(monad: MonadSpec, max_n: int) -> LawReport:
    """
    Verifies the monad on all carriers of size ``0 .. max_n``.

    Checks functor identity and composition, the two unit laws,
    associativity, naturality of unit and multiplication and preservation
    of surjections. Composition uses the generator set of maps; the other
    laws use :func:`test_maps`. Domains larger than the budget are reduced
    to the generators of :meth:`MonadSpec.join_generators` when the monad
    has them; otherwise they are sampled and reported as not exhaustive.

    Raises
    ------
    BudgetExceeded
        ``T`` or ``T T`` of some carrier is over budget.
    """
    sizes = range(max_n + 1)
    results = [
        _functor_identity(monad, sizes),
        _functor_composition(monad, sizes),
        _left_unit(monad, sizes),
        _right_unit(monad, sizes),
        _associativity(monad, sizes),
        _unit_naturality(monad, sizes),
        _mult_naturality(monad, sizes),
        _preserves_surjections(monad, sizes),
    ]
    report = LawReport(monad, max_n, results)
    logger.debug('law check of %r up to %s: %s', monad, max_n, 'pass' if report.passed else 'FAIL')
    return report


def _tf(monad: MonadSpec, table: Tuple[int, ...], n: int, m: int) -> Tuple[int, ...]:
    return monad.apply_functor(FinMap(n, m, table)).table


def _functor_identity(monad: MonadSpec, sizes: range) -> LawResult:
    checked = 0
    for n in sizes:
        tid = _tf(monad, tuple(range(n)), n, n)
        checked += len(tid)
        for t, v in enumerate(tid):
            if v != t:
                return LawResult('functor_identity', (n, t), checked)
    return LawResult('functor_identity', None, checked)


def _functor_composition(monad: MonadSpec, sizes: range) -> LawResult:
    checked = 0
    for n in sizes:
        for m in sizes:
            for f in test_maps(n, m, limit=1):
                tf = _tf(monad, f, n, m)
                for k in sizes:
                    for g in test_maps(m, k, limit=1):
                        gf = tuple(g[v] for v in f)
                        tgf = _tf(monad, gf, n, k)
                        tg = _tf(monad, g, m, k)
                        checked += len(tgf)
                        for t, v in enumerate(tgf):
                            if tg[tf[t]] != v:
                                return LawResult('functor_composition', {'f': f, 'g': g, 'element': t}, checked)
    return LawResult('functor_composition', None, checked)


def _left_unit(monad: MonadSpec, sizes: range) -> LawResult:
    # μ ∘ η_T = id
    checked = 0
    for n in sizes:
        tn = monad.size(n)
        for t in monad.elements(n):
            checked += 1
            if monad.mult_code(monad.unit_code(t, tn), n) != t:
                return LawResult('left_unit', (n, t), checked)
    return LawResult('left_unit', None, checked)


def _right_unit(monad: MonadSpec, sizes: range) -> LawResult:
    # μ ∘ T η = id
    checked = 0
    for n in sizes:
        tn = monad.size(n)
        eta = monad.unit_component(n).table
        for t in monad.elements(n):
            checked += 1
            if monad.mult_code(monad.fmap_code(eta, tn, t, n), n) != t:
                return LawResult('right_unit', (n, t), checked)
    return LawResult('right_unit', None, checked)


def _associativity(monad: MonadSpec, sizes: range) -> LawResult:
    # μ ∘ μ_T = μ ∘ T μ on T T T n
    checked = 0
    exhaustive = True
    for n in sizes:
        tn = monad.size(n)
        ttn = monad.size(tn)
        mu = monad.mult_component(n).table
        domain, complete = _domain(monad, ttn, seed=n)
        exhaustive = exhaustive and complete
        for big in domain:
            checked += 1
            left = monad.mult_code(monad.mult_code(big, tn), n)
            right = monad.mult_code(monad.fmap_code(mu, tn, big, ttn), n)
            if left != right:
                return LawResult('associativity', {'n': n, 'element': big, 'left': left, 'right': right}, checked, exhaustive)
    return LawResult('associativity', None, checked, exhaustive)


def _unit_naturality(monad: MonadSpec, sizes: range) -> LawResult:
    # T f ∘ η = η ∘ f
    checked = 0
    for n in sizes:
        for m in sizes:
            for f in test_maps(n, m):
                tf = _tf(monad, f, n, m)
                for x in range(n):
                    checked += 1
                    if tf[monad.unit_code(x, n)] != monad.unit_code(f[x], m):
                        return LawResult('unit_naturality', {'f': f, 'point': x}, checked)
    return LawResult('unit_naturality', None, checked)


def _mult_naturality(monad: MonadSpec, sizes: range) -> LawResult:
    # T f ∘ μ = μ ∘ T T f
    checked = 0
    for n in sizes:
        tn = monad.size(n)
        mu_n = monad.mult_component(n).table
        for m in sizes:
            tm = monad.size(m)
            for f in test_maps(n, m):
                tf = _tf(monad, f, n, m)
                for big in monad.elements(tn):
                    checked += 1
                    left = tf[mu_n[big]]
                    right = monad.mult_code(monad.fmap_code(tf, tm, big, tn), m)
                    if left != right:
                        return LawResult('mult_naturality', {'f': f, 'element': big}, checked)
    return LawResult('mult_naturality', None, checked)


def _preserves_surjections(monad: MonadSpec, sizes: range) -> LawResult:
    checked = 0
    for n in sizes:
        for m in sizes:
            for f in test_maps(n, m):
                if len(set(f)) != m:
                    continue
                checked += 1
                if not monad.apply_functor(FinMap(n, m, f)).is_surjective():
                    return LawResult('preserves_surjections', {'f': f}, checked)
    return LawResult('preserves_surjections', None, checked)
