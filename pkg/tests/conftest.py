from __future__ import annotations
from functools import lru_cache
from pathlib import Path
from typing import Tuple

import pytest

from laxtop import (
    IdentityMonad,
    MonoidActionMonad,
    MonoidTable,
    PowersetMonad,
    TSpace,
    iter_targets,
)
from laxtop.monads import MonadSpec

DATA = Path(__file__).parent / 'data'
GOLDEN = Path(__file__).parent / 'golden'

FIXTURES = ('fix_ord', 'fix_ord_eq', 'fix_plu', 'fix_plu3', 'fix_m2')

# the monoid {e, a} with a·a = a
M2 = MonoidTable(2, 0, [[0, 1], [1, 1]])


def make_fix_ord() -> TSpace:
    return TSpace(IdentityMonad(), 3, [(0, 0), (1, 1), (2, 2), (0, 1)])

def make_fix_ord_eq() -> TSpace:
    return TSpace(IdentityMonad(), 2, [(0, 0), (1, 1), (0, 1), (1, 0)])

def make_fix_plu() -> TSpace:
    return TSpace.from_payloads(PowersetMonad(), 2, [((0,), 0), ((1,), 1), ((0, 1), 1)])

def make_fix_plu3() -> TSpace:
    return TSpace.from_payloads(PowersetMonad(), 3, [
        ((0,), 0), ((1,), 1), ((2,), 2),
        ((0, 1), 1), ((1, 2), 2), ((0, 1, 2), 2),
    ])

def make_fix_m2() -> TSpace:
    return TSpace.from_payloads(MonoidActionMonad(M2), 2, [((0, 0), 0), ((0, 1), 1), ((1, 0), 1)])


MAKERS = {
    'fix_ord': make_fix_ord,
    'fix_ord_eq': make_fix_ord_eq,
    'fix_plu': make_fix_plu,
    'fix_plu3': make_fix_plu3,
    'fix_m2': make_fix_m2,
}


@pytest.fixture
def fix_ord() -> TSpace:
    return make_fix_ord()

@pytest.fixture
def fix_ord_eq() -> TSpace:
    return make_fix_ord_eq()

@pytest.fixture
def fix_plu() -> TSpace:
    return make_fix_plu()

@pytest.fixture
def fix_plu3() -> TSpace:
    return make_fix_plu3()

@pytest.fixture
def fix_m2() -> TSpace:
    return make_fix_m2()

@pytest.fixture(params=FIXTURES)
def any_fixture(request) -> Tuple[str, TSpace]:
    return request.param, MAKERS[request.param]()


@lru_cache(maxsize=None)
def cached_targets(monad: MonadSpec, kind: str, max_points: int) -> Tuple[TSpace, ...]:
    """Targets of a reflection kind, enumerated once per test session."""
    return tuple(iter_targets(monad, kind, max_points))
