from __future__ import annotations

from hypothesis import strategies as st

from laxtop import FinMap, FinSetRef, MonadSpec, Rel, TSpace, saturate


@st.composite
def finmaps(draw, max_size: int = 4, dom: int = None, cod: int = None) -> FinMap:
    n = draw(st.integers(0, max_size)) if dom is None else dom
    m = draw(st.integers(1 if n else 0, max_size)) if cod is None else cod
    table = draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)) if m else []
    return FinMap(n, m, table)


@st.composite
def relations(draw, n: int = None, m: int = None, max_size: int = 4) -> Rel:
    n = draw(st.integers(0, max_size)) if n is None else n
    m = draw(st.integers(0, max_size)) if m is None else m
    cells = [(x, y) for x in range(n) for y in range(m)]
    chosen = draw(st.sets(st.sampled_from(cells))) if cells else set()
    return Rel(FinSetRef(n), FinSetRef(m), chosen)


@st.composite
def compact_spaces(draw, monad: MonadSpec, max_points: int = 4) -> TSpace:
    """Spaces in which every element has a limit: one is drawn per element, then saturated."""
    n = draw(st.integers(1, max_points))
    pairs = []
    for t in range(monad.size(n)):
        limits = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=2))
        pairs.extend((t, y) for y in limits)
    return saturate(TSpace(monad, n, pairs))
