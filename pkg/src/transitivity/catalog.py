"""Bundled catalogs of all graphs up to isomorphism, one graph6 per line.

Files ``data/graphs{n}.g6`` cover ``1 <= n <= 8`` and were produced by
``scripts/build_catalogs.py``.
"""
from __future__ import annotations

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .errors import BudgetExceeded
from .graph import Graph
from .graph_io import read_graph6_lines

MAX_N = 8


@lru_cache(maxsize=None)
def load_catalog(n: int) -> tuple[Graph, ...]:
    if not 1 <= n <= MAX_N:
        raise BudgetExceeded(f"no bundled catalog for n={n} (have 1..{MAX_N})")
    text = resources.files("transitivity").joinpath(f"data/graphs{n}.g6").read_text()
    return tuple(read_graph6_lines(text))


def iter_catalog(n_max: int, n_min: int = 1,
                 files: Optional[Iterable[Path]] = None) -> Iterator[Graph]:
    """All graphs with ``n_min <= n <= n_max``; from ``files`` when given
    (graph6 lines, any order), else from the bundled catalogs."""
    if files is not None:
        for f in files:
            for g in read_graph6_lines(Path(f).read_text()):
                if n_min <= g.n <= n_max:
                    yield g
        return
    for n in range(n_min, n_max + 1):
        yield from load_catalog(n)
