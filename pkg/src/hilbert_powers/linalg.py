"""Exact linear algebra over Z/p: the rank engine behind the generic-forms slices.

The row-reduction kernel comes from the compiled ``_rank_ext`` extension
when it has been built, and from the numpy implementation in ``_rank_py``
otherwise.  Set ``HILBERT_POWERS_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable

import gmpy2
import numpy as np

from . import _rank_py

DEFAULT_PRIME = 1_000_003
MIN_PRIME = 1_000_000
MAX_PRIME = 2**31

if os.environ.get("HILBERT_POWERS_PURE"):
    _ext = None
else:
    try:
        from . import _rank_ext as _ext
    except ImportError:  # extension not built
        _ext = None

BACKEND = "compiled" if _ext is not None else "numpy"


def echelon_class(backend: str | None = None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _ext is None:
            raise RuntimeError("compiled rank kernel is not available")
        return _ext.EchelonBasis
    if backend == "numpy":
        return _rank_py.EchelonBasis
    raise ValueError(f"unknown backend {backend!r}")


@dataclass(frozen=True)
class PrimeFieldContext:
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        p = int(self.p)
        if not MIN_PRIME <= p < MAX_PRIME:
            raise ValueError(f"prime must lie in [{MIN_PRIME}, 2^31), got {p}")
        if not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    def reduce(self, values) -> np.ndarray:
        return np.asarray(values, dtype=np.int64) % self.p

    def inverse(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)


@dataclass
class SliceMatrix:
    """A stream of coefficient rows with a fixed column count.

    ``rows`` yields 2-D integer blocks (or single rows) of width ``ncols``;
    it is consumed lazily so reduction can stop early.
    """

    context: PrimeFieldContext
    ncols: int
    rows: Iterable = field(default_factory=list)


def rank_with_early_exit(m: SliceMatrix, cap: int | None = None,
                         backend: str | None = None) -> int:
    """min(rank, cap) over Z/p, stopping as soon as the running rank reaches cap."""
    if cap is None:
        cap = m.ncols
    if cap < 0 or cap > m.ncols:
        raise ValueError(f"cap must lie in [0, {m.ncols}], got {cap}")
    if cap == 0 or m.ncols == 0:
        return 0
    basis = echelon_class(backend)(m.ncols, m.context.p)
    for block in m.rows:
        block = np.atleast_2d(np.asarray(block, dtype=np.int64))
        if block.size == 0:
            continue
        if block.shape[1] != m.ncols:
            raise ValueError(f"row width {block.shape[1]} != ncols {m.ncols}")
        if basis.insert(block, cap) >= cap:
            break
    return min(basis.rank, cap)


def matrix_rank(matrix, p: int = DEFAULT_PRIME, backend: str | None = None) -> int:
    mat = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    ctx = PrimeFieldContext(p)
    return rank_with_early_exit(SliceMatrix(ctx, mat.shape[1], [mat]), backend=backend)
