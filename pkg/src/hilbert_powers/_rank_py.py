"""Numpy fallback for the incremental rank kernel.

The basis is kept in reduced row-echelon form, so reducing an incoming row
is a single matrix-vector product against the pivot entries.
"""

from __future__ import annotations

import numpy as np

_INT64_MAX = np.iinfo(np.int64).max


class EchelonBasis:
    def __init__(self, ncols: int, p: int):
        self.p = int(p)
        self.ncols = int(ncols)
        self.rank = 0
        self._rows = np.zeros((max(ncols, 1), max(ncols, 1)), dtype=np.int64)
        self._pivots: list = []
        # largest number of products (p-1)^2 that can be summed without overflow
        self._chunk = max(1, _INT64_MAX // max((self.p - 1) ** 2, 1))

    def _dot(self, coeffs, basis):
        p = self.p
        out = np.zeros(basis.shape[1], dtype=np.int64)
        for start in range(0, len(coeffs), self._chunk):
            stop = start + self._chunk
            out = (out + coeffs[start:stop] @ basis[start:stop]) % p
        return out

    def insert(self, block, cap: int = -1) -> int:
        p = self.p
        if cap < 0 or cap > self.ncols:
            cap = self.ncols
        mat = np.asarray(block, dtype=np.int64) % p
        for row in mat:
            if self.rank >= cap:
                break
            r = self.rank
            if r:
                basis = self._rows[:r]
                row = (row - self._dot(row[self._pivots], basis)) % p
            nz = np.flatnonzero(row)
            if nz.size == 0:
                continue
            c = int(nz[0])
            row = (row * pow(int(row[c]), p - 2, p)) % p
            if r:
                # clear the new pivot column from the existing rows
                col = self._rows[:r, c].copy()
                if col.any():
                    self._rows[:r] = (self._rows[:r] - _outer_mod(col, row, p)) % p
            self._rows[r] = row
            self._pivots.append(c)
            self.rank += 1
        return self.rank


def _outer_mod(col, row, p):
    if (p - 1) ** 2 <= _INT64_MAX:
        return np.outer(col, row) % p
    return np.array([[(int(a) * int(b)) % p for b in row] for a in col], dtype=np.int64)
