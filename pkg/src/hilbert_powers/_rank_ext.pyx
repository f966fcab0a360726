# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled incremental row reduction over Z/p (p < 2^31)."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()


cdef inline int64_t _inv(int64_t a, int64_t p) nogil:
    cdef int64_t result = 1
    cdef int64_t base = a % p
    cdef int64_t e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


cdef class EchelonBasis:
    """Row-echelon basis grown one row at a time.

    Stored rows are monic at their pivot and zero before it.
    """

    cdef public int64_t p
    cdef public Py_ssize_t ncols
    cdef public Py_ssize_t rank
    cdef int64_t[:, ::1] rows
    cdef Py_ssize_t[::1] pivot_row
    cdef int64_t[::1] work

    def __init__(self, Py_ssize_t ncols, int64_t p):
        self.p = p
        self.ncols = ncols
        self.rank = 0
        self.rows = np.zeros((max(ncols, 1), max(ncols, 1)), dtype=np.int64)
        self.pivot_row = np.full(max(ncols, 1), -1, dtype=np.intp)
        self.work = np.zeros(max(ncols, 1), dtype=np.int64)

    def insert(self, block, Py_ssize_t cap=-1):
        """Reduce each row of ``block`` into the basis; stop once rank reaches cap."""
        cdef int64_t[:, ::1] mat = np.ascontiguousarray(block, dtype=np.int64) % self.p
        if cap < 0 or cap > self.ncols:
            cap = self.ncols
        with nogil:
            self._insert(mat, cap)
        return self.rank

    cdef void _insert(self, int64_t[:, ::1] mat, Py_ssize_t cap) noexcept nogil:
        cdef Py_ssize_t i, c, k, pr
        cdef Py_ssize_t nrows = mat.shape[0]
        cdef Py_ssize_t ncols = self.ncols
        cdef int64_t p = self.p
        cdef int64_t v, neg, inv
        for i in range(nrows):
            if self.rank >= cap:
                return
            for k in range(ncols):
                self.work[k] = mat[i, k]
            for c in range(ncols):
                v = self.work[c]
                if v == 0:
                    continue
                pr = self.pivot_row[c]
                if pr >= 0:
                    neg = p - v
                    for k in range(c, ncols):
                        if self.rows[pr, k] != 0:
                            self.work[k] = (self.work[k] + neg * self.rows[pr, k]) % p
                else:
                    inv = _inv(v, p)
                    for k in range(c, ncols):
                        self.rows[self.rank, k] = (self.work[k] * inv) % p
                    self.pivot_row[c] = self.rank
                    self.rank += 1
                    break
