# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for loopless generation of the shortest solution.

Same change-stream contract as ziggu._gen_py; see that module for the
algorithm descriptions.  Each object is its own cursor, so distinct
iterators are independent.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

__all__ = ["short_changes_index", "short_changes_directed"]


cdef class _IndexChanges:
    cdef int n, i, burst, bdir
    cdef signed char *w

    def __cinit__(self, int n):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        self.n = n
        self.i = 1
        self.burst = 0
        self.bdir = 0
        self.w = <signed char *> PyMem_Malloc((n + 1) * sizeof(signed char))
        if self.w == NULL:
            raise MemoryError()
        for j in range(n + 1):
            self.w[j] = 0

    def __dealloc__(self):
        PyMem_Free(self.w)

    def __iter__(self):
        return self

    def __next__(self):
        cdef int i = self.i
        cdef int d, v
        if self.burst > 0:
            self.w[1] = self.w[1] + self.bdir
            self.burst -= 1
            if self.burst == 0:
                self.i = 2
                if self.n == 1:
                    self.i = self.n + 1
            return (1, self.bdir)
        if i > self.n:
            raise StopIteration
        if i == 1:
            self.bdir = 1 if self.w[1] == 0 else -1
            self.burst = 3
            return self.__next__()
        if (self.w[i] + self.w[i - 1]) % 2 == 1:
            d = 1
        else:
            d = -1
        v = self.w[i] + d
        self.w[i] = v
        if v == 0 or v == 3:
            self.i = i + 1
        else:
            self.i = i - 1
        return (i, d)


cdef class _DirectedChanges:
    cdef int n, i
    cdef signed char *w
    cdef signed char *dirs

    def __cinit__(self, int n):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        self.n = n
        self.i = 1
        self.w = <signed char *> PyMem_Malloc((n + 1) * sizeof(signed char))
        self.dirs = <signed char *> PyMem_Malloc((n + 1) * sizeof(signed char))
        if self.w == NULL or self.dirs == NULL:
            raise MemoryError()
        for j in range(n + 1):
            self.w[j] = 0
            self.dirs[j] = 1

    def __dealloc__(self):
        PyMem_Free(self.w)
        PyMem_Free(self.dirs)

    def __iter__(self):
        return self

    def __next__(self):
        cdef int i = self.i
        cdef int d, v
        if i > self.n:
            raise StopIteration
        d = self.dirs[i]
        v = self.w[i] + d
        self.w[i] = v
        if v == 0 or v == 3:
            self.dirs[i] = -d
            self.i = i + 1
        elif i > 1:
            self.i = i - 1
        return (i, d)


def short_changes_index(int n):
    return _IndexChanges(n)


def short_changes_directed(int n):
    return _DirectedChanges(n)
