# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel: odometer scan of a box with incremental row sums.

Semantics match ``_purecount.count_box`` exactly. All arithmetic is int64; the
dispatcher in ``counting`` only routes work here after proving every row
evaluation fits comfortably in 64 bits.
"""

from libc.stdlib cimport calloc, free, malloc


def count_box(coeffs, bounds, lower, upper):
    """Count integer points of {x : coeffs . x <= bounds rowwise} in the box.

    Returns (total, profile) with profile[i] = number of points whose last
    coordinate equals lower[-1] + i.
    """
    cdef Py_ssize_t dim = len(lower)
    cdef Py_ssize_t nrows = len(bounds)
    cdef Py_ssize_t i, j, r
    cdef long long last_lo, last_hi, span, acc, total
    cdef long long *C = NULL
    cdef long long *B = NULL
    cdef long long *lo = NULL
    cdef long long *hi = NULL
    cdef long long *x = NULL
    cdef long long *rowval = NULL
    cdef long long *prof = NULL
    cdef Py_ssize_t width
    cdef bint ok

    if dim < 1:
        raise ValueError("kernel requires dimension >= 1")

    last_lo = lower[dim - 1]
    last_hi = upper[dim - 1]
    if last_hi < last_lo:
        return 0, []
    width = <Py_ssize_t> (last_hi - last_lo + 1)
    for j in range(dim):
        if lower[j] > upper[j]:
            return 0, [0] * width

    C = <long long *> malloc(max(1, nrows * dim) * sizeof(long long))
    B = <long long *> malloc(max(1, nrows) * sizeof(long long))
    lo = <long long *> malloc(dim * sizeof(long long))
    hi = <long long *> malloc(dim * sizeof(long long))
    x = <long long *> malloc(dim * sizeof(long long))
    rowval = <long long *> malloc(max(1, nrows) * sizeof(long long))
    prof = <long long *> calloc(width, sizeof(long long))
    if C == NULL or B == NULL or lo == NULL or hi == NULL or x == NULL or rowval == NULL or prof == NULL:
        free(C); free(B); free(lo); free(hi); free(x); free(rowval); free(prof)
        raise MemoryError()

    try:
        for r in range(nrows):
            B[r] = bounds[r]
            row = coeffs[r]
            for j in range(dim):
                C[r * dim + j] = row[j]
        for j in range(dim):
            lo[j] = lower[j]
            hi[j] = upper[j]
            x[j] = lo[j]
        for r in range(nrows):
            acc = 0
            for j in range(dim):
                acc += C[r * dim + j] * lo[j]
            rowval[r] = acc

        total = 0
        with nogil:
            while True:
                ok = True
                for r in range(nrows):
                    if rowval[r] > B[r]:
                        ok = False
                        break
                if ok:
                    total += 1
                    prof[x[dim - 1] - last_lo] += 1
                j = 0
                while j < dim:
                    if x[j] < hi[j]:
                        x[j] += 1
                        for r in range(nrows):
                            rowval[r] += C[r * dim + j]
                        break
                    span = hi[j] - lo[j]
                    for r in range(nrows):
                        rowval[r] -= C[r * dim + j] * span
                    x[j] = lo[j]
                    j += 1
                if j == dim:
                    break

        profile = [prof[i] for i in range(width)]
        return total, profile
    finally:
        free(C); free(B); free(lo); free(hi); free(x); free(rowval); free(prof)
