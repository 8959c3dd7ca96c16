# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Checked 64-bit Smith normal form kernel.

Same pivoting strategy as the pure-Python reference (_snf_pure): smallest
nonzero magnitude to the corner, Euclidean cross cleaning, divisibility
sweep.  Every store is range-checked; the moment an intermediate leaves the
signed 64-bit range the kernel raises KernelOverflow and the caller
restarts in arbitrary precision.  Products are formed in 128-bit, which
cannot overflow for 64-bit operands.
"""

from libc.stdint cimport INT64_MAX

cdef extern from *:
    ctypedef long long i128 "__int128_t"


class KernelOverflow(ArithmeticError):
    """An intermediate value left the signed 64-bit range."""


cdef inline i128 _fdiv(i128 a, i128 b) noexcept:
    # Floor division (C division truncates toward zero).
    cdef i128 q = a // b
    if a % b != 0 and ((a < 0) != (b < 0)):
        q -= 1
    return q


def smith_kernel(long long[::1] m, Py_ssize_t nr, Py_ssize_t nc):
    """Invariant factors of the row-major nr x nc matrix in `m`.

    Diagonalizes in place (pass a scratch copy).  Returns a list of
    positive ints, d_1 | d_2 | ... | d_k, k = rank.
    """
    cdef Py_ssize_t t = 0, i, j, pi, pj, bi, bj, offender
    cdef long long v, p, best, tmp
    cdef i128 q, acc
    cdef bint dirty
    factors = []

    if m.shape[0] != nr * nc:
        raise ValueError("buffer size does not match matrix shape")

    while t < nr and t < nc:
        # Global pivot search in the active submatrix.
        pi = -1
        pj = -1
        best = 0
        for i in range(t, nr):
            for j in range(t, nc):
                v = m[i * nc + j]
                if v != 0:
                    if v < 0:
                        v = -v
                    if pi < 0 or v < best:
                        pi = i
                        pj = j
                        best = v
        if pi < 0:
            break
        if pi != t:
            for j in range(nc):
                tmp = m[t * nc + j]
                m[t * nc + j] = m[pi * nc + j]
                m[pi * nc + j] = tmp
        if pj != t:
            for i in range(nr):
                tmp = m[i * nc + t]
                m[i * nc + t] = m[i * nc + pj]
                m[i * nc + pj] = tmp

        while True:
            # Euclidean cleaning of the pivot cross.
            while True:
                bi = -1
                bj = -1
                p = m[t * nc + t]
                best = p if p >= 0 else -p
                for i in range(t + 1, nr):
                    v = m[i * nc + t]
                    if v != 0:
                        if v < 0:
                            v = -v
                        if v < best:
                            bi = i
                            best = v
                for j in range(t + 1, nc):
                    v = m[t * nc + j]
                    if v != 0:
                        if v < 0:
                            v = -v
                        if v < best:
                            bi = -1
                            bj = j
                            best = v
                if bj >= 0:
                    for i in range(nr):
                        tmp = m[i * nc + t]
                        m[i * nc + t] = m[i * nc + bj]
                        m[i * nc + bj] = tmp
                elif bi >= 0:
                    for j in range(nc):
                        tmp = m[t * nc + j]
                        m[t * nc + j] = m[bi * nc + j]
                        m[bi * nc + j] = tmp

                p = m[t * nc + t]
                dirty = False
                for i in range(t + 1, nr):
                    v = m[i * nc + t]
                    if v != 0:
                        q = _fdiv(v, p)
                        if q != 0:
                            for j in range(t, nc):
                                acc = <i128> m[i * nc + j] - q * <i128> m[t * nc + j]
                                if acc > INT64_MAX or acc < -INT64_MAX:
                                    raise KernelOverflow()
                                m[i * nc + j] = <long long> acc
                        if m[i * nc + t] != 0:
                            dirty = True
                for j in range(t + 1, nc):
                    v = m[t * nc + j]
                    if v != 0:
                        q = _fdiv(v, p)
                        if q != 0:
                            for i in range(t, nr):
                                acc = <i128> m[i * nc + j] - q * <i128> m[i * nc + t]
                                if acc > INT64_MAX or acc < -INT64_MAX:
                                    raise KernelOverflow()
                                m[i * nc + j] = <long long> acc
                        if m[t * nc + j] != 0:
                            dirty = True
                if not dirty:
                    break

            # Divisibility sweep.
            p = m[t * nc + t]
            offender = -1
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if m[i * nc + j] % p != 0:
                        offender = i
                        break
                if offender >= 0:
                    break
            if offender < 0:
                break
            for j in range(t, nc):
                acc = <i128> m[t * nc + j] + <i128> m[offender * nc + j]
                if acc > INT64_MAX or acc < -INT64_MAX:
                    raise KernelOverflow()
                m[t * nc + j] = <long long> acc

        p = m[t * nc + t]
        factors.append(-p if p < 0 else p)
        t += 1

    return factors
