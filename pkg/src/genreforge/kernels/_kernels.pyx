# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: batched radix-2 FFT and decision-tree split scans.

Must stay operation-for-operation identical to _kernels_py so the two
backends agree to the last bit; change both together.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def fft_batch(data, bitrev, twiddles):
    """Radix-2 DIT FFT along the last axis of a (batch, n) complex128 array."""
    out = np.ascontiguousarray(np.asarray(data)[:, np.asarray(bitrev)])
    cdef double complex[:, ::1] a = out
    cdef const double complex[::1] tw = np.ascontiguousarray(twiddles)
    cdef Py_ssize_t batch = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t m, half, stride, b, base, j
    cdef double complex w, t, even
    m = 2
    while m <= n:
        half = m >> 1
        stride = n // m
        for b in range(batch):
            base = 0
            while base < n:
                for j in range(half):
                    w = tw[j * stride]
                    t = w * a[b, base + half + j]
                    even = a[b, base + j]
                    a[b, base + j] = even + t
                    a[b, base + half + j] = even - t
                base += m
        m <<= 1
    return out


def best_split_gini(values, classes, n_classes, min_leaf):
    """Best binary split of a sorted feature column under Gini impurity."""
    cdef const double[::1] v = np.ascontiguousarray(values)
    cdef const long long[::1] c = np.ascontiguousarray(classes, dtype=np.int64)
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t k = n_classes
    cdef Py_ssize_t ml = min_leaf
    if n < 2 * ml:
        return -1, -np.inf
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cnt_l_arr = np.zeros(k, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cnt_r_arr = np.zeros(k, dtype=np.int64)
    cdef long long[::1] cnt_l = cnt_l_arr
    cdef long long[::1] cnt_r = cnt_r_arr
    cdef Py_ssize_t i
    cdef long long cls, ssq_l = 0, ssq_r = 0
    for i in range(n):
        cnt_r[c[i]] += 1
    for i in range(k):
        ssq_r += cnt_r[i] * cnt_r[i]
    cdef double best = -np.inf
    cdef double score
    cdef Py_ssize_t best_pos = -1
    for i in range(n - 1):
        cls = c[i]
        ssq_l += 2 * cnt_l[cls] + 1
        cnt_l[cls] += 1
        ssq_r -= 2 * cnt_r[cls] - 1
        cnt_r[cls] -= 1
        if i + 1 < ml or n - 1 - i < ml:
            continue
        if not v[i] < v[i + 1]:
            continue
        score = (<double> ssq_l) / (<double> (i + 1)) + (<double> ssq_r) / (<double> (n - 1 - i))
        if score > best:
            best = score
            best_pos = i
    if best_pos < 0:
        return -1, -np.inf
    return best_pos, best


def best_split_sse(values, targets, min_leaf):
    """Best binary split of a sorted column for a regression target."""
    cdef const double[::1] v = np.ascontiguousarray(values)
    cdef const double[::1] t = np.ascontiguousarray(targets)
    cdef Py_ssize_t n = v.shape[0]
    cdef Py_ssize_t ml = min_leaf
    if n < 2 * ml:
        return -1, -np.inf
    cdef double total = 0.0, lsum = 0.0, rs
    cdef Py_ssize_t i
    for i in range(n):
        total += t[i]
    cdef double best = -np.inf
    cdef double score
    cdef Py_ssize_t best_pos = -1
    for i in range(n - 1):
        lsum += t[i]
        if i + 1 < ml or n - 1 - i < ml:
            continue
        if not v[i] < v[i + 1]:
            continue
        rs = total - lsum
        score = (lsum * lsum) / (<double> (i + 1)) + (rs * rs) / (<double> (n - 1 - i))
        if score > best:
            best = score
            best_pos = i
    if best_pos < 0:
        return -1, -np.inf
    return best_pos, best
