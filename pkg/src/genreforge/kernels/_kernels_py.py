"""Pure-numpy kernel implementations.

These mirror the compiled extension exactly: same butterfly order, same
twiddle tables, same split-score formula, so results agree bit-for-bit
(integer count arithmetic is exact, float ops run in the same order).
"""

import numpy as np


def fft_batch(data, bitrev, twiddles):
    """Radix-2 DIT FFT along the last axis of a (batch, n) complex128 array.

    ``bitrev`` is the length-n bit-reversal permutation, ``twiddles`` the
    length-n/2 table exp(-2j*pi*k/n). Returns a new array.
    """
    out = np.ascontiguousarray(data[:, bitrev])
    n = out.shape[1]
    m = 2
    while m <= n:
        half = m >> 1
        stride = n // m
        w = twiddles[: half * stride : stride]
        blocks = out.reshape(out.shape[0], n // m, m)
        even = blocks[:, :, :half].copy()
        t = blocks[:, :, half:] * w
        blocks[:, :, :half] = even + t
        blocks[:, :, half:] = even - t
        m <<= 1
    return out


def best_split_gini(values, classes, n_classes, min_leaf):
    """Best binary split of a sorted feature column under Gini impurity.

    ``values`` ascending float64, ``classes`` aligned int64 codes. A split
    at position i sends rows [0..i] left. Maximizes
    ssq_left/n_left + ssq_right/n_right (equivalent to minimum weighted
    Gini); ties go to the smallest i. Returns (pos, score) or (-1, -inf).
    """
    n = values.shape[0]
    if n < 2 * min_leaf:
        return -1, -np.inf
    onehot = np.zeros((n, n_classes), dtype=np.int64)
    onehot[np.arange(n), classes] = 1
    left = np.cumsum(onehot, axis=0)
    total = left[-1]
    right = total[np.newaxis, :] - left
    ssq_l = np.einsum("ij,ij->i", left, left).astype(np.float64)
    ssq_r = np.einsum("ij,ij->i", right, right).astype(np.float64)
    nl = np.arange(1, n, dtype=np.float64)
    nr = np.arange(n - 1, 0, -1, dtype=np.float64)
    score = ssq_l[:-1] / nl + ssq_r[:-1] / nr
    valid = values[:-1] < values[1:]
    if min_leaf > 1:
        k = min_leaf - 1
        valid[:k] = False
        valid[n - 1 - k:] = False
    score = np.where(valid, score, -np.inf)
    pos = int(np.argmax(score))
    if not np.isfinite(score[pos]):
        return -1, -np.inf
    return pos, float(score[pos])


def best_split_sse(values, targets, min_leaf):
    """Best binary split of a sorted column for a regression target.

    Maximizes lsum^2/n_left + rsum^2/n_right, the sum-of-squared-error
    reduction up to a constant. Same conventions as best_split_gini.
    """
    n = values.shape[0]
    if n < 2 * min_leaf:
        return -1, -np.inf
    csum = np.cumsum(targets)
    total = csum[-1]
    nl = np.arange(1, n, dtype=np.float64)
    nr = np.arange(n - 1, 0, -1, dtype=np.float64)
    ls = csum[:-1]
    rs = total - ls
    score = (ls * ls) / nl + (rs * rs) / nr
    valid = values[:-1] < values[1:]
    if min_leaf > 1:
        k = min_leaf - 1
        valid[:k] = False
        valid[n - 1 - k:] = False
    score = np.where(valid, score, -np.inf)
    pos = int(np.argmax(score))
    if not np.isfinite(score[pos]):
        return -1, -np.inf
    return pos, float(score[pos])
