"""Pure numpy versions of the compiled kernels in ``_kernels.pyx``."""

import numpy as np

# points per chunk in polygon queries; keeps the (points x edges) temporaries small
_CHUNK = 256


def cauchy_product(a, b):
    n = min(len(a), len(b))
    return np.convolve(a[:n], b[:n])[:n]


def exp_recurrence(a):
    n = len(a)
    d = np.zeros(n, dtype=np.complex128)
    d[0] = 1.0
    ka = np.arange(n) * a
    for i in range(1, n):
        # sum_{k=1..i} k a_k d_{i-k}
        d[i] = np.dot(ka[1 : i + 1], d[i - 1 :: -1][:i]) / i
    return d


def div_recurrence(a, b):
    n = min(len(a), len(b))
    q = np.zeros(n, dtype=np.complex128)
    for i in range(n):
        s = a[i]
        if i:
            s = s - np.dot(b[1 : i + 1], q[i - 1 :: -1][:i])
        q[i] = s / b[0]
    return q


def compose(a, w):
    n = min(len(a), len(w))
    acc = np.zeros(n, dtype=np.complex128)
    acc[0] = a[n - 1]
    for j in range(n - 2, -1, -1):
        acc = np.convolve(acc, w[:n])[:n]
        acc[0] += a[j]
    return acc


def even_odd_contains(px, py, vx, vy):
    out = np.empty(len(px), dtype=bool)
    xi, yi = vx, vy
    xj, yj = np.roll(vx, 1), np.roll(vy, 1)
    dy = yj - yi
    safe = np.where(dy == 0, 1.0, dy)
    for s in range(0, len(px), _CHUNK):
        x = px[s : s + _CHUNK, None]
        y = py[s : s + _CHUNK, None]
        straddle = (yi > y) != (yj > y)
        xcross = (xj - xi) * (y - yi) / safe + xi
        hits = straddle & (x < xcross)
        out[s : s + _CHUNK] = (hits.sum(axis=1) % 2) == 1
    return out


def min_segment_distance(px, py, vx, vy):
    out = np.empty(len(px), dtype=np.float64)
    ax, ay = np.roll(vx, 1), np.roll(vy, 1)
    dx, dy = vx - ax, vy - ay
    len2 = dx * dx + dy * dy
    safe = np.where(len2 > 0, len2, 1.0)
    for s in range(0, len(px), _CHUNK):
        x = px[s : s + _CHUNK, None]
        y = py[s : s + _CHUNK, None]
        t = np.clip(((x - ax) * dx + (y - ay) * dy) / safe, 0.0, 1.0)
        t = np.where(len2 > 0, t, 0.0)
        ex = ax + t * dx - x
        ey = ay + t * dy - y
        out[s : s + _CHUNK] = np.sqrt((ex * ex + ey * ey).min(axis=1))
    return out
