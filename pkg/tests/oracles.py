"""Independent reference implementations used only by the tests.

Nothing here imports the library's kernel, resampling or metric code.
"""

import math
from functools import lru_cache

import mpmath
import numpy as np

mpmath.mp.dps = 40


def cubic_mp(x, a=-0.5):
    t = abs(mpmath.mpf(x))
    a = mpmath.mpf(a)
    if t <= 1:
        return (a + 2) * t**3 - (a + 3) * t**2 + 1
    if t < 2:
        return a * t**3 - 5 * a * t**2 + 8 * a * t - 4 * a
    return mpmath.mpf(0)


def lanczos_mp(x, a=3):
    t = abs(mpmath.mpf(x))
    if t >= a:
        return mpmath.mpf(0)
    return mpmath.sinc(mpmath.pi * t) * mpmath.sinc(mpmath.pi * t / a)


def kernel_mp(kind, a, x):
    return cubic_mp(x, a) if kind == "cubic" else lanczos_mp(x, a)


@lru_cache(maxsize=None)
def kernel_f(kind, a, x):
    return float(kernel_mp(kind, a, x))


def naive_upsample_2d(plane, n, kind, a):
    """Direct tensor-product interpolation, one output pixel at a time.

    Output (oy, ox) sits at source coordinate (oy/n, ox/n); source indices
    are clamped to the image; weights are normalized by their 2-D sum.
    """
    h, w = plane.shape
    support = 2 if kind == "cubic" else a
    out = np.zeros((h * n, w * n))
    for oy in range(h * n):
        for ox in range(w * n):
            ys, xs = oy / n, ox / n
            acc = wsum = 0.0
            for iy in range(int(math.floor(ys)) - support, int(math.floor(ys)) + support + 2):
                for ix in range(int(math.floor(xs)) - support, int(math.floor(xs)) + support + 2):
                    k = kernel_f(kind, a, iy - ys) * kernel_f(kind, a, ix - xs)
                    yy = min(max(iy, 0), h - 1)
                    xx = min(max(ix, 0), w - 1)
                    acc += k * plane[yy, xx]
                    wsum += k
            out[oy, ox] = acc / wsum
    return out


def loop_mse(a, b):
    a = np.asarray(a).ravel()
    b = np.asarray(b).ravel()
    total = 0.0
    for x, y in zip(a, b):
        total += (float(x) - float(y)) ** 2
    return total / len(a)


def window_ssim(a, b, win=8, c1=0.01**2, c2=0.03**2):
    h, w = a.shape
    vals = []
    for y in range(h - win + 1):
        for x in range(w - win + 1):
            pa = a[y:y + win, x:x + win].ravel()
            pb = b[y:y + win, x:x + win].ravel()
            ma, mb = pa.mean(), pb.mean()
            va = ((pa - ma) ** 2).mean()
            vb = ((pb - mb) ** 2).mean()
            cov = ((pa - ma) * (pb - mb)).mean()
            vals.append(((2 * ma * mb + c1) * (2 * cov + c2)) / ((ma**2 + mb**2 + c1) * (va + vb + c2)))
    return float(np.mean(vals))


def laplacian_loop(plane):
    h, w = plane.shape
    acc = []
    for y in range(1, h - 1):
        for x in range(1, w - 1):
            r = (plane[y - 1, x] + plane[y + 1, x] + plane[y, x - 1] + plane[y, x + 1]
                 - 4 * plane[y, x])
            acc.append(r * r)
    return float(np.mean(acc))
