"""Built-in invariant checks, run by ``edizoom selftest``.

Every check calls the library through its module attributes so that a
patched function (fault injection in the test suite) is what gets checked.
The reference formulas and the direct 2-D convolution below deliberately
share no code with the library's kernel and resampling paths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ediz, kernels, resample
from .raster import Raster


@dataclass
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name:<28} {self.detail}"


def reference_kernel(kind: str, a: float, x: float) -> float:
    """Scalar closed-form kernel value, written out independently."""
    t = abs(x)
    if kind == kernels.CUBIC:
        if t <= 1:
            return (a + 2) * t**3 - (a + 3) * t**2 + 1
        if t < 2:
            return a * t**3 - 5 * a * t**2 + 8 * a * t - 4 * a
        return 0.0
    if t >= a:
        return 0.0
    if t == 0:
        return 1.0
    if t == round(t):
        return 0.0
    return math.sin(math.pi * t) / (math.pi * t) * math.sin(math.pi * t / a) / (math.pi * t / a)


def direct_upsample(plane: np.ndarray, n: int, kernel: kernels.Kernel) -> np.ndarray:
    """Per-output-pixel 2-D tensor-product interpolation with clamped edges."""
    h, w = plane.shape
    s = int(math.ceil(kernel.support))
    out = np.empty((h * n, w * n))
    for oy in range(h * n):
        ys = oy / n
        for ox in range(w * n):
            xs = ox / n
            acc = 0.0
            wsum = 0.0
            for iy in range(math.floor(ys) - s, math.floor(ys) + s + 2):
                ky = reference_kernel(kernel.kind, kernel.a, iy - ys)
                if ky == 0.0:
                    continue
                for ix in range(math.floor(xs) - s, math.floor(xs) + s + 2):
                    kx = reference_kernel(kernel.kind, kernel.a, ix - xs)
                    if kx == 0.0:
                        continue
                    v = plane[min(max(iy, 0), h - 1), min(max(ix, 0), w - 1)]
                    acc += kx * ky * v
                    wsum += kx * ky
            out[oy, ox] = acc / wsum
    return out


KERNELS = (kernels.cubic(), kernels.lanczos(2), kernels.lanczos(3), kernels.lanczos(4))


def _check_symmetry(rng):
    worst = 0.0
    for k in KERNELS:
        x = rng.uniform(-k.support - 1, k.support + 1, 1000)
        worst = max(worst, float(np.max(np.abs(kernels.evaluate(k, x) - kernels.evaluate(k, -x)))))
    return worst == 0.0, f"max |k(x)-k(-x)| = {worst:.3g}"


def _check_support(rng):
    bad = 0
    for k in KERNELS:
        x = rng.uniform(k.support, k.support + 5, 500) * rng.choice([-1, 1], 500)
        x[0] = k.support
        bad += int(np.count_nonzero(kernels.evaluate(k, x)))
    return bad == 0, f"{bad} nonzero values outside support"


def _check_interpolating(rng):
    bad = []
    for k in KERNELS:
        if kernels.evaluate(k, 0.0) != 1.0:
            bad.append(f"{k.name}(0)")
        for m in range(1, int(k.support) + 1):
            if kernels.evaluate(k, m) != 0.0 or kernels.evaluate(k, -m) != 0.0:
                bad.append(f"{k.name}({m})")
    return not bad, "k(0)=1, k(m)=0" if not bad else "violations: " + ", ".join(bad)


def _check_closed_form(rng):
    worst = 0.0
    for k in KERNELS:
        x = rng.uniform(-k.support, k.support, 1000)
        got = kernels.evaluate(k, x)
        ref = np.array([reference_kernel(k.kind, k.a, v) for v in x])
        worst = max(worst, float(np.max(np.abs(got - ref))))
    return worst <= 1e-12, f"max deviation {worst:.3g} (tol 1e-12)"


def _check_partition(rng):
    k = kernels.cubic()
    x = rng.uniform(0, 1, 1000)
    total = sum(kernels.evaluate(k, x + m) for m in range(-3, 4))
    worst = float(np.max(np.abs(total - 1.0)))
    return worst <= 1e-9, f"max |sum-1| = {worst:.3g} (tol 1e-9)"


def _check_phase_sums(rng):
    worst = 0.0
    single = True
    for k in KERNELS:
        for n in (2, 3, 4):
            table = resample.build_weights(16, n, k)
            for p in table.phases:
                worst = max(worst, abs(float(p.weights.sum()) - 1.0))
            p0 = table.phases[0]
            nz = np.flatnonzero(p0.weights)
            single &= len(nz) == 1 and p0.weights[nz[0]] == 1.0 and p0.offsets[nz[0]] == 0
    ok = worst <= 1e-12 and single
    return ok, f"max |phase sum-1| = {worst:.3g}, phase-0 single tap: {single}"


def _check_constant(rng):
    worst = 0.0
    for k in KERNELS:
        for n in (2, 4):
            c = float(rng.uniform(0.1, 0.9))
            out = resample.upsample(Raster(np.full((7, 9), c)), n, k)
            worst = max(worst, float(np.max(np.abs(out.data - c))))
    return worst <= 1e-9, f"max drift {worst:.3g} (tol 1e-9)"


def _check_separable(rng):
    worst = 0.0
    for k in (kernels.cubic(), kernels.lanczos(3)):
        for n in (2, 4):
            plane = rng.random((8, 8))
            got = resample.upsample(Raster(plane), n, k).data[:, :, 0]
            worst = max(worst, float(np.max(np.abs(got - direct_upsample(plane, n, k)))))
    return worst <= 1e-6, f"max |two-pass - direct| = {worst:.3g} (tol 1e-6)"


def _check_round_trip(rng):
    worst = 0.0
    for k in (kernels.cubic(), kernels.lanczos(3)):
        for n in (2, 4):
            img = Raster(rng.random((16, 16)))
            back = resample.subsample(resample.upsample(img, n, k), n)
            worst = max(worst, float(np.max(np.abs(back.data - img.data))))
    return worst <= 1e-6, f"max |subsample(upsample(I)) - I| = {worst:.3g}"


def _check_ediz_constant(rng):
    img = Raster(np.full((16, 16, 3), 0.3))
    worst = 0.0
    for k in (kernels.cubic(), kernels.lanczos(3)):
        for n in (2, 4):
            tr = ediz.ediz_zoom(img, ediz.EdizConfig(n, k))
            worst = max(worst, float(np.max(np.abs(tr.i_out.data - tr.i_in_zoom.data))))
            worst = max(worst, float(np.max(np.abs(tr.error.data))))
            worst = max(worst, float(np.max(np.abs(tr.i_out.data - 0.3))))
    return worst <= 1e-9, f"max deviation {worst:.3g} (tol 1e-9)"


def _check_ediz_ramp(rng):
    x = np.arange(32) / 31.0
    img = Raster(np.tile(x, (32, 1)))
    cfg = ediz.EdizConfig(2, kernels.cubic())
    err = ediz.reconstruction_error(img, cfg).data[:, 4:-4, 0]
    worst = float(np.max(np.abs(err)))
    return worst <= 1e-6, f"interior |e| = {worst:.3g} (tol 1e-6)"


def _check_ediz_gain0(rng):
    img = Raster(rng.random((16, 16)))
    cfg = ediz.EdizConfig(2, kernels.cubic(), error_gain=0.0)
    out = ediz.ediz_zoom(img, cfg).i_out
    same = bool(np.array_equal(out.data, ediz.plain_zoom(img, cfg).data))
    return same, "gain 0 output identical to plain zoom" if same else "gain 0 output differs"


def _check_ediz_linear(rng):
    img = Raster(rng.random((16, 16)))
    cfg = ediz.EdizConfig(2, kernels.lanczos(3))
    a = ediz.ediz_zoom(img * 0.5, cfg).i_out.data
    b = 0.5 * ediz.ediz_zoom(img, cfg).i_out.data
    worst = float(np.max(np.abs(a - b)))
    return worst <= 1e-9, f"max |f(0.5 I) - 0.5 f(I)| = {worst:.3g}"


CHECKS = (
    ("kernel symmetry", _check_symmetry),
    ("kernel compact support", _check_support),
    ("kernel interpolating", _check_interpolating),
    ("kernel closed form", _check_closed_form),
    ("cubic partition of unity", _check_partition),
    ("weight table phases", _check_phase_sums),
    ("constant preservation", _check_constant),
    ("separability oracle", _check_separable),
    ("decimation round trip", _check_round_trip),
    ("ediz constant fixed point", _check_ediz_constant),
    ("ediz cubic ramp", _check_ediz_ramp),
    ("ediz gain zero", _check_ediz_gain0),
    ("ediz linearity", _check_ediz_linear),
)


def run(seed: int = 0) -> list[Check]:
    results = []
    for i, (name, fn) in enumerate(CHECKS):
        rng = np.random.default_rng([seed, i])
        try:
            ok, detail = fn(rng)
        except Exception as exc:  # a crashing property is a failing property
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(Check(name, bool(ok), detail))
    return results
