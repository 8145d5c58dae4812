"""
Interpolation kernels and their phase weights
=============================================

The two zoom kernels, evaluated directly, and the per-phase tap tables
the resampler derives from them.
"""

import numpy as np

from edizoom import kernels
from edizoom.resample import build_weights

# Cubic convolution (a = -0.5) and Lanczos3 on a coarse grid of offsets
x = np.linspace(-3, 3, 13)
for k in (kernels.cubic(), kernels.lanczos(3)):
    print(f"{k.name:>9}: " + " ".join(f"{v:+.4f}" for v in kernels.evaluate(k, x)))

# Both are interpolating: 1 at the origin, 0 at every other integer
print(kernels.evaluate(kernels.lanczos(3), [0, 1, 2, 3]))

# The cubic family sums to one under integer shifts; Lanczos does not,
# which is why every phase of a weight table is renormalized.
frac = 0.3
for k in (kernels.cubic(), kernels.lanczos(3)):
    shifts = np.arange(-4, 5)
    print(k.name, "sum of shifted copies:", kernels.evaluate(k, frac + shifts).sum())

# Phase tables for a 4x zoom: phase p interpolates at position p / 4
table = build_weights(len_in=16, factor=4, kernel=kernels.lanczos(3))
for p, phase in enumerate(table.phases):
    taps = ", ".join(f"{o:+d}:{w:+.4f}" for o, w in zip(phase.offsets, phase.weights))
    print(f"phase {p}: {taps}")
