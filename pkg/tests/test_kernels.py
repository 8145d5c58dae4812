import numpy as np
import pytest

from edizoom import kernels
from oracles import cubic_mp, lanczos_mp

ALL = [kernels.cubic(), kernels.cubic(-0.75), kernels.lanczos(2), kernels.lanczos(3), kernels.lanczos(4)]


def test_cubic_values():
    k = kernels.cubic()
    assert kernels.evaluate(k, 0) == 1.0
    assert kernels.evaluate(k, 1) == 0.0
    assert kernels.evaluate(k, 2) == 0.0
    # (1.5)(0.125) - (2.5)(0.25) + 1
    assert kernels.evaluate(k, 0.5) == 0.5625
    assert kernels.evaluate(k, 1.5) == -0.0625


def test_lanczos_values():
    k = kernels.lanczos(3)
    assert kernels.evaluate(k, 0) == 1.0
    for m in (1, 2, 3, -1, -2, 3.5, 10):
        assert kernels.evaluate(k, m) == 0.0
    # sinc(0.5) * sinc(1/6), 40-digit mpmath
    assert kernels.evaluate(k, 0.5) == pytest.approx(0.6079271018540266286632767792583658334261, abs=1e-15)


@pytest.mark.parametrize("k,expected", [(kernels.cubic(), 2.0), (kernels.lanczos(3), 3.0), (kernels.lanczos(2), 2.0)])
def test_support(k, expected):
    assert kernels.support(k) == expected
    assert k.support == expected


def test_invalid_kernels():
    with pytest.raises(ValueError):
        kernels.cubic(0.5)
    with pytest.raises(ValueError):
        kernels.lanczos(5)
    with pytest.raises(ValueError):
        kernels.Kernel("gaussian", 1.0)


def test_from_name():
    assert kernels.from_name("lanczos3") == kernels.lanczos(3)
    assert kernels.from_name("cubic", -0.75) == kernels.cubic(-0.75)
    with pytest.raises(ValueError):
        kernels.from_name("box")


@pytest.mark.parametrize("k", ALL, ids=lambda k: k.name)
def test_symmetric(k, rng):
    x = rng.uniform(-6, 6, 1000)
    assert np.array_equal(kernels.evaluate(k, x), kernels.evaluate(k, -x))


@pytest.mark.parametrize("k", ALL, ids=lambda k: k.name)
def test_compact_support(k, rng):
    x = rng.uniform(k.support, 20, 1000) * rng.choice([-1, 1], 1000)
    assert not np.any(kernels.evaluate(k, x))


@pytest.mark.parametrize("k", ALL, ids=lambda k: k.name)
def test_interpolating(k):
    assert kernels.evaluate(k, 0.0) == 1.0
    for m in range(1, int(k.support) + 1):
        assert kernels.evaluate(k, m) == 0.0
        assert kernels.evaluate(k, -m) == 0.0


@pytest.mark.parametrize("a", [-0.5, -0.75, -1.0])
def test_cubic_partition_of_unity(a, rng):
    k = kernels.cubic(a)
    x = rng.uniform(0, 1, 1000)
    total = sum(kernels.evaluate(k, x + m) for m in range(-3, 4))
    assert np.max(np.abs(total - 1)) <= 1e-9


def test_lanczos_is_not_partition_of_unity():
    k = kernels.lanczos(3)
    total = sum(kernels.evaluate(k, 0.5 + m) for m in range(-4, 5))
    assert abs(total - 1) > 1e-4


@pytest.mark.parametrize("k", ALL, ids=lambda k: k.name)
def test_matches_high_precision(k, rng):
    x = rng.uniform(-k.support, k.support, 200)
    ref = [float(cubic_mp(v, k.a) if k.kind == "cubic" else lanczos_mp(v, k.a)) for v in x]
    assert np.max(np.abs(kernels.evaluate(k, x) - ref)) <= 1e-12


def test_scalar_and_array_forms():
    k = kernels.cubic()
    assert isinstance(kernels.evaluate(k, 0.3), float)
    assert kernels.evaluate(k, [0.0, 1.0]).tolist() == [1.0, 0.0]
    assert k(0.5) == 0.5625
