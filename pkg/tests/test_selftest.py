import pytest

from edizoom import selftest
from edizoom.cli import main
from faults import FAULTS


def test_all_checks_pass():
    results = selftest.run(seed=0)
    assert len(results) == len(selftest.CHECKS)
    assert all(r.passed for r in results), [r.line() for r in results if not r.passed]


@pytest.mark.parametrize("fault", FAULTS)
def test_injected_faults_are_caught(fault, monkeypatch, capsys):
    FAULTS[fault](monkeypatch)
    assert main(["selftest"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out and "checks failed" in out


def test_fault_names_failed_property(monkeypatch, capsys):
    FAULTS["kernel sign flip"](monkeypatch)
    main(["selftest"])
    out = capsys.readouterr().out
    assert "FAIL  kernel closed form" in out
    assert "FAIL  cubic partition of unity" in out


def test_seeded_output_is_deterministic(capsys):
    assert main(["selftest", "--seed", "42"]) == 0
    first = capsys.readouterr().out
    assert main(["selftest", "--seed", "42"]) == 0
    assert capsys.readouterr().out == first
    assert first.rstrip().endswith("checks passed")


def test_reference_kernel_matches_library(rng):
    from edizoom import kernels

    for k in selftest.KERNELS:
        for x in rng.uniform(-5, 5, 50):
            assert selftest.reference_kernel(k.kind, k.a, x) == pytest.approx(kernels.evaluate(k, x), abs=1e-12)
