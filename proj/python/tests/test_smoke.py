import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

import fsrpy

FIXTURES = Path(os.environ.get("FSR_FIXTURES", Path(__file__).resolve().parents[2] / "tests" / "fixtures"))
R1 = str(FIXTURES / "R1.json")
R2 = str(FIXTURES / "R2.json")
S2 = str(FIXTURES / "S2.json")


def test_thresholds_are_fractions():
    assert fsrpy.f_threshold(S2, "x^2,y^2", "x,y") == Fraction(1)
    assert fsrpy.f_threshold(R2, "x*z", "x,z") == Fraction(1)
    assert isinstance(fsrpy.f_threshold(R1, "x", "x"), Fraction)
    assert fsrpy.cartier_threshold(R2, "z", "x,y,z") == Fraction(1)
    assert fsrpy.cartier_threshold(R2, "x*z", "x,z") == Fraction(0)


def test_nu_and_contractions():
    assert fsrpy.nu(S2, "x^2,y^2", "x,y", 2) == 2
    assert sorted(fsrpy.contraction(R2, "x,y,z", 1)) == ["x", "y", "z^2"]
    assert fsrpy.cartier_core(R2, "x,z") == ["x"]
    assert fsrpy.min_primes(R1) == [["x"], ["y"]]


def test_regularity():
    assert fsrpy.regularity_limit(R1, "x") == 1
    assert fsrpy.scaled_regularity(R1, "x", 2) == Fraction(3, 4)


def test_inline_ring_and_errors():
    ring = json.dumps({"variables": ["a", "b"], "p": 3, "relations": ["a*b"]})
    assert fsrpy.f_threshold(ring, "a", "a") == Fraction(1)
    with pytest.raises(fsrpy.InputError, match="'w'"):
        fsrpy.nu(R1, "w", "x", 1)
    with pytest.raises(fsrpy.PreconditionError):
        fsrpy.f_threshold(R1, "y", "x")
    with pytest.raises(ValueError):
        fsrpy.cartier_threshold(R1, "x", "x*y")


def test_run_cli_in_process():
    code, out, err = fsrpy.run_cli(["threshold", "--ring", R1, "--a", "x", "--j", "x"])
    assert code == 0 and err == ""
    assert json.loads(out)["value"] == "1/1"
    code, _, err = fsrpy.run_cli(["nu", "--ring", R1, "--a", "w", "--j", "x"])
    assert code == 2 and "'w'" in err


@pytest.mark.skipif("FSR_BIN" not in os.environ, reason="fsr binary location not provided")
def test_binary_matches_module():
    args = ["cartier", "table", "--ring", R2, "--a", "z", "--j", "x,y,z", "--emax", "3"]
    proc = subprocess.run([os.environ["FSR_BIN"], *args], capture_output=True, text=True, check=True)
    assert proc.stdout == fsrpy.run_cli(args)[1]
