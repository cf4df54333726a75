import json
import os
import shutil
import subprocess
from fractions import Fraction

import numpy as np
import pytest

import ghzact


def cli():
    path = os.environ.get("GHZACT_CLI") or shutil.which("ghzact")
    if not path:
        pytest.skip("ghzact CLI not available")
    return path


def run(*args, **kw):
    return subprocess.run([cli(), *args], capture_output=True, text=True, **kw)


def test_version():
    assert ghzact.__version__ == "0.1.0"


def test_ghz_is_fixed_by_both_forms():
    phi = ghzact.ghz_projector(3)
    assert ghzact.delta_closed(phi, 3) == phi
    assert ghzact.delta_protocol(phi, 3) == phi
    assert phi[0][7] == Fraction(1, 2)


def test_coherence_between_complements_is_removed():
    c = [[Fraction(0)] * 4 for _ in range(4)]
    c[1][2] = c[2][1] = Fraction(1)
    zero = [[Fraction(0)] * 4 for _ in range(4)]
    assert ghzact.delta_closed(c, 2) == zero
    assert ghzact.delta_protocol(c, 2) == zero


def test_coefficients_of_max_mixed():
    mixed = ghzact.catalog_state("max-mixed", 2)
    assert ghzact.delta_coefficients(mixed, 2) == [Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)]


def test_psd():
    assert ghzact.is_psd([[1, 0], [0, 0]])
    assert not ghzact.is_psd([[1, 0], [0, -1]])


def test_witness_value_matches_condition():
    rho = ghzact.catalog_state("max-mixed", 4)
    sigma = ghzact.ghz_projector(2)
    value, condition, valid = ghzact.witness_value(rho, sigma, [2, 2], Fraction(3, 4))
    assert value == condition


def test_reports_have_stable_keys():
    r = ghzact.verify("jamiolkowski", n=2)
    assert list(r) == ["check", "params", "status", "details", "version"]
    assert r["status"] == "pass"
    assert ghzact.verify("shifts")["status"] == "pass"
    assert ghzact.verify("lemma1", n=3, lam="3/4")["status"] == "pass"
    with pytest.raises(ValueError):
        ghzact.verify("nope")


def test_seesaw_ghz_and_product():
    phi = np.array(ghzact.ghz_projector(2), dtype=float)
    assert ghzact.seesaw(phi, iters=20, restarts=3, seed=1)["lower_bound"] > 1 - 1e-9
    zero = np.zeros((4, 4))
    zero[0, 0] = 1
    r = ghzact.seesaw(zero, iters=20, restarts=3, seed=1)
    assert abs(r["lower_bound"] - 0.5) < 1e-9
    assert r["monotone"]
    with pytest.raises(ValueError):
        ghzact.seesaw(-zero)


def test_cli_pass_exit_code():
    p = run("verify-lemma1", "--n", "3", "--lambda", "3/4")
    assert p.returncode == 0, p.stderr
    assert json.loads(p.stdout)["status"] == "pass"


def test_cli_fail_exit_code():
    p = run("verify-lemma1", "--n", "2", "--lambda", "3/4")
    assert p.returncode == 1
    assert json.loads(p.stdout)["status"] == "fail"


def test_cli_usage_exit_code():
    assert run("no-such-command").returncode == 2
    assert run("verify-cone").returncode == 2


def test_cli_malformed_input(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("fidelity", "--state", str(bad), "--filter", str(bad)).returncode == 3


def test_cli_guard(tmp_path):
    system = tmp_path / "box.txt"
    # A 3-dimensional cube exceeds a guard of 2 dimensions.
    rows = ["-1 1 0 0", "0 -1 0 0", "-1 0 1 0", "0 0 -1 0", "-1 0 0 1", "0 0 0 -1"]
    system.write_text("vars: x y z\n" + "".join(r + " <= 0\n" for r in rows))
    p = run("enumerate", "--system", str(system), env={**os.environ, "ARTIFACT_MAX_DIM": "2"})
    assert p.returncode == 4, p.stdout + p.stderr
