import csv
import io
import json

import numpy as np
import pytest

from imaginarity import cli
from imaginarity.divergences import EntropyParams, unified_relative_entropy
from imaginarity.states import is_real_state, state_from_descriptor


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv, expected", [
    (["--measure", "mh", "--state", '{"bloch":[0,1,0]}', "--alpha", "0.5", "--beta", "0.5"],
     "4.00000000000"),
    (["--measure", "me", "--state", '{"bloch":[0,0,0]}', "--alpha", "0.3", "--beta", "0.7"],
     "0.00000000000"),
    (["--measure", "mt", "--state", '{"bloch":[0,1,0]}', "--u", "0.3"], "1.00000000000"),
    (["--measure", "mr", "--state", '{"bloch":[0,1,0]}'], "1.00000000000"),
])
def test_eval(argv, expected):
    code, text = run("eval", *argv)
    assert code == 0
    assert text.strip() == expected


def test_eval_werner_endpoint_is_the_pure_state_value():
    code, text = run("eval", "--measure", "mh", "--state", '{"werner":1}',
                     "--alpha", "0.5", "--beta", "0.5")
    assert code == 0 and float(text) == pytest.approx(4.0)


def test_eval_detail_minimizer_reproduces_value():
    state = '{"bloch":[0.2,0.5,-0.3]}'
    code, text = run("eval", "--measure", "me", "--state", state, "--alpha", "0.4",
                     "--beta", "0.6", "--detail")
    value_line, detail_line = text.strip().splitlines()
    detail = json.loads(detail_line)
    sigma = state_from_descriptor(detail["minimizer"])
    assert is_real_state(sigma)
    D = unified_relative_entropy(state_from_descriptor(state), sigma, EntropyParams(0.4, 0.6))
    assert D == pytest.approx(float(value_line), abs=1e-10)


@pytest.mark.parametrize("argv, code", [
    (["eval", "--measure", "mh", "--state", "{bad", "--alpha", "0.5", "--beta", "0.5"], 2),
    (["eval", "--measure", "mh", "--state", '{"bloch":[0,1,0]}'], 2),
    (["eval", "--measure", "nope", "--state", "{}"], 2),
    (["eval", "--measure", "mh", "--state", '{"bloch":[0,2,0]}', "--alpha", "0.5", "--beta", "0.5"], 3),
    (["eval", "--measure", "mh", "--state", '{"bloch":[0,1,0]}', "--alpha", "1.5", "--beta", "0.5"], 3),
    (["eval", "--measure", "mh", "--state", "@/nonexistent/x.json", "--alpha", "0.5", "--beta", "0.5"], 4),
    (["sweep", "--measure", "mh", "--axis", "k:0:1:1", "--alpha", "0.5", "--beta", "0.5"], 2),
    (["verify", "--suite", "thm99"], 2),
])
def test_exit_codes(argv, code):
    try:
        got, _ = run(*argv)
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_sweep_alpha_beta_on_orthogonal_conjugate_state(tmp_path):
    path = tmp_path / "s.csv"
    code, _ = run("sweep", "--measure", "mh", "--state", '{"bloch":[0,1,0]}',
                  "--axis", "alpha:0.05:0.95:50", "--axis", "beta:0.05:1:50", "--out", str(path))
    assert code == 0
    raw = path.read_bytes()
    assert b"\r" not in raw
    rows = list(csv.DictReader(io.StringIO(raw.decode())))
    assert len(rows) == 2500
    for r in rows:
        a, b = float(r["alpha"]), float(r["beta"])
        assert float(r["value"]) == pytest.approx(1 / ((1 - a) * b), rel=1e-11)
    # row-major: alpha is the outer axis
    assert rows[0]["alpha"] == rows[49]["alpha"] != rows[50]["alpha"]


def test_sweep_werner_monotone_and_byte_stable():
    args = ("sweep", "--measure", "mh", "--axis", "k:0:1:41", "--alpha", "0.5", "--beta", "0.5")
    _, a = run(*args)
    _, b = run(*args)
    assert a == b
    vals = [float(line.split(",")[1]) for line in a.strip().splitlines()[1:]]
    assert all(y >= x - 1e-12 for x, y in zip(vals, vals[1:]))
    _, lin = run("sweep", "--measure", "lin", "--axis", "k:0:1:41")
    vals = [float(line.split(",")[1]) for line in lin.strip().splitlines()[1:]]
    assert all(y <= x + 1e-12 for x, y in zip(vals, vals[1:]))


def test_sweep_needs_state_or_state_axis():
    code, _ = run("sweep", "--measure", "mh", "--axis", "alpha:0.1:0.9:3", "--beta", "0.5")
    assert code == 2


def test_figure_two(tmp_path):
    code, _ = run("figure", "2", "--outdir", str(tmp_path))
    assert code == 0
    rows = list(csv.DictReader((tmp_path / "figure2.csv").open()))
    series = {r["series"] for r in rows}
    assert len(rows) == 201 * len(series) and len(series) == 4
    lin = [float(r["value"]) for r in rows if r["series"] == "linear_entropy"]
    assert lin[0] == 0.75 and lin[-1] == 0


def test_verify_single_check():
    code, text = run("verify", "--suite", "thm7", "--trials", "20")
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["check_id"] == "thm7"


def test_verify_failure_sets_exit_code():
    code, text = run("verify", "--suite", "eq26_crosscheck")
    assert code == 1
    assert json.loads(text)["failures"] > 0


def test_module_entry_point():
    import subprocess, sys
    res = subprocess.run([sys.executable, "-m", "imaginarity", "eval", "--measure", "mh",
                          "--state", '{"bloch":[0,1,0]}', "--alpha", "0.5", "--beta", "0.5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "4.00000000000"
