import io
import json
import os
import subprocess
import sys

import pytest

from frobctl.cli import JobConfig, run
from frobctl.errors import ConfigurationError


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_contract_g2():
    code, out = call("contract", "--type", "G2", "--p", "2", "--lambda", "1,1")
    assert code == 0
    assert json.loads(out)["rows"] == [{"mu": [1, 0], "mult": 2}, {"mu": [0, 0], "mult": 2}]
    assert out == json.dumps(json.loads(out), sort_keys=True) + "\n"


def test_contract_annihilated():
    code, out = call("contract", "--type", "A1", "--p", "3", "--lambda", "1")
    assert code == 0 and json.loads(out)["rows"] == []


def test_contract_csv():
    code, out = call("contract", "--type", "G2", "--p", "2", "--lambda", "1,1", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["mu_coords,mult", '"1,0",2', '"0,0",2']


def test_agree_summary():
    code, out = call("agree", "--type", "A1", "--p", "2", "--max-coord", "4", "--jobs", "1")
    assert code == 0
    assert out.startswith("all ") and out.strip().endswith("cases agree")


def test_agree_is_independent_of_jobs(tmp_path):
    reports = []
    for jobs in ("1", "2"):
        path = tmp_path / f"r{jobs}.json"
        code, out = call("agree", "--type", "A2", "--p", "2", "--max-coord", "2", "--jobs", jobs, "--report", str(path))
        assert code == 0
        reports.append((out, path.read_bytes()))
    assert reports[0] == reports[1]


@pytest.mark.parametrize(
    "argv",
    [
        ("signed-sum", "--type", "G2", "--p", "2", "--lambda", "1,1", "--mu", "1,0"),
        ("ls-count", "--type", "G2", "--p", "2", "--lambda", "1,1", "--mu", "1,0"),
    ],
)
def test_single_multiplicities(argv):
    code, out = call(*argv)
    assert code == 0 and json.loads(out)["mult"] == 2


def test_ls_count_dump(tmp_path):
    path = tmp_path / "paths.json"
    code, _ = call("ls-count", "--type", "A1", "--p", "2", "--lambda", "2", "--mu", "0", "--dump", str(path))
    assert code == 0
    assert len(json.loads(path.read_text())) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("adjoint", "--type", "B2", "--p", "3", "--max-coord", "3"),
        ("hatnabla", "--type", "A1", "--p", "2"),
        ("oracle", "--p", "2,3", "--max-n", "5", "--max-ab", "3"),
    ],
)
def test_suites_pass(argv):
    code, out = call(*argv)
    assert code == 0 and "cases agree" in out


def test_bound():
    code, out = call("bound", "--type", "A2", "--p", "5")
    assert code == 0 and json.loads(out)["violations"] == []


def test_char_kinds():
    code, out = call("char", "--type", "A1", "--lambda", "-3", "--kind", "euler")
    assert code == 0 and json.loads(out)["weights"] == [[[-1], -1], [[1], -1]]
    code, out = call("char", "--type", "G2", "--kind", "steinberg", "--p", "2")
    assert code == 0 and sum(m for _, m in json.loads(out)["weights"]) == 64


@pytest.mark.parametrize(
    "argv",
    [
        ("contract", "--type", "G2", "--p", "4", "--lambda", "1,1"),
        ("contract", "--type", "G3", "--p", "2", "--lambda", "1,1"),
        ("contract", "--type", "G2", "--p", "2", "--lambda", "1"),
        ("contract", "--type", "G2", "--p", "2", "--lambda", "-1,0"),
        ("contract", "--type", "G2", "--p", "2", "--lambda", "a,b"),
        ("bound", "--type", "G2", "--p", "7"),
        ("char", "--type", "A1", "--kind", "weyl"),
        ("agree", "--type", "A1", "--p", "2", "--max-coord", "2", "--jobs", "0"),
        ("frobnicate",),
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = call(*argv)
    assert code == 2
    assert capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ("agree", "--type", "A2", "--p", "2", "--max-coord", "50", "--grid-cap", "10"),
        ("contract", "--type", "E6", "--p", "2", "--lambda", "0,0,0,0,0,0", "--orbit-cap", "100"),
        ("agree", "--type", "G2", "--p", "2", "--max-coord", "3", "--path-cap", "10", "--jobs", "1"),
    ],
)
def test_resource_errors(argv):
    assert call(*argv)[0] == 3


def test_failure_exit_code(monkeypatch):
    from frobctl import suites

    real = suites.agreement_for_lambda

    def broken(label, p, lam, path_cap):
        res = real(label, p, lam, path_cap)
        for row in res["rows"]:
            row["paths"] += 1
        return res

    monkeypatch.setattr(suites, "agreement_for_lambda", broken)
    code, out = call("agree", "--type", "A1", "--p", "2", "--max-coord", "2", "--jobs", "1")
    assert code == 1 and "disagree" in out


def test_job_config_validation():
    with pytest.raises(ConfigurationError):
        JobConfig(command="agree", type_label="A1", p=2, path_cap=0).validate()
    with pytest.raises(ConfigurationError):
        JobConfig(command="contract", type_label="A2", p=2, lam=(1,)).validate()


def _subprocess(args, **env):
    full = {**os.environ, **env}
    return subprocess.run([sys.executable, "-m", "frobctl", *args], capture_output=True, text=True, env=full)


def test_cache_env_var(tmp_path):
    cache = tmp_path / "cache"
    res = _subprocess(["contract", "--type", "B2", "--p", "2", "--lambda", "2,2"], FROBCTL_CACHE=str(cache))
    assert res.returncode == 0
    files = list((cache / "B2").glob("*.json"))
    assert files
    for f in files:
        json.loads(f.read_text())


def test_pure_backend_gives_same_output():
    args = ["agree", "--type", "B2", "--p", "2", "--max-coord", "2", "--jobs", "1"]
    fast = _subprocess(args)
    pure = _subprocess(args, FROBCTL_PURE_PYTHON="1")
    assert fast.returncode == pure.returncode == 0
    assert fast.stdout == pure.stdout
