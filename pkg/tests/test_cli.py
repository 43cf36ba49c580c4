import io
import json
import subprocess
import sys

import pytest

from extverts import cache, cli, verify


@pytest.fixture
def run(tmp_path, monkeypatch):
    monkeypatch.delenv("EXTVERTS_CACHE", raising=False)
    old = cache.default_cache()

    def _run(*argv):
        out = io.StringIO()
        code = cli.main(["--cache-dir", str(tmp_path / "cache"), *argv], out=out)
        return code, out.getvalue()

    yield _run
    cache._default = old


def test_jack_text(run):
    assert run("jack", "1") == (0, "p1\n")
    assert run("jack", "2") == (0, "p1^2 + (1/θ)·p2\n")
    assert run("jack", "1,1") == (0, "p1^2 - p2\n")
    assert run("jack", "2", "--theta", "1/2") == (0, "p1^2 + 2·p2\n")


def test_jack_json(run):
    code, out = run("jack", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["partition"] == "2"
    assert {c["partition"] for c in data["coeffs"]} == {"2", "1,1"}


def test_malformed_partition_is_usage_error(run):
    assert run("jack", "1,2")[0] == 2
    assert run("jack", "x")[0] == 2
    with pytest.raises(SystemExit) as err:
        run("verify", "nonsense")
    assert err.value.code == 2


def test_verify_pieri_max1(run, tmp_path):
    report = tmp_path / "r.json"
    code, out = run("verify", "pieri", "--max-size", "1", "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["n_cases"] == 4 and data["passed"]
    assert [c["key"] for c in data["cases"]] == ["|", "|1", "1|", "1|1"]


def test_verify_character_and_trace(run):
    code, out = run("verify", "character", "--max-size", "0")
    assert code == 0 and "1/1 passed" in out
    code, out = run("verify", "trace", "--order", "1")
    assert code == 0 and "PASS trace q^1" in out


@pytest.mark.parametrize("suite", ["serre", "bridge", "theorem"])
def test_verify_other_suites(run, suite):
    assert run("verify", suite, "--max-size", "2")[0] == 0


def test_verify_csv(run):
    code, out = run("verify", "pieri", "--max-size", "1", "--format", "csv")
    rows = out.strip().splitlines()
    assert rows[0] == "suite,key,passed" and len(rows) == 5


def test_failure_witness_reproduces(run, tmp_path, monkeypatch):
    real = verify.pieri_rhs

    def broken(lam, mu, **kw):
        val = real(lam, mu, **kw)
        return val + 1 if (lam.size, mu.size) == (1, 1) else val

    monkeypatch.setattr(verify, "pieri_rhs", broken)
    report = tmp_path / "fail.json"
    code, out = run("verify", "pieri", "--max-size", "1", "--report", str(report))
    assert code == 1 and "FAIL pieri 1|1" in out
    failed = [c for c in json.loads(report.read_text())["cases"] if not c["passed"]]
    assert [c["key"] for c in failed] == ["1|1"]
    assert failed[0]["witness"]["lhs"] != failed[0]["witness"]["rhs"]
    code, out = run("verify", "pieri", "--case", failed[0]["key"])
    assert code == 1 and "witness 1|1" in out


def test_verify_deterministic_with_workers(run):
    serial = run("verify", "serre", "--max-size", "2", "--format", "csv")
    parallel = run("verify", "serre", "--max-size", "2", "--format", "csv", "--jobs", "2")
    assert serial == parallel


def test_nekrasov(run):
    code, out = run("nekrasov", "--order", "0")
    assert code == 0 and out.splitlines() == ["sum:     1", "product: 1"]
    code, out = run("nekrasov", "--order", "2", "--m", "0")
    assert "sum:     1 + q + 2*q^2" in out and "product: 1 + q + 2*q^2" in out
    code, out = run("nekrasov", "--order", "1", "--format", "json")
    data = json.loads(out)
    assert data["agree"] and data["fixed_point_sum"][1] == "(t1*t2 + t1*m + t2*m + m**2)/(t1*t2)"
    assert run("nekrasov", "--t1", "0")[0] == 2


def test_ext_char_and_matrix_element(run):
    code, out = run("ext-char", "1", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["routes_agree"]
    assert data["character"] == [{"e1": 0, "e2": 1, "mult": 1}, {"e1": 1, "e2": 0, "mult": 1}]
    code, out = run("matrix-element", "", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["zpower"] == 1 and data["value_text"] == "m"


def test_cache_commands(run, tmp_path):
    assert run("cache", "stats")[1].startswith("entries: 0")
    run("jack", "2")
    code, out = run("cache", "stats", "--format", "json")
    assert json.loads(out)["entries"] >= 1
    assert run("cache", "path")[1].strip() == str(tmp_path / "cache" / "jack.json")
    run("cache", "clear")
    assert run("cache", "stats")[1].startswith("entries: 0")


def test_cache_output_identical_on_and_off(run, tmp_path):
    first = run("jack", "3,1")
    second = run("jack", "3,1")  # served from the file cache
    assert first == second


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "extverts", "--cache-dir", str(tmp_path), "jack", "1,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "p1^2 - p2\n"
    proc = subprocess.run([sys.executable, "-m", "extverts", "jack", "bad"], capture_output=True, text=True,
                          env={"EXTVERTS_CACHE": str(tmp_path), "PATH": ""})
    assert proc.returncode == 2
