import json
import subprocess
import sys

import pytest

from coxbraid.cli import main


@pytest.fixture()
def a2_config(tmp_path):
    cfg = tmp_path / "a2.json"
    cfg.write_text(json.dumps({
        "generators": ["s", "t"],
        "matrix": [[1, 3], [3, 1]],
        "lambda": [["s"], ["t"], ["s", "t"]],
        "bounds": {"rewrite": 12, "lcm": 4096, "enumeration": 2000},
    }))
    return str(cfg)


@pytest.fixture()
def i2inf_config(tmp_path):
    cfg = tmp_path / "inf.json"
    cfg.write_text(json.dumps({
        "generators": ["s", "t"],
        "matrix": [[1, 0], [0, 1]],
        "bounds": {"rewrite": 4},
    }))
    return str(cfg)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestBasicCommands:
    def test_retract_golden(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "retract", "-I", "s", "t t s")
        assert code == 0
        assert out == '{"result": "s"}\n'

    def test_tail(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "tail", "-I", "s", "t t s")
        assert code == 0
        assert json.loads(out) == {"result": "s^-1 t t s"}

    def test_right_variants(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "retract-right", "-I", "s", "s t t")
        assert code == 0 and json.loads(out) == {"result": "s"}
        code, out = run_cli(capsys, "--config", a2_config, "tail-right", "-I", "s", "s t t")
        assert code == 0 and json.loads(out) == {"result": "s t t s^-1"}

    def test_normal_form_golden(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "normal-form", "t t s")
        assert code == 0
        assert out == '{"factors": ["t", "t s"]}\n'

    def test_gcd_lcm(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "gcd", "t t s", "s")
        assert code == 0 and json.loads(out) == {"factors": []}
        code, out = run_cli(capsys, "--config", a2_config, "lcm", "s t t", "t")
        assert code == 0 and json.loads(out) == {"factors": ["s t s", "t s"]}

    def test_word_problem(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "word-problem", "-I", "s", "s s^-1")
        assert code == 0 and json.loads(out)["verdict"] == "equal"

    def test_empty_word_spelling(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "retract", "-I", "s", "t")
        assert code == 0 and json.loads(out) == {"result": "e"}

    def test_stdin_word(self, capsys, a2_config, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO("t t s"))
        code, out = run_cli(capsys, "--config", a2_config, "retract", "-I", "s", "-")
        assert code == 0 and json.loads(out) == {"result": "s"}


class TestStructuredCommands:
    def test_double_coset(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "double-coset", "-I", "s", "-J", "s", "s t s")
        assert code == 0
        payload = json.loads(out)
        assert payload["b0"] == "t" and payload["unique"] == "unique"

    def test_intersect_reduce(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "intersect-reduce", "-I", "s", "-J", "s", "t")
        assert code == 0
        payload = json.loads(out)
        assert [s["kind"] for s in payload["steps"]][:2] == ["normalize", "shrink"]
        assert payload["final_subset"] == []

    def test_ribbons(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "ribbons", "-I", "t", "-J", "s")
        assert code == 0
        payload = json.loads(out)
        assert payload["solutions"] == [{"mapping": {"s": "t"}, "witness": "s t"}]

    def test_conjugacy(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "conjugacy", "-I", "s", "-J", "t", "s", "t")
        assert code == 0
        payload = json.loads(out)
        assert payload["verdict"] == "conjugate" and "witness" in payload

    def test_min_parabolic(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "min-parabolic", "s t s^-1")
        assert code == 0
        payload = json.loads(out)
        assert len(payload["subset"]) == 1

    def test_nmap(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "nmap", "s t s^-1")
        assert code == 0
        payload = json.loads(out)
        assert payload["image"] == "s t s"
        assert {"reflection": "t", "coefficient": -1} in payload["bag"]

    def test_check_conjecture(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "check-conjecture", "s", "e")
        assert code == 0 and json.loads(out)["status"] == "supporting"


class TestOracleCommands:
    def test_enumerate(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "oracle", "enumerate")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 6

    def test_rewrite_equal(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "oracle", "rewrite-equal", "s t s", "t s t")
        assert code == 0 and json.loads(out) == {"verdict": "equal"}

    def test_divisors(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "oracle", "divisors", "s t s")
        assert code == 0
        assert json.loads(out)["divisors"] == ["e", "s", "s t", "s t s", "t", "t s"]

    def test_brute_force_retract_matches(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "oracle", "retract", "-I", "s", "t t s")
        assert code == 0 and json.loads(out) == {"result": "s"}


class TestExitCodes:
    def test_unknown_gives_2(self, capsys, i2inf_config):
        code, out = run_cli(capsys, "--config", i2inf_config, "oracle", "rewrite-equal", "s", "t")
        assert code == 2 and json.loads(out) == {"verdict": "unknown"}

    def test_decided_non_uniqueness_gives_0(self, capsys, i2inf_config):
        # the inversion map separates the twisted conjugates here: decided
        code, out = run_cli(
            capsys, "--config", i2inf_config, "double-coset", "-I", "s", "-J", "s",
            "s t t s",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["unique"] == "not_unique"

    def test_error_gives_1(self, capsys, i2inf_config):
        code, out = run_cli(capsys, "--config", i2inf_config, "word-problem", "-I", "s,t", "s")
        assert code == 1
        assert "error" in json.loads(out)

    def test_missing_config(self, capsys, monkeypatch):
        monkeypatch.delenv("COXBRAID_CONFIG", raising=False)
        code, out = run_cli(capsys, "retract", "-I", "s", "s")
        assert code == 1 and "error" in json.loads(out)

    def test_bad_generator(self, capsys, a2_config):
        code, out = run_cli(capsys, "--config", a2_config, "retract", "-I", "x", "s")
        assert code == 1


def test_undeclared_lambda_member(capsys, tmp_path):
    cfg = tmp_path / "strict.json"
    cfg.write_text(json.dumps({
        "generators": ["s", "t"], "matrix": [[1, 3], [3, 1]], "lambda": [["s"]],
    }))
    code = main(["--config", str(cfg), "word-problem", "-I", "t", "s^-1 s"])
    out = capsys.readouterr().out
    assert code == 1 and "error" in json.loads(out)


def test_determinism_and_env_config(tmp_path, a2_config):
    env = dict(COXBRAID_CONFIG=a2_config, PATH="/usr/bin:/bin")
    cmd = [sys.executable, "-m", "coxbraid", "double-coset", "-I", "s", "-J", "s", "s t s"]
    runs = [
        subprocess.run(cmd, capture_output=True, text=True, env=env, cwd="/root/pkg")
        for _ in range(2)
    ]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout
    payload = json.loads(runs[0].stdout)
    assert payload["b0"] == "t"


def test_matrix_file_indirection(tmp_path, capsys):
    matrix = tmp_path / "m.json"
    matrix.write_text(json.dumps({"generators": ["s", "t"], "matrix": [[1, 3], [3, 1]]}))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"matrix_file": str(matrix)}))
    code = main(["--config", str(cfg), "retract", "-I", "s", "t t s"])
    out = capsys.readouterr().out
    assert code == 0 and json.loads(out) == {"result": "s"}
