import io
import json
import subprocess
import sys

import pytest

from torusbundle.cli import main
from torusbundle.corpus import corpus_names, corpus_text


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out=out, err=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def test_iwasawa_pipe():
    code, instance, _ = run(["iwasawa"])
    assert code == 0
    code, out, _ = run(["classify", "--format", "text"], stdin=instance)
    assert code == 0
    assert "parallelizable: true" in out
    assert "tangent dim (complete family): 6" in out
    assert "main theorem verdict: criterion-fails" in out


def test_classify_json_from_corpus():
    code, out, _ = run(["classify", "--instance", "corpus:split_form"])
    assert code == 0
    assert json.loads(out)["main_theorem_verdict"] == "connected-component"


@pytest.mark.parametrize("command", ["validate", "decompose", "invariants", "classify"])
@pytest.mark.parametrize("fmt", ["json", "text"])
def test_subcommands_on_corpus(command, fmt):
    for name in corpus_names():
        if name == "iwasawa_violating" and command == "invariants":
            continue
        code, out, err = run([command, "--format", fmt, "--instance", f"corpus:{name}"])
        assert code == 0, (name, err)
        assert out


def test_pencil_and_sizes():
    code, out, _ = run(["pencil", "--instance", "corpus:block_form"])
    assert code == 0 and json.loads(out)["pf_form"] == "mu1^2 + mu2^2"
    code, _, err = run(["pencil", "--instance", "corpus:heisenberg_m3"])
    assert code == 3 and "m=2, d=1" in err


def test_exit_codes(tmp_path):
    assert run(["classify"], stdin="{oops")[0] == 2
    assert run(["invariants", "--instance", "corpus:iwasawa_violating"])[0] == 3
    assert run(["validate", "--instance", str(tmp_path / "missing.json")])[0] == 2
    form_only = json.dumps({"A": json.loads(corpus_text("iwasawa"))["A"]})
    assert run(["invariants"], stdin=form_only)[0] == 3


def test_find_witness_flag():
    form_only = json.dumps({"A": json.loads(corpus_text("split_form"))["A"]})
    code, out, err = run(["classify", "--find-witness", "--seed", "3"], stdin=form_only)
    assert code == 0 and "heuristic" in err
    report = json.loads(out)
    assert report["riemann_ok"] is True
    assert report["main_theorem_verdict"] == "connected-component"
    # same seed, same output
    assert run(["classify", "--find-witness", "--seed", "3"], stdin=form_only)[1] == out


def test_group_check():
    code, out, _ = run(["group-check", "--instance", "corpus:iwasawa_deformed", "--samples", "5", "--seed", "2"])
    assert code == 0
    data = json.loads(out)
    assert data["all_ok"] and data["non_holomorphic_inversion_points"] > 0
    code, out, _ = run(["group-check", "--format", "text", "--instance", "corpus:iwasawa", "--samples", "3"])
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "torusbundle", "iwasawa"], capture_output=True, text=True, check=True
    )
    assert json.loads(proc.stdout)["name"] == "iwasawa"
