import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from bhnotation.cli import run

SCHEMA = json.loads(resources.files("bhnotation").joinpath("output.schema.json").read_text())


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def cli_json(*argv):
    code, out, _ = cli(*argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_cmp_example():
    assert cli("cmp", "psi(0)", "psi(W)", "--theta=2") == (0, "Less\n", "")


def test_fgh_example():
    assert cli("fgh", "w", "2")[:2] == (0, "23\n")


def test_parse_sum_order_example():
    code, doc = cli_json("parse", "1+w")
    assert code == 1
    assert doc["diagnostics"][0]["rule"] == "sum-order violation"
    assert doc["error"]["kind"] == "domain"
    code, _, err = cli("parse", "1+w")
    assert code == 1 and "sum-order violation" in err


@pytest.mark.parametrize("argv,want", [
    (["parse", "w^w + 1"], "phi(0, phi(0, phi(0, 0))) + phi(0, 0)"),
    (["add", "1", "w"], "phi(0, phi(0, 0))"),
    (["natsum", "1", "w"], "phi(0, phi(0, 0)) + phi(0, 0)"),
    (["veblen", "1", "0"], "phi(phi(0, 0), 0)"),
    (["psi", "W"], "psi(W)"),
    (["cnf", "W + 1"], "W\nphi(0, 0)"),
    (["k", "psi(psi(0))"], "0\npsi(0)"),
    (["inb", "G[0]", "0"], "true"),
    (["inb", "psi(0)", "0", "--h"], "true"),
    (["fs", "w^w", "2"], "phi(0, phi(0, 0) + phi(0, 0))"),
    (["level", "L[w]"], "psi(0) + phi(0, phi(0, 0))"),
    (["hf-rank", "{{},{{}}}"], "2"),
    (["hf-tc", "{{}}"], "{}\n{{}}"),
    (["hf-v", "{}", "2"], "size 4\n{}\n{{}}\n{{{}}}\n{{},{{}}}"),
    (["hf-eval", "in(ubar{}, x)", "--universe", "{{}}", "--let", "x={{}}"], "true"),
    (["hf-eval", "pbex(x, ubar{{}}, in(x, x))", "--stage", "2"], "false"),
    (["enumerate", "--max-g", "0", "--theta", "1"], "0\nG[0]\nG[1]\nW"),
])
def test_command_outputs(argv, want):
    code, out, err = cli(*argv)
    assert (code, err) == (0, "")
    assert out.rstrip("\n") == want


def test_rank_and_norm():
    code, doc = cli_json("rank", "in(ubar{}, ubar{{}})")
    assert code == 1                                 # {{}} has rank 1 > theta = 0
    code, doc = cli_json("rank", "in(ubar{}, ubar{{}})", "--theta=2")
    assert code == 0 and doc["result"]["system"] == "L"
    code, doc = cli_json("rank", "pbex(x, V[0], in(x, x))")
    assert code == 0 and doc["result"]["system"] == "P"
    code, doc = cli_json("norm", "in(ubar{}, ubar{{}})", "notin(ubar{}, ubar{{}})", "--theta=1")
    assert code == 0 and doc["result"]


def test_decompose():
    code, doc = cli_json("decompose", "bex(x, ubar{{}}, in(x, x))", "--theta=1")
    assert code == 0
    assert doc["result"]["kind"] == "or"
    assert len(doc["result"]["components"]) == 1
    code, doc = cli_json("decompose", "in(ubar{}, ubar{{}})", "--theta=1")
    assert code == 1


@pytest.mark.parametrize("argv,code,kind", [
    (["parse", "phi(0"], 3, "parse"),
    (["parse", "foo"], 3, "parse"),
    (["cmp", "0"], 3, "usage"),
    (["frobnicate"], 3, "usage"),
    ([], 3, "usage"),
    (["parse", "0", "--theta=-1"], 3, "usage"),
    (["parse", "0", "--theta=x"], 3, "usage"),
    (["fgh", "w", "-2"], 3, "usage"),
    (["fgh", "w", "2", "--budget-steps=0"], 3, "usage"),
    (["hf-eval", "in(x,x)", "--let", "x"], 3, "usage"),
    (["hf-rank", "{{}"], 3, "parse"),
    (["parse", "1+w"], 1, "domain"),
    (["parse", "G[3]", "--theta=2"], 1, "domain"),
    (["psi", "psi(W)"], 1, "domain"),
    (["veblen", "W", "0"], 1, "domain"),
    (["fs", "0", "1"], 1, "domain"),
    (["fgh", "W", "1"], 1, "domain"),
    (["rank", "in(x, ubar{})"], 1, "domain"),
    (["hf-eval", "ex(x, in(x,x))"], 1, "domain"),
    (["hf-eval", "pball(x, ubar{{{}}}, in(x,x))"], 1, "domain"),
    (["hf-v", "{}", "5"], 2, "resource"),
    (["fgh", "w^w", "5"], 2, "resource"),
    (["enumerate", "--max-g", "3", "--max-pool", "100"], 2, "resource"),
])
def test_exit_code_table(argv, code, kind):
    got, doc = cli_json(*argv)
    assert got == code
    assert doc["error"]["kind"] == kind
    assert "result" not in doc


def test_psi_undefined_diagnostic():
    _, doc = cli_json("psi", "psi(W)")
    assert doc["diagnostics"][0]["rule"] == "psi condition"
    assert doc["diagnostics"][0]["subterm"] == "psi(W)"


def test_theta_echoed():
    _, doc = cli_json("parse", "G[1]", "--theta", "omega")
    assert doc["theta"] == "omega"
    assert doc["inputs"] == {"term": "G[1]"}
    _, doc = cli_json("cmp", "0", "0")
    assert doc["theta"] == "0" and doc["result"] == "Equal"


def test_global_flags_anywhere():
    assert cli("--theta=2", "cmp", "G[2]", "G[1]")[:2] == (0, "Greater\n")
    assert cli("cmp", "G[2]", "G[1]", "--theta=2")[:2] == (0, "Greater\n")


def test_check_exit_codes():
    code, doc = cli_json("check", "hf")
    assert code == 0 and doc["result"][0]["ok"]
    code, out, _ = cli("check", "fgh")
    assert code == 0 and out.startswith("suite fgh: ok")


def test_json_deterministic():
    argv = ("check", "rank", "--seed=7", "--samples=300")
    a = cli(*argv, "--json")[1]
    b = cli(*argv, "--json")[1]
    assert a == b
    other = cli("check", "rank", "--seed=8", "--samples=300", "--json")[1]
    assert json.loads(other)["inputs"]["seed"] == 8


def test_help():
    assert cli("--help")[0] == 0
    assert cli("fgh", "--help")[0] == 0


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "bhnotation", "fgh", "w", "2"],
                       capture_output=True, text=True)
    assert (p.returncode, p.stdout) == (0, "23\n")
