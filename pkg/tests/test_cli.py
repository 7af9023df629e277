import io
import json
import subprocess
import sys

import pytest

from hodgeint.cli import Config, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_verify_orthogonality():
    code, out, _ = call("verify", "orthogonality", "--n", "6")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["passed"] and reports[0]["name"] == "orthogonality"


def test_rseries_example():
    code, out, _ = call("rseries", "--mu", "2", "--order", "8")
    assert code == 0
    series = json.loads(out)["series"]
    lam_minus_one = series["coeffs"][-1 - series["valuation"]]
    assert lam_minus_one == {"tau_exp": [0, 1], "re": ["0", "0"], "im": ["1/4", "1/2"]}


def test_hurwitz_example():
    code, out, _ = call("hurwitz", "--nu", "2", "--mu", "2", "--chi", "0", "--brute-force")
    assert code == 0
    assert json.loads(out) == {"burnside": "1/2", "brute": "1/2", "match": True}


def test_hurwitz_genus():
    code, out, _ = call("hurwitz", "--mu", "3", "--genus", "1", "--brute-force")
    assert code == 0 and json.loads(out)["burnside"] == "9"


def test_other_commands():
    assert call("chars", "--n", "3")[0] == 0
    assert json.loads(call("chars", "--nu", "2,1", "--mu", "3")[1])["chi"] == -1
    assert call("wq", "--mu", "1", "--nu", "1", "--series", "--order", "2")[0] == 0
    code, out, _ = call("r2series", "--mu-plus", "1", "--mu-minus", "1", "--order", "4")
    assert code == 0 and json.loads(out)["series"]["coeffs"][0] == {"tau_exp": [0], "re": ["1"], "im": ["0"]}
    code, out, _ = call("localp2", "--max-degree", "1", "--order", "2")
    assert code == 0 and json.loads(out)["degrees"][0]["N"]["1"] == "1/4"


def test_text_format():
    code, out, _ = call("verify", "mv-bg", "--format", "text")
    assert code == 0 and out.startswith("PASS mv-bg")


@pytest.mark.parametrize("argv", [
    ("bogus",), ("rseries",), ("rseries", "--mu", "2,x"), ("chars",), ("verify", "orthogonality", "--order", "0"),
    ("hurwitz", "--mu", "2"), ("verify", "two-convolution", "--tau0", "0"), ("rseries", "--mu", "-"),
])
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2 and not out and err


def test_config_validation():
    with pytest.raises(ValueError):
        Config(output_format="xml")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hodgeint", "chars", "--nu", "1,1", "--mu", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["chi"] == -1


def test_byte_identical_output():
    a = call("rseries", "--mu", "2,1", "--order", "4")[1]
    b = call("rseries", "--mu", "2,1", "--order", "4")[1]
    assert a == b
