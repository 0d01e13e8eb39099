import json
import subprocess
import sys

import pytest

from kzforms.checks import CongruenceReport, ValuationTable
from kzforms.cli import main
from kzforms.quasimodular import EisensteinDecomposition
from kzforms.series import QSeries


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_abar_text(capsys):
    code, out, _ = run(capsys, "abar", "--n", "2", "--order", "9", "--format", "text")
    assert code == 0
    assert out == "Abar(n=2) = q^2 + 80*q^3 + 1230*q^4 + 9248*q^5 + 46020*q^6 + 174624*q^7 + 549704*q^8 + O(q^9)\n"


def test_abar_json_schema(capsys):
    code, out, _ = run(capsys, "abar", "--n", "3", "--order", "5", "--format", "json")
    obj = json.loads(out)
    assert out.endswith("\n")
    assert obj["series"] == {"trunc_order_x2": 10, "coeffs": [[4, "1/1"], [6, "728/1"], [8, "45990/1"]]}
    assert QSeries.from_json(obj["series"]).coefficient_list() == [0, 0, 1, 728, 45990]


def test_kummer_holds(capsys):
    code, out, _ = run(capsys, "kummer", "--i", "2", "--j", "4", "--p", "5", "--s", "1", "--order", "25", "--format", "json")
    assert code == 0
    rep = CongruenceReport.from_json(json.loads(out))
    assert rep.holds


def test_kummer_text(capsys):
    code, out, _ = run(capsys, "kummer", "--i", "2", "--j", "4", "--p", "5", "--s", "1", "--order", "25")
    assert code == 0
    assert "holds: True" in out


def test_abar_n_zero_is_usage_error(capsys):
    code, _, err = run(capsys, "abar", "--n", "0", "--order", "5")
    assert code == 2
    assert "--n" in err


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["kummer", "--i", "2", "--j", "4", "--p", "6", "--s", "1"], "--p"),
        (["kummer", "--i", "2", "--j", "4", "--p", "5"], "--s"),
        (["theta0", "--x-trunc", "3"], "--x-trunc"),
        (["fg", "--g", "1"], "--g"),
        (["decompose", "--n", "4", "--order", "12"], "--order"),
        (["powersum", "--d", "3"], "--k"),
    ],
)
def test_usage_errors_name_the_flag(capsys, argv, flag):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert flag in err


def test_argparse_type_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["abar", "--n", "two"])
    assert exc.value.code == 2


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "--n", "2", "--format", "json")
    assert code == 0
    d = EisensteinDecomposition.from_json(json.loads(out))
    assert d.denominator() == 447897600


def test_decompose_not_in_span_is_computation_error(capsys):
    code, _, err = run(capsys, "decompose", "--n", "2", "--weight", "10")
    assert code == 1
    assert "computation failed" in err


def test_padic_json(capsys):
    code, out, _ = run(capsys, "padic", "--k", "3", "--p", "3", "--n-max", "3", "--format", "json")
    table = ValuationTable.from_json(json.loads(out))
    assert table.valuations() == [0, 1, 3]
    assert json.loads(out)["rows"][2]["coefficient"] == "1747100845087920"


def test_padic_resource_limit_exit_1(capsys):
    code, _, err = run(capsys, "padic", "--k", "3", "--p", "13", "--n-max", "3")
    assert code == 1
    assert "--n-max" in err


def test_powersum(capsys):
    code, out, _ = run(capsys, "powersum", "--d", "3", "--k", "4")
    assert out == "S_4(3) = 162\n"


@pytest.mark.parametrize("method", ["partition", "direct"])
def test_theta0_methods_agree(capsys, method):
    code, out, _ = run(capsys, "theta0", "--x-trunc", "4", "--order", "6", "--method", method, "--format", "json")
    obj = json.loads(out)
    x4 = QSeries.from_json(obj["coeffs"][4])
    assert (x4 * 12).coefficient_list() == [0, 0, 1, 80, 1230, 9248]


def test_fg_and_an(capsys):
    code, out, _ = run(capsys, "fg", "--g", "2", "--order", "5")
    code2, out2, _ = run(capsys, "an", "--n", "1", "--order", "5")
    assert out.split(" = ")[1] == out2.split(" = ")[1]


def test_deterministic_output_subprocess():
    cmd = [sys.executable, "-m", "kzforms", "decompose", "--n", "2", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b"\n")
