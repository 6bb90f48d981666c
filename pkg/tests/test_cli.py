import json
import shutil
import subprocess

import pytest

from singmac.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_qs_info(capsys):
    code, out, _ = run(capsys, "qs", "info", "--m", "30", "--n", "12", "--d", "1", "--K", "1", "--N", "14")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["tau"] == [11, 3] and data["nu"] == [14, 3, 0]


def test_qs_info_text(capsys):
    code, out, _ = run(capsys, "--format", "text", "qs", "info",
                       "--m", "1", "--n", "3", "--d", "2", "--K", "3", "--N", "10")
    assert code == EXIT_OK and "tau       (5, 2, 2, 1)" in out


def test_qs_tableaux(capsys):
    code, out, _ = run(capsys, "qs", "tableaux", "--shape", "3,1")
    assert code == EXIT_OK and len(json.loads(out)) == 3


def test_mac_build_monic(capsys):
    code, out, _ = run(capsys, "mac", "build", "--alpha", "1", "--N", "3", "--monic")
    data = json.loads(out)
    assert code == EXIT_OK and data["alpha"] == [1, 0, 0]
    assert [t["alpha"] for t in data["terms"]][0] == [1, 0, 0]


def test_mac_act(capsys):
    code, out, _ = run(capsys, "--format", "text", "mac", "act", "--alpha", "0,0,0", "--op", "dunkl", "--i", "1")
    assert code == EXIT_OK and out.strip() == "0"


def test_mac_act_needs_index(capsys):
    code, _, err = run(capsys, "mac", "act", "--alpha", "1,0", "--op", "xi")
    assert code == EXIT_USAGE and "--i" in err


def test_mac_alpha_longer_than_N(capsys):
    code, _, _ = run(capsys, "mac", "build", "--alpha", "1,0,0", "--N", "2")
    assert code == EXIT_USAGE


def test_critical_search(capsys):
    code, out, _ = run(capsys, "critical", "search", "--alpha", "4,4,3,2,2,3,3,2,0,0,0,0,0,0,0",
                       "--m", "1", "--n", "4", "--max-len", "18")
    data = json.loads(out)
    assert code == EXIT_OK and len(data) == 1 and data[0]["len"] == 17


def test_critical_budget(capsys):
    code, _, err = run(capsys, "critical", "search", "--alpha", "4,4,3,2,2,3,3,2,0,0,0,0,0,0,0",
                       "--m", "1", "--n", "4", "--max-len", "18", "--budget", "3")
    assert code == EXIT_BUDGET and "budget" in err


def test_singular_verify(capsys):
    code, out, _ = run(capsys, "singular", "verify", "--m", "2", "--n", "4", "--d", "1",
                       "--K", "1", "--N", "4", "--k", "1")
    data = json.loads(out)
    assert code == EXIT_OK and data["passed"] and data["mode"] == "full"


def test_singular_verify_bad_params(capsys):
    code, _, _ = run(capsys, "singular", "verify", "--m", "1", "--n", "3", "--d", "1",
                     "--K", "1", "--N", "2")
    assert code == EXIT_USAGE


def test_singular_params_text(capsys):
    code, out, _ = run(capsys, "--format", "text", "singular", "params", "--m", "30", "--tau2", "3", "--N", "14")
    assert code == EXIT_OK and out.count("\n") == 3 and "q^10 t^4 = 1" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["qs"])
    assert info.value.code == EXIT_USAGE


def test_fail_code_distinct():
    assert len({EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET}) == 4


@pytest.mark.skipif(shutil.which("singmac") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["singmac", "qs", "tableaux", "--shape", "2,1"],
                         capture_output=True, text=True, check=True).stdout
    assert len(json.loads(out)) == 2
