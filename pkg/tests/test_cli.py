import json

import pytest

from partialgraphs import cli
from partialgraphs.report import Check, VerificationReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_conjugate_matrix(capsys):
    code, out, _ = run(capsys, "conjugate", "--format", "matrix")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 7 and all(set(l) <= {"0", "1"} and len(l) == 7 for l in lines)


def test_export_matches_command(capsys):
    _, a, _ = run(capsys, "export", "conjugate", "--format", "matrix")
    _, b, _ = run(capsys, "conjugate", "--format", "matrix")
    assert a == b


def test_closed_dot(capsys):
    code, out, _ = run(capsys, "export", "closed", "--format", "dot")
    assert code == 0 and out.count(" -- ") == 9


def test_hmin_open_json(capsys):
    code, out, _ = run(capsys, "hmin-open")
    obj = json.loads(out)
    assert len(obj["vertices"]) == 7 and len(obj["edges"]) == 9


def test_signings_csv(capsys):
    code, out, _ = run(capsys, "export", "signings", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 17


@pytest.mark.parametrize("pin", ["f>a", "fa>f"])
def test_euler_variants(capsys, pin):
    code, out, _ = run(capsys, "euler-variants", "--graph", "closed", "--pin", pin)
    obj = json.loads(out)
    assert code == 0 and obj["count"] == 5


def test_euler_variants_open(capsys):
    code, out, _ = run(capsys, "euler-variants", "--graph", "open", "--pin", "q>m",
                       "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 5


def test_open_variants_json(capsys):
    _, out, _ = run(capsys, "open-variants")
    obj = json.loads(out)
    assert obj["count"] == 9


def test_bad_pin_is_usage_error(capsys):
    code, _, err = run(capsys, "euler-variants", "--pin", "a>c")
    assert code == 2 and "error" in err


def test_invalid_export_combination(capsys):
    code, _, err = run(capsys, "export", "signings", "--format", "matrix")
    assert code == 2 and "cannot be exported" in err


def test_unknown_format_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["conjugate", "--format", "csv"])
    assert exc.value.code == 2


def test_out_path(tmp_path, capsys):
    target = tmp_path / "m.txt"
    code, out, _ = run(capsys, "conjugate", "--format", "matrix", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "0111111"


def test_unwritable_path(tmp_path, capsys):
    code, _, err = run(capsys, "hmin-closed", "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 2 and "cannot write" in err


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all")
    assert code == 0
    assert "FAIL" not in out and "\x1b[" not in out
    assert out.rstrip().endswith("checks passed")


def test_verify_all_json_is_idempotent(capsys):
    _, a, _ = run(capsys, "verify-all", "--format", "json")
    _, b, _ = run(capsys, "verify-all", "--format", "json")
    assert a == b
    obj = json.loads(a)
    assert obj["passed"] is True
    assert {c["source"] for c in obj["checks"]} == {"STATED", "DERIVED"}


def test_verify_all_failure_exit_code(capsys, monkeypatch):
    bad = VerificationReport([Check("broken", 1, 2, "DERIVED")])
    monkeypatch.setattr(cli, "verify_all", lambda: bad)
    code, out, _ = run(capsys, "verify-all")
    assert code == 1 and "FAIL" in out


def test_color_and_no_color(capsys, monkeypatch):
    monkeypatch.setattr(cli.sys.stdout, "isatty", lambda: True, raising=False)
    monkeypatch.delenv("NO_COLOR", raising=False)
    _, out, _ = run(capsys, "verify-all")
    assert "\x1b[32mPASS" in out
    monkeypatch.setenv("NO_COLOR", "1")
    _, out, _ = run(capsys, "verify-all")
    assert "\x1b[" not in out
