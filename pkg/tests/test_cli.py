import json

import pytest

from sextactic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_catalog_nodal(capsys):
    code, out = run(capsys, "catalog", "nodal")
    assert code == 0
    assert "s1 = (1 : 1 : 2)" in out.out and "Q3:" in out.out


def test_catalog_fermat_json(capsys):
    code, out = run(capsys, "catalog", "fermat", "--json")
    assert code == 0 and len(json.loads(out.out)["conics"]) == 27


def test_catalog_pairs(capsys):
    code, out = run(capsys, "catalog", "fermat", "--pairs", "--json")
    assert code == 0 and len(json.loads(out.out)) == 13


def test_certify_nodal(capsys):
    code, out = run(capsys, "certify", "nodal", "1", "2", "--json", "--no-timing")
    cert = json.loads(out.out)["certificate"]
    assert code == 0
    assert cert["verdict"] == "Free" and cert["exponents"] == [3, 3] and cert["tjurina"] == 27


def test_certify_fermat(capsys):
    code, out = run(capsys, "certify", "fermat", "P1:0", "P2:0", "--no-timing")
    assert code == 0 and "verdict: NearlyFree" in out.out and "exponents: (3, 4)" in out.out


def test_certify_deterministic(capsys):
    _, a = run(capsys, "certify", "fermat", "P1:0", "P1:1", "--no-timing")
    _, b = run(capsys, "certify", "fermat", "P1:0", "P1:1", "--no-timing")
    assert a.out == b.out


@pytest.mark.parametrize("argv", [
    ("certify", "fermat", "P1:0", "P1:0"),
    ("certify", "fermat", "P10:0"),
    ("certify", "nodal", "4"),
    ("paper-check", "--only", "nonsense"),
    ("catalog", "nodal", "--pairs"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["catalog", "cuspidal"])
    assert e.value.code == 2


def test_paper_check_filter(capsys):
    code, out = run(capsys, "paper-check", "--only", "thmIO", "--json", "--no-timing")
    data = json.loads(out.out)
    assert code == 0 and len(data) == 3 and all(d["passed"] for d in data)
    assert all("seconds" not in d for d in data)
