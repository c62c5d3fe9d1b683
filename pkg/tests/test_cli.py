"""Exit codes and output of the command line interface."""

import json

from irred.cli import main


def test_family_verdict(capsys, tmp_path):
    out = tmp_path / "cert.json"
    code = main(["family", "--n", "2", "--P", "1/x", "--json", str(out)])
    assert code == 0
    assert "IRREDUCIBLE" in capsys.readouterr().out
    doc = json.loads(out.read_text())
    assert doc["verdict"] == "IRREDUCIBLE"
    assert list(doc.keys()) == ["input", "evidence", "verdict"]


def test_family_bad_input(capsys):
    assert main(["family", "--n", "1", "--P", "1"]) == 1
    assert "input error" in capsys.readouterr().err


def test_family_bad_poly(capsys):
    assert main(["family", "--n", "2", "--P", "1/y"]) == 1


def test_p3_integer_mu_rejected(capsys):
    assert main(["p3", "--mu", "2"]) == 1
    err = capsys.readouterr().err
    assert "exponential solution" in err


def test_p3_bad_rational(capsys):
    assert main(["p3", "--mu", "x"]) == 1


def test_ve_linearized(capsys):
    code = main(["ve", "--field", "x = 1; y = z; z = x*y + 2*y^3",
                 "--curve", "y = 0; z = 0", "--order", "3",
                 "--normal", "--linearize"])
    assert code == 0
    out = capsys.readouterr().out
    assert "y^(1)^3" in out
    assert out.count("[") == 6


def test_ve_prints_jet_system(capsys):
    code = main(["ve", "--field", "x = 1; y = z; z = x*y",
                 "--order", "1"])
    assert code == 0
    assert "z^(1)'" in capsys.readouterr().out


def test_ve_non_invariant_curve(capsys):
    code = main(["ve", "--field", "x = 1; y = z; z = x*y",
                 "--curve", "y = 1; z = 0", "--order", "1", "--linearize"])
    assert code == 1


def test_oracle_runs(capsys):
    code = main(["oracle", "--field", "x = 1; y = z; z = 0 - y",
                 "--curve", "y = 0; z = 0", "--order", "1"])
    assert code == 0
    assert "OK" in capsys.readouterr().out
