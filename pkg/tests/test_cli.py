import json
from fractions import Fraction

import pytest

from spectralrec import serialize
from spectralrec.cli import latex, main
from spectralrec.curvedsl import curve_file, parse_expression
from spectralrec.exact import RationalFunction


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_cache(monkeypatch):
    monkeypatch.delenv("SPECTRALREC_CACHE_DIR", raising=False)


def test_wgn_text(capsys):
    code, out, _ = run(capsys, "wgn", "--curve", "weber", "-g", "1", "-n", "1", "--format", "text")
    assert code == 0
    assert out.strip() == "W[1,1] = -z^3/(z^2 - 1)^4 dz  (λ=1; scale by λ^{-1})"


def test_wgn_text_reparses(capsys):
    _, out, _ = run(capsys, "wgn", "-g", "2", "-n", "1")
    body = out.split(" = ", 1)[1].split(" dz")[0]
    z = RationalFunction.gen("z")
    assert parse_expression(body, {"z": z}) == -21 * (z**11 + 3 * z**9 + z**7) / (z * z - 1) ** 10


def test_wgn_json_round_trip(capsys):
    code, out, _ = run(capsys, "wgn", "--curve", "airy", "-g", "0", "-n", "3", "--format", "json")
    assert code == 0
    rec = json.loads(out)["results"][0]
    W = serialize.decode(rec["value"])
    assert W.poles() == [Fraction(0)]
    assert rec["value"]["variables"] == ["z1", "z2", "z3"]


def test_wgn_ydx(capsys):
    code, out, _ = run(capsys, "wgn", "-g", "0", "-n", "1")
    assert code == 0 and out.startswith("W[0,1] = (z^4 - 2*z^2 + 1)/(2*z^3) dz")


def test_wgn_table(capsys):
    code, out, _ = run(capsys, "wgn", "--gmax", "1", "--nmax", "2")
    assert code == 0
    assert [line.split(" =")[0] for line in out.splitlines()] == ["W[0,1]", "W[0,2]", "W[1,1]", "W[1,2]"]


def test_free_energy(capsys):
    code, out, _ = run(capsys, "free-energy", "--curve", "weber", "-g", "2")
    assert code == 0 and out.strip() == "-1/240 * λ^-2"


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "free-energy", "-g", "5")
    assert code == 3 and "--cap-override" in err
    code, _, _ = run(capsys, "wgn", "-g", "4", "-n", "2")
    assert code == 3


def test_quantize_weber(capsys):
    code, out, _ = run(capsys, "quantize", "--curve", "weber", "--nu", "symbolic")
    assert code == 0
    assert "hbar^2*d^2/dx^2 - (1/4*x^2 - 1 + (1/2*nu)*hbar)" in out


def test_quantize_json(capsys):
    code, out, _ = run(capsys, "quantize", "--curve", "airy", "--format", "json")
    qc = serialize.decode(json.loads(out)["quantum_curve"])
    assert qc.r0 == -RationalFunction.gen("x")


def test_latex(capsys):
    code, out, _ = run(capsys, "quantize", "--curve", "airy", "--format", "latex")
    assert code == 0
    assert r"\hbar^{2}\frac{d^{2}}{dx^{2}}" in out
    assert latex("-1/240 * lam^-2") == r"-\frac{1}{240}   \lambda^{-2}"


def test_voros(capsys):
    code, out, _ = run(capsys, "voros", "--curve", "weber", "-M", "4", "--nu", "0")
    assert code == 0
    lines = out.splitlines()
    assert lines[:4] == ["V[1] = -1/24 * λ^-1", "V[2] = 0", "V[3] = 7/2880 * λ^-3", "V[4] = 0"]


def test_voros_rejects_other_curves(capsys):
    code, _, err = run(capsys, "voros", "--curve", "airy")
    assert code == 2 and "Weber" in err


def test_nu_rejected_where_unsupported(capsys):
    code, _, _ = run(capsys, "quantize", "--curve", "airy", "--nu", "1")
    assert code == 2


def test_rejected_curve_file(capsys):
    code, _, err = run(capsys, "quantize", "--curve", str(curve_file("nodal_cubic")))
    assert code == 2 and "(AQ2)" in err


def test_curve_file_selector(capsys):
    code, out, _ = run(capsys, "wgn", "--curve", str(curve_file("weber")), "-g", "1", "-n", "1")
    assert code == 0 and "scale by" in out


def test_wkb(capsys):
    code, out, _ = run(capsys, "wkb", "-M", "1", "--nu", "0")
    assert code == 0
    assert out.splitlines()[0].startswith("T[-1] = ")


@pytest.mark.parametrize("suite", ["thm3.1", "lemma4.3", "variational"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "-M", "2") if suite != "variational" else run(capsys, "verify", suite)
    assert code == 0
    assert out.splitlines()[-1] == f"{suite}: pass"


def test_verify_properties_bessel(capsys):
    code, out, _ = run(capsys, "verify", "properties", "--curve", "bessel", "--nmax", "5")
    assert code == 0
    assert "PASS oo ineffective: ord(Delta dx) = -2" in out


def test_verify_json_report(capsys):
    code, out, _ = run(capsys, "verify", "thm4.5", "--gmax", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["ok"] and rep["first_failure"] is None


def test_verify_failure_exit(capsys, monkeypatch):
    import spectralrec.voros as voros

    real = voros.verify_free_energies
    monkeypatch.setattr(voros, "verify_free_energies", lambda g: [(2, Fraction(1), real(2)[0][2])])
    code, out, _ = run(capsys, "verify", "thm4.5", "--gmax", "2", "--format", "json")
    rep = json.loads(out)
    assert code == 1
    assert rep["first_failure"]["name"].startswith("F[2]")


def test_internal_inconsistency_exit(capsys, monkeypatch):
    from spectralrec.errors import InternalInconsistency
    import spectralrec.quantize as quantize

    def boom(*a, **k):
        raise InternalInconsistency("forced")

    monkeypatch.setattr(quantize, "quantize", boom)
    code, _, err = run(capsys, "quantize")
    assert code == 4 and "forced" in err


def test_cache_env(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("SPECTRALREC_CACHE_DIR", str(tmp_path))
    assert run(capsys, "wgn", "-g", "1", "-n", "2")[0] == 0
    assert (tmp_path / "toprec-v0.1.0.cache").stat().st_size > 0
