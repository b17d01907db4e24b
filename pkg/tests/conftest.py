import sys
from pathlib import Path

import pytest
import sympy

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from spectralrec.exact import Polynomial, RationalFunction  # noqa: E402


def poly_to_sympy(p: Polynomial, sym):
    return sum((sympy.Rational(c.numerator, c.denominator) * sym**k for k, c in enumerate(p.c)), sympy.Integer(0))


def rf_to_sympy(f: RationalFunction, sym=None):
    sym = sym if sym is not None else sympy.Symbol(f.var)
    return poly_to_sympy(f.num, sym) / poly_to_sympy(f.den, sym)


def sympy_equal(a, b) -> bool:
    return sympy.simplify(a - b) == 0


@pytest.fixture(scope="session")
def weber_curve():
    from spectralrec.curvedsl import weber

    return weber()


@pytest.fixture(scope="session")
def airy_curve():
    from spectralrec.curvedsl import airy

    return airy()


@pytest.fixture(scope="session")
def bessel_curve():
    from spectralrec.curvedsl import bessel

    return bessel()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
