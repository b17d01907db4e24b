import json
from fractions import Fraction

import pytest

from spectralrec import serialize
from spectralrec.curvedsl import weber
from spectralrec.exact import INF, RationalFunction, nu_symbol
from spectralrec.quantize import quantize, sl_form
from spectralrec.toprec import TopologicalRecursion, bergman, correlation, free_energy
from spectralrec.toprec import cache
from spectralrec.voros import regularized_voros, voros_coefficients
from spectralrec.wkb import riccati_expand


def _objects():
    w = weber()
    qc = quantize(w)
    return [
        correlation(w, 0, 1),
        bergman(),
        correlation(w, 1, 1),
        correlation(w, 0, 3),
        correlation(w, 1, 2),
        free_energy(w, 2),
        qc,
        sl_form(qc),
        regularized_voros(voros_coefficients(M=3)),
        riccati_expand(qc, w, 2),
        (nu_symbol() + 1) / RationalFunction.gen("z"),
    ]


@pytest.mark.parametrize("obj", _objects(), ids=lambda o: type(o).__name__)
def test_round_trip_is_stable(obj):
    text = serialize.dumps(obj)
    back = serialize.loads(text)
    assert serialize.dumps(back) == text


def test_decoded_values_are_equal():
    w = weber()
    W = correlation(w, 1, 2)
    assert serialize.loads(serialize.dumps(W)) == W
    qc = serialize.loads(serialize.dumps(quantize(w)))
    assert qc.r1 == -nu_symbol() / 2
    F = serialize.loads(serialize.dumps(free_energy(w, 2)))
    assert F.value == Fraction(-1, 240)


def test_rationals_are_strings_and_polys_are_maps():
    d = json.loads(serialize.dumps(correlation(weber(), 0, 1)))
    assert d["variables"] == ["z"]
    assert d["rf"]["num"]["coeffs"] == {"0": "1/2", "2": "-1", "4": "1/2"}
    assert d["rf"]["den"]["coeffs"] == {"3": "1"}
    labels = json.loads(serialize.dumps(correlation(weber(), 1, 1)))["terms"][0]["labels"]
    assert labels[0][0] == "-1"


def test_infinity_encoding():
    assert serialize.enc_point(INF) == "oo"
    assert serialize.dec_point("oo") is INF


def test_cache_round_trip(tmp_path):
    w = weber()
    eng = TopologicalRecursion(w)
    eng.W(2, 1)
    assert cache.save_from(eng, tmp_path) > 0
    assert cache.save_from(eng, tmp_path) == 0
    files = list(tmp_path.iterdir())
    assert [f.name for f in files] == ["toprec-v0.1.0.cache"]
    fresh = TopologicalRecursion(w)
    assert cache.load_into(fresh, tmp_path) == len(eng.memo)
    assert fresh.W(2, 1) == eng.W(2, 1)


def test_cache_tolerates_truncated_tail(tmp_path):
    eng = TopologicalRecursion(weber())
    eng.W(1, 1)
    cache.save_from(eng, tmp_path)
    path = cache.cache_path(tmp_path)
    path.write_bytes(path.read_bytes()[:-5])
    records = cache.read_records(path)
    assert len(records) == len(eng.memo) - 1


def test_cache_disabled_without_directory(monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.cache_path() is None
