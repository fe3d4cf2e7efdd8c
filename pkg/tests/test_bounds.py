import json
import math

import pytest
from hypothesis import given, strategies as st
from scipy.special import lambertw

from twisted_thue.algnum import NumberField
from twisted_thue.diophantine.bounds import MatveevProvider, TableProvider, compose_bounds, largest_fixed_point
from twisted_thue.errors import NotAlmostTotallyImaginary, ProviderMissing, ValidationError
from twisted_thue.units import UnitBasis


@given(st.floats(3, 1e12))
def test_fixed_point_against_lambert_w(b):
    expected = float(-b * lambertw(-1 / b, -1).real)
    got = float(largest_fixed_point(0, b))
    assert got >= expected * (1 - 1e-12)
    assert got == pytest.approx(expected, rel=2e-9)


@given(st.floats(0, 1e6), st.floats(0.5, 1e9))
def test_fixed_point_is_largest(a, b):
    t = float(largest_fixed_point(a, b))
    lo = max(1.0, b)
    if t > lo * (1 + 1e-6):
        # just below t the inequality holds, well above it fails
        assert t * (1 - 1e-8) <= a + b * math.log(t * (1 - 1e-8)) + 1e-6 * t
    assert 2 * t > a + b * math.log(2 * t)


def test_matveev_monotone():
    P = MatveevProvider()
    vals = [[P.kappa(s, D) for D in (2, 6, 12, 24)] for s in (2, 3, 4)]
    for row in vals:
        assert row == sorted(row)
    for col in zip(*vals):
        assert list(col) == sorted(col)
    assert P.kappa(3, 12) == pytest.approx(2 ** 38 * 3 ** 4.5 * 12 ** 5 * (1 + math.log(12)), rel=1e-12)


def test_table_provider(tmp_path):
    T = TableProvider({"3,12": 1e20, "3,24": 2e20, "5,100": 9e30})
    assert T.kappa(3, 12) == 1e20
    assert T.kappa(2, 20) == 2e20
    with pytest.raises(ProviderMissing):
        T.kappa(6, 2)
    F = TableProvider({"3,12": 1e20}, fallback=MatveevProvider())
    assert F.kappa(6, 2) == MatveevProvider().kappa(6, 2)
    path = tmp_path / "kappa.json"
    path.write_text(json.dumps({"kappa": {"3,12": 5e19}}))
    assert TableProvider.from_file(str(path)).kappa(3, 12) == 5e19


@pytest.fixture(scope="module")
def reports(stender21):
    K, B = stender21
    return {m: compose_bounds(K, B, K.gen, m, MatveevProvider()) for m in (2, 10, 100)}


def test_constants_positive_and_acyclic(reports):
    for rep in reports.values():
        assert rep.is_acyclic()
        for name, c in rep.constants.items():
            assert c.value > 0 and math.isfinite(float(c.value)), name
        assert rep.notes["final_step_applies"] is False
        assert "direct.kappa_final" not in rep.constants["direct.kappa_total"].inputs


def test_box_monotone_in_m(reports):
    a, b, c = (reports[m] for m in (2, 10, 100))
    assert a.A_bound <= b.A_bound <= c.A_bound
    assert a.xy_bound <= b.xy_bound <= c.xy_bound
    assert a.kappa1 == b.kappa1 == c.kappa1


def test_report_deterministic(stender21, reports):
    K, B = stender21
    again = compose_bounds(K, B, K.gen, 10, MatveevProvider())
    assert json.dumps(again.to_json(), sort_keys=True) == json.dumps(reports[10].to_json(), sort_keys=True)


def test_report_json_shape(reports):
    doc = reports[10].to_json()
    assert set(doc) == {"m", "provider", "constants", "kappa1", "solution_box", "dependency_graph", "notes"}
    assert ["kappa4", "kappa3"] in doc["dependency_graph"]
    assert doc["provider"] == "matveev-default"


def test_sharper_provider_gives_smaller_box(stender21, reports):
    K, B = stender21
    table = TableProvider({"3,12": 1e6, "3,24": 1e6})
    rep = compose_bounds(K, B, K.gen, 10, table)
    assert rep.A_bound < reports[10].A_bound


def test_errors(stender21):
    K, B = stender21
    with pytest.raises(ValidationError):
        compose_bounds(K, B, K.gen, 1, MatveevProvider())
    with pytest.raises(ValidationError):
        compose_bounds(K, B, K.gen, 2.5, MatveevProvider())
    with pytest.raises(ProviderMissing):
        compose_bounds(K, B, K.gen, 10, None)
    R = NumberField([1, 0, -3, -1])
    a = R.gen
    RB = UnitBasis(R, [a, a + 1])
    with pytest.raises(NotAlmostTotallyImaginary):
        compose_bounds(R, RB, a, 10, MatveevProvider())


def test_one_real_embedding_uses_final_step():
    K = NumberField([1, 0, 0, -2])
    B = UnitBasis(K, [K.gen - 1])
    rep = compose_bounds(K, B, K.gen + 3, 10, MatveevProvider())
    assert rep.notes["final_step_applies"] is True
    assert "direct.kappa_final" in rep.constants["direct.kappa_total"].inputs
    assert rep.is_acyclic()
