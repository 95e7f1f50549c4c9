"""Smoke tests for the Python bindings.

Run under ctest with PYTHONPATH pointing at the build tree, or against an
installed wheel.
"""

import math

import pytest

import rbwkb


@pytest.fixture(scope="module")
def params():
    return rbwkb.load_default_params()


def test_params_roundtrip(params):
    assert params.Z == 37
    assert params.alpha_c == pytest.approx(9.0760)
    assert params.a3_eff(0) == pytest.approx(-9.86069196 * 0.814)
    assert params.r_c(2) == pytest.approx(4.86851938)


def test_potential_values(params):
    assert rbwkb.z_eff(1.0, 0, params) == pytest.approx(3.398539958258, rel=1e-10)
    assert rbwkb.v_eff(1.0, 1, params) == pytest.approx(-8.727250368540, rel=1e-10)
    ch = rbwkb.Channel(1, 1.5)
    assert rbwkb.v_so(0.1, ch, params) == pytest.approx(1.842809777007, rel=1e-10)


def test_channel_validation():
    with pytest.raises(ValueError):
        rbwkb.Channel(1, 0.75)


def test_missing_cutoff_raises(params):
    ch = rbwkb.Channel(5, 5.5)
    with pytest.raises(ValueError, match="r_so_5"):
        rbwkb.quantum_defect(ch, params)


def test_turning_points_and_action(params):
    ch = rbwkb.Channel(1, 1.5)
    tp = rbwkb.turning_points(ch, -1e-6, params)
    assert tp.r_minus == pytest.approx(0.03471968, abs=1e-6)
    assert tp.r_plus == pytest.approx(1999998.875, rel=1e-8)
    ev = rbwkb.action_integral(ch, -1e-4, params)
    assert ev.abs_err_estimate < 1e-9


def test_defects_and_splitting(params):
    d = rbwkb.quantum_defect(rbwkb.Channel(0, 0.5), params)
    assert d.Delta == pytest.approx(3.13115792, abs=1e-6)
    assert d.extrapolation_spread < 1e-5

    mhz = rbwkb.fine_splitting_direct(30, 1, params)
    assert mhz == pytest.approx(4305.5942, rel=1e-4)
    lead = rbwkb.fine_splitting_leading(30, 1, params)
    assert lead == pytest.approx(mhz, rel=1e-3)


def test_eigenvalue_consistency(params):
    sr = rbwkb.solve_eigenvalue(27, rbwkb.Channel(0, 0.5), params)
    assert sr.n == 28
    x = 1.0 / math.sqrt(-sr.E)
    assert sr.defect_effective == pytest.approx(28 - x, abs=1e-12)
    assert abs(sr.quantization_residual) < 1e-10


def test_oracle(params):
    hydrogen = rbwkb.ModelParams.pure_coulomb()
    hydrogen.alpha_fs = 0.0
    oe = rbwkb.oracle_eigenvalue(0, rbwkb.Channel(0, 0.5), hydrogen,
                                 rbwkb.default_grid(1))
    assert oe.E == pytest.approx(-1.0, rel=1e-8)
    with pytest.raises(ValueError):
        rbwkb.oracle_eigenvalue(30, rbwkb.Channel(0, 0.5), params,
                                rbwkb.default_grid(31))


def test_references():
    refs = rbwkb.load_references(rbwkb.data_dir() + "/reference_tables.csv")
    assert len(refs) > 50
    rows = rbwkb.select_references(refs, "fine_splitting", 30, 1)
    sources = {r.source for r in rows}
    assert "li2003" in sources
    assert "wkb_model" in sources
