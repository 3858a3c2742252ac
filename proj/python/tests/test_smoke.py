import math

import pytest

import cliffwb


def test_generators_anticommute():
    e1 = cliffwb.Multivector.generator(3, 1)
    e2 = cliffwb.Multivector.generator(3, 2)
    assert (e1 * e1).coefficients == cliffwb.Multivector.scalar(3, -1.0).coefficients
    assert (e1 * e2 + e2 * e1).modulus() == 0.0
    assert cliffwb.blade_product(0b01, 0b10) == (1, 0b11)
    assert cliffwb.blade_product(0b10, 0b01) == (-1, 0b11)


def test_exp_quarter_turn():
    e1 = cliffwb.Multivector.generator(2, 1)
    r = (e1 * (math.pi / 2)).exp()
    assert (r - e1).modulus() < 1e-15


def test_kernels():
    k = cliffwb.cauchy_kernel([0, 0, 0], [1, 0, 0])
    assert k[0] == pytest.approx(1 / (4 * math.pi))
    b = cliffwb.bergman_kernel([0, 0, 0], [0, 0, 0])
    assert b[0] == pytest.approx(9 / (4 * math.pi))
    with pytest.raises(cliffwb.SingularityError):
        cliffwb.cauchy_kernel([0, 0, 0], [0, 0, 0])


def test_symmetric_power_is_zeta():
    v = cliffwb.symmetric_power([1, 0], [0.3, 0.5, 0.0])
    zeta = [0.3 * c for c in cliffwb.Multivector.generator(2, 1).coefficients]
    zeta[0] -= 0.5
    assert v.coefficients == pytest.approx(zeta)


def test_build_rule_measure():
    rule = cliffwb.build_rule("sphere", 2, 2)
    assert sum(rule["weights"]) == pytest.approx(4 * math.pi, rel=1e-12)
    assert len(rule["nodes"]) == len(rule["normals"])


def test_run_suite_report():
    report = cliffwb.run_suite("taylor")
    assert report["format"] == "cliffwb-report"
    assert report["summary"]["failed"] == 0
    assert cliffwb.run_suite_json("taylor") == cliffwb.run_suite_json("taylor")


def test_config_errors():
    with pytest.raises(cliffwb.ConfigError):
        cliffwb.run_suite("nosuch")
    with pytest.raises(cliffwb.ConfigError):
        cliffwb.run_suite("taylor", tolerances={"nosuch": 1.0})
