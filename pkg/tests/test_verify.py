import pytest

from pemc_casimir import force as fm
from pemc_casimir import verify


@pytest.fixture(scope="module")
def cfg():
    return fm.QuadratureConfig()


@pytest.mark.parametrize("check", [c for c in verify.BATTERY
                                   if c not in (verify.check_curl_equality, verify.check_stress_reduction)],
                         ids=lambda c: c.__name__)
def test_fast_checks_pass(check, cfg):
    result = check(cfg)
    assert result.passed, result
    assert result.error <= result.tolerance


def test_fault_injection_trips_three_way(cfg):
    assert verify.check_three_way(cfg, fault=0.0).passed
    bad = verify.check_three_way(cfg, fault=1e-6)
    assert not bad.passed
    assert bad.error == pytest.approx(1e-6, rel=1e-3)


def test_check_record():
    c = verify._check("x", 2.0, 1.0, "d")
    assert not c.passed and c.error == 2.0
    assert verify._check("x", 0.5, 1.0).passed


def test_fresnel_limit_errors_shrink():
    errs = [e for _, e in verify.fresnel_limit_errors(2.0)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
