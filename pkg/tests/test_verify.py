import pytest

from nbsloc import specfun, verify
from nbsloc.errors import DomainError


class TestCheckRegistry:
    def test_names_exposed(self):
        names = verify.check_names()
        assert "laguerre_orthonormality" in names
        assert "kernel_series_closed_equivalence" in names

    def test_unknown_check(self):
        with pytest.raises(DomainError):
            verify.run_check("nope")

    def test_result_names_match_registry(self):
        for name in ("incbeta_reflection", "spectrum_bounds_monotone", "intertwining"):
            assert verify.run_check(name).name == name


class TestFaultInjection:
    def test_perturbed_gamma_ratio_fails_orthonormality(self):
        clean = verify.run_check("laguerre_orthonormality")
        assert clean.passed
        specfun.set_gamma_ratio_perturbation(1e-3)
        try:
            broken = verify.run_check("laguerre_orthonormality")
        finally:
            specfun.set_gamma_ratio_perturbation(0.0)
        assert not broken.passed
        assert broken.max_error > 1e-4
        # and the hook really resets
        assert verify.run_check("laguerre_orthonormality").passed
