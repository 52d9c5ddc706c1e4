import math

import numpy as np
import pytest

from gent import cm_core, standard_forms as sf
from gent.errors import DomainError, SingularDenominator

from conftest import random_entangled_symmetric


def test_recover_form_I_from_scaled_cm(rng):
    base = sf.StandardFormI(b1=1.1, b2=0.9, c=0.5, d=-0.3)
    v = sf.make_scaled_cm(sf.ScaledState(base, u1=1.4, u2=0.8))
    rec = sf.to_standard_form_I(v)
    assert rec.b1 == pytest.approx(base.b1, abs=1e-10)
    assert rec.b2 == pytest.approx(base.b2, abs=1e-10)
    assert rec.c == pytest.approx(base.c, abs=1e-10)
    assert rec.d == pytest.approx(base.d, abs=1e-10)


def test_recover_after_local_rotation(rng):
    from conftest import random_local_symplectic

    for s in random_entangled_symmetric(rng, 10):
        v = s.to_cm()
        t = random_local_symplectic(rng)
        rec = sf.to_standard_form_I(t @ v @ t.T)
        assert rec.b1 == pytest.approx(s.b, abs=1e-8)
        assert rec.c == pytest.approx(s.c, abs=1e-7)
        assert rec.d == pytest.approx(-s.d_abs, abs=1e-7)


def test_symmetric_kappas_match_generic_spectrum(rng):
    for s in random_entangled_symmetric(rng, 10):
        spec = cm_core.symplectic_spectrum(s.to_cm())
        assert s.kappa_plus == pytest.approx(spec.kappa_plus, abs=1e-9)
        assert s.kappa_minus == pytest.approx(spec.kappa_minus, abs=1e-9)
        assert s.kappa_tilde_minus == pytest.approx(spec.kappa_tilde_minus, abs=1e-9)


def test_form_II_squeeze_solves_residual_system(rng):
    for s in random_entangled_symmetric(rng, 10):
        v, v_ii = sf.form_II_symmetric(s)
        r_a, r_b = sf.form_II_residuals(s.b, s.b, s.c, -s.d_abs, v, v)
        assert abs(r_a) < 1e-10
        assert abs(r_b) < 1e-10
        # form II has equal diagonal blocks up to the p/q asymmetry
        assert v_ii[0, 0] == pytest.approx(s.b * v)
        assert v_ii[1, 1] == pytest.approx(s.b / v)


def test_residuals_reject_bad_input():
    with pytest.raises(DomainError):
        sf.form_II_residuals(1.0, 1.0, 0.5, 0.2, -1.0, 1.0)
    with pytest.raises(SingularDenominator):
        sf.form_II_residuals(1.0, 1.0, 0.5, 0.2, 2.0, 1.0)


def test_symmetric_sts_parameters():
    s = sf.symmetric_sts(0.5, nbar=0.25)
    nu = 0.75
    assert s.b == pytest.approx(nu * math.cosh(1.0))
    assert s.c == pytest.approx(nu * math.sinh(1.0))
    assert s.c == s.d_abs
    assert sf.symmetric_sts(0.0).is_separable()
    with pytest.raises(DomainError):
        sf.symmetric_sts(-0.1)


def test_symmetric_state_validation():
    with pytest.raises(DomainError):
        sf.SymmetricState(b=0.4, c=0.0, d_abs=0.0)
    with pytest.raises(DomainError):
        sf.SymmetricState(b=1.0, c=0.2, d_abs=0.5)  # c < |d|
    with pytest.raises(DomainError):
        sf.SymmetricState(b=1.0, c=1.0, d_abs=0.5)  # b = c


def test_zero_det_c_branch(caplog):
    v = sf.make_scaled_cm(sf.ScaledState(sf.StandardFormI(1.0, 1.0, 0.4, 0.0), 1.0, 1.0))
    with caplog.at_level("WARNING"):
        rec = sf.to_standard_form_I(v)
    assert rec.d == 0.0
    assert rec.c == pytest.approx(0.4, abs=1e-10)
