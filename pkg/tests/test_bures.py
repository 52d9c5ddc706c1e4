import math

import pytest

from gent import fock
from gent.bures import (
    bures_entanglement,
    max_fidelity_closed,
    numeric_max_fidelity,
    one_mode_fidelity,
)
from gent.cm_core import OneModeCM
from gent.errors import DomainError, UnphysicalState
from gent.standard_forms import SymmetricState, symmetric_sts


def test_fidelity_identical_states():
    v = OneModeCM(0.9, 0.7)
    assert one_mode_fidelity(v, v) == pytest.approx(1.0, abs=1e-12)


def test_fidelity_vacuum_vs_thermal():
    # analytic value 1/(nbar+1), cross-checked by the Fock oracle
    vac = OneModeCM(0.5, 0.5)
    for nbar in (0.2, 0.5, 1.0):
        th = OneModeCM(nbar + 0.5, nbar + 0.5)
        f = one_mode_fidelity(vac, th)
        assert f == pytest.approx(1.0 / (nbar + 1.0), abs=1e-12)
        f_oracle = fock.fidelity_fock(
            fock.gaussian_state_from_cm(vac, 60), fock.gaussian_state_from_cm(th, 60)
        )
        assert f == pytest.approx(f_oracle, abs=1e-8)


def test_fidelity_squeezed_vs_vacuum_oracle():
    sq = OneModeCM(math.e / 2, 1.0 / (2 * math.e))
    vac = OneModeCM(0.5, 0.5)
    f_oracle = fock.fidelity_fock(
        fock.gaussian_state_from_cm(sq, 60), fock.gaussian_state_from_cm(vac, 60)
    )
    assert one_mode_fidelity(sq, vac) == pytest.approx(f_oracle, abs=1e-8)


def test_fidelity_symmetric_in_arguments():
    a, b = OneModeCM(0.8, 0.9), OneModeCM(0.55, 1.3)
    assert one_mode_fidelity(a, b) == pytest.approx(one_mode_fidelity(b, a), abs=1e-14)


def test_fidelity_rejects_unphysical():
    with pytest.raises(UnphysicalState):
        one_mode_fidelity(OneModeCM(0.3, 0.3), OneModeCM(0.5, 0.5))


def test_closed_form_domain():
    with pytest.raises(DomainError):
        max_fidelity_closed(0.0)
    with pytest.raises(DomainError):
        max_fidelity_closed(0.6)
    assert max_fidelity_closed(0.5) == pytest.approx(1.0, abs=1e-14)


def test_bures_entanglement_closed_form():
    s = SymmetricState(1.0, 0.8, 0.6)
    res = bures_entanglement(s)
    kt = math.sqrt(0.08)
    assert res.kappa_tilde_minus == pytest.approx(kt, abs=1e-12)
    assert res.f_max == pytest.approx(2 * kt / (kt + 0.5) ** 2, abs=1e-14)
    assert res.e_b == pytest.approx(1.0 - math.sqrt(res.f_max), abs=1e-12)
    assert res.d_bures == pytest.approx(math.sqrt(2 - 2 * math.sqrt(res.f_max)), abs=1e-12)


def test_bures_separable_is_zero():
    res = bures_entanglement(SymmetricState(1.0, 0.5, 0.25))
    assert res.e_b == 0.0
    assert res.f_max == 1.0
    assert res.kappa_tilde_minus > 0.5


def test_numeric_maximizer_matches_closed_form():
    s = SymmetricState(1.0, 0.8, 0.6)
    f_star, argmax, _u = numeric_max_fidelity(s)
    assert f_star == pytest.approx(max_fidelity_closed(s.kappa_tilde_minus), abs=1e-6)
    # argmax sits on the separability threshold
    assert argmax.kappa_tilde_minus == pytest.approx(0.5, abs=1e-8)


def test_numeric_maximizer_tmsv():
    s = symmetric_sts(0.5)
    f_star, _, _ = numeric_max_fidelity(s)
    kt = 0.5 * math.exp(-1.0)
    assert f_star == pytest.approx(2 * kt / (kt + 0.5) ** 2, abs=1e-6)


def test_numeric_maximizer_requires_entangled():
    with pytest.raises(DomainError):
        numeric_max_fidelity(SymmetricState(1.0, 0.2, 0.1))
