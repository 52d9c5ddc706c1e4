"""Shared fixtures: seeded RNG and random-state factories."""

import numpy as np
import pytest

from gent.standard_forms import SymmetricState

# Two symmetric states with identical kappa_tilde_minus = sqrt(0.08) but
# different relative-entropy entanglement (acceptance fixture).
EQUAL_KT_PAIR = (
    SymmetricState(b=1.0, c=0.8, d_abs=0.6),
    SymmetricState(b=1.2, c=1.0, d_abs=0.8),
)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_entangled_symmetric(rng, n, b_lo=0.5, b_hi=3.0, kt_sq_cap=0.2499):
    """Rejection-sample physical entangled SymmetricState instances.

    kt_sq_cap keeps kappa_tilde_minus away from 1/2; the lower cut keeps the
    states away from the (unnormalizable) EPR limit.
    """
    out = []
    while len(out) < n:
        b = rng.uniform(b_lo, b_hi)
        c = rng.uniform(0.0, b)
        d = rng.uniform(0.0, c)
        if (b + d) * (b - c) < 0.25:  # unphysical
            continue
        kt_sq = (b - d) * (b - c)
        if not 1e-4 < kt_sq < kt_sq_cap:
            continue
        out.append(SymmetricState(b, c, d))
    return out


def random_local_symplectic(rng):
    """Random block-diagonal S1 (+) S2 with each 2x2 block of determinant 1."""
    out = np.zeros((4, 4))
    for k in (0, 2):
        phi, r, psi = rng.uniform(-np.pi, np.pi), rng.uniform(-0.8, 0.8), rng.uniform(-np.pi, np.pi)
        rot = lambda a: np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
        out[k : k + 2, k : k + 2] = rot(phi) @ np.diag([np.exp(r), np.exp(-r)]) @ rot(psi)
    return out


def random_physical_cm(rng, nu_floor=0.55):
    """Random physical 4x4 CM, bounded away from the physicality boundary."""
    s = random_local_symplectic(rng) @ _random_bs(rng)
    d = np.repeat(rng.uniform(nu_floor, 1.5, size=2), 2)
    return s @ np.diag(d) @ s.T


def _random_bs(rng):
    from gent.optics import BeamSplitterParams, bs_symplectic

    return bs_symplectic(
        BeamSplitterParams(theta=rng.uniform(0, np.pi), phi=rng.uniform(-np.pi, np.pi))
    )
