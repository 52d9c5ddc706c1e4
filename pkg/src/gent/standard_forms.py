"""Standard forms I and II of two-mode covariance matrices."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from . import cm_core
from .errors import BranchAmbiguity, DomainError, SingularDenominator, UnphysicalState

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StandardFormI:
    """Standard form I parameters: V1 = b1*I, V2 = b2*I, C = diag(c, d)."""

    b1: float
    b2: float
    c: float
    d: float

    def to_cm(self) -> np.ndarray:
        return make_scaled_cm(ScaledState(self, 1.0, 1.0))


@dataclass(frozen=True)
class SymmetricState:
    """Symmetric state in standard form: b1 = b2 = b, c >= |d|, d = -|d|."""

    b: float
    c: float
    d_abs: float

    def __post_init__(self):
        if self.b < 0.5 or self.c < 0 or self.d_abs < 0:
            raise DomainError(f"invalid symmetric parameters {self}")
        if self.c < self.d_abs - 1e-12:
            raise DomainError(f"requires c >= |d|, got c={self.c}, |d|={self.d_abs}")
        if self.b - self.c <= 0:
            raise DomainError(f"requires b > c, got b={self.b}, c={self.c}")

    @property
    def kappa_plus(self) -> float:
        return math.sqrt((self.b - self.d_abs) * (self.b + self.c))

    @property
    def kappa_minus(self) -> float:
        return math.sqrt((self.b + self.d_abs) * (self.b - self.c))

    @property
    def kappa_tilde_minus(self) -> float:
        return math.sqrt((self.b - self.d_abs) * (self.b - self.c))

    def is_physical(self, tol: float = cm_core.KAPPA_TOL) -> bool:
        return self.kappa_minus >= 0.5 - tol

    def is_separable(self, tol: float = cm_core.KAPPA_TOL) -> bool:
        if not self.is_physical(tol):
            raise UnphysicalState(f"kappa_- = {self.kappa_minus:.6g} < 1/2")
        return self.kappa_tilde_minus >= 0.5 - tol

    def to_form_I(self) -> StandardFormI:
        return StandardFormI(self.b, self.b, self.c, -self.d_abs)

    def to_cm(self, u: float = 1.0) -> np.ndarray:
        return make_scaled_cm(ScaledState(self.to_form_I(), u, u))


@dataclass(frozen=True)
class ScaledState:
    """Standard form I locally squeezed by factors (u1, u2)."""

    base: StandardFormI
    u1: float
    u2: float

    def __post_init__(self):
        if self.u1 <= 0 or self.u2 <= 0:
            raise DomainError("scale factors must be positive")


def make_scaled_cm(sc: ScaledState) -> np.ndarray:
    """Covariance matrix of a scaled standard state."""
    b1, b2, c, d = sc.base.b1, sc.base.b2, sc.base.c, sc.base.d
    u1, u2 = sc.u1, sc.u2
    su = math.sqrt(u1 * u2)
    return np.array(
        [
            [b1 * u1, 0.0, c * su, 0.0],
            [0.0, b1 / u1, 0.0, d / su],
            [c * su, 0.0, b2 * u2, 0.0],
            [0.0, d / su, 0.0, b2 / u2],
        ]
    )


def to_standard_form_I(v: np.ndarray, tol: float = 1e-9) -> StandardFormI:
    """Recover (b1, b2, c, d) from the four local symplectic invariants.

    Branch convention: c >= |d| and sign(d) = sign(det C).  When det C = 0
    but C != 0 the split between c and d is not determined by the
    invariants; we set d = 0 and log the degeneracy.
    """
    phys = cm_core.is_physical(v)
    if not phys:
        raise UnphysicalState(f"kappa_- = {phys.kappa:.6g} < 1/2")
    inv = cm_core.invariants(v)
    b1 = math.sqrt(inv.det_v1)
    b2 = math.sqrt(inv.det_v2)
    p = inv.det_c  # c*d
    # det V = b1^2 b2^2 + (cd)^2 - b1 b2 (c^2 + d^2)  =>  solve for s = c^2 + d^2
    s = (b1 * b1 * b2 * b2 + p * p - inv.det_v) / (b1 * b2)
    if s < -tol:
        raise BranchAmbiguity(f"c^2 + d^2 = {s:.3e} < 0")
    s = max(s, 0.0)
    disc = s * s - 4 * p * p
    if disc < -tol * max(1.0, s * s):
        raise BranchAmbiguity(f"no real (c^2, d^2) split: discriminant {disc:.3e}")
    disc = max(disc, 0.0)
    c2 = 0.5 * (s + math.sqrt(disc))
    d2 = 0.5 * (s - math.sqrt(disc))
    c = math.sqrt(max(c2, 0.0))
    d = math.copysign(math.sqrt(max(d2, 0.0)), p) if p != 0 else 0.0
    if p == 0 and s > tol:
        log.warning("det C = 0 with C != 0: setting d = 0, c = %.6g", c)
    return StandardFormI(b1, b2, c, d)


def form_II_symmetric(s: SymmetricState) -> tuple[float, np.ndarray]:
    """Squeeze factor v and CM of the standard form II of a symmetric state."""
    if not s.is_physical():
        raise UnphysicalState(f"kappa_- = {s.kappa_minus:.6g} < 1/2")
    if s.b - s.c <= 0:
        raise DomainError("requires b - c > 0")
    v = math.sqrt((s.b - s.d_abs) / (s.b - s.c))
    return v, s.to_cm(u=v)


def form_II_residuals(b1, b2, c, d, v1, v2) -> tuple[float, float]:
    """Residuals of the algebraic system defining the form-II squeeze factors.

    Both vanish at a valid solution (v1, v2).
    """
    if v1 <= 0 or v2 <= 0:
        raise DomainError("squeeze factors must be positive")
    if abs(2 * b1 - v1) < 1e-300 or abs(2 * b2 - v2) < 1e-300:
        raise SingularDenominator("2*b_i - v_i = 0")
    r_a = b1 * (v1 * v1 - 1) / (2 * b1 - v1) - b2 * (v2 * v2 - 1) / (2 * b2 - v2)
    r_b = b1 * b2 * (v1 * v1 - 1) * (v2 * v2 - 1) - (c * v1 * v2 - abs(d)) ** 2
    return r_a, r_b


def symmetric_sts(r: float, nbar: float = 0.0) -> SymmetricState:
    """Symmetric squeezed thermal state: two-mode squeezing r on thermal inputs."""
    if r < 0 or nbar < 0:
        raise DomainError("r and nbar must be nonnegative")
    nu = nbar + 0.5
    return SymmetricState(b=nu * math.cosh(2 * r), c=nu * math.sinh(2 * r), d_abs=nu * math.sinh(2 * r))
