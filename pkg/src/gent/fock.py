"""Brute-force ground truth in a truncated number basis.

Gaussian states are realized as dense density matrices by Williamson
decomposition of the covariance matrix followed by an Euler (passive -
squeeze - passive) factorization of the symplectic, applied as unitary gates
to a product of thermal states.  Truncated states are never renormalized;
the trace deficit is carried so tests can reject inadmissible truncations.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .cm_core import OneModeCM, omega
from .errors import (
    DecompositionFailure,
    DimensionMismatch,
    SupportViolation,
    TruncationWarning,
    UnphysicalState,
)

TRACE_DEFICIT_TOL = 1e-8


@dataclass
class FockOperator:
    """Dense Hermitian matrix in a truncated number basis.

    ``log_matrix`` carries ln(matrix) exactly for full-rank Gaussian states:
    the thermal-core logarithm is analytic and gates conjugate it.  eigh-based
    logs lose the deep tail (eigenvalues below machine noise), which matters
    for relative entropies; None for pure or generic operators.
    """

    matrix: np.ndarray
    dim_per_mode: int
    n_modes: int = 1
    trace_deficit: float = 0.0
    log_matrix: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.dim_per_mode**self.n_modes


@dataclass(frozen=True)
class WilliamsonFactors:
    """V = S D S^T with S symplectic and D the doubled symplectic spectrum."""

    s: np.ndarray
    d: np.ndarray


# gate descriptors ----------------------------------------------------------


@dataclass(frozen=True)
class Squeeze:
    z: float  # q -> e^z q, p -> e^-z p
    mode: int = 0


@dataclass(frozen=True)
class Rotate:
    phi: float
    mode: int = 0


@dataclass(frozen=True)
class BeamSplitter:
    theta: float
    phi: float = 0.0


def destroy(n: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, n)), 1)


def quadratures(n: int) -> tuple[np.ndarray, np.ndarray]:
    a = destroy(n)
    q = (a + a.T) / math.sqrt(2)
    p = (a - a.T) / (math.sqrt(2) * 1j)
    return q, p


def thermal_state(nu: float, n: int) -> FockOperator:
    """Thermal state of symplectic eigenvalue nu (mean photons nu - 1/2)."""
    if nu < 0.5 - 1e-9:
        raise UnphysicalState(f"nu = {nu} < 1/2")
    if n < 2:
        raise ValueError("need at least two Fock levels")
    nbar = max(nu - 0.5, 0.0)  # absorb roundoff from upstream decompositions
    if nbar < 1e-12:
        w = np.zeros(n)
        w[0] = 1.0
        log_w = None  # rank deficient
    else:
        ratio = nbar / (nbar + 1.0)
        w = ratio ** np.arange(n) / (nbar + 1.0)
        log_w = np.arange(n) * math.log(ratio) - math.log(nbar + 1.0)
    return FockOperator(
        matrix=np.diag(w.astype(complex)),
        dim_per_mode=n,
        n_modes=1,
        trace_deficit=float(1.0 - w.sum()),
        log_matrix=None if log_w is None else np.diag(log_w.astype(complex)),
    )


def tensor(a: FockOperator, b: FockOperator) -> FockOperator:
    if a.dim_per_mode != b.dim_per_mode:
        raise DimensionMismatch("per-mode dimensions differ")
    tr_a = 1.0 - a.trace_deficit
    tr_b = 1.0 - b.trace_deficit
    log_ab = None
    if a.log_matrix is not None and b.log_matrix is not None:
        # ln(A (x) B) = ln A (x) 1 + 1 (x) ln B
        log_ab = np.kron(a.log_matrix, np.eye(b.dim)) + np.kron(np.eye(a.dim), b.log_matrix)
    return FockOperator(
        matrix=np.kron(a.matrix, b.matrix),
        dim_per_mode=a.dim_per_mode,
        n_modes=a.n_modes + b.n_modes,
        trace_deficit=float(1.0 - tr_a * tr_b),
        log_matrix=log_ab,
    )


# unitaries ------------------------------------------------------------------


def _squeeze_unitary(r: float, n: int) -> np.ndarray:
    """exp((r/2)(adag^2 - a^2)); maps q -> e^r q in the Heisenberg picture."""
    a = destroy(n)
    return expm(0.5 * r * (a.T @ a.T - a @ a))


def _rotation_unitary(phi: float, n: int) -> np.ndarray:
    return np.diag(np.exp(-1j * phi * np.arange(n)))


def _beamsplitter_unitary(theta: float, phi: float, n: int) -> np.ndarray:
    """Wave mixing exp[-(theta/2)(e^{i phi} a1dag a2 - h.c.)], two modes."""
    u = np.array(
        [
            [math.cos(theta / 2), -np.exp(1j * phi) * math.sin(theta / 2)],
            [np.exp(-1j * phi) * math.sin(theta / 2), math.cos(theta / 2)],
        ]
    )
    return _passive_unitary(u, n)


def _passive_unitary(u: np.ndarray, n: int) -> np.ndarray:
    """Fock-space unitary of a 2x2 mode-space unitary u (a_j -> sum u_jk a_k).

    Photon number is conserved, so the unitary is assembled per total-photon
    sector, where the generator is a small tridiagonal Hermitian matrix.
    """
    h = 1j * _logm_unitary(u)  # u = exp(-i h), h Hermitian
    dim = n * n
    out = np.zeros((dim, dim), dtype=complex)
    for total in range(2 * n - 1):
        n1_lo = max(0, total - n + 1)
        n1_hi = min(total, n - 1)
        idx = np.array([(n1 * n + (total - n1)) for n1 in range(n1_lo, n1_hi + 1)])
        size = len(idx)
        hb = np.zeros((size, size), dtype=complex)
        for k, n1 in enumerate(range(n1_lo, n1_hi + 1)):
            n2 = total - n1
            hb[k, k] = h[0, 0] * n1 + h[1, 1] * n2
            if k + 1 < size:  # <n1+1, n2-1| a1dag a2 |n1, n2>
                amp = math.sqrt((n1 + 1) * n2)
                hb[k + 1, k] += h[0, 1] * amp
                hb[k, k + 1] += h[1, 0] * amp
        w, vecs = np.linalg.eigh(hb)
        ub = (vecs * np.exp(-1j * w)) @ vecs.conj().T
        out[np.ix_(idx, idx)] = ub
    return out


def _logm_unitary(u: np.ndarray) -> np.ndarray:
    """Principal logarithm of a small unitary matrix via eigendecomposition."""
    w, v = np.linalg.eig(u)
    return v @ np.diag(np.log(w)) @ np.linalg.inv(v)


def apply_gate(state: FockOperator, gate) -> FockOperator:
    n = state.dim_per_mode
    if isinstance(gate, Squeeze):
        u1 = _squeeze_unitary(gate.z, n)
        u = _embed_single_mode(u1, gate.mode, state.n_modes, n)
    elif isinstance(gate, Rotate):
        u1 = _rotation_unitary(gate.phi, n)
        u = _embed_single_mode(u1, gate.mode, state.n_modes, n)
    elif isinstance(gate, BeamSplitter):
        if state.n_modes != 2:
            raise DimensionMismatch("beam splitter needs a two-mode state")
        u = _beamsplitter_unitary(gate.theta, gate.phi, n)
    else:
        raise TypeError(f"unknown gate {gate!r}")
    return FockOperator(
        matrix=u @ state.matrix @ u.conj().T,
        dim_per_mode=n,
        n_modes=state.n_modes,
        trace_deficit=state.trace_deficit,
        log_matrix=None if state.log_matrix is None else u @ state.log_matrix @ u.conj().T,
    )


def _embed_single_mode(u1: np.ndarray, mode: int, n_modes: int, n: int) -> np.ndarray:
    if mode >= n_modes:
        raise DimensionMismatch(f"mode {mode} out of range for {n_modes} modes")
    if n_modes == 1:
        return u1
    eye = np.eye(n)
    return np.kron(u1, eye) if mode == 0 else np.kron(eye, u1)


# decompositions -------------------------------------------------------------


def williamson(v: np.ndarray, tol: float = 1e-9) -> WilliamsonFactors:
    """Decompose V = S D S^T from the eigenstructure of Omega V.

    Eigenvectors for the +i*kappa eigenvalues are scaled and orientation-fixed
    so that the assembled matrix is real symplectic.
    """
    v = np.asarray(v, dtype=float)
    n = v.shape[0] // 2
    om = omega(n)
    ev, vec = np.linalg.eig(om @ v)
    order = sorted((i for i in range(2 * n) if ev[i].imag > 0), key=lambda i: -ev[i].imag)
    s_invt = np.zeros((2 * n, 2 * n))
    kappas = []
    chosen = []  # symplectically normalized complex eigenvectors
    for j, i in enumerate(order):
        u = vec[:, i].astype(complex)
        # degenerate kappas leave the eigenvectors unpaired under the
        # symplectic form g(a, b) = -i a^dag Omega b; Gram-Schmidt fixes that
        # (distinct kappas are g-orthogonal already)
        for prev in chosen:
            u = u - (-1j * (prev.conj() @ om @ u)) * prev
        gval = float((-1j * (u.conj() @ om @ u)).real)
        if abs(gval) < 1e-12:
            raise DecompositionFailure("degenerate symplectic subspace defeated pairing")
        chosen.append(u / math.sqrt(abs(gval)))
        x = u.real.copy()
        y = u.imag.copy()
        sym = 2.0 * (x @ om @ y)
        if sym < 0:
            y, sym = -y, -sym
        scale = math.sqrt(2.0 / sym)
        s_invt[:, 2 * j] = scale * x
        s_invt[:, 2 * j + 1] = scale * y
        kappas.append(ev[i].imag)
    s = np.linalg.inv(s_invt).T
    d = np.diag(np.repeat(kappas, 2))
    if np.max(np.abs(s.T @ om @ s - om)) > 1e-7 or np.max(np.abs(s @ d @ s.T - v)) > tol * max(
        1.0, np.max(np.abs(v))
    ):
        raise DecompositionFailure("Williamson factors fail the symplectic/reconstruction check")
    return WilliamsonFactors(s=s, d=d)


def euler_decompose(s: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Factor a symplectic S = K1 Z K2 with K passive and Z diagonal squeezes.

    Uses the polar decomposition S = O P; the positive symplectic P is
    diagonalized by a passive K built from its eigenvectors, whose partner
    columns are -Omega times the primaries.
    """
    s = np.asarray(s, dtype=float)
    n = s.shape[0] // 2
    om = omega(n)
    w, vec = np.linalg.eigh(s.T @ s)
    p = (vec * np.sqrt(w)) @ vec.T  # (S^T S)^{1/2}
    o = s @ np.linalg.inv(p)
    wz, vz = np.linalg.eigh(p)
    order = np.argsort(-wz)[:n]
    k = np.zeros_like(p)
    zs = []
    chosen = []  # primary columns and their -Omega partners
    for j, i in enumerate(order):
        vec_i = vz[:, i].copy()
        # within degenerate groups (z ~ 1 in particular) the raw eigenvectors
        # need not come in symplectic pairs; project against what is chosen
        for prev in chosen:
            vec_i -= (prev @ vec_i) * prev
        norm = np.linalg.norm(vec_i)
        if norm < 1e-8:
            raise DecompositionFailure("degenerate squeeze subspace defeated pairing")
        vec_i /= norm
        partner = -om @ vec_i
        k[:, 2 * j] = vec_i
        k[:, 2 * j + 1] = partner
        chosen.extend([vec_i, partner])
        zs.append(wz[i])
    z = np.diag([f for zi in zs for f in (zi, 1.0 / zi)])
    k1 = o @ k
    k2 = k.T
    if np.max(np.abs(k1 @ z @ k2 - s)) > 1e-7:
        raise DecompositionFailure("Euler factors do not reproduce S")
    return k1, z, k2


def _passive_mode_unitary(k: np.ndarray) -> np.ndarray:
    """Complex mode-space unitary of a passive (orthogonal symplectic) K."""
    n = k.shape[0] // 2
    u = np.zeros((n, n), dtype=complex)
    for j in range(n):
        for m in range(n):
            blk = k[2 * j : 2 * j + 2, 2 * m : 2 * m + 2]
            if abs(blk[0, 0] - blk[1, 1]) > 1e-8 or abs(blk[0, 1] + blk[1, 0]) > 1e-8:
                raise DecompositionFailure("K is not passive (blocks do not commute with J)")
            u[j, m] = blk[0, 0] + 1j * blk[1, 0]
    return u


def _apply_symplectic(state: FockOperator, s: np.ndarray) -> FockOperator:
    """Unitary action realizing the covariance-matrix congruence W -> S W S^T."""
    n = state.dim_per_mode
    k1, z, k2 = euler_decompose(s)
    mats = []
    for k in (k1, k2):
        if state.n_modes == 1:
            u = _passive_mode_unitary(k)  # 1x1 phase
            mats.append(_rotation_unitary(float(np.angle(u[0, 0].conj())), n))
        else:
            mats.append(_passive_unitary(_passive_mode_unitary(k), n))
    zgate = _squeeze_unitary(math.log(z[0, 0]), n)
    if state.n_modes == 2:
        zgate = np.kron(zgate, _squeeze_unitary(math.log(z[2, 2]), n))
    u_total = mats[0] @ zgate @ mats[1]
    return FockOperator(
        matrix=u_total @ state.matrix @ u_total.conj().T,
        dim_per_mode=n,
        n_modes=state.n_modes,
        trace_deficit=state.trace_deficit,
        log_matrix=None
        if state.log_matrix is None
        else u_total @ state.log_matrix @ u_total.conj().T,
    )


def gaussian_state_from_cm(v, n: int) -> FockOperator:
    """Build the undisplaced Gaussian state of covariance matrix v.

    Accepts a OneModeCM, a 2x2 or a 4x4 array.
    """
    if isinstance(v, OneModeCM):
        v = v.matrix()
    v = np.asarray(v, dtype=float)
    fac = williamson(v)
    kappas = np.diag(fac.d)[::2]
    state = thermal_state(float(kappas[0]), n)
    for kappa in kappas[1:]:
        state = tensor(state, thermal_state(float(kappa), n))
    return _apply_symplectic(state, fac.s)


def moments_from_fock(state: FockOperator) -> np.ndarray:
    """Symmetrized second moments of the quadratures."""
    if state.trace_deficit > TRACE_DEFICIT_TOL:
        warnings.warn(
            f"trace deficit {state.trace_deficit:.3e} exceeds {TRACE_DEFICIT_TOL}",
            TruncationWarning,
        )
    n = state.dim_per_mode
    q, p = quadratures(n)
    if state.n_modes == 1:
        ops = [q, p]
    else:
        eye = np.eye(n)
        ops = [np.kron(q, eye), np.kron(p, eye), np.kron(eye, q), np.kron(eye, p)]
    m = len(ops)
    out = np.zeros((m, m))
    rho = state.matrix
    for i in range(m):
        for j in range(i, m):
            sym = 0.5 * (ops[i] @ ops[j] + ops[j] @ ops[i])
            out[i, j] = out[j, i] = float(np.real(np.trace(rho @ sym)))
    return out


# scalar functionals ----------------------------------------------------------


def _check_same_dims(a: FockOperator, b: FockOperator) -> None:
    if a.dim_per_mode != b.dim_per_mode or a.n_modes != b.n_modes:
        raise DimensionMismatch("operators live in different truncated spaces")


def fidelity_fock(rho: FockOperator, rho_p: FockOperator) -> float:
    """Uhlmann fidelity (Tr[(sqrt(rho) rho' sqrt(rho))^{1/2}])^2."""
    _check_same_dims(rho, rho_p)
    w, vec = np.linalg.eigh(rho.matrix)
    w = np.clip(w, 0.0, None)
    sqrt_rho = (vec * np.sqrt(w)) @ vec.conj().T
    inner = sqrt_rho @ rho_p.matrix @ sqrt_rho
    lam = np.linalg.eigvalsh(inner)
    # sqrt amplifies eigenvalue-level roundoff; drop pure-noise eigenvalues
    lam[lam < 1e-15 * max(lam.max(), 1e-300)] = 0.0
    return float(np.sum(np.sqrt(lam)) ** 2)


def entropy_fock(rho: FockOperator) -> float:
    """von Neumann entropy -sum lambda ln lambda, in nats."""
    lam = np.linalg.eigvalsh(rho.matrix).real
    lam = lam[lam > 1e-15]
    return float(-np.sum(lam * np.log(lam)))


def rel_entropy_fock(rho_p: FockOperator, rho: FockOperator) -> float:
    """Tr[rho (ln rho - ln rho')] in nats; raises when the support leaks."""
    _check_same_dims(rho_p, rho)
    if rho_p.log_matrix is not None:
        cross = float(np.real(np.trace(rho.matrix @ rho_p.log_matrix)))
    else:
        wp, vp = np.linalg.eigh(rho_p.matrix)
        wp = wp.real
        # population of rho in each eigenvector of rho'
        pops = np.real(np.einsum("ij,ji->i", vp.conj().T @ rho.matrix, vp))
        bad = (pops > 1e-8) & (wp <= 1e-15)
        if np.any(bad):
            raise SupportViolation("rho has weight outside the numerical support of rho'")
        keep = wp > 1e-15
        cross = float(np.sum(pops[keep] * np.log(wp[keep])))
    lam = np.linalg.eigvalsh(rho.matrix).real
    lam = lam[lam > 1e-15]
    return float(np.sum(lam * np.log(lam)) - cross)
