"""Weyl-Heisenberg operators, SIC certification, fiducial search, tomography.

The group is generated by the cyclic shift X and the clock Z, which commute
up to exp(2*pi*i/d).  Displacement operators are D_{a,b} = tau^{ab} X^a Z^b
with tau = -exp(i*pi/d); this phase convention makes D_{a,b}^dagger equal
D_{-a,-b} with indices read modulo 2d, so it behaves uniformly in every
dimension, even ones included.  A SIC is the orbit of a
fiducial vector whose d^2 - 1 displacement overlaps all have squared
magnitude 1/(d+1).

The search minimizes the frame potential, the sum of fourth powers of the
displacement overlap magnitudes.  Because the displacements form an
orthogonal operator basis, the squared overlaps always sum to d - 1, so
the potential equals its lower bound (d-1)/(d+1) plus the sum of squared
deviations of the overlaps from target; minimizing it is therefore a
zero-residual least-squares problem, solved here per restart with a
Gauss-Newton trust-region method.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import least_squares

from .linesets import COMPLEX, LineSet

__all__ = [
    "WH_GROUP",
    "THREE_QUBIT_GROUP",
    "Fiducial",
    "SicCertificate",
    "RestartRecord",
    "SicSearchResult",
    "shift_x",
    "clock_z",
    "displacement",
    "displacement_operators",
    "wh_orbit",
    "three_qubit_orbit",
    "certify_sic",
    "frame_potential",
    "frame_potential_minimum",
    "frame_potential_gradient",
    "search_fiducial",
    "born_probabilities",
    "reconstruct_state",
    "StateReconstruction",
    "overlap_phases",
]

WH_GROUP = "wh"
THREE_QUBIT_GROUP = "three-qubit"


@dataclass(frozen=True, eq=False)
class Fiducial:
    """A unit vector in C^d used to seed a group orbit."""

    dimension: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amp = np.array(self.amplitudes, dtype=np.complex128)
        if amp.shape != (self.dimension,):
            raise ValueError("amplitude count must equal the dimension")
        nrm = np.linalg.norm(amp)
        if abs(nrm - 1.0) > 1e-12:
            raise ValueError(f"fiducial must be unit norm (got {nrm!r})")
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)


@dataclass(frozen=True)
class SicCertificate:
    """Result of checking a candidate SIC line set.

    max_overlap_deviation is measured on squared overlap magnitudes against
    the target 1/(d+1); identity_residual is the max-entry norm of
    sum_j P_j - d*I over the orbit projectors.
    """

    passed: bool
    target_overlap: float
    max_overlap_deviation: float
    identity_residual: float


def shift_x(d: int) -> np.ndarray:
    """Cyclic shift: X e_n = e_{n+1 mod d}."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    x = np.zeros((d, d), dtype=np.complex128)
    for n in range(d):
        x[(n + 1) % d, n] = 1.0
    return x


def clock_z(d: int) -> np.ndarray:
    """Phase operator: Z e_n = exp(2*pi*i*n/d) e_n."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def displacement(a: int, b: int, d: int) -> np.ndarray:
    """D_{a,b} = tau^{ab} X^a Z^b with tau = -exp(i*pi/d)."""
    if not (0 <= a < d and 0 <= b < d):
        raise ValueError("displacement indices must satisfy 0 <= a, b < d")
    tau = -np.exp(1j * np.pi / d)
    xa = np.linalg.matrix_power(shift_x(d), a)
    zb = np.linalg.matrix_power(clock_z(d), b)
    return tau ** (a * b) * (xa @ zb)


@lru_cache(maxsize=32)
def _wh_stack(d: int) -> np.ndarray:
    """All d^2 displacements, lexicographic in (a, b), identity first."""
    x, z = shift_x(d), clock_z(d)
    tau = -np.exp(1j * np.pi / d)
    xp = [np.linalg.matrix_power(x, a) for a in range(d)]
    zp = [np.linalg.matrix_power(z, b) for b in range(d)]
    out = np.empty((d * d, d, d), dtype=np.complex128)
    for a in range(d):
        for b in range(d):
            out[a * d + b] = tau ** (a * b) * (xp[a] @ zp[b])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=1)
def _three_qubit_stack() -> np.ndarray:
    """{I, Z, X, XZ}^(x3) in lexicographic order of the three (a, b) pairs."""
    x, z = shift_x(2), clock_z(2)
    singles = [np.eye(2, dtype=np.complex128), z, x, x @ z]  # (a,b) = 00,01,10,11
    ops = [
        np.kron(np.kron(p1, p2), p3)
        for p1 in singles
        for p2 in singles
        for p3 in singles
    ]
    out = np.array(ops)
    out.setflags(write=False)
    return out


def displacement_operators(d: int, group: str = WH_GROUP) -> np.ndarray:
    """The full operator stack for the chosen covariance group, identity first."""
    if group == WH_GROUP:
        return _wh_stack(d)
    if group == THREE_QUBIT_GROUP:
        if d != 8:
            raise ValueError("the three-qubit group lives in dimension 8")
        return _three_qubit_stack()
    raise ValueError(f"unknown group {group!r}")


def _as_amplitudes(f: Fiducial | np.ndarray) -> np.ndarray:
    if isinstance(f, Fiducial):
        return f.amplitudes
    return np.asarray(f, dtype=np.complex128)


def wh_orbit(f: Fiducial | np.ndarray) -> LineSet:
    """The d^2 vectors D_{a,b} f in lexicographic (a, b) order."""
    amp = _as_amplitudes(f)
    d = amp.shape[0]
    orbit = np.einsum("kij,j->ki", _wh_stack(d), amp)
    return LineSet(dimension=d, field=COMPLEX, vectors=orbit)


def three_qubit_orbit(f: Fiducial | np.ndarray) -> LineSet:
    """The 64 vectors (P1 x P2 x P3) f over the three-qubit operator stack."""
    amp = _as_amplitudes(f)
    if amp.shape[0] != 8:
        raise ValueError("the three-qubit orbit needs an 8-dimensional fiducial")
    orbit = np.einsum("kij,j->ki", _three_qubit_stack(), amp)
    return LineSet(dimension=8, field=COMPLEX, vectors=orbit)


def group_orbit(f: Fiducial | np.ndarray, group: str = WH_GROUP) -> LineSet:
    return wh_orbit(f) if group == WH_GROUP else three_qubit_orbit(f)


def certify_sic(ls: LineSet, tol: float = 1e-8, identity_tol: float = 1e-9) -> SicCertificate:
    """Check the two SIC properties of a d^2-element complex line set.

    All pairwise squared overlaps must sit within tol of 1/(d+1), and the
    orbit projectors must resolve the identity to within identity_tol in
    max-entry norm.
    """
    if ls.field != COMPLEX:
        raise ValueError("SIC certification applies to complex line sets")
    d = ls.dimension
    if ls.n_lines != d * d:
        raise ValueError(f"a SIC in dimension {d} has {d * d} lines, got {ls.n_lines}")
    v = ls.vectors
    g = np.conj(v) @ v.T
    target = 1.0 / (d + 1.0)
    iu = np.triu_indices(ls.n_lines, k=1)
    sq = np.abs(g[iu]) ** 2
    max_dev = float(np.max(np.abs(sq - target)))
    norm_dev = float(np.max(np.abs(np.sqrt(np.abs(np.diag(g).real)) - 1.0)))
    proj_sum = np.einsum("ki,kj->ij", v, np.conj(v))
    identity_residual = float(np.abs(proj_sum - d * np.eye(d)).max())
    passed = bool(
        max_dev <= tol and identity_residual <= identity_tol and norm_dev <= tol
    )
    return SicCertificate(
        passed=passed,
        target_overlap=target,
        max_overlap_deviation=max_dev,
        identity_residual=identity_residual,
    )


def frame_potential_minimum(d: int) -> float:
    """(d - 1)/(d + 1), attained exactly on SIC fiducials."""
    return (d - 1.0) / (d + 1.0)


def _overlaps(amp: np.ndarray, ops: np.ndarray) -> np.ndarray:
    return np.einsum("kij,i,j->k", ops, np.conj(amp), amp)


def frame_potential(f: Fiducial | np.ndarray, group: str = WH_GROUP) -> float:
    """Sum over non-identity displacements of |<f, D f>|^4."""
    amp = _as_amplitudes(f)
    ops = displacement_operators(amp.shape[0], group)[1:]
    c = _overlaps(amp, ops)
    return float(np.sum((c.real**2 + c.imag**2) ** 2))


def _split(z: np.ndarray) -> np.ndarray:
    d = z.shape[0] // 2
    return z[:d] + 1j * z[d:]


def _residuals(z: np.ndarray, ops: np.ndarray, target: float) -> np.ndarray:
    """Squared displacement overlaps minus target, for f = z/|z|."""
    f = _split(z)
    f = f / np.linalg.norm(f)
    c = _overlaps(f, ops)
    return (c.real**2 + c.imag**2) - target


def _residual_jacobian(z: np.ndarray, ops: np.ndarray, target: float) -> np.ndarray:
    zc = _split(z)
    r = np.linalg.norm(zc)
    f = zc / r
    c = _overlaps(f, ops)
    df = np.einsum("kij,j->ki", ops, f)
    ddf = np.einsum("kji,j->ki", np.conj(ops), f)
    h = np.conj(c)[:, None] * df + c[:, None] * ddf  # d|c|^2 / d conj(f)
    grad_f = np.hstack([2 * h.real, 2 * h.imag])
    fr = np.hstack([f.real, f.imag])
    # chain rule through the normalization f = z/|z|
    return (grad_f - np.outer(grad_f @ fr, fr)) / r


def frame_potential_gradient(z: np.ndarray, d: int, group: str = WH_GROUP) -> np.ndarray:
    """Gradient of z -> frame_potential(z/|z|) over stacked (Re, Im) parts.

    This is the gradient the search actually descends: with residuals
    r_k = |c_k|^2 - 1/(d+1), the potential is min + sum r_k^2, so the
    gradient is 2 J^T r.
    """
    z = np.asarray(z, dtype=np.float64)
    if z.shape != (2 * d,):
        raise ValueError("parameter vector must stack Re and Im parts")
    ops = displacement_operators(d, group)[1:]
    target = 1.0 / (d + 1.0)
    r = _residuals(z, ops, target)
    jac = _residual_jacobian(z, ops, target)
    return 2.0 * (jac.T @ r)


@dataclass(frozen=True)
class RestartRecord:
    """One line of the search convergence log."""

    restart: int
    iterations: int
    potential: float
    max_overlap_deviation: float


@dataclass(frozen=True, eq=False)
class SicSearchResult:
    fiducial: Fiducial
    certificate: SicCertificate
    potential: float
    converged: bool
    log: tuple[RestartRecord, ...]


def _run_restart(args) -> tuple[int, int, np.ndarray, float]:
    k, seed, d, ops, target, max_iters = args
    rng = np.random.default_rng([seed, k])
    z0 = rng.standard_normal(2 * d)
    sol = least_squares(
        _residuals,
        z0,
        jac=_residual_jacobian,
        args=(ops, target),
        method="trf",
        xtol=2.3e-16,
        ftol=2.3e-16,
        gtol=2.3e-16,
        max_nfev=max_iters,
    )
    f = _split(sol.x)
    f = f / np.linalg.norm(f)
    dev = float(np.max(np.abs(_residuals(sol.x, ops, target))))
    return k, int(sol.nfev), f, dev


def search_fiducial(
    d: int,
    seed: int = 0,
    restarts: int = 50,
    max_iters: int = 2000,
    tol: float = 1e-8,
    group: str = WH_GROUP,
    threads: int = 1,
) -> SicSearchResult:
    """Random-restart fiducial search in dimension d.

    Deterministic for a fixed seed: restart k draws its start from
    default_rng([seed, k]) and the first restart (lowest index) whose orbit
    certifies is returned, so the outcome does not depend on the thread
    count.  Non-convergence is an outcome, not an error: the best fiducial
    found is returned with a failing certificate.
    """
    if d < 2:
        raise ValueError("dimension must be at least 2")
    ops_all = displacement_operators(d, group)
    ops = ops_all[1:]
    target = 1.0 / (d + 1.0)
    pmin = frame_potential_minimum(d)

    log: list[RestartRecord] = []
    best: tuple[float, float, int, np.ndarray] | None = None  # (dev, pot, k, f)
    winner: tuple[int, np.ndarray] | None = None

    def consume(k, nfev, f, dev):
        nonlocal best, winner
        pot = pmin + float(np.sum(_residuals(np.hstack([f.real, f.imag]), ops, target) ** 2))
        log.append(RestartRecord(restart=k, iterations=nfev, potential=pot,
                                 max_overlap_deviation=dev))
        if best is None or (dev, pot, k) < best[:3]:
            best = (dev, pot, k, f)
        converged = pot - pmin <= 1e-12 or dev <= tol
        if converged and (winner is None or k < winner[0]):
            winner = (k, f)

    jobs = [(k, seed, d, ops, target, max_iters) for k in range(restarts)]
    if threads <= 1:
        for job in jobs:
            consume(*_run_restart(job))
            if winner is not None:
                break
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
            for res in pool.map(_run_restart, jobs):
                consume(*res)

    f = winner[1] if winner is not None else best[3]
    fid = Fiducial(dimension=d, amplitudes=f / np.linalg.norm(f))
    orbit = group_orbit(fid, group)
    cert = certify_sic(orbit, tol=tol)
    return SicSearchResult(
        fiducial=fid,
        certificate=cert,
        potential=frame_potential(fid, group),
        converged=cert.passed,
        log=tuple(sorted(log, key=lambda rec: rec.restart)),
    )


def born_probabilities(rho: np.ndarray, ls: LineSet, tol: float = 1e-10) -> np.ndarray:
    """Outcome probabilities tr(rho P_j)/d of the SIC measurement.

    rho must be positive semidefinite with unit trace; ls should be a
    certified SIC (d^2 complex lines), whose projectors scaled by 1/d form
    the measurement.
    """
    d = ls.dimension
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (d, d):
        raise ValueError(f"density operator must be {d}x{d}")
    if np.abs(rho - np.conj(rho.T)).max() > tol:
        raise ValueError("density operator must be Hermitian")
    if abs(np.trace(rho).real - 1.0) > tol:
        raise ValueError("density operator must have unit trace")
    if np.linalg.eigvalsh(rho).min() < -tol:
        raise ValueError("density operator must be positive semidefinite")
    v = ls.vectors
    probs = np.einsum("ji,ik,jk->j", np.conj(v), rho, v).real / d
    return probs


@dataclass(frozen=True, eq=False)
class StateReconstruction:
    """Linear-inversion tomography output with physicality diagnostics."""

    operator: np.ndarray
    residual: float
    min_eigenvalue: float
    is_positive: bool


def reconstruct_state(p: np.ndarray, ls: LineSet, tol: float = 1e-10) -> StateReconstruction:
    """Invert the Born map: find rho with tr(rho P_j)/d = p_j.

    Solves the N x N linear system over the projector basis, built from the
    measured projector inner products; works for any informationally
    complete projector family, not just perfect SICs.  Unphysical inputs
    (outside the Born image) still solve but come back flagged non-positive.
    """
    d = ls.dimension
    n = ls.n_lines
    p = np.asarray(p, dtype=np.float64)
    if p.shape != (n,):
        raise ValueError(f"probability vector must have length {n}")
    if abs(p.sum() - 1.0) > 1e-10:
        raise ValueError(f"probabilities sum to {p.sum()!r}, expected 1")
    v = ls.vectors
    g = np.conj(v) @ v.T
    system = (np.abs(g) ** 2) / d  # S[j,k] = tr(P_j P_k)/d
    try:
        x = np.linalg.solve(system, p)
    except np.linalg.LinAlgError as exc:
        raise ValueError(
            "projector family is not informationally complete (singular system)"
        ) from exc
    residual = float(np.abs(system @ x - p).max())
    rho = np.einsum("k,ki,kj->ij", x, v, np.conj(v))
    rho = (rho + np.conj(rho.T)) / 2.0
    min_eig = float(np.linalg.eigvalsh(rho).min())
    return StateReconstruction(
        operator=rho,
        residual=residual,
        min_eigenvalue=min_eig,
        is_positive=bool(min_eig >= -tol),
    )


def overlap_phases(ls: LineSet, tol: float = 1e-13) -> np.ndarray:
    """Unit-modulus phases of the pairwise overlaps, in a fixed gauge.

    Each vector is first rotated so its first non-negligible amplitude is
    real and positive, which makes the phase grid deterministic; without
    gauge fixing the phases move under per-vector phase changes.
    """
    if ls.field != COMPLEX:
        raise ValueError("overlap phases apply to complex line sets")
    v = ls.vectors.copy()
    for j in range(v.shape[0]):
        idx = np.flatnonzero(np.abs(v[j]) > 1e-6)
        if len(idx) == 0:
            raise ValueError(f"vector {j} is numerically zero")
        a = v[j, idx[0]]
        v[j] = v[j] * (np.conj(a) / np.abs(a))
    g = np.conj(v) @ v.T
    mags = np.abs(g)
    off = ~np.eye(v.shape[0], dtype=bool)
    if mags[off].min() < tol:
        raise ValueError("an overlap magnitude is too small to carry a phase")
    phases = np.where(off, g / np.where(mags == 0, 1.0, mags), 1.0)
    return phases
