"""Matrix realization of GPMs and numerical verification of discrimination
protocols.

Tolerance tiers: 1e-12 for constructions, 1e-10 for eigen-residuals,
1e-9 for protocol checks, 1e-8 for feasibility success.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.linalg

from .errors import DomainError, DegenerateAfterRetries
from .mcs import McsId, materialize
from .pauli import GbsSet, Gpm, commutes, diff_set, gpm, neg

CONSTRUCTION_TOL = 1e-12
EIGEN_TOL = 1e-10
PROTOCOL_TOL = 1e-9
FEASIBILITY_TOL = 1e-8


@lru_cache(maxsize=4096)
def _gpm_matrix(m: int, n: int, d: int) -> np.ndarray:
    omega = np.exp(2j * np.pi / d)
    u = np.zeros((d, d), dtype=complex)
    cols = np.arange(d)
    u[(cols + m) % d, cols] = omega ** ((cols * n) % d)
    u.flags.writeable = False
    return u


def gpm_matrix(g: Gpm, d: int) -> np.ndarray:
    """X^m Z^n with X|j> = |j+1> and Z|j> = omega^j |j>."""
    g = gpm(*g, d)
    return _gpm_matrix(g.m, g.n, d)


def basis_state(j: int, d: int) -> np.ndarray:
    v = np.zeros(d, dtype=complex)
    v[j % d] = 1.0
    return v


def half_shift_witness(d: int) -> np.ndarray:
    """(|0> + |1>)/sqrt(2)."""
    return (basis_state(0, d) + basis_state(1, d)) / np.sqrt(2)


def canonical_mes(d: int) -> np.ndarray:
    return np.eye(d, dtype=complex).reshape(d * d) / np.sqrt(d)


def canonical_mes_check(u: np.ndarray) -> float:
    """Norm of (I (x) U)|Phi> - (U^T (x) I)|Phi>; vanishes for every U."""
    u = np.asarray(u, dtype=complex)
    d = u.shape[0]
    phi = canonical_mes(d)
    eye = np.eye(d)
    lhs = np.kron(eye, u) @ phi
    rhs = np.kron(u.T, eye) @ phi
    return float(np.linalg.norm(lhs - rhs))


def random_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@dataclass
class EigenbasisResult:
    basis: np.ndarray  # columns are the basis vectors
    residual: float
    attempts: int


def eigen_residual(basis: np.ndarray, unitaries) -> float:
    worst = 0.0
    for u in unitaries:
        ub = u @ basis
        expect = np.einsum("ij,ij->j", basis.conj(), ub)
        worst = max(worst, float(np.max(np.linalg.norm(ub - basis * expect, axis=0))))
    return worst


def common_eigenbasis(mid: McsId, d: int, seed: int = 0, max_attempts: int = 8,
                      gap_tol: float = 1e-8) -> EigenbasisResult:
    """Simultaneous eigenbasis of every member of an MCS.

    Diagonalizes a random real combination of the Hermitian and
    anti-Hermitian parts of the members; redraws the coefficients when the
    spectrum has a gap below ``gap_tol``.
    """
    members = sorted(materialize(mid, d).members)
    mats = [gpm_matrix(g, d) for g in members]
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        c_re = rng.standard_normal(len(mats))
        c_im = rng.standard_normal(len(mats))
        h = sum(a * (u + u.conj().T) + b * (u - u.conj().T) / 1j
                for a, b, u in zip(c_re, c_im, mats)) / 2
        vals, vecs = np.linalg.eigh(h)
        if np.min(np.diff(vals)) >= gap_tol:
            return EigenbasisResult(vecs, eigen_residual(vecs, mats), attempt)
    raise DegenerateAfterRetries(
        f"{mid.render()} at d={d}: spectrum stayed degenerate after {max_attempts} draws")


def weyl_orthogonality(t: Gpm, u: Gpm, d: int) -> float:
    """max |<v|U|v>| over an orthonormal eigenbasis {v} of T, for non-commuting T, U."""
    if commutes(gpm(*t, d), gpm(*u, d), d):
        raise DomainError(f"({t[0]},{t[1]}) and ({u[0]},{u[1]}) commute")
    # complex Schur form of a normal matrix is diagonal with unitary Q
    _, q = scipy.linalg.schur(gpm_matrix(t, d), output="complex")
    expect = np.einsum("ij,ij->j", q.conj(), gpm_matrix(u, d) @ q)
    return float(np.max(np.abs(expect)))


def protocol_verify(s: GbsSet, v: np.ndarray) -> float:
    """Largest off-diagonal Gram entry |<v|U_i^dag U_j|v>| of the states U_k|v>."""
    v = np.asarray(v, dtype=complex)
    states = np.stack([gpm_matrix(g, s.d) @ v for g in s], axis=1)
    gram = states.conj().T @ states
    np.fill_diagonal(gram, 0.0)
    return float(np.max(np.abs(gram))) if len(s) > 1 else 0.0


def pair_representatives(delta, d: int) -> list[Gpm]:
    """One element of each {g, -g} pair, the lexicographically smaller one."""
    return sorted({min(g, neg(g, d)) for g in delta})


def witness_residual(s: GbsSet, v: np.ndarray) -> float:
    """Sum over difference-set pair representatives of |<v|U|v>|^2."""
    v = np.asarray(v, dtype=complex)
    total = 0.0
    for g in pair_representatives(diff_set(s), s.d):
        total += abs(np.vdot(v, gpm_matrix(g, s.d) @ v)) ** 2
    return float(total)


@dataclass
class FeasibilityReport:
    best_residual: float
    witness: np.ndarray
    restarts: int
    iterations_per_restart: int
    seed: int
    tolerance: float
    best_restart: int = 0
    residuals: np.ndarray = field(default=None, repr=False)

    @property
    def found(self) -> bool:
        return self.best_residual < self.tolerance

    @property
    def label(self) -> str:
        # no witness found is never a proof of infeasibility
        return "witness-found" if self.found else "no-witness-found (EVIDENCE, not proof)"


def _restart_starts(d: int, restarts: int, seed: int) -> np.ndarray:
    starts = np.empty((restarts, d), dtype=complex)
    for r in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(r,)))
        z = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        starts[r] = z / np.linalg.norm(z)
    return starts


def _objective(a: np.ndarray, mats: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    ua = np.einsum("kij,rj->rki", mats, a)
    z = np.einsum("ri,rki->rk", a.conj(), ua)
    return np.sum(np.abs(z) ** 2, axis=1), z


def _gradient(a, mats, mats_h, z):
    ua = np.einsum("kij,rj->rki", mats, a)
    uha = np.einsum("kij,rj->rki", mats_h, a)
    g = 2 * (np.einsum("rk,rki->ri", z.conj(), ua) + np.einsum("rk,rki->ri", z, uha))
    radial = np.real(np.sum(a.conj() * g, axis=1))
    return g - radial[:, None] * a


def _normalize_rows(a: np.ndarray) -> np.ndarray:
    return a / np.linalg.norm(a, axis=1, keepdims=True)


def feasibility_search(s: GbsSet, restarts: int = 64, iters: int = 2000, seed: int = 0,
                       tol: float = FEASIBILITY_TOL, armijo: float = 1e-4,
                       max_halvings: int = 50) -> FeasibilityReport:
    """Search the unit sphere for |a> with <a|U|a> = 0 for every U in the
    difference set.

    Projected gradient descent on f(a) = sum |<a|U|a>|^2 with a
    Barzilai-Borwein trial step and monotone Armijo backtracking. Restarts are independent rows of one batch,
    each seeded from (seed, restart index); the best is chosen by
    (residual, restart index).
    """
    if len(s) < 2:
        raise DomainError("feasibility search needs at least 2 states")
    if restarts < 1 or iters < 0:
        raise DomainError("restarts must be >= 1 and iters >= 0")
    d = s.d
    reps = pair_representatives(diff_set(s), d)
    mats = np.stack([gpm_matrix(g, d) for g in reps])
    mats_h = np.conj(np.transpose(mats, (0, 2, 1)))

    a = _restart_starts(d, restarts, seed)
    f, z = _objective(a, mats)
    step = np.ones(restarts)
    prev_a = prev_grad = None
    done = f < tol * 1e-8
    for _ in range(iters):
        if done.all():
            break
        grad = _gradient(a, mats, mats_h, z)
        gn2 = np.sum(np.abs(grad) ** 2, axis=1)
        done |= gn2 < 1e-30
        if prev_a is not None:
            # Barzilai-Borwein trial step; falls back to the last step when the
            # curvature estimate is not positive
            ds = a - prev_a
            dg = grad - prev_grad
            sy = np.real(np.sum(ds.conj() * dg, axis=1))
            ss = np.real(np.sum(ds.conj() * ds, axis=1))
            good = sy > 0
            step = np.where(good, np.clip(ss / np.where(good, sy, 1.0), 1e-12, 1e12), step)
        prev_a, prev_grad = a.copy(), grad
        pending = ~done
        for _ in range(max_halvings):
            if not pending.any():
                break
            idx = np.flatnonzero(pending)
            trial = _normalize_rows(a[idx] - step[idx, None] * grad[idx])
            ft, zt = _objective(trial, mats)
            ok = ft <= f[idx] - armijo * step[idx] * gn2[idx]
            acc = idx[ok]
            a[acc], f[acc], z[acc] = trial[ok], ft[ok], zt[ok]
            pending[acc] = False
            step[idx[~ok]] *= 0.5
        # rows that never satisfied the sufficient-decrease test are stationary
        done |= pending
        done |= f < tol * 1e-8

    best = int(np.argmin(f))
    witness = a[best].copy()
    return FeasibilityReport(
        best_residual=witness_residual(s, witness),
        witness=witness,
        restarts=restarts,
        iterations_per_restart=iters,
        seed=seed,
        tolerance=tol,
        best_restart=best,
        residuals=f.copy(),
    )
