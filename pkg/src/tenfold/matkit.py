"""Dense complex linear-algebra kernels and the tolerance/RNG policy.

Every other module builds on these. Matrices are plain numpy complex128
arrays in row-major order. Rank decisions use singular values with the
threshold ``rel * sigma_max + abs``; eigenvalue clustering of composed
unitaries uses the looser CLUSTER_TOL to absorb accumulated roundoff.

Randomness: a single counter-based PRNG (Philox) seeded explicitly through
:func:`make_rng`; there is no global random state anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    NonHermitianError,
    NotUnitaryError,
)

__all__ = [
    "Tolerance",
    "TOL",
    "CLUSTER_TOL",
    "make_rng",
    "nullspace",
    "eigh",
    "random_unitary",
    "eig_unitary",
    "dagger",
    "frob",
    "assert_unitary",
    "hermitian_basis",
]

CLUSTER_TOL = 1e-7


@dataclass(frozen=True)
class Tolerance:
    """Relative threshold plus absolute floor for rank/zero decisions."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if not (self.rel > 0 and self.abs > 0):
            raise ValueError("tolerance components must be positive")

    def cutoff(self, sigma_max: float) -> float:
        return self.rel * sigma_max + self.abs


TOL = Tolerance()


def make_rng(seed: int, *stream) -> np.random.Generator:
    """Counter-based generator for (seed, stream...) — bit-reproducible.

    Derived streams (e.g. per-sample) are independent and identical whether
    consumed serially or in parallel.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence((int(seed),) + tuple(int(s) for s in stream))))


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def frob(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def nullspace(a: np.ndarray, tol: Tolerance = TOL, realified: bool = False) -> np.ndarray:
    """Orthonormal basis of ker(a), columns of the returned matrix.

    Singular values below ``rel * sigma_max + abs`` count as zero.  With
    ``realified`` the input is a real matrix acting on realified coordinates
    (used for antilinear constraint systems); the basis is returned in the
    same real coordinates.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.size == 0:
        raise DimensionMismatchError(f"nullspace expects a nonempty 2-d matrix, got shape {a.shape}")
    if realified and np.iscomplexobj(a):
        raise DimensionMismatchError("realified nullspace expects a real matrix")
    _, s, vh = np.linalg.svd(a, full_matrices=True)
    cut = tol.cutoff(s[0] if s.size else 0.0)
    rank = int(np.sum(s > cut))
    return vh[rank:].conj().T


def eigh(h: np.ndarray, tol: Tolerance = TOL):
    """Eigendecomposition of a Hermitian matrix, ascending eigenvalues.

    Raises NonHermitianError naming the violated norm if ``h`` is not
    Hermitian within ``rel * ||h||``.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionMismatchError(f"eigh expects a square matrix, got {h.shape}")
    scale = frob(h)
    dev = frob(h - dagger(h))
    if dev > tol.cutoff(scale):
        raise NonHermitianError(f"input not Hermitian: ||h - h^dagger|| = {dev:.3e} > {tol.cutoff(scale):.3e}")
    w, v = np.linalg.eigh((h + dagger(h)) / 2.0)
    resid = frob(h @ v - v * w)
    if resid > 1e-9 * max(scale, 1.0):
        raise NonHermitianError(f"eigh reconstruction residual {resid:.3e} exceeds 1e-9 * ||h||")
    return w, v


def random_unitary(n: int, seed: int, *stream) -> np.ndarray:
    """Haar-distributed n x n unitary, deterministic per (seed, stream)."""
    if n < 1:
        raise DimensionMismatchError("random_unitary needs n >= 1")
    rng = make_rng(seed, *stream)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def assert_unitary(u: np.ndarray, tol: Tolerance = TOL, what: str = "matrix") -> None:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatchError(f"{what} is not square: {u.shape}")
    dev = frob(dagger(u) @ u - np.eye(u.shape[0]))
    if dev > max(tol.cutoff(1.0) * u.shape[0], 1e-8):
        raise NotUnitaryError(f"{what} not unitary: ||u^dagger u - I|| = {dev:.3e}")


def eig_unitary(u: np.ndarray, tol: Tolerance = TOL, cluster_tol: float = CLUSTER_TOL):
    """Clustered eigendecomposition of a unitary matrix.

    Returns a list of (eigenvalue, orthonormal basis) pairs; eigenvalues
    within ``cluster_tol`` of each other on the unit circle are merged into
    one eigenspace.  Clusters are ordered by phase angle in [0, 2 pi).
    """
    u = np.asarray(u, dtype=complex)
    assert_unitary(u, tol, what="eig_unitary input")
    n = u.shape[0]
    vals, vecs = np.linalg.eig(u)
    order = np.argsort(np.mod(np.angle(vals), 2 * np.pi))
    vals, vecs = vals[order], vecs[:, order]
    # greedy merge along the sorted circle, including the wrap-around pair
    groups: list[list[int]] = [[0]]
    for k in range(1, n):
        if abs(vals[k] - vals[groups[-1][-1]]) <= cluster_tol:
            groups[-1].append(k)
        else:
            groups.append([k])
    if len(groups) > 1 and abs(vals[groups[0][0]] - vals[groups[-1][-1]]) <= cluster_tol:
        groups[0] = groups.pop() + groups[0]
    clusters = []
    used: list[np.ndarray] = []
    for g in groups:
        cols = vecs[:, g]
        for q in used:
            cols = cols - q @ (dagger(q) @ cols)
        q, r = np.linalg.qr(cols)
        keep = np.abs(np.diag(r)) > 1e-10
        q = q[:, keep]
        if q.shape[1] != len(g):
            raise NotUnitaryError("eigenvector cluster lost rank; input too far from normal")
        lam = np.mean(vals[g])
        lam = lam / abs(lam)
        resid = frob(u @ q - lam * q)
        if resid > max(10 * cluster_tol * np.sqrt(n), 1e-6):
            raise NotUnitaryError(f"cluster at {lam:.6f} not an invariant subspace (residual {resid:.2e})")
        used.append(q)
        clusters.append((lam, q))
    return clusters


def hermitian_basis(n: int) -> np.ndarray:
    """Trace-orthonormal basis of n x n Hermitian matrices, shape (n*n, n, n).

    Order: diagonal units, then symmetric pairs, then antisymmetric pairs
    (row-major over j < k).
    """
    mats = np.zeros((n * n, n, n), dtype=complex)
    idx = 0
    for j in range(n):
        mats[idx, j, j] = 1.0
        idx += 1
    s = 1.0 / np.sqrt(2.0)
    for j in range(n):
        for k in range(j + 1, n):
            mats[idx, j, k] = s
            mats[idx, k, j] = s
            idx += 1
            mats[idx, j, k] = 1j * s
            mats[idx, k, j] = -1j * s
            idx += 1
    return mats
