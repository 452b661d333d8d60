"""Commutants, isotypic decompositions, equivariant Hom spaces, duality type.

A compact group G0 is presented by finitely many unitary generator matrices;
for connected groups, topological generators are used (e.g. two
irrational-angle rotations generate a dense subgroup of SU(2)).  The
commutant of the generator set equals the commutant of the closed generated
subgroup, which is all this pipeline ever uses.  Caveat: if the closure of
the generators is not the group the user had in mind, the tool cannot tell.

Isotypic splitting diagonalizes a random Hermitian element of the
commutant's center rather than using character theory, so it works from the
generator matrices alone.  All integer quantities (irrep dimension d,
multiplicity m) are obtained by rounding and must reconcile exactly; any
mismatch raises instead of silently misclassifying.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import matkit
from .errors import (
    DimensionMismatchError,
    NotUnitaryError,
    ReconciliationError,
    RetryExhaustedError,
    StructureError,
)
from .matkit import TOL, Tolerance, dagger, frob

__all__ = [
    "UnitaryRep",
    "IsotypicComponent",
    "DualityClass",
    "commutant",
    "isotypic_decompose",
    "equivariant_hom",
    "duality_class",
]

MAX_PROBE_RETRIES = 8


@dataclass
class UnitaryRep:
    """A unitary representation given by generator matrices on C^dim."""

    dim: int
    generators: list

    def __post_init__(self):
        if not self.generators:
            raise StructureError("generator list must be nonempty (use the identity for the trivial group)")
        self.generators = [np.asarray(g, dtype=complex) for g in self.generators]
        for i, g in enumerate(self.generators):
            if g.shape != (self.dim, self.dim):
                raise DimensionMismatchError(f"generator {i} has shape {g.shape}, expected {(self.dim, self.dim)}")
            matkit.assert_unitary(g, what=f"generator {i}")

    def conj(self) -> "UnitaryRep":
        """The dual representation in coordinates: g -> conj(g) = (g^-1)^t."""
        return UnitaryRep(self.dim, [g.conj() for g in self.generators])


@dataclass
class IsotypicComponent:
    """One G0-isotypic component V_lambda of a decomposed representation."""

    projector: np.ndarray
    basis: np.ndarray  # orthonormal columns spanning the component
    dim_component: int
    irrep_dim: int  # d
    multiplicity: int  # m
    irrep_basis: np.ndarray  # orthonormal basis of one embedded copy of R

    def irrep_rep(self, rep: UnitaryRep) -> UnitaryRep:
        """The irreducible witness representation R in its own coordinates."""
        w = self.irrep_basis
        return UnitaryRep(self.irrep_dim, [dagger(w) @ g @ w for g in rep.generators])


@dataclass
class DualityClass:
    """Frobenius-Schur trichotomy of an irrep: complex, real, or quaternionic."""

    kind: str  # "complex" | "real" | "quaternionic"
    psi: np.ndarray | None = None

    @property
    def parity(self) -> int | None:
        """+1 for symmetric psi (real), -1 for alternating (quaternionic)."""
        return {"real": 1, "quaternionic": -1}.get(self.kind)


def _vec(x: np.ndarray) -> np.ndarray:
    return x.reshape(-1)


def commutant(rep: UnitaryRep, tol: Tolerance = TOL) -> list:
    """Trace-orthonormal basis of {X : X g = g X for all generators}."""
    n = rep.dim
    eye = np.eye(n)
    rows = [np.kron(eye, g.T) - np.kron(g, eye) for g in rep.generators]
    ker = matkit.nullspace(np.vstack(rows), tol)
    return [ker[:, j].reshape(n, n) for j in range(ker.shape[1])]


def equivariant_hom(rep1: UnitaryRep, rep2: UnitaryRep, tol: Tolerance = TOL) -> list:
    """Basis of {S : rep2(g) S = S rep1(g)}, via one stacked nullspace."""
    if len(rep1.generators) != len(rep2.generators):
        raise DimensionMismatchError(
            f"generator counts differ: {len(rep1.generators)} vs {len(rep2.generators)}"
        )
    rows = [
        np.kron(np.eye(rep2.dim), g1.T) - np.kron(g2, np.eye(rep1.dim))
        for g1, g2 in zip(rep1.generators, rep2.generators)
    ]
    ker = matkit.nullspace(np.vstack(rows), tol)
    return [ker[:, j].reshape(rep2.dim, rep1.dim) for j in range(ker.shape[1])]


def _center_basis(com: list, tol: Tolerance) -> list:
    """Basis of the center of the algebra spanned by the commutant basis."""
    k = len(com)
    rows = np.zeros((k * com[0].size, k), dtype=complex)
    for j, x in enumerate(com):
        for i, y in enumerate(com):
            rows[i * x.size : (i + 1) * x.size, j] = _vec(x @ y - y @ x)
    coeffs = matkit.nullspace(rows, tol)
    return [sum(coeffs[j, c] * com[j] for j in range(k)) for c in range(coeffs.shape[1])]


def _cluster_eigh(w: np.ndarray, gap: float) -> list:
    groups = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[groups[-1][-1]] <= gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def isotypic_decompose(rep: UnitaryRep, seed: int, tol: Tolerance = TOL) -> list:
    """Split C^dim into G0-isotypic components.

    A random Hermitian element of the commutant's center is diagonalized;
    its eigenspaces are the isotypic components (generically).  Retries with
    a derived seed when the probe's eigenvalue gaps fall below the cluster
    tolerance, up to MAX_PROBE_RETRIES attempts.
    """
    n = rep.dim
    com = commutant(rep, tol)
    center = _center_basis(com, tol)
    n_comp = len(center)

    for attempt in range(MAX_PROBE_RETRIES):
        rng = matkit.make_rng(seed, 0xC0, attempt)
        z = sum((rng.standard_normal() + 1j * rng.standard_normal()) * c for c in center)
        z = (z + dagger(z)) / 2.0
        w, v = matkit.eigh(z, tol)
        groups = _cluster_eigh(w, matkit.CLUSTER_TOL * max(1.0, float(np.max(np.abs(w)))))
        if len(groups) != n_comp:
            continue
        comps = []
        ok = True
        for g in groups:
            cols = v[:, g]
            proj = cols @ dagger(cols)
            sub = UnitaryRep(len(g), [dagger(cols) @ gen @ cols for gen in rep.generators])
            # invariance of the eigenspace under the group
            if any(frob(gen @ cols - cols @ (dagger(cols) @ gen @ cols)) > 1e-7 * np.sqrt(n) for gen in rep.generators):
                ok = False
                break
            sub_com = commutant(sub, tol)
            m = int(round(np.sqrt(len(sub_com))))
            if m * m != len(sub_com) or len(g) % m != 0:
                raise ReconciliationError(
                    f"component of dim {len(g)}: restricted commutant has dim {len(sub_com)}, not a perfect square matching m*d"
                )
            d = len(g) // m
            witness = _irrep_witness(sub, sub_com, d, m, seed, attempt, tol)
            comps.append(
                IsotypicComponent(
                    projector=proj,
                    basis=cols,
                    dim_component=len(g),
                    irrep_dim=d,
                    multiplicity=m,
                    irrep_basis=cols @ witness,
                )
            )
        if not ok:
            continue
        if int(sum(c.dim_component for c in comps)) != n:
            raise ReconciliationError("component dimensions do not sum to the full space")
        total = sum(c.projector for c in comps)
        if frob(total - np.eye(n)) > 1e-9 * n:
            raise ReconciliationError("isotypic projectors do not sum to the identity")
        return comps

    raise RetryExhaustedError(
        f"isotypic probe failed to separate {n_comp} components after {MAX_PROBE_RETRIES} attempts; try a different seed"
    )


def _irrep_witness(sub: UnitaryRep, sub_com: list, d: int, m: int, seed: int, attempt: int, tol: Tolerance) -> np.ndarray:
    """Orthonormal basis (in component coordinates) of one copy of R."""
    if m == 1:
        return np.eye(sub.dim)
    for inner in range(MAX_PROBE_RETRIES):
        rng = matkit.make_rng(seed, 0xE1, attempt, inner)
        y = sum((rng.standard_normal() + 1j * rng.standard_normal()) * c for c in sub_com)
        y = (y + dagger(y)) / 2.0
        w, v = matkit.eigh(y, tol)
        groups = _cluster_eigh(w, matkit.CLUSTER_TOL * max(1.0, float(np.max(np.abs(w)))))
        if len(groups) == m and all(len(g) == d for g in groups):
            return v[:, groups[0]]
    raise RetryExhaustedError("could not isolate a single irreducible copy; try a different seed")


def duality_class(rep: UnitaryRep, tol: Tolerance = TOL) -> DualityClass:
    """Complex/real/quaternionic type of an irreducible representation.

    Solves psi rho(g) = conj(rho(g)) psi.  Kernel dimension 0 means R and
    R* are inequivalent (complex type); dimension 1 gives psi, normalized to
    unit Frobenius norm, which is then symmetric (real) or alternating
    (quaternionic) — one of the two must hold for an irrep.
    """
    com = commutant(rep, tol)
    if len(com) != 1:
        raise StructureError(f"duality_class needs an irreducible input; commutant has dim {len(com)}")
    sols = equivariant_hom(rep, rep.conj(), tol)
    if not sols:
        return DualityClass("complex")
    if len(sols) > 1:
        raise StructureError(
            f"Hom(R, R*) has dimension {len(sols)} >= 2, contradicting Schur; input is not irreducible"
        )
    psi = sols[0] / frob(sols[0])
    sym = frob(psi - psi.T)
    alt = frob(psi + psi.T)
    if sym <= 1e-8:
        return DualityClass("real", psi)
    if alt <= 1e-8:
        return DualityClass("quaternionic", psi)
    raise NotUnitaryError(
        f"equivariant psi is neither symmetric nor alternating (||psi-psi^t||={sym:.2e}, ||psi+psi^t||={alt:.2e}); numerical degeneracy"
    )
