"""Spectral pipeline: normalized graph generator, eigensolver, diffusion distances."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateVertexError,
    DomainError,
    InvalidParameterError,
    MatrixFormatError,
    NumericError,
)
from .kernels import AffinityMatrix


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues ascending; eigenvectors[:, l] pairs with eigenvalues[l]."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    convention: str = "raw"


def _freeze(values: np.ndarray) -> np.ndarray:
    out = np.array(values, dtype=np.float64)
    out.setflags(write=False)
    return out


def graph_laplacian(kernel: AffinityMatrix) -> np.ndarray:
    """Symmetric normalized generator D^{-1/2} K D^{-1/2} - I.

    Parameters
    ----------
    kernel : AffinityMatrix
        Nonnegative symmetric kernel; every row must have positive sum.

    Returns
    -------
    ndarray
        Exactly symmetric n x n matrix with spectrum inside [-2, 0];
        D^{1/2} applied to the constant vector spans the null space.
    """
    degrees = kernel.values.sum(axis=1)
    if (degrees <= 0).any():
        vertex = int(np.argmin(degrees))
        raise DegenerateVertexError(f"vertex {vertex} has zero total affinity")
    inv_sqrt = 1.0 / np.sqrt(degrees)
    return kernel.values * np.outer(inv_sqrt, inv_sqrt) - np.eye(kernel.n)


def eig_symmetric(
    matrix: np.ndarray,
    tol: float = 1e-10,
    max_sweeps: int = 100,
    convention: str = "raw",
) -> SpectralDecomposition:
    """Full eigendecomposition of a symmetric matrix by cyclic plane rotations.

    Sweeps annihilate each off-diagonal entry in turn; the rotation
    parameter is computed in the numerically safe form so no overflow
    occurs when an entry is tiny relative to the diagonal gap.

    Parameters
    ----------
    matrix : ndarray
        Real symmetric matrix; asymmetry beyond 1e-12 is rejected.
    tol : float
        Convergence threshold on the off-diagonal Frobenius mass.
    max_sweeps : int
        Sweep budget; exceeding it raises NumericError.
    convention : str
        Tag recorded on the decomposition, not used numerically.

    Returns
    -------
    SpectralDecomposition
        Eigenvalues ascending with orthonormal eigenvector columns.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DomainError(f"matrix must be square, got shape {a.shape}")
    if float(np.abs(a - a.T).max(initial=0.0)) > 1e-12:
        raise DomainError("matrix is not symmetric within 1e-12")
    a = (a + a.T) / 2.0
    n = a.shape[0]
    vectors = np.eye(n)

    def off_mass(m):
        return math.sqrt(2.0 * float(np.sum(np.triu(m, 1) ** 2)))

    sweeps = 0
    while off_mass(a) > tol:
        if sweeps >= max_sweeps:
            raise NumericError(
                f"off-diagonal mass {off_mass(a):.3e} after {max_sweeps} sweeps (tol {tol:.1e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vec_p, vec_q = vectors[:, p].copy(), vectors[:, q].copy()
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q
        sweeps += 1

    order = np.argsort(np.diagonal(a), kind="stable")
    return SpectralDecomposition(
        eigenvalues=_freeze(np.diagonal(a)[order]),
        eigenvectors=_freeze(vectors[:, order]),
        convention=convention,
    )


def spectral_decomposition(
    kernel: AffinityMatrix, tol: float = 1e-10, max_sweeps: int = 100
) -> SpectralDecomposition:
    """Eigendecomposition of the normalized generator of a kernel."""
    return eig_symmetric(
        graph_laplacian(kernel), tol=tol, max_sweeps=max_sweeps,
        convention="symmetric_normalized",
    )


def diffusion_distance_matrix(decomp: SpectralDecomposition, t: float) -> np.ndarray:
    """All-pairs diffusion distance at time t.

    Coordinates are the eigenvector rows scaled by exp(t * eigenvalue);
    the distance is plain Euclidean between scaled rows, so it shrinks
    monotonically as t grows whenever the spectrum is nonpositive.
    """
    if t <= 0:
        raise InvalidParameterError(f"t must be positive, got {t!r}")
    scales = np.exp(float(t) * decomp.eigenvalues)
    coords = decomp.eigenvectors * scales[None, :]
    diff = coords[:, None, :] - coords[None, :, :]
    out = np.sqrt(np.einsum("ijl,ijl->ij", diff, diff))
    np.fill_diagonal(out, 0.0)
    return out


def decomposition_to_json(decomp: SpectralDecomposition) -> str:
    payload = {
        "convention": decomp.convention,
        "eigenvalues": [float(x) for x in decomp.eigenvalues],
        "eigenvectors": decomp.eigenvectors.tolist(),
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def decomposition_from_json(text: str) -> SpectralDecomposition:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid decomposition JSON: {exc}") from exc
    if not isinstance(payload, dict) or "eigenvalues" not in payload or "eigenvectors" not in payload:
        raise MatrixFormatError("decomposition JSON needs 'eigenvalues' and 'eigenvectors'")
    return SpectralDecomposition(
        eigenvalues=_freeze(np.array(payload["eigenvalues"], dtype=np.float64)),
        eigenvectors=_freeze(np.array(payload["eigenvectors"], dtype=np.float64)),
        convention=str(payload.get("convention", "raw")),
    )
