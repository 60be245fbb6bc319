"""Small dense linear-algebra helpers shared by every model.

Vectors are passed as rows.  All rank decisions go through one rule:
a singular value counts when it exceeds ``tol * max(sigma_max, 1)``, i.e.
a relative threshold with an absolute floor of ``tol`` for tiny inputs.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy.linalg import expm as _scipy_expm

# invariant checks (orthogonality, skewness, null vectors)
EPS = 1e-9
# rank decisions and span comparisons
RANK_TOL = 1e-8


def expm(m: np.ndarray) -> np.ndarray:
    """Matrix exponential (Pade-13 scaling and squaring)."""
    return _scipy_expm(np.asarray(m, dtype=float))


def as_rows(vectors: Sequence | np.ndarray, width: int | None = None) -> np.ndarray:
    arr = np.asarray(vectors, dtype=float)
    if arr.size == 0:
        return np.zeros((0, width or 0))
    if arr.ndim == 1:
        arr = arr[None, :]
    return arr


def _threshold(s: np.ndarray, tol: float) -> float:
    top = float(s[0]) if s.size else 0.0
    return tol * max(top, 1.0)


def subspace_rank(vectors, tol: float = RANK_TOL) -> int:
    rows = as_rows(vectors)
    if rows.size == 0:
        return 0
    s = np.linalg.svd(rows, compute_uv=False)
    return int(np.sum(s > _threshold(s, tol)))


def orth_basis(vectors, tol: float = RANK_TOL, width: int | None = None) -> np.ndarray:
    """Orthonormal rows spanning the row space of ``vectors``."""
    rows = as_rows(vectors, width)
    if rows.size == 0:
        return np.zeros((0, rows.shape[1] if rows.ndim == 2 else (width or 0)))
    _, s, vt = np.linalg.svd(rows, full_matrices=False)
    k = int(np.sum(s > _threshold(s, tol)))
    return vt[:k]


def null_space(mat, tol: float = RANK_TOL) -> np.ndarray:
    """Rows spanning ``{x : mat @ x = 0}`` (orthonormal)."""
    m = as_rows(mat)
    n = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(n)
    _, s, vt = np.linalg.svd(m, full_matrices=True)
    k = int(np.sum(s > _threshold(s, tol)))
    return vt[k:]


def principal_angle_sines(a, b, tol: float = RANK_TOL) -> np.ndarray:
    """Sines of the principal angles between two row spans, ascending.

    Sines are computed from the residual of projecting one basis on the
    other, which stays accurate for nearly equal subspaces.
    """
    qa = orth_basis(a, tol)
    qb = orth_basis(b, tol)
    if qa.shape[0] == 0 or qb.shape[0] == 0:
        return np.zeros(0)
    if qa.shape[0] < qb.shape[0]:
        qa, qb = qb, qa
    resid = qb - (qb @ qa.T) @ qa
    s = np.linalg.svd(resid, compute_uv=False)
    return np.sort(np.clip(s, 0.0, 1.0))


def subspace_distance(a, b, tol: float = RANK_TOL) -> float:
    """Sine of the largest principal angle; ``inf`` when dimensions differ."""
    da, db = subspace_rank(a, tol), subspace_rank(b, tol)
    if da != db:
        return float("inf")
    if da == 0:
        return 0.0
    s = principal_angle_sines(a, b, tol)
    return float(s.max()) if s.size else 0.0


def rotation_taking(src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Rotation in SO(3) mapping the direction of ``src`` onto that of ``dst``.

    Rodrigues construction; the antiparallel case uses a half-turn about an
    axis perpendicular to ``src``.
    """
    a = np.asarray(src, dtype=float)
    b = np.asarray(dst, dtype=float)
    a = a / np.linalg.norm(a)
    b = b / np.linalg.norm(b)
    c = float(a @ b)
    axis = np.cross(a, b)
    s = float(np.linalg.norm(axis))
    if s < 1e-12:
        if c > 0:
            return np.eye(3)
        # half-turn about any unit vector orthogonal to a
        trial = np.eye(3)[int(np.argmin(np.abs(a)))]
        k = np.cross(a, trial)
        k /= np.linalg.norm(k)
        return 2.0 * np.outer(k, k) - np.eye(3)
    k = axis / s
    kx = np.array([[0.0, -k[2], k[1]], [k[2], 0.0, -k[0]], [-k[1], k[0], 0.0]])
    return np.eye(3) + s * kx + (1.0 - c) * (kx @ kx)
