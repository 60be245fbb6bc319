"""Conformal compactification: E^3 as the null cone section minus one null direction.

In light-cone coordinates ``(u+, x, u-)`` with ``u+ = v1 + v5`` and
``u- = v1 - v5`` the form reads ``q = -u+ u- + |x|^2``.  A point x maps to the
null vector with light-cone coordinates ``(1, x, |x|^2)``, and the point at
infinity is the direction ``p0 = (1, 0, 0, 0, -1)``, i.e. ``u+ = 0``.
"""

from __future__ import annotations

import numpy as np

from .errors import OutsideIdentityComponent
from .euclid import ConfAlgElement, ConfElement
from .lorentz import SpherePoint, as_sphere_point, sphere_normalize
from .subalgebra import Model, Subalgebra

P0 = SpherePoint(np.array([1.0, 0.0, 0.0, 0.0, -1.0]))

# v = LC @ (u+, x1, x2, x3, u-)
LC = np.array(
    [
        [0.5, 0.0, 0.0, 0.0, 0.5],
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
        [0.5, 0.0, 0.0, 0.0, -0.5],
    ]
)
LC_INV = np.linalg.inv(LC)


class _AtInfinity:
    """Result of :func:`unembed` at the point at infinity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "AT_INFINITY"

    def __bool__(self) -> bool:
        return False


AT_INFINITY = _AtInfinity()


def embed_point_raw(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    r2 = float(x @ x)
    return np.concatenate([[(1.0 + r2) / 2.0], x, [(1.0 - r2) / 2.0]])


def embed_point(x) -> SpherePoint:
    return sphere_normalize(embed_point_raw(x))


def embed_points(xs) -> np.ndarray:
    """Vectorized embedding of an ``(n, 3)`` array; rows are normalized sphere points."""
    xs = np.asarray(xs, dtype=float)
    r2 = np.sum(xs * xs, axis=1, keepdims=True)
    d = 1.0 + r2
    return np.hstack([np.ones_like(r2), 2.0 * xs / d, (1.0 - r2) / d])


def unembed(s, tol: float = 1e-12):
    """Inverse of :func:`embed_point`; :data:`AT_INFINITY` at the point at infinity."""
    n = as_sphere_point(s).n
    u_plus = n[0] + n[4]
    if u_plus <= tol:
        return AT_INFINITY
    return n[1:4] / u_plus


def _from_light_cone(m: np.ndarray) -> np.ndarray:
    return LC @ m @ LC_INV


def embed_conf(g: ConfElement) -> np.ndarray:
    """Lorentz matrix inducing ``g`` on the image of E^3 and fixing p0."""
    if g.alpha <= 0 or np.linalg.det(g.A) < 0:
        raise OutsideIdentityComponent("only alpha > 0 and det A = +1 are embedded")
    hom = np.diag([1.0 / g.alpha, 1.0, 1.0, 1.0, g.alpha])
    rot = np.eye(5)
    rot[1:4, 1:4] = g.A
    w = g.v
    tra = np.eye(5)
    tra[1:4, 0] = w
    tra[4, 0] = float(w @ w)
    tra[4, 1:4] = 2.0 * w
    return _from_light_cone(tra @ rot @ hom)


def embed_alg(xi: ConfAlgElement) -> np.ndarray:
    """Differential of :func:`embed_conf` at the identity."""
    m = np.zeros((5, 5))
    m[0, 0] = -xi.a
    m[4, 4] = xi.a
    m[1:4, 1:4] = xi.V
    m[1:4, 0] = xi.w
    m[4, 1:4] = 2.0 * xi.w
    return _from_light_cone(m)


def embed_subalgebra(g: Subalgebra) -> Subalgebra:
    if g.model is not Model.EUCLID:
        raise TypeError("expected a Euclid subalgebra")
    return Subalgebra.lorentz(*(embed_alg(b) for b in g.basis))
