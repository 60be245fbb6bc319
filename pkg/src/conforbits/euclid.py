"""The similarity group (R* x O(3)) |x R^3 of Euclidean 3-space and its Lie algebra.

A group element ``(alpha, A, v)`` acts by ``x -> alpha * A @ x + v``.  An
algebra element ``(a, V, w)`` is a homothety rate ``a``, a skew matrix ``V``
and a translation ``w``; its canonical coordinates are the 7-vector
``(a, cX, cY, cZ, w1, w2, w3)`` with ``V = cX*X + cY*Y + cZ*Z``.

Points of E^3 are plain length-3 numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DecompositionError
from .linalg import EPS, expm

X = np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
Y = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]])
Z = np.array([[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, -1.0, 0.0]])
SO3_BASIS = (X, Y, Z)

ORIGIN = np.zeros(3)
E1, E2, E3 = np.eye(3)
# the plane spanned by e1, e2 and the line spanned by e3
PLANE = np.array([E1, E2])
LINE = np.array([E3])

DIM = 7


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.setflags(write=False)
    return arr


def skew_from_coeffs(c) -> np.ndarray:
    cx, cy, cz = c
    return cx * X + cy * Y + cz * Z


def coeffs_from_skew(V: np.ndarray) -> np.ndarray:
    return np.array([V[0, 1], V[0, 2], V[1, 2]])


@dataclass(frozen=True, eq=False)
class ConfElement:
    alpha: float
    A: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "A", _frozen(self.A).reshape(3, 3))
        object.__setattr__(self, "v", _frozen(self.v).reshape(3))
        if self.alpha == 0.0:
            raise ValueError("homothety factor must be nonzero")
        err = np.abs(self.A.T @ self.A - np.eye(3)).max()
        if err > EPS * 10:
            raise ValueError(f"A is not orthogonal (|A^T A - I| = {err:.2e})")

    @classmethod
    def identity(cls) -> ConfElement:
        return cls(1.0, np.eye(3), np.zeros(3))

    @classmethod
    def translation(cls, v) -> ConfElement:
        return cls(1.0, np.eye(3), v)

    @classmethod
    def rotation(cls, A) -> ConfElement:
        return cls(1.0, A, np.zeros(3))

    @classmethod
    def homothety(cls, alpha: float) -> ConfElement:
        return cls(alpha, np.eye(3), np.zeros(3))

    def matrix(self) -> np.ndarray:
        """4x4 homogeneous affine matrix."""
        m = np.eye(4)
        m[:3, :3] = self.alpha * self.A
        m[:3, 3] = self.v
        return m

    def __repr__(self) -> str:
        return f"ConfElement(alpha={self.alpha!r}, A={self.A.tolist()!r}, v={self.v.tolist()!r})"


@dataclass(frozen=True, eq=False)
class ConfAlgElement:
    a: float
    V: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "V", _frozen(self.V).reshape(3, 3))
        object.__setattr__(self, "w", _frozen(self.w).reshape(3))
        scale = max(1.0, float(np.abs(self.V).max()))
        if np.abs(self.V + self.V.T).max() > EPS * scale:
            raise ValueError("rotation part is not skew-symmetric")

    @classmethod
    def from_coords(cls, c) -> ConfAlgElement:
        c = np.asarray(c, dtype=float)
        return cls(c[0], skew_from_coeffs(c[1:4]), c[4:7])

    @classmethod
    def zero(cls) -> ConfAlgElement:
        return cls.from_coords(np.zeros(DIM))

    @property
    def coords(self) -> np.ndarray:
        return np.concatenate([[self.a], coeffs_from_skew(self.V), self.w])

    def matrix(self) -> np.ndarray:
        """4x4 homogeneous generator ``[[aI + V, w], [0, 0]]``."""
        m = np.zeros((4, 4))
        m[:3, :3] = self.a * np.eye(3) + self.V
        m[:3, 3] = self.w
        return m

    def __add__(self, other):
        if isinstance(other, ConfAlgElement):
            return ConfAlgElement.from_coords(self.coords + other.coords)
        if np.isscalar(other):
            return ConfAlgElement(self.a + float(other), self.V, self.w)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ConfAlgElement.from_coords(-self.coords)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, s):
        if np.isscalar(s):
            return ConfAlgElement.from_coords(float(s) * self.coords)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"ConfAlgElement.from_coords({self.coords.tolist()!r})"


def _basis_element(i: int) -> ConfAlgElement:
    c = np.zeros(DIM)
    c[i] = 1.0
    return ConfAlgElement.from_coords(c)


# named generators: lam is the homothety generator (the scalar 1)
LAM, GX, GY, GZ, T1, T2, T3 = (_basis_element(i) for i in range(DIM))


def compose(g: ConfElement, h: ConfElement) -> ConfElement:
    return ConfElement(g.alpha * h.alpha, g.A @ h.A, g.alpha * (g.A @ h.v) + g.v)


def inverse(g: ConfElement) -> ConfElement:
    r = 1.0 / g.alpha
    At = g.A.T
    return ConfElement(r, At, -r * (At @ g.v))


def act(g: ConfElement, p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    return g.alpha * (p @ g.A.T) + g.v


def bracket(xi: ConfAlgElement, eta: ConfAlgElement) -> ConfAlgElement:
    V, W = xi.V, eta.V
    w = V @ eta.w + xi.a * eta.w - W @ xi.w - eta.a * xi.w
    return ConfAlgElement(0.0, V @ W - W @ V, w)


def adjoint(g: ConfElement, xi: ConfAlgElement) -> ConfAlgElement:
    """``Ad_g`` for ``g = (r, A, v)``: ``b + W + w -> b + AWA^-1 + rAw - bv - AWA^-1 v``."""
    AWA = g.A @ xi.V @ g.A.T
    w = g.alpha * (g.A @ xi.w) - xi.a * g.v - AWA @ g.v
    return ConfAlgElement(xi.a, AWA, w)


def adjoint_matrix(g: ConfElement) -> np.ndarray:
    """7x7 matrix of ``Ad_g`` acting on canonical coordinates (column vectors)."""
    cols = [adjoint(g, _basis_element(i)).coords for i in range(DIM)]
    return np.column_stack(cols)


def exp(xi: ConfAlgElement, t: float = 1.0) -> ConfElement:
    m = expm(t * xi.matrix())
    block = m[:3, :3]
    det = float(np.linalg.det(block))
    if not np.isfinite(det) or abs(det) < 1e-300:
        raise DecompositionError(f"linear block is singular (det = {det!r})")
    alpha = float(np.cbrt(det))
    A = block / alpha
    # exp of a skew matrix is exactly orthogonal; re-orthonormalize to absorb roundoff
    u, _, vt = np.linalg.svd(A)
    return ConfElement(alpha, u @ vt, m[:3, 3])


def generator_field(xi: ConfAlgElement, p) -> np.ndarray:
    """Velocity of ``t -> exp(t xi) . p`` at t = 0, i.e. ``a p + V p + w``.

    Accepts a single point or an ``(n, 3)`` array of points.
    """
    p = np.asarray(p, dtype=float)
    return xi.a * p + p @ xi.V.T + xi.w


def project_l(xi: ConfAlgElement) -> ConfAlgElement:
    return ConfAlgElement(xi.a, xi.V, np.zeros(3))


def project_li(xi: ConfAlgElement) -> np.ndarray:
    return np.array(xi.V)


def project_h(xi: ConfAlgElement) -> float:
    return xi.a


def random_element(rng: np.random.Generator, scale: float = 5.0, connected: bool = False) -> ConfElement:
    """Random group element with entries in ``[-scale, scale]``.

    ``alpha`` is drawn with ``|alpha| >= 0.1`` so that inverses stay bounded.
    With ``connected`` the element lies in the identity component.
    """
    from scipy.stats import ortho_group, special_ortho_group

    mag = rng.uniform(0.1, scale)
    if connected:
        alpha = mag
        A = special_ortho_group.rvs(3, random_state=rng)
    else:
        alpha = mag * rng.choice([-1.0, 1.0])
        A = ortho_group.rvs(3, random_state=rng)
    return ConfElement(alpha, A, rng.uniform(-scale, scale, 3))


def random_alg_element(rng: np.random.Generator, scale: float = 1.0) -> ConfAlgElement:
    return ConfAlgElement.from_coords(rng.uniform(-scale, scale, DIM))
