"""Conjugacy classification of subalgebras of (R + so(3)) |x R^3 of dimension >= 2.

:func:`classify` walks the decision tree on ``d = dim p_li(g)`` (3, then 1,
then 0), the translation part ``T(g)`` and the dimensions of ``p_l(g)`` and
``p_h(g)``, conjugating step by step until the span coincides with one of
the twenty catalog representatives.  Every step is an explicit adjoint
action, so the composed conjugator is returned and re-verified at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import catalog
from .errors import (
    DimensionTooSmall,
    InternalInconsistency,
    ModelMismatch,
    NotASubalgebra,
    SingularCase,
    ZeroInput,
)
from .euclid import (
    E3,
    LINE,
    PLANE,
    X,
    ConfElement,
    adjoint_matrix,
    coeffs_from_skew,
    compose,
    skew_from_coeffs,
)
from .linalg import RANK_TOL, orth_basis, rotation_taking, subspace_distance
from .subalgebra import (
    Model,
    Subalgebra,
    closure_check,
    projection_image_rows,
    translation_part_rows,
)

# half-turn about e1: X -> -X, preserves the plane P and the line L
_HALF_TURN = np.diag([1.0, -1.0, -1.0])


@dataclass(frozen=True)
class ClassificationResult:
    label: str
    parameter: float | None
    conjugator: ConfElement
    residual: float

    def render(self) -> str:
        head = self.label if self.parameter is None else f"{self.label}, a = {self.parameter:.12g}"
        return head


def align_rotation_axis(W: np.ndarray, tol: float = RANK_TOL) -> np.ndarray:
    """Rotation R in SO(3) with ``R W R^T = c X`` for some ``c > 0``."""
    W = np.asarray(W, dtype=float)
    if np.linalg.norm(W) <= tol:
        raise ZeroInput("rotation generator is zero")
    cx, cy, cz = coeffs_from_skew(W)
    # W x = omega cross x with omega = (-cZ, cY, -cX); X corresponds to omega = -e3
    omega = np.array([-cz, cy, -cx])
    return rotation_taking(omega, -E3)


def solve_translation_normalizer(a: float, u) -> np.ndarray:
    """Unique x with ``u - a x - X(x) = 0``, for ``a != 0``."""
    if a == 0:
        raise SingularCase("a = 0 has no unique normalizing translation")
    u = np.asarray(u, dtype=float)
    d = a * a + 1.0
    return np.array([(a * u[0] - u[1]) / d, (a * u[1] + u[0]) / d, u[2] / a])


def _normalizer_residual(a: float, u: np.ndarray, x: np.ndarray) -> np.ndarray:
    return u - a * x - X @ x


class _State:
    """Current orthonormal coordinate rows and the accumulated conjugator."""

    def __init__(self, rows: np.ndarray, tol: float):
        self.tol = tol
        self.rows = rows
        self.h = ConfElement.identity()

    def conjugate(self, step: ConfElement) -> None:
        self.h = compose(step, self.h)
        self.rows = orth_basis(self.rows @ adjoint_matrix(step).T, self.tol, width=7)

    def dims(self):
        li = projection_image_rows(self.rows, "li", self.tol).shape[0]
        l_ = projection_image_rows(self.rows, "l", self.tol).shape[0]
        h = projection_image_rows(self.rows, "h", self.tol).shape[0]
        return li, l_, h

    def translations(self) -> np.ndarray:
        return translation_part_rows(self.rows, self.tol)

    def element_with_linear_part(self, target) -> np.ndarray:
        """Coordinates of the span element whose (a, cX, cY, cZ) part equals ``target``."""
        target = np.asarray(target, dtype=float)
        lin = self.rows[:, :4]
        c, *_ = np.linalg.lstsq(lin.T, target, rcond=None)
        elem = c @ self.rows
        err = np.linalg.norm(elem[:4] - target)
        if err > self.tol * max(1.0, np.linalg.norm(target)) * 10:
            raise InternalInconsistency(f"no element with linear part {target.tolist()} (miss {err:.2e})")
        return elem

    def rotate(self, R: np.ndarray) -> None:
        self.conjugate(ConfElement.rotation(R))

    def translate(self, x) -> None:
        self.conjugate(ConfElement.translation(x))


def _scale_tol(tol: float, *values) -> float:
    return tol * max([1.0] + [float(np.linalg.norm(v)) for v in values])


def _match_translation_part(T: np.ndarray, tol: float) -> str:
    dim = T.shape[0]
    if dim == 0:
        return "0"
    if dim == 3:
        return "R3"
    target = LINE if dim == 1 else PLANE
    if subspace_distance(T, target, tol) > tol * 100:
        raise InternalInconsistency(
            f"translation part of dimension {dim} is not X-invariant after alignment"
        )
    return "L" if dim == 1 else "P"


def _align_translation_part(state: _State) -> str:
    """With no rotation part: rotate T(g) onto L or P."""
    T = state.translations()
    if T.shape[0] == 1:
        state.rotate(rotation_taking(T[0], E3))
    elif T.shape[0] == 2:
        state.rotate(rotation_taking(np.cross(T[0], T[1]), E3))
    return _match_translation_part(state.translations(), state.tol)


def _screw_parameter(state: _State) -> float:
    """Homothety rate of the element with rotation part exactly X; flips X -> -X if negative."""
    lin = projection_image_rows(state.rows, "l", state.tol)
    vec = lin[0]
    if abs(vec[1]) <= state.tol:
        raise InternalInconsistency("linear part is not a multiple of X after alignment")
    a = vec[0] / vec[1]
    if a < -state.tol:
        state.rotate(_HALF_TURN)
        a = -a
    return float(a) if abs(a) > state.tol else 0.0


def _branch_rank3(state: _State, l_dim: int) -> tuple[str, float | None]:
    T = _match_translation_part(state.translations(), state.tol)
    if T == "R3":
        if l_dim == 4:
            return "(R+*xSO(3))xR3", None
        if l_dim == 3:
            return "SO(3)xR3", None
    elif T == "0":
        if l_dim == 4:
            u = state.element_with_linear_part([1, 0, 0, 0])[4:]
            state.translate(u)
            return "R+*xSO(3)", None
        if l_dim == 3:
            # V + phi(V) with phi a coboundary: solve V_i x = phi(V_i) for x
            lhs, rhs = [], []
            for i, gen in enumerate((0, 1, 2)):
                target = np.zeros(4)
                target[1 + gen] = 1.0
                elem = state.element_with_linear_part(target)
                lhs.append(skew_from_coeffs(np.eye(3)[gen]))
                rhs.append(elem[4:])
            x, *_ = np.linalg.lstsq(np.vstack(lhs), np.concatenate(rhs), rcond=None)
            state.translate(x)
            return "SO(3)", None
    raise InternalInconsistency(f"no branch for d = 3, T = {T}, dim p_l = {l_dim}")


def _branch_rank1(state: _State, l_dim: int) -> tuple[str, float | None]:
    W = skew_from_coeffs(projection_image_rows(state.rows, "li", state.tol)[0])
    state.rotate(align_rotation_axis(W, state.tol))
    T = _match_translation_part(state.translations(), state.tol)
    tol = state.tol

    if l_dim == 2:
        u = state.element_with_linear_part([1, 0, 0, 0])[4:]
        state.translate(u)
        label = {"R3": "(R+*xSO(2))xR3", "P": "(R+*xSO(2))xP", "L": "(R+*xSO(2))xL", "0": "R+*xSO(2)"}[T]
        return label, None

    if l_dim != 1 or T == "0":
        raise InternalInconsistency(f"no branch for d = 1, T = {T}, dim p_l = {l_dim}")

    a = _screw_parameter(state)
    if T == "R3":
        return ("NaxR3", a) if a else ("SO(2)xR3", None)

    u = state.element_with_linear_part([a, 1, 0, 0])[4:]
    if a:
        x = solve_translation_normalizer(a, u)
        miss = _normalizer_residual(a, u, x)
        if np.linalg.norm(miss) > _scale_tol(tol, u) * 10:
            raise InternalInconsistency(f"normalizing translation misses by {np.linalg.norm(miss):.2e}")
        state.translate(x)
        return ("NaxP", a) if T == "P" else ("NaxL", a)

    if T == "P":
        if abs(u[2]) <= _scale_tol(tol, u):
            return "SO(2)xP", None
        state.conjugate(ConfElement.homothety(1.0 / u[2]))
        return "SxP", None
    # T == L, a == 0: X(x) = (x2, -x1, 0) absorbs the planar part of u
    state.translate(np.array([-u[1], u[0], 0.0]))
    return "SO(2)xL", None


def _branch_rank0(state: _State, h_dim: int) -> tuple[str, float | None]:
    T = _align_translation_part(state)
    if h_dim == 0:
        label = {"P": "P", "R3": "R3"}.get(T)
    else:
        if T in ("P", "L"):
            state.translate(state.element_with_linear_part([1, 0, 0, 0])[4:])
        label = {"R3": "R+*xR3", "P": "R+*xP", "L": "R+*xL"}.get(T)
    if label is None:
        raise InternalInconsistency(f"no branch for d = 0, T = {T}, dim p_h = {h_dim}")
    return label, None


def classify(g: Subalgebra, tol: float = RANK_TOL) -> ClassificationResult:
    """Conjugacy class of ``g`` among the twenty catalog representatives.

    Returns the label, the canonical parameter ``|a|`` for the Na families,
    a conjugator ``h`` with ``Ad_h(g)`` equal to the representative's span,
    and the principal-angle residual of that equality.
    """
    if g.model is not Model.EUCLID:
        raise ModelMismatch("classification is defined for Euclid subalgebras")
    report = closure_check(g, tol)
    if not report.passed:
        raise NotASubalgebra(f"bracket residual {report.residual:.3e} exceeds {tol:.1e}", report.residual)
    if report.rank < 2:
        raise DimensionTooSmall(f"dimension {report.rank} < 2")

    state = _State(g.orthonormal_coords(tol), tol)
    d, l_dim, h_dim = state.dims()
    if d == 3:
        label, a = _branch_rank3(state, l_dim)
    elif d == 1:
        label, a = _branch_rank1(state, l_dim)
    elif d == 0:
        label, a = _branch_rank0(state, h_dim)
    else:
        raise InternalInconsistency(f"dim p_li = {d}")

    target = catalog.span_coords(label, a)
    image = g.coords() @ adjoint_matrix(state.h).T
    residual = subspace_distance(image, target, tol)
    if not residual <= tol:
        raise InternalInconsistency(f"conjugated span misses {label} by {residual:.3e}")
    return ClassificationResult(label, a, state.h, residual)
