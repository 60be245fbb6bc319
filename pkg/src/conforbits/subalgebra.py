"""Spans of algebra elements: closure, translation part and projection images.

Euclid elements are flattened to the 7 canonical coordinates
``(a, cX, cY, cZ, w)``; Lorentz elements to the 10 independent entries of a
5x5 matrix in so(1,4).  Rank decisions are made on orthonormalized
coordinate rows, which keeps thresholds meaningful after conjugation by
badly scaled elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import euclid, lorentz
from .errors import InternalInconsistency, ModelMismatch
from .linalg import RANK_TOL, null_space, orth_basis, subspace_rank


class Model(str, enum.Enum):
    EUCLID = "euclid"
    LORENTZ = "lorentz"


@dataclass(frozen=True, eq=False)
class Subalgebra:
    model: Model
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "model", Model(self.model))
        object.__setattr__(self, "basis", tuple(self.basis))
        kind = euclid.ConfAlgElement if self.model is Model.EUCLID else np.ndarray
        for b in self.basis:
            if not isinstance(b, kind):
                raise ModelMismatch(f"{type(b).__name__} in a {self.model.value} subalgebra")

    @classmethod
    def euclid(cls, *elements) -> Subalgebra:
        return cls(Model.EUCLID, elements)

    @classmethod
    def lorentz(cls, *matrices) -> Subalgebra:
        return cls(Model.LORENTZ, tuple(np.asarray(m, dtype=float) for m in matrices))

    @classmethod
    def from_coords(cls, model: Model, rows) -> Subalgebra:
        model = Model(model)
        if model is Model.EUCLID:
            return cls(model, tuple(euclid.ConfAlgElement.from_coords(r) for r in rows))
        return cls(model, tuple(lorentz.alg_from_coords(r) for r in rows))

    def coords(self) -> np.ndarray:
        width = euclid.DIM if self.model is Model.EUCLID else lorentz.DIM
        if not self.basis:
            return np.zeros((0, width))
        if self.model is Model.EUCLID:
            return np.array([b.coords for b in self.basis])
        return np.array([lorentz.alg_coords(b) for b in self.basis])

    def orthonormal_coords(self, tol: float = RANK_TOL) -> np.ndarray:
        return orth_basis(self.coords(), tol, width=self.coords().shape[1])

    def dim(self, tol: float = RANK_TOL) -> int:
        return subspace_rank(self.coords(), tol)

    def __len__(self) -> int:
        return len(self.basis)

    def conjugate(self, g) -> Subalgebra:
        """Image under Ad_g; ``g`` is a ConfElement (Euclid) or a Lorentz matrix."""
        if self.model is Model.EUCLID:
            return Subalgebra(self.model, tuple(euclid.adjoint(g, b) for b in self.basis))
        g = np.asarray(g, dtype=float)
        ginv = np.linalg.inv(g)
        return Subalgebra(self.model, tuple(g @ b @ ginv for b in self.basis))


def bracket(model: Model, x, y):
    if Model(model) is Model.EUCLID:
        return euclid.bracket(x, y)
    return x @ y - y @ x


def _flatten(model: Model, x) -> np.ndarray:
    return x.coords if model is Model.EUCLID else lorentz.alg_coords(x)


@dataclass(frozen=True)
class ClosureReport:
    size: int
    rank: int
    residual: float
    passed: bool

    @property
    def independent(self) -> bool:
        return self.rank == self.size


def closure_check(g: Subalgebra, tol: float = RANK_TOL) -> ClosureReport:
    """Bracket-closure test.

    The residual of ``[b_i, b_j]`` is its distance from the span, divided by
    ``|b_i| |b_j|`` so the test is insensitive to the scale of the basis.
    """
    if not g.basis:
        raise ValueError("empty basis")
    coords = g.coords()
    q = orth_basis(coords, tol, width=coords.shape[1])
    norms = np.linalg.norm(coords, axis=1)
    worst = 0.0
    n = len(g.basis)
    for i in range(n):
        for j in range(i + 1, n):
            c = _flatten(g.model, bracket(g.model, g.basis[i], g.basis[j]))
            resid = c - (c @ q.T) @ q
            denom = max(norms[i] * norms[j], 1e-300)
            worst = max(worst, float(np.linalg.norm(resid)) / denom)
    return ClosureReport(size=n, rank=q.shape[0], residual=worst, passed=worst <= tol)


def _require_euclid(g: Subalgebra) -> None:
    if g.model is not Model.EUCLID:
        raise ModelMismatch("operation is defined for Euclid subalgebras only")


def translation_part_rows(q: np.ndarray, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal translation vectors in the span of orthonormal coordinate rows ``q``."""
    if q.shape[0] == 0:
        return np.zeros((0, 3))
    kernel = null_space(q[:, :4].T, tol)  # coefficient vectors with zero linear part
    if kernel.shape[0] == 0:
        return np.zeros((0, 3))
    return orth_basis(kernel @ q[:, 4:], tol, width=3)


def translation_part(g: Subalgebra, tol: float = RANK_TOL) -> list[np.ndarray]:
    """Basis of T(g), the pure translations in ``g`` (the kernel of the linear-part projection)."""
    _require_euclid(g)
    return list(translation_part_rows(g.orthonormal_coords(tol), tol))


_PROJECTION_SLICES = {"l": slice(0, 4), "li": slice(1, 4), "h": slice(0, 1)}


def projection_image_rows(q: np.ndarray, which: str, tol: float = RANK_TOL) -> np.ndarray:
    sl = _PROJECTION_SLICES[which]
    width = sl.stop - sl.start
    image = orth_basis(q[:, sl], tol, width=width) if q.shape[0] else np.zeros((0, width))
    if which == "li" and image.shape[0] == 2:
        raise InternalInconsistency(
            "rotation projection has dimension 2, impossible for a subalgebra of so(3)"
        )
    return image


def projection_image(g: Subalgebra, which: str, tol: float = RANK_TOL) -> list[np.ndarray]:
    """Basis of p(g) for ``which`` in {"l", "li", "h"}.

    Image coordinates: ``l`` -> (a, cX, cY, cZ); ``li`` -> (cX, cY, cZ); ``h`` -> (a,).
    """
    _require_euclid(g)
    if which not in _PROJECTION_SLICES:
        raise ValueError(f"unknown projection {which!r}")
    return list(projection_image_rows(g.orthonormal_coords(tol), which, tol))
