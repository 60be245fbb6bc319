"""Minkowski space R^{1,4}, its null cone and the conformal 3-sphere.

Coordinates are 0-based in code: index 0 is the timelike direction, 1..4 are
spacelike.  A sphere point is the null representative with first coordinate 1,
so its remaining four coordinates form a unit vector of R^4.

Lorentz group and algebra elements are plain 5x5 arrays; the predicates
:func:`is_lorentz` and :func:`is_lorentz_alg` check the defining relations.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import NotASubalgebra, NotNull, ZeroVector
from .linalg import EPS, RANK_TOL, expm, null_space, orth_basis, subspace_rank

J = np.diag([-1.0, 1.0, 1.0, 1.0, 1.0])
DIM = 10


def q_form(v, w=None) -> float:
    """Polarized quadratic form of signature (1, 4); ``q_form(v)`` is q(v)."""
    v = np.asarray(v, dtype=float)
    w = v if w is None else np.asarray(w, dtype=float)
    return float(-v[0] * w[0] + v[1:] @ w[1:])


def is_lorentz(m, tol: float = EPS) -> bool:
    m = np.asarray(m, dtype=float)
    scale = max(1.0, float(np.abs(m).max()) ** 2)
    return bool(np.abs(m.T @ J @ m - J).max() <= tol * scale)


def is_lorentz_alg(m, tol: float = EPS) -> bool:
    m = np.asarray(m, dtype=float)
    scale = max(1.0, float(np.abs(m).max()))
    return bool(np.abs(m.T @ J + J @ m).max() <= tol * scale)


def boost_generator(k: int) -> np.ndarray:
    """Boost mixing the timelike axis with spacelike axis ``k`` (1..4)."""
    m = np.zeros((5, 5))
    m[0, k] = m[k, 0] = 1.0
    return m


def rotation_generator(i: int, j: int) -> np.ndarray:
    """Rotation in the spacelike ``(i, j)`` plane, oriented like X on (e1, e2)."""
    m = np.zeros((5, 5))
    m[i, j] = 1.0
    m[j, i] = -1.0
    return m


_ROT_PAIRS = tuple(itertools.combinations(range(1, 5), 2))


def so14_basis() -> tuple[np.ndarray, ...]:
    return tuple(boost_generator(k) for k in range(1, 5)) + tuple(
        rotation_generator(i, j) for i, j in _ROT_PAIRS
    )


def alg_coords(m) -> np.ndarray:
    """Ten independent coordinates of an element of so(1,4)."""
    m = np.asarray(m, dtype=float)
    return np.concatenate([m[0, 1:], [m[i, j] for i, j in _ROT_PAIRS]])


def alg_from_coords(c) -> np.ndarray:
    return sum(ci * b for ci, b in zip(np.asarray(c, dtype=float), so14_basis()))


def exp(m, t: float = 1.0) -> np.ndarray:
    return expm(t * np.asarray(m, dtype=float))


def random_alg_element(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    return alg_from_coords(rng.uniform(-scale, scale, DIM))


@dataclass(frozen=True, eq=False)
class SpherePoint:
    n: np.ndarray

    def __post_init__(self):
        n = np.array(self.n, dtype=float).reshape(5)
        if abs(n[0] - 1.0) > EPS or abs(q_form(n)) > EPS * 10:
            raise NotNull(f"not a normalized null vector: {n.tolist()}")
        n.setflags(write=False)
        object.__setattr__(self, "n", n)

    @property
    def unit(self) -> np.ndarray:
        """The spacelike part, a unit vector in R^4."""
        return self.n[1:]

    @classmethod
    def from_unit(cls, u) -> SpherePoint:
        u = np.asarray(u, dtype=float)
        return cls(np.concatenate([[1.0], u / np.linalg.norm(u)]))

    def __repr__(self) -> str:
        return f"SpherePoint({self.n.tolist()!r})"


def sphere_normalize(v, tol: float = EPS) -> SpherePoint:
    v = np.asarray(v, dtype=float)
    nrm2 = float(v @ v)
    if nrm2 <= 1e-300:
        raise ZeroVector("zero vector has no projective class")
    if abs(q_form(v)) > tol * nrm2:
        raise NotNull(f"q(v) = {q_form(v):.3e} for |v|^2 = {nrm2:.3e}")
    n = v / v[0]
    # project the spacelike part back onto the unit sphere; the correction is O(tol)
    n[1:] /= np.linalg.norm(n[1:])
    return SpherePoint(n)


def as_sphere_point(s) -> SpherePoint:
    return s if isinstance(s, SpherePoint) else sphere_normalize(s)


def act_sphere(g, s) -> SpherePoint:
    s = as_sphere_point(s)
    return sphere_normalize(np.asarray(g, dtype=float) @ s.n)


def sphere_orbit_dim(gens, s, tol: float = RANK_TOL) -> int:
    """Dimension of the orbit through ``s`` of the connected group generated by ``gens``.

    The tangent space of the null cone image is spanned by ``M_i n`` modulo the
    line of ``n`` itself.
    """
    n = as_sphere_point(s).n
    rows = [n] + [np.asarray(m, dtype=float) @ n for m in gens]
    return subspace_rank(rows, tol) - 1


class Branch(str, enum.Enum):
    FIXED_HYPERBOLIC_POINT = "FixedHyperbolicPoint"
    FIXED_SPHERE_POINT = "FixedSpherePoint"
    INVARIANT_POSITIVE_DEFINITE = "InvariantPositiveDefinite"
    IRREDUCIBLE = "Irreducible"


# order in which the primary branch is reported
_BRANCH_ORDER = (
    Branch.FIXED_HYPERBOLIC_POINT,
    Branch.FIXED_SPHERE_POINT,
    Branch.INVARIANT_POSITIVE_DEFINITE,
    Branch.IRREDUCIBLE,
)


@dataclass(frozen=True)
class InvariantSubspace:
    basis: np.ndarray  # orthonormal rows (Euclidean inner product)
    signature: str  # "positive", "negative", "null", "lorentzian", "degenerate"

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])


@dataclass(frozen=True)
class ReductionReport:
    branch: Branch
    branches: frozenset
    kernel: np.ndarray
    subspaces: tuple = field(default_factory=tuple)
    positive_definite_dim: int | None = None

    def summary(self) -> dict:
        return {
            "branch": self.branch.value,
            "branches": sorted(b.value for b in self.branches),
            "kernel_dim": int(self.kernel.shape[0]),
            "invariant_subspaces": [
                {"dim": s.dim, "signature": s.signature} for s in self.subspaces
            ],
            "positive_definite_dim": self.positive_definite_dim,
        }


def _signature(basis: np.ndarray, tol: float) -> str:
    gram = basis @ J @ basis.T
    ev = np.linalg.eigvalsh(gram)
    pos = int(np.sum(ev > tol))
    neg = int(np.sum(ev < -tol))
    zero = len(ev) - pos - neg
    if pos == len(ev):
        return "positive"
    if neg == len(ev) and len(ev) == 1:
        return "negative"
    if zero == len(ev) and len(ev) == 1:
        return "null"
    if pos >= 1 and neg >= 1 and zero == 0:
        return "lorentzian"
    if neg >= 1 and pos == 0 and zero == 0:
        return "negative"
    return "degenerate"


def _cyclic_span(v: np.ndarray, gens, tol: float, cap: int = 2) -> np.ndarray | None:
    """Smallest subspace containing ``v`` and invariant under ``gens``; None if larger than ``cap``."""
    basis = orth_basis(v, tol)
    while True:
        images = [basis] + [basis @ m.T for m in gens]
        grown = orth_basis(np.vstack(images), tol)
        if grown.shape[0] > cap:
            return None
        if grown.shape[0] == basis.shape[0]:
            return grown
        basis = grown


def _candidate_vectors(gens, rng: np.random.Generator, tol: float, rounds: int = 3):
    """Real eigenvectors and real/imaginary parts of complex eigenvectors of generic combinations."""
    for _ in range(rounds):
        coeffs = rng.standard_normal(len(gens))
        m = sum(c * g for c, g in zip(coeffs, gens))
        vals, vecs = np.linalg.eig(m)
        scale = max(1.0, float(np.abs(vals).max()))
        for lam, vec in zip(vals, vecs.T):
            if abs(lam.imag) <= tol * scale:
                yield np.real(vec)
            elif lam.imag > 0:
                yield np.real(vec)
                yield np.imag(vec)
        # eigenspaces of repeated eigenvalues: the candidates above are an
        # arbitrary basis, so add the exact eigenspace bases as well
        for lam in np.unique(np.round(vals.real[np.abs(vals.imag) <= tol * scale], 6)):
            for vec in null_space(m - lam * np.eye(5), 1e-6):
                yield vec


def reduction_scan(gens, tol: float = RANK_TOL, seed: int = 0x5EED) -> ReductionReport:
    """Find common invariant subspaces of dimension <= 2 and report which reduction applies.

    Raises :class:`NotASubalgebra` when the generators do not close under the bracket.
    """
    from .subalgebra import Model, Subalgebra, closure_check

    gens = [np.asarray(m, dtype=float) for m in gens]
    report = closure_check(Subalgebra(Model.LORENTZ, tuple(gens)), tol)
    if not report.passed:
        raise NotASubalgebra("generators are not bracket-closed", report.residual)

    kernel = null_space(np.vstack(gens), tol) if gens else np.eye(5)
    branches: set[Branch] = set()
    subspaces: list[InvariantSubspace] = []

    if kernel.shape[0]:
        gram = kernel @ J @ kernel.T
        ev = np.linalg.eigvalsh(gram)
        if np.any(ev < -tol):
            branches.add(Branch.FIXED_HYPERBOLIC_POINT)
        if np.any(np.abs(ev) <= tol) or (np.any(ev < -tol) and np.any(ev > tol)):
            branches.add(Branch.FIXED_SPHERE_POINT)
        if np.any(ev > tol):
            branches.add(Branch.INVARIANT_POSITIVE_DEFINITE)
        if kernel.shape[0] <= 2:
            subspaces.append(InvariantSubspace(kernel, _signature(kernel, tol)))

    rng = np.random.default_rng(seed)
    for vec in _candidate_vectors(gens, rng, tol):
        if np.linalg.norm(vec) <= tol:
            continue
        span = _cyclic_span(vec, gens, tol)
        if span is None:
            continue
        if any(
            s.dim == span.shape[0] and subspace_rank(np.vstack([s.basis, span]), tol) == s.dim
            for s in subspaces
        ):
            continue
        # skip subspaces already contained in the common kernel
        if kernel.shape[0] and subspace_rank(np.vstack([kernel, span]), tol) == kernel.shape[0]:
            continue
        subspaces.append(InvariantSubspace(span, _signature(span, tol)))

    for s in subspaces:
        if s.signature == "positive":
            branches.add(Branch.INVARIANT_POSITIVE_DEFINITE)
        elif s.signature == "negative" and s.dim == 1:
            branches.add(Branch.FIXED_HYPERBOLIC_POINT)
        elif s.signature in ("null", "lorentzian", "degenerate"):
            # a connected group preserving such a subspace fixes each of its null lines
            branches.add(Branch.FIXED_SPHERE_POINT)

    if not branches:
        branches.add(Branch.IRREDUCIBLE)
    primary = next(b for b in _BRANCH_ORDER if b in branches)
    pd = [s.dim for s in subspaces if s.signature == "positive"]
    return ReductionReport(
        branch=primary,
        branches=frozenset(branches),
        kernel=kernel,
        subspaces=tuple(subspaces),
        positive_definite_dim=min(pd) if pd else None,
    )
