"""Orbit dimensions, cohomogeneity, orbit equivalence and orbit point clouds.

Orbit dimension at a point is the rank of the generator fields there.  For
the Euclid model the points are 3-vectors; for the Lorentz model they are
sphere points (normalized null 5-vectors).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import euclid, lorentz
from .errors import ModelMismatch, UnknownInvariant
from .linalg import RANK_TOL, orth_basis, subspace_distance, subspace_rank
from .subalgebra import Model, Subalgebra

DEFAULT_SEED = 0x5EED
DEFAULT_SAMPLES = 64

# deliberately sampled points on the known singular sets: the origin, the
# z-axis, the plane z = 0; on S3 the great circles n4 = n5 = 0 and
# n2 = n3 = 0, the poles of the SO(3) block and the great sphere n5 = 0
EUCLID_SINGULAR = np.array(
    [[0.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, -2.0], [1.0, 0.0, 0.0], [0.6, -0.8, 0.0]]
)
SPHERE_SINGULAR = np.array(
    [
        [1.0, 1.0, 0.0, 0.0, 0.0],
        [1.0, -1.0, 0.0, 0.0, 0.0],
        [1.0, 0.6, 0.8, 0.0, 0.0],
        [1.0, 0.0, 0.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 0.6, -0.8],
        [1.0, 0.0, 0.0, 0.0, 1.0],
        [1.0, 0.0, 0.0, 0.0, -1.0],
        [1.0, 0.0, 0.6, 0.8, 0.0],
    ]
)


@dataclass(frozen=True)
class Stratum:
    dim: int
    count: int
    witnesses: tuple  # first random witness (if any) followed by forced points

    @property
    def witness(self):
        return self.witnesses[0]


@dataclass(frozen=True)
class OrbitReport:
    max_dim: int
    cohomogeneity: int
    strata: tuple
    sampler_seed: int
    samples: int

    def dims(self) -> list[int]:
        return [s.dim for s in self.strata]

    def to_dict(self) -> dict:
        return {
            "max_dim": self.max_dim,
            "cohomogeneity": self.cohomogeneity,
            "seed": self.sampler_seed,
            "samples": self.samples,
            "strata": [
                {
                    "dim": s.dim,
                    "count": s.count,
                    "witnesses": [[float(c) for c in w] for w in s.witnesses],
                }
                for s in self.strata
            ],
        }


@dataclass(frozen=True)
class PointCloud:
    model: Model
    points: np.ndarray
    group_label: str
    base_point: np.ndarray
    seed: int = DEFAULT_SEED
    meta: dict = field(default_factory=dict)


def _lorentz_point(p) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if p.shape == (4,):
        return lorentz.SpherePoint.from_unit(p).n
    return lorentz.as_sphere_point(p).n


def tangent_vectors(g: Subalgebra, p) -> np.ndarray:
    """Generator fields at ``p`` as rows (3-vectors, or 5-vectors on the cone)."""
    if g.model is Model.EUCLID:
        p = np.asarray(p, dtype=float).reshape(3)
        return np.array([euclid.generator_field(b, p) for b in g.basis])
    n = _lorentz_point(p)
    return np.array([m @ n for m in g.basis])


def tangent_span(g: Subalgebra, p, tol: float = RANK_TOL) -> np.ndarray:
    """Orthonormal rows spanning the orbit's tangent space at ``p``.

    On the sphere the span is taken modulo the line of ``n`` itself.
    """
    vecs = tangent_vectors(g, p)
    if g.model is Model.EUCLID:
        return orth_basis(vecs, tol, width=3)
    n = _lorentz_point(p)
    nn = n / np.linalg.norm(n)
    vecs = vecs - np.outer(vecs @ nn, nn)
    return orth_basis(vecs, tol, width=5)


def orbit_dim_at(g: Subalgebra, p, tol: float = RANK_TOL) -> int:
    if g.model is Model.EUCLID:
        if np.asarray(p).size != 3:
            raise ModelMismatch("Euclid subalgebras act on 3-vectors")
        return subspace_rank(tangent_vectors(g, p), tol)
    if np.asarray(p).size not in (4, 5):
        raise ModelMismatch("Lorentz subalgebras act on sphere points")
    return lorentz.sphere_orbit_dim(g.basis, _lorentz_point(p), tol)


def sample_points(model: Model, samples: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    if Model(model) is Model.EUCLID:
        return rng.standard_normal((samples, 3))
    u = rng.standard_normal((samples, 4))
    u /= np.linalg.norm(u, axis=1, keepdims=True)
    return np.hstack([np.ones((samples, 1)), u])


def singular_points(model: Model) -> np.ndarray:
    return EUCLID_SINGULAR if Model(model) is Model.EUCLID else SPHERE_SINGULAR


def cohomogeneity(
    g: Subalgebra,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tol: float = RANK_TOL,
    force_singular: bool = True,
) -> OrbitReport:
    """Generic orbit dimension from seeded samples, plus strata witnesses.

    ``force_singular`` also evaluates the fixed list of points on the known
    singular sets, which random sampling almost never hits.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    pts = sample_points(g.model, samples, seed)
    found: dict[int, list] = {}
    counts: dict[int, int] = {}
    for p in pts:
        d = orbit_dim_at(g, p, tol)
        counts[d] = counts.get(d, 0) + 1
        if d not in found:
            found[d] = [tuple(p)]
    if force_singular:
        for p in singular_points(g.model):
            d = orbit_dim_at(g, p, tol)
            counts[d] = counts.get(d, 0) + 1
            found.setdefault(d, []).append(tuple(p))
    strata = tuple(
        Stratum(d, counts[d], tuple(np.array(w) for w in found[d])) for d in sorted(found)
    )
    max_dim = max(found)
    return OrbitReport(max_dim, 3 - max_dim, strata, seed, samples)


@dataclass(frozen=True)
class EquivalenceReport:
    equivalent: bool
    points_checked: int
    worst_distance: float
    first_mismatch: tuple | None


def orbits_equivalent(
    g1: Subalgebra,
    g2: Subalgebra,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    tol: float = RANK_TOL,
) -> EquivalenceReport:
    """Equal tangent distributions at every sampled (and every forced singular) point."""
    if g1.model is not g2.model:
        raise ModelMismatch("cannot compare orbits across models")
    pts = np.vstack([sample_points(g1.model, samples, seed), singular_points(g1.model)])
    worst = 0.0
    mismatch = None
    for p in pts:
        dist = subspace_distance(tangent_span(g1, p, tol), tangent_span(g2, p, tol), tol)
        if dist > worst:
            worst = dist
        if dist > tol and mismatch is None:
            mismatch = tuple(float(c) for c in p)
    return EquivalenceReport(mismatch is None, len(pts), worst, mismatch)


def _random_element(g: Subalgebra, rng: np.random.Generator):
    c = rng.standard_normal(len(g.basis))
    c /= max(np.linalg.norm(c), 1e-12)
    if g.model is Model.EUCLID:
        return sum((ci * b for ci, b in zip(c, g.basis)), euclid.ConfAlgElement.zero())
    return sum(ci * b for ci, b in zip(c, g.basis))


def orbit_cloud(
    g: Subalgebra,
    p,
    steps: int = 200,
    t_max: float = 0.5,
    seed: int = DEFAULT_SEED,
    label: str = "",
    tol: float = RANK_TOL,
) -> PointCloud:
    """Random walk along the orbit of ``p`` by exact one-parameter subgroups.

    Each step multiplies the running group element on the left by
    ``exp(t xi)`` for a random unit ``xi`` in the span and ``|t| <= t_max``.
    """
    rng = np.random.default_rng(seed)
    base_dim = orbit_dim_at(g, p, tol)
    pts = []
    if g.model is Model.EUCLID:
        base = np.asarray(p, dtype=float).reshape(3)
        h = euclid.ConfElement.identity()
        for _ in range(steps):
            h = euclid.compose(euclid.exp(_random_element(g, rng), rng.uniform(-t_max, t_max)), h)
            pts.append(euclid.act(h, base))
    else:
        base = _lorentz_point(p)
        h = np.eye(5)
        for _ in range(steps):
            h = lorentz.exp(_random_element(g, rng), rng.uniform(-t_max, t_max)) @ h
            pts.append(lorentz.sphere_normalize(h @ base, tol=1e-7).n)
    pts = np.array(pts)
    bad = [i for i, q in enumerate(pts) if orbit_dim_at(g, q, tol) != base_dim]
    if bad:
        raise ArithmeticError(f"{len(bad)} cloud points left the orbit stratum of dimension {base_dim}")
    return PointCloud(Model(g.model), pts, label, base, seed, {"orbit_dim": base_dim})


# conserved quantity per label; each maps an (n, k) array of points to n values
def _so3_block(pts):
    return pts[:, 1]


def _so12(pts):
    return np.arctan2(pts[:, 4], pts[:, 3])


INVARIANTS = {
    "SO(3)": ("norm", lambda pts: np.linalg.norm(pts, axis=1)),
    "SO(2)xL": ("x^2 + y^2", lambda pts: pts[:, 0] ** 2 + pts[:, 1] ** 2),
    "P": ("z", lambda pts: pts[:, 2]),
    "SO(2)xP": ("z", lambda pts: pts[:, 2]),
    "R+*xL": ("polar angle", lambda pts: np.arctan2(pts[:, 1], pts[:, 0])),
    "R+*xSO(2)": ("z / sqrt(x^2 + y^2)", lambda pts: pts[:, 2] / np.hypot(pts[:, 0], pts[:, 1])),
    "SO(2)xSO(2)": ("n2^2 + n3^2", lambda pts: pts[:, 1] ** 2 + pts[:, 2] ** 2),
    "SO(3)-block": ("n2", _so3_block),
    "SO0(1,2)": ("angle of (n4, n5)", _so12),
    "SO0(1,3)": ("n5 (light-cone u coordinate)", lambda pts: pts[:, 4]),
}


@dataclass(frozen=True)
class InvariantReport:
    label: str
    quantity: str
    reference: float
    max_deviation: float


def invariant_check(label: str, cloud: PointCloud) -> InvariantReport:
    """Maximum deviation of the label's conserved quantity from its value at the base point.

    For SO0(1,3) the conserved property is the vanishing (or the sign) of the
    fifth coordinate; the report measures ``|n5|`` when the base point lies on
    the invariant great sphere.
    """
    from .catalog import canonical_label

    lab = canonical_label(label)
    if lab not in INVARIANTS:
        raise UnknownInvariant(f"no conserved quantity registered for {lab}")
    name, fn = INVARIANTS[lab]
    ref = float(fn(cloud.base_point[None, :])[0])
    vals = fn(cloud.points)
    if lab == "SO0(1,3)" and abs(ref) > 1e-12:
        # off the great sphere only the sign of n5 is preserved
        dev = float(np.max(np.where(np.sign(vals) == np.sign(ref), 0.0, np.abs(vals))))
    else:
        dev = float(np.max(np.abs(vals - ref))) if len(vals) else 0.0
    return InvariantReport(lab, name, ref, dev)
