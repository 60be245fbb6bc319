"""Registry of the named groups: the twenty conjugacy classes of similarity
subgroups of dimension >= 2, and the sphere-side subgroups of SO0(1,4).

Labels are ASCII: ``x`` stands for both direct and semidirect products
(no two registered groups differ only in that), ``R+*`` for the positive
homotheties, ``P``/``L`` for the plane e1,e2 and the line e3, ``Na`` for the
screw-homothety one-parameter group exp(t(a+X)) and ``S`` for the screw
motion exp(t(X+e3)).  :func:`canonical_label` also accepts the usual
Unicode spellings, case-insensitively.

``listed_in`` tags record where each group appears in the classification:
``"subgroups"`` (conjugacy classes of dimension >= 2 fixing a sphere point),
``"cohomogeneity-1"`` and ``"cohomogeneity-0"`` (the orbit-equivalence
representatives).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import MissingParameter, UnknownLabel
from .euclid import GX, GY, GZ, LAM, T1, T2, T3
from .lorentz import boost_generator as _boost
from .lorentz import rotation_generator as _rot
from .subalgebra import Model, Subalgebra

DEFAULT_A = 1.0


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    model: Model
    generators: Subalgebra | None
    parameter: float | None
    claimed_cohomogeneity: int | None
    compact: bool
    orbit_description: str
    listed_in: tuple[str, ...]
    metadata_only: bool = False

    @property
    def dim(self) -> int:
        return 0 if self.generators is None else len(self.generators)

    @property
    def family(self) -> bool:
        return self.label.startswith("Na")


def _e(*elements) -> Subalgebra:
    return Subalgebra.euclid(*elements)


_SUB = ("subgroups",)
_C1 = ("subgroups", "cohomogeneity-1")
_C0 = ("subgroups", "cohomogeneity-0")

# (label, generator factory taking a, claimed cohomogeneity, compact, orbits, tags)
# in registry order
_EUCLID_ROWS = (
    ("R+*xR3", lambda a: _e(LAM, T1, T2, T3), 0, False, "transitive on E3", _SUB),
    ("(R+*xSO(3))xR3", lambda a: _e(LAM, GX, GY, GZ, T1, T2, T3), 0, False, "transitive on E3", _SUB),
    ("SO(3)xR3", lambda a: _e(GX, GY, GZ, T1, T2, T3), 0, False, "transitive on E3", _SUB),
    ("NaxR3", lambda a: _e(a * LAM + GX, T1, T2, T3), 0, False, "transitive on E3", _SUB),
    ("R3", lambda a: _e(T1, T2, T3), 0, False, "transitive on E3", _C0),
    ("SO(2)xR3", lambda a: _e(GX, T1, T2, T3), 0, False, "transitive on E3", _SUB),
    ("(R+*xSO(2))xR3", lambda a: _e(LAM, GX, T1, T2, T3), 0, False, "transitive on E3", _SUB),
    ("SxP", lambda a: _e(GX + T3, T1, T2), 0, False, "transitive on E3", _SUB),
    ("SO(2)xP", lambda a: _e(GX, T1, T2), 1, False, "same orbits as P: affine planes z = const", _SUB),
    (
        "(R+*xSO(2))xP",
        lambda a: _e(LAM, GX, T1, T2),
        0,
        False,
        "plane z = 0 and the two open half-spaces",
        _SUB,
    ),
    ("R+*xP", lambda a: _e(LAM, T1, T2), 0, False, "plane z = 0 and the two open half-spaces", _C0),
    ("NaxP", lambda a: _e(a * LAM + GX, T1, T2), 0, False, "plane z = 0 and the two open half-spaces", _SUB),
    ("P", lambda a: _e(T1, T2), 1, False, "affine planes z = const", _C1),
    ("SO(2)xL", lambda a: _e(GX, T3), 1, False, "z-axis and coaxial cylinders around it", _C1),
    (
        "(R+*xSO(2))xL",
        lambda a: _e(LAM, GX, T3),
        0,
        False,
        "z-axis and its open complement",
        _C0,
    ),
    ("NaxL", lambda a: _e(a * LAM + GX, T3), 1, False, "z-axis and spiral surfaces diffeomorphic to R2", _C1),
    ("R+*xL", lambda a: _e(LAM, T3), 1, False, "z-axis and open affine half-planes bounded by it", _C1),
    ("R+*xSO(3)", lambda a: _e(LAM, GX, GY, GZ), 0, False, "origin and its complement", _C0),
    ("SO(3)", lambda a: _e(GX, GY, GZ), 1, True, "origin and round spheres centred at it", _C1),
    (
        "R+*xSO(2)",
        lambda a: _e(LAM, GX),
        1,
        False,
        "origin, two half-axes, and cones around the z-axis (cylinders S1 x R)",
        _C1,
    ),
)


def _lorentz(*mats) -> Subalgebra:
    return Subalgebra.lorentz(*mats)


def _so1k(k: int) -> list[np.ndarray]:
    """so(1,k) acting on coordinates 0..k."""
    gens = [_boost(i) for i in range(1, k + 1)]
    gens += [_rot(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    return gens


_LORENTZ_ROWS = (
    (
        "SO0(1,2)",
        lambda: _lorentz(*_so1k(2)),
        1,
        False,
        "invariant great circle; elsewhere surfaces H2 x {point} of H2 x S1",
        ("cohomogeneity-1",),
    ),
    (
        "SO0(1,3)",
        lambda: _lorentz(*_so1k(3)),
        0,
        False,
        "invariant great 2-sphere and two open hyperbolic 3-balls",
        ("cohomogeneity-0",),
    ),
    (
        "SO0(1,2)xSO(2)",
        lambda: _lorentz(*_so1k(2), _rot(3, 4)),
        0,
        False,
        "invariant great circle and its complement H2 x S1",
        ("cohomogeneity-0",),
    ),
    ("SO0(1,4)", lambda: _lorentz(*_so1k(4)), 0, False, "transitive on S3", ("cohomogeneity-0",)),
    (
        "SO(3)-block",
        lambda: _lorentz(_rot(2, 3), _rot(2, 4), _rot(3, 4)),
        1,
        True,
        "two antipodal fixed points and the 2-spheres between them",
        ("cohomogeneity-1",),
    ),
    (
        "SO(2)xSO(2)",
        lambda: _lorentz(_rot(1, 2), _rot(3, 4)),
        1,
        True,
        "two circles n4 = n5 = 0 and n2 = n3 = 0, flat tori elsewhere",
        ("cohomogeneity-1",),
    ),
    (
        "SO(4)",
        lambda: _lorentz(*[_rot(i, j) for i in range(1, 5) for j in range(i + 1, 5)]),
        0,
        True,
        "transitive on S3 (isometries of the round metric)",
        ("proper",),
    ),
)

# subgroups of SO0(1,2), recorded without generators
_NOTES = (
    ("Aff", "2-dimensional affine subgroup of SO0(1,2); preserves a lightlike line of R^{1,2}"),
    ("E", "elliptic one-parameter subgroup of SO0(1,2); preserves a unique timelike line"),
    ("H", "hyperbolic one-parameter subgroup of SO0(1,2); preserves two lightlike lines"),
    ("P-parabolic", "parabolic one-parameter subgroup of SO0(1,2); preserves a unique lightlike line"),
)

EUCLID_LABELS = tuple(r[0] for r in _EUCLID_ROWS)
LORENTZ_LABELS = tuple(r[0] for r in _LORENTZ_ROWS)
NOTE_LABELS = tuple(r[0] for r in _NOTES)
FAMILY_LABELS = tuple(lab for lab in EUCLID_LABELS if lab.startswith("Na"))

_UNICODE = {
    "⋉": "x", "×": "x", "⋊": "x", "ℝ": "R", "₊": "+", "⁺": "+", "³": "3", "²": "2",
    "𝒫": "P", "ℒ": "L", "𝒮": "S", "𝒩": "N", "₀": "0", "∘": "0", "𝔸ff": "Aff",
    "ℰ": "E", "ℋ": "H", "_a": "a", "_": "", " ": "", "|x": "x", "*x": "x",
}


def _fold(label: str) -> str:
    s = label
    for k, v in _UNICODE.items():
        s = s.replace(k, v)
    s = s.lower().replace("r+x", "r+*x").replace("(r+*)", "r+*")
    if s.endswith("r+"):
        s += "*"
    return s


_INDEX = {_fold(lab): lab for lab in EUCLID_LABELS + LORENTZ_LABELS + NOTE_LABELS}
_INDEX.update({
    _fold("SO_0(1,2)"): "SO0(1,2)",
    _fold("SO(3)block"): "SO(3)-block",
    _fold("N_a|L"): "NaxL",
    _fold("Na*L"): "NaxL",
    _fold("Na*P"): "NaxP",
    _fold("Na*R3"): "NaxR3",
})


def canonical_label(label: str) -> str:
    key = _fold(label)
    if key not in _INDEX:
        raise UnknownLabel(f"unknown group label {label!r}")
    return _INDEX[key]


def _build(label: str, a: float | None) -> CatalogEntry:
    for lab, make, cohom, compact, orbits, tags in _EUCLID_ROWS:
        if lab == label:
            param = a if lab in FAMILY_LABELS else None
            return CatalogEntry(lab, Model.EUCLID, make(param), param, cohom, compact, orbits, tags)
    for lab, make, cohom, compact, orbits, tags in _LORENTZ_ROWS:
        if lab == label:
            return CatalogEntry(lab, Model.LORENTZ, make(), None, cohom, compact, orbits, tags)
    for lab, text in _NOTES:
        if lab == label:
            return CatalogEntry(lab, Model.LORENTZ, None, None, None, False, text, ("SO0(1,2)",), True)
    raise UnknownLabel(label)


def get(label: str, a: float | None = None) -> CatalogEntry:
    """Entry for ``label``; ``a`` is required for, and only for, the Na families."""
    lab = canonical_label(label)
    if lab in FAMILY_LABELS:
        if a is None:
            raise MissingParameter(f"{lab} needs the parameter a")
        if a == 0:
            raise ValueError("a must be nonzero")
        return _build(lab, float(a))
    if a is not None:
        raise ValueError(f"{lab} takes no parameter")
    return _build(lab, None)


def list_entries(
    model: Model | str | None = None,
    cohomogeneity: int | None = None,
    a: float = DEFAULT_A,
    include_notes: bool = False,
) -> list[CatalogEntry]:
    """All entries in registry order, Euclid first; Na families instantiated at ``a``."""
    out = [_build(lab, a) for lab in EUCLID_LABELS] + [_build(lab, None) for lab in LORENTZ_LABELS]
    if include_notes:
        out += [_build(lab, None) for lab in NOTE_LABELS]
    if model is not None:
        out = [e for e in out if e.model is Model(model)]
    if cohomogeneity is not None:
        out = [e for e in out if e.claimed_cohomogeneity == cohomogeneity]
    return out


def span_coords(label: str, a: float | None = None) -> np.ndarray:
    """Coordinate rows of the registered generators."""
    entry = get(label, a)
    return entry.generators.coords()
