"""End-to-end verification harness reproducing the classification tables.

Sections run in order; each yields a list of records with a ``passed`` flag.
A record that raises is recorded with the exception class and message, so a
bad tolerance shows up as a failed entry rather than a crash.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import bridge, catalog, classifier, euclid, lorentz, orbits
from .errors import ConformalError
from .linalg import EPS, RANK_TOL
from .lorentz import Branch
from .subalgebra import Model

DEFAULT_SEED = 24221

TRANSITIVE = (
    "R+*xR3",
    "(R+*xSO(3))xR3",
    "SO(3)xR3",
    "NaxR3",
    "R3",
    "SO(2)xR3",
    "(R+*xSO(2))xR3",
    "SxP",
)
EQUIVALENT_GROUPS = (
    ("P", "SO(2)xP"),
    ("R+*xP", "NaxP", "(R+*xSO(2))xP"),
    TRANSITIVE,
)
MISMATCHED_PAIRS = (
    ("P", "SO(2)xL"),
    ("P", "SO(3)"),
    ("P", "R3"),
    ("R+*xP", "P"),
    ("SO(2)xL", "R+*xL"),
    ("NaxL", "SO(2)xL"),
    ("R+*xL", "NaxL"),
    ("SO(3)", "R+*xSO(2)"),
    ("SO(3)", "R+*xSO(3)"),
    ("SO(2)xP", "SxP"),
)

# expected reduction for each sphere-side entry: (branch that must be reported, positive-definite dim)
REDUCTIONS = {
    "SO0(1,2)": (Branch.INVARIANT_POSITIVE_DEFINITE, 2),
    "SO0(1,3)": (Branch.INVARIANT_POSITIVE_DEFINITE, 1),
    "SO0(1,2)xSO(2)": (Branch.INVARIANT_POSITIVE_DEFINITE, 2),
    "SO0(1,4)": (Branch.IRREDUCIBLE, None),
    "SO(3)-block": (Branch.FIXED_HYPERBOLIC_POINT, None),
    "SO(2)xSO(2)": (Branch.FIXED_HYPERBOLIC_POINT, None),
    "SO(4)": (Branch.FIXED_HYPERBOLIC_POINT, None),
}

# (label, base point) for the conserved-quantity checks
INVARIANT_CLOUDS = (
    ("SO(3)", (0.0, 2.0, 0.0)),
    ("SO(2)xL", (1.0, 0.0, 0.0)),
    ("P", (0.3, -0.2, 1.5)),
    ("SO(2)xP", (0.3, -0.2, 1.5)),
    ("R+*xL", (1.0, 0.0, 0.0)),
    ("R+*xSO(2)", (0.0, 1.0, 0.5)),
    ("SO(2)xSO(2)", (1.0, 0.6, 0.0, 0.0, 0.8)),
    ("SO(3)-block", (1.0, 0.6, 0.8, 0.0, 0.0)),
    ("SO0(1,2)", (1.0, 0.0, 0.0, 0.6, 0.8)),
    ("SO0(1,3)", (1.0, 0.6, 0.8, 0.0, 0.0)),
)


@dataclass(frozen=True)
class Settings:
    seed: int = DEFAULT_SEED
    samples: int = orbits.DEFAULT_SAMPLES
    eps: float = EPS
    rank_tol: float = RANK_TOL
    conjugations: int = 100
    equivariance_trials: int = 1000
    a: float = catalog.DEFAULT_A


def _rng(settings: Settings, section: int) -> np.random.Generator:
    return np.random.default_rng([settings.seed, section])


def _error(exc: Exception) -> str:
    return f"{type(exc).__name__}: {exc}"


def _generators(label: str, settings: Settings):
    lab = catalog.canonical_label(label)
    return catalog.get(lab, settings.a if lab in catalog.FAMILY_LABELS else None).generators


def section_cohomogeneity(settings: Settings) -> list[dict]:
    out = []
    for entry in catalog.list_entries(a=settings.a):
        rec = {"label": entry.label, "model": entry.model.value, "claimed_cohomogeneity": entry.claimed_cohomogeneity}
        try:
            rep = orbits.cohomogeneity(entry.generators, settings.samples, settings.seed, settings.rank_tol)
            rec.update(
                computed_cohomogeneity=rep.cohomogeneity,
                strata=[[s.dim, s.count] for s in rep.strata],
                passed=rep.cohomogeneity == entry.claimed_cohomogeneity,
            )
        except ConformalError as exc:
            rec.update(error=_error(exc), passed=False)
        out.append(rec)
    return out


def section_orbit_equivalence(settings: Settings) -> list[dict]:
    out = []
    cases = [(p, q, True) for grp in EQUIVALENT_GROUPS for p, q in itertools.combinations(grp, 2)]
    cases += [(p, q, False) for p, q in MISMATCHED_PAIRS]
    for p, q, expected in cases:
        rep = orbits.orbits_equivalent(
            _generators(p, settings), _generators(q, settings), settings.samples, settings.seed, settings.rank_tol
        )
        out.append(
            {
                "pair": [p, q],
                "expected": expected,
                "equivalent": rep.equivalent,
                "worst_distance": rep.worst_distance if np.isfinite(rep.worst_distance) else "inf",
                "passed": rep.equivalent == expected,
            }
        )
    return out


def section_classification(settings: Settings) -> list[dict]:
    rng = _rng(settings, 3)
    out = []
    for label in catalog.EUCLID_LABELS:
        g = _generators(label, settings)
        hits, worst_res, worst_a, errors = 0, 0.0, 0.0, []
        for _ in range(settings.conjugations):
            h = euclid.random_element(rng)
            try:
                res = classifier.classify(g.conjugate(h), settings.rank_tol)
            except ConformalError as exc:
                errors.append(_error(exc))
                continue
            worst_res = max(worst_res, res.residual)
            a_ok = True
            if label in catalog.FAMILY_LABELS:
                a_err = abs(res.parameter - abs(settings.a)) if res.parameter is not None else np.inf
                worst_a = max(worst_a, a_err)
                a_ok = a_err <= 1e-6
            if res.label == label and a_ok and res.residual <= settings.rank_tol:
                hits += 1
        out.append(
            {
                "label": label,
                "trials": settings.conjugations,
                "recovered": hits,
                "worst_residual": worst_res,
                "worst_parameter_error": worst_a,
                "errors": errors[:3],
                "passed": hits == settings.conjugations,
            }
        )
    return out


def section_bridge(settings: Settings) -> list[dict]:
    rng = _rng(settings, 4)
    worst = 0.0
    for _ in range(settings.equivariance_trials):
        g = euclid.random_element(rng, connected=True)
        x = rng.uniform(-5, 5, 3)
        lhs = bridge.embed_point(euclid.act(g, x)).n
        rhs = lorentz.act_sphere(bridge.embed_conf(g), bridge.embed_point(x)).n
        worst = max(worst, float(np.abs(lhs - rhs).max()))
    out = [
        {
            "check": "equivariance",
            "trials": settings.equivariance_trials,
            "max_deviation": worst,
            "passed": worst <= 1e-8,
        }
    ]
    for label in catalog.EUCLID_LABELS:
        entry = catalog.get(label, settings.a if label in catalog.FAMILY_LABELS else None)
        if not ({"cohomogeneity-1", "cohomogeneity-0"} & set(entry.listed_in)):
            continue
        sphere = bridge.embed_subalgebra(entry.generators)
        e_rep = orbits.cohomogeneity(entry.generators, settings.samples, settings.seed, settings.rank_tol)
        s_rep = orbits.cohomogeneity(sphere, settings.samples, settings.seed, settings.rank_tol)
        at_inf = orbits.orbit_dim_at(sphere, bridge.P0.n, settings.rank_tol)
        out.append(
            {
                "check": "cohomogeneity agreement",
                "label": label,
                "euclid": e_rep.cohomogeneity,
                "sphere": s_rep.cohomogeneity,
                "dim_at_infinity": at_inf,
                "passed": e_rep.cohomogeneity == s_rep.cohomogeneity and at_inf == 0,
            }
        )
    return out


def section_reduction(settings: Settings) -> list[dict]:
    out = []
    for label, (branch, pd_dim) in REDUCTIONS.items():
        rec = {"label": label, "expected_branch": branch.value, "expected_pd_dim": pd_dim}
        try:
            rep = lorentz.reduction_scan(_generators(label, settings).basis, settings.rank_tol, settings.seed)
            if branch is Branch.IRREDUCIBLE:
                ok = rep.branches == {Branch.IRREDUCIBLE}
            elif branch is Branch.INVARIANT_POSITIVE_DEFINITE:
                ok = rep.branch is branch and rep.positive_definite_dim == pd_dim
            else:
                ok = rep.branch is branch
            rec.update(rep.summary(), passed=ok)
        except ConformalError as exc:
            rec.update(error=_error(exc), passed=False)
        out.append(rec)
    return out


def section_invariants(settings: Settings) -> list[dict]:
    out = []
    for label, base in INVARIANT_CLOUDS:
        rec = {"label": label, "base_point": list(base)}
        try:
            cloud = orbits.orbit_cloud(
                _generators(label, settings), np.array(base), steps=200, seed=settings.seed,
                label=label, tol=settings.rank_tol,
            )
            rep = orbits.invariant_check(label, cloud)
            rec.update(quantity=rep.quantity, max_deviation=rep.max_deviation, passed=rep.max_deviation <= 1e-8)
        except (ConformalError, ArithmeticError) as exc:
            rec.update(error=_error(exc), passed=False)
        out.append(rec)
    return out


SECTIONS = (
    ("a_cohomogeneity", section_cohomogeneity),
    ("b_orbit_equivalence", section_orbit_equivalence),
    ("c_classification", section_classification),
    ("d_bridge", section_bridge),
    ("e_reduction", section_reduction),
    ("f_invariants", section_invariants),
)


def verify_tables(settings: Settings | None = None) -> dict:
    settings = settings or Settings()
    sections = {}
    first_failure = None
    for name, fn in SECTIONS:
        records = fn(settings)
        ok = all(r["passed"] for r in records)
        sections[name] = {"passed": ok, "records": records}
        if not ok and first_failure is None:
            first_failure = name
    return {
        "seed": settings.seed,
        "samples": settings.samples,
        "tolerances": {"eps": settings.eps, "rank_tol": settings.rank_tol},
        "conjugations": settings.conjugations,
        "sections": sections,
        "passed": first_failure is None,
        "first_failure": first_failure,
    }


def summary_lines(report: dict) -> list[str]:
    lines = []
    for name, sec in report["sections"].items():
        n = len(sec["records"])
        bad = sum(not r["passed"] for r in sec["records"])
        lines.append(f"{'PASS' if sec['passed'] else 'FAIL'}  {name:22s} {n - bad}/{n}")
    lines.append("PASS" if report["passed"] else f"FAIL (first failing section: {report['first_failure']})")
    return lines


__all__ = ["Settings", "verify_tables", "summary_lines", "Model"]
