"""Command-line interface.

Exit codes: 0 ok, 1 I/O or parse error, 2 not a subalgebra, 3 dimension too
small, 4 internal inconsistency (including a failed verification run),
5 unknown label.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import bridge, catalog, classifier, io, lorentz, orbits, verify
from .errors import ConformalError, InternalInconsistency
from .linalg import EPS, RANK_TOL
from .subalgebra import Model, Subalgebra

EXIT_OK, EXIT_IO, EXIT_INCONSISTENT = 0, 1, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which collides with "not a subalgebra"
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=orbits.DEFAULT_SAMPLES)
    p.add_argument("--eps", type=float, default=EPS)
    p.add_argument("--rank-tol", type=float, default=RANK_TOL)
    p.add_argument("--a", type=float, default=None, help="parameter of the Na families")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--format", choices=("text", "json", "csv"), default=None)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="conforbits", description="Orbits of conformal groups of E3 and S3.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("catalog", parents=[common], help="list registered groups")
    p.add_argument("--model", choices=[m.value for m in Model])
    p.add_argument("--cohomogeneity", type=int, choices=(0, 1))
    p.add_argument("--notes", action="store_true", help="include metadata-only entries")

    p = sub.add_parser("classify", parents=[common], help="conjugacy class of a Euclid subalgebra")
    p.add_argument("path", type=Path)

    p = sub.add_parser("cohomogeneity", parents=[common], help="orbit strata of a label or document")
    p.add_argument("target")

    p = sub.add_parser("orbit", parents=[common], help="export an orbit point cloud")
    p.add_argument("label")
    p.add_argument("--point", required=True, help="comma-separated: x,y,z or a sphere point")
    p.add_argument("--steps", type=int, default=200)

    sub.add_parser("verify-tables", parents=[common], help="run the full verification harness")

    p = sub.add_parser("reduce", parents=[common], help="invariant-subspace scan of a sphere-side group")
    p.add_argument("target")
    return parser


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _resolve(target: str, a: float | None) -> tuple[str, Subalgebra]:
    """Label or document path -> (display name, subalgebra)."""
    path = Path(target)
    if path.suffix.lower() == ".json" or path.is_file():
        return str(path), io.load_subalgebra(path)
    lab = catalog.canonical_label(target)
    if lab in catalog.FAMILY_LABELS and a is None:
        a = catalog.DEFAULT_A
    entry = catalog.get(lab, a if lab in catalog.FAMILY_LABELS else None)
    if entry.metadata_only:
        raise io.DocumentError(f"{lab} is a metadata-only entry without generators")
    return lab, entry.generators


def _parse_point(text: str, model: Model, eps: float) -> np.ndarray:
    try:
        p = np.array([float(t) for t in text.split(",")])
    except ValueError as exc:
        raise io.DocumentError(f"cannot parse point {text!r}") from exc
    if model is Model.EUCLID:
        if p.size != 3:
            raise io.DocumentError("Euclid points take three coordinates")
        return p
    if p.size == 4:
        p = np.concatenate([[1.0], p / np.linalg.norm(p)])
    if p.size != 5:
        raise io.DocumentError("sphere points take four (unit part) or five coordinates")
    return lorentz.sphere_normalize(p, tol=max(eps, 1e-12) * 10).n


def cmd_catalog(args) -> int:
    a = catalog.DEFAULT_A if args.a is None else args.a
    entries = catalog.list_entries(args.model, args.cohomogeneity, a=a, include_notes=args.notes)
    if args.format == "json":
        rows = [
            {
                "label": e.label,
                "model": e.model.value,
                "dim": e.dim,
                "claimed_cohomogeneity": e.claimed_cohomogeneity,
                "compact": e.compact,
                "listed_in": list(e.listed_in),
                "orbits": e.orbit_description,
            }
            for e in entries
        ]
        _emit(io.dumps(rows), args.out)
        return EXIT_OK
    lines = [f"{'label':18s} {'model':8s} dim cohom  listed in"]
    for e in entries:
        c = "-" if e.claimed_cohomogeneity is None else str(e.claimed_cohomogeneity)
        lines.append(f"{e.label:18s} {e.model.value:8s} {e.dim:3d} {c:>5s}  {', '.join(e.listed_in)}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_classify(args) -> int:
    g = io.load_subalgebra(args.path)
    res = classifier.classify(g, args.rank_tol)
    h = res.conjugator
    if args.format == "json":
        doc = {
            "label": res.label,
            "parameter": res.parameter,
            "residual": res.residual,
            "conjugator": {"alpha": h.alpha, "A": h.A.tolist(), "v": h.v.tolist()},
        }
        _emit(io.dumps(doc), args.out)
        return EXIT_OK
    fmt = lambda v: " ".join(f"{c: .12g}" for c in np.ravel(v))  # noqa: E731
    lines = [
        res.render(),
        f"conjugator alpha: {h.alpha:.12g}",
        *(f"conjugator A[{i}]: {fmt(row)}" for i, row in enumerate(h.A)),
        f"conjugator v: {fmt(h.v)}",
        f"residual: {res.residual:.3e}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_cohomogeneity(args) -> int:
    name, g = _resolve(args.target, args.a)
    rep = orbits.cohomogeneity(g, args.samples, args.seed, args.rank_tol)
    if args.format == "json":
        _emit(io.dumps({"target": name, "model": g.model.value, **rep.to_dict()}), args.out)
        return EXIT_OK
    lines = [f"{name}: cohomogeneity {rep.cohomogeneity} (max orbit dim {rep.max_dim})"]
    for s in rep.strata:
        wit = "; ".join(",".join(f"{c:.6g}" for c in w) for w in s.witnesses[:3])
        lines.append(f"  orbit dim {s.dim}: {s.count} points, witnesses {wit}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_orbit(args) -> int:
    name, g = _resolve(args.label, args.a)
    p = _parse_point(args.point, g.model, args.eps)
    try:
        cloud = orbits.orbit_cloud(g, p, steps=args.steps, seed=args.seed, label=name, tol=args.rank_tol)
    except ArithmeticError as exc:
        raise InternalInconsistency(str(exc)) from exc
    if args.format == "json":
        _emit(io.dumps(io.cloud_to_dict(cloud)), args.out)
    else:
        _emit(io.cloud_to_csv(cloud), args.out)
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    settings = verify.Settings(seed=args.seed, samples=args.samples, eps=args.eps, rank_tol=args.rank_tol)
    if args.a is not None:
        settings = replace(settings, a=args.a)
    report = verify.verify_tables(settings)
    text = io.dumps(report)
    if args.out is not None:
        args.out.write_text(text)
        sys.stdout.write("\n".join(verify.summary_lines(report)) + "\n")
    elif args.format == "text":
        sys.stdout.write("\n".join(verify.summary_lines(report)) + "\n")
    else:
        sys.stdout.write(text)
    if not report["passed"]:
        sys.stderr.write(f"verification failed in section {report['first_failure']}\n")
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_reduce(args) -> int:
    name, g = _resolve(args.target, args.a)
    if g.model is Model.EUCLID:
        g = bridge.embed_subalgebra(g)
    rep = lorentz.reduction_scan(g.basis, args.rank_tol, args.seed)
    if args.format == "json":
        _emit(io.dumps({"target": name, **rep.summary()}), args.out)
        return EXIT_OK
    s = rep.summary()
    lines = [
        f"{name}: {s['branch']}",
        f"  branches found: {', '.join(s['branches'])}",
        f"  common kernel dim: {s['kernel_dim']}",
    ]
    if s["positive_definite_dim"] is not None:
        lines.append(f"  positive definite invariant subspace dim: {s['positive_definite_dim']}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


COMMANDS = {
    "catalog": cmd_catalog,
    "classify": cmd_classify,
    "cohomogeneity": cmd_cohomogeneity,
    "orbit": cmd_orbit,
    "verify-tables": cmd_verify_tables,
    "reduce": cmd_reduce,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_IO
    try:
        return COMMANDS[args.command](args)
    except ConformalError as exc:
        residual = getattr(exc, "residual", None)
        msg = f"error: {type(exc).__name__}: {exc}"
        if residual is not None:
            msg += f" (closure residual {residual:.3e})"
        sys.stderr.write(msg + "\n")
        return exc.exit_code
    except (OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
