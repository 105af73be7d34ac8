"""Command-line front end.

Subcommands: validate | metric | voronoi | spectrum | bounds | uncertainty
| cheeger | transform | report.  Exit codes: 0 when every non-vacuous row
passes, 2 when a bound row fails (an implementation bug, since every bound
is a theorem), 1 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time

import numpy as np

from . import __version__
from .cheeger import cheeger_chain
from .errors import GraphError, InvalidSpec
from .generators import DEFAULT_SEED, generate
from .graph import WeightedGraph, is_combinatorial, load_graph, validate
from .metric import (
    BallVolumeTable,
    ball,
    check_homogeneity,
    compute_metric,
    covering_radius,
    inradius,
)
from .potential import ground_state, ground_state_transform_check, potential_dirichlet_bound
from .report import Report, dumps_value, format_float, make_report, render, rows_pass
from .spectral import (
    ENDPOINT_TOLERANCE,
    assemble,
    coupling_rate,
    coupling_threshold,
    dirichlet_bounds_finite,
    dirichlet_lower_bound,
    eigenvalues_of,
    lowest_eigenvalue,
    operator_norm,
    resolvent_gap,
    uncertainty_constant,
)
from .voronoi import build_voronoi, verify_voronoi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specbounds",
        description="Geometric eigenvalue bounds on finite weighted graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, centers_required: bool = False) -> None:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph", help="path to a JSON graph file")
        src.add_argument("--generate", help="generator spec, e.g. lattice:2:8")
        p.add_argument(
            "--centers",
            required=centers_required,
            help=(
                "center spec: explicit ids a,b,c (use ';' between "
                "coordinate ids like 0,0;3,3) | every:k | sublattice:k"
            ),
        )
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--out", help="output file (default: stdout)")

    common(sub.add_parser("validate", help="check invariants, print constants"))

    p = sub.add_parser("metric", help="distances, inradius, covering radius")
    common(p)
    p.add_argument("--radius", help="optional ball radius (decimal string)")
    p.add_argument("--ball-center", help="vertex id for the ball query")

    common(sub.add_parser("voronoi", help="build and verify a decomposition"), True)

    p = sub.add_parser("spectrum", help="eigenvalues of the operator")
    common(p)
    p.add_argument("--interval", default=None, help="a:b; also report the window")

    p = sub.add_parser("bounds", help="Dirichlet eigenvalue bounds")
    common(p, True)
    p.add_argument(
        "--t-grid", default=None,
        help="start:stop:points; adds coupling-rate and resolvent rows",
    )

    p = sub.add_parser("uncertainty", help="low-energy uncertainty constants")
    common(p, True)
    p.add_argument("--interval", default="auto", help="a:b or 'auto' (= 0:lam/2)")
    p.add_argument("--t-grid", default="auto", help="start:stop:points or 'auto'")

    p = sub.add_parser("cheeger", help="isoperimetric bound chain")
    common(p, True)
    p.add_argument("--exhaustive-cap", type=int, default=22)

    p = sub.add_parser("transform", help="ground state and potential bound")
    common(p, True)
    p.add_argument("--doubling-N", type=float, default=None)

    p = sub.add_parser("report", help="run the whole verification pipeline")
    common(p, True)
    p.add_argument("--interval", default="auto")
    p.add_argument("--t-grid", default="auto")
    p.add_argument("--exhaustive-cap", type=int, default=22)
    p.add_argument("--doubling-N", type=float, default=None)
    return parser


def parse_centers(g: WeightedGraph, spec: str) -> tuple[str, ...]:
    """Resolve a centers spec against a graph's canonical vertex order."""
    spec = spec.strip()
    if spec.startswith("every:"):
        k = int(spec.split(":", 1)[1])
        if k < 1:
            raise InvalidSpec("every:k needs k >= 1")
        return g.vertices[::k]
    if spec.startswith("sublattice:"):
        k = int(spec.split(":", 1)[1])
        if k < 1:
            raise InvalidSpec("sublattice:k needs k >= 1")
        chosen = []
        for v in g.vertices:
            try:
                coords = [int(c) for c in v.split(",")]
            except ValueError:
                raise InvalidSpec(
                    "sublattice centers need coordinate-string vertex ids"
                ) from None
            if all(c % k == 0 for c in coords):
                chosen.append(v)
        if not chosen:
            raise InvalidSpec(f"sublattice:{k} selected no vertices")
        return tuple(chosen)
    # Explicit lists: a whole-string id first (lattice ids contain commas),
    # then a semicolon-separated list, then a comma-separated one.
    if spec in g.index:
        return (spec,)
    separator = ";" if ";" in spec else ","
    names = tuple(x.strip() for x in spec.split(separator) if x.strip())
    unknown = [x for x in names if x not in g.index]
    if unknown:
        raise InvalidSpec(f"unknown center ids: {unknown}")
    return names


def parse_interval(spec: str, lam_omega: float) -> tuple[float, float]:
    if spec == "auto":
        return (0.0, 0.5 * lam_omega)
    a, _, b = spec.partition(":")
    return (float(a), float(b))


def parse_t_grid(spec: str, threshold: float) -> list[float]:
    if spec == "auto":
        return [0.0] + list(np.geomspace(threshold, 100.0 * threshold, 8))
    start, stop, points = spec.split(":")
    return list(np.geomspace(float(start), float(stop), int(points)))


def load_input(args) -> WeightedGraph:
    if args.graph:
        return load_graph(args.graph)
    return generate(args.generate, seed=args.seed)


def config_echo(args) -> dict:
    keys = (
        "command", "graph", "generate", "centers", "format", "seed",
        "interval", "t_grid", "exhaustive_cap", "doubling_N", "radius",
        "ball_center",
    )
    cfg = {"version": __version__}
    for k in keys:
        if hasattr(args, k):
            cfg[k] = getattr(args, k)
    return cfg


def run(args) -> tuple[Report, dict]:
    """Execute one subcommand; returns the report plus extra payload."""
    g = load_input(args)
    constants = validate(g)
    rows: list = []
    extra: dict = {}
    timings: dict = {}
    clock = time.perf_counter

    def timed(name, fn):
        t0 = clock()
        result = fn()
        timings[name] = clock() - t0
        return result

    cmd = args.command

    if cmd == "validate":
        extra["constants"] = {
            "n": g.n,
            "edges": len(g.edges),
            "delta": constants.delta,
            "m_max": constants.m_max,
            "b_max": constants.b_max,
            "operator_norm_bound": constants.operator_norm_bound,
            "max_degree": constants.max_degree,
        }
        return Report(config_echo(args), tuple(rows), timings), extra

    md = timed("metric", lambda: compute_metric(g))
    centers = parse_centers(g, args.centers) if args.centers else None

    if cmd == "metric":
        extra["vertices"] = list(g.vertices)
        extra["distances"] = [[float(x) for x in row] for row in md.dist]
        if centers:
            omega = g.complement(centers)
            inr = inradius(md, omega) if omega else None
            covr = covering_radius(md, centers)
            extra["covering_radius"] = covr
            extra["inradius_of_complement"] = inr
            if omega:
                rows.append(
                    make_report(
                        "metric/covering_equals_inradius",
                        abs(covr - inr),
                        0.0,
                        "<=",
                    )
                )
        if args.radius is not None and args.ball_center is not None:
            r = float(args.radius)
            extra["ball"] = list(ball(md, args.ball_center, r, closed=True))
        return Report(config_echo(args), tuple(rows), timings), extra

    if cmd == "spectrum":
        evals = timed("eigensolve", lambda: eigenvalues_of(assemble(g)))
        extra["eigenvalues"] = [float(x) for x in evals]
        if centers:
            omega = g.complement(centers)
            if omega:
                evo = eigenvalues_of(assemble(g, omega=omega))
                extra["restricted_eigenvalues"] = [float(x) for x in evo]
        if args.interval is not None:
            a, _, b = args.interval.partition(":")
            lo, hi = float(a), float(b)
            extra["interval"] = [lo, hi]
            tol = ENDPOINT_TOLERANCE  # same closed-endpoint jitter as projections
            extra["eigenvalues_in_interval"] = [
                float(x) for x in evals if lo - tol <= x <= hi + tol
            ]
        return Report(config_echo(args), tuple(rows), timings), extra

    if cmd == "voronoi":
        vd = timed("build", lambda: build_voronoi(g, centers))
        rows.extend(timed("verify", lambda: verify_voronoi(vd, md)))
        extra["cells"] = {p: list(vs) for p, vs in vd.cells.items()}
        extra["witnesses"] = {v: list(vd.witness(v)) for v in g.vertices}
        return Report(config_echo(args), tuple(rows), timings), extra

    omega = g.complement(centers)
    if not omega:
        raise InvalidSpec("centers cover the whole graph; no region remains")

    if cmd == "bounds":
        rows.extend(timed("finite_volume", lambda: dirichlet_bounds_finite(g, md, omega)))
        rows.extend(timed("ball_volume", lambda: dirichlet_lower_bound(g, md, omega)))
        if args.t_grid is not None:
            t_grid = parse_t_grid(args.t_grid, coupling_threshold(g))
            rows.extend(timed("coupling", lambda: coupling_rate(g, centers, t_grid)))
            t_top = max(t_grid)
            if t_top > 0.0:
                rows.append(timed("resolvent", lambda: resolvent_gap(g, centers, t_top)))
        return Report(config_echo(args), tuple(rows), timings), extra

    if cmd == "uncertainty":
        lam_omega = lowest_eigenvalue(assemble(g, omega=omega))
        interval = parse_interval(args.interval, lam_omega)
        rows.extend(
            timed("uncertainty", lambda: uncertainty_constant(g, md, centers, interval))
        )
        return Report(config_echo(args), tuple(rows), timings), extra

    if cmd == "cheeger":
        rows.extend(
            timed("chain", lambda: cheeger_chain(g, md, centers, cap=args.exhaustive_cap))
        )
        return Report(config_echo(args), tuple(rows), timings), extra

    if cmd == "transform":
        gs = timed("ground_state", lambda: ground_state(g))
        extra["lambda_v"] = gs.lambda_v
        extra["c"] = gs.c
        rows.append(timed("identity", lambda: ground_state_transform_check(g, gs, seed=args.seed)))
        rows.extend(
            timed(
                "bound",
                lambda: potential_dirichlet_bound(
                    g, md, gs, centers, doubling_exponent=args.doubling_N
                ),
            )
        )
        return Report(config_echo(args), tuple(rows), timings), extra

    if cmd == "report":
        rows.append(
            make_report(
                "operator/norm_vs_weighted_degree",
                operator_norm(assemble(g)),
                constants.operator_norm_bound,
                "<=",
            )
        )
        rows.extend(timed("homogeneity", lambda: check_homogeneity(g, md, constants, seed=args.seed)))
        inr = inradius(md, omega)
        covr = covering_radius(md, centers)
        rows.append(
            make_report("metric/covering_equals_inradius", abs(covr - inr), 0.0, "<=")
        )
        vd = timed("voronoi", lambda: build_voronoi(g, centers))
        rows.extend(verify_voronoi(vd, md))
        rows.extend(timed("finite_volume", lambda: dirichlet_bounds_finite(g, md, omega)))
        rows.extend(timed("ball_volume", lambda: dirichlet_lower_bound(g, md, omega)))
        threshold = coupling_threshold(g)
        t_grid = parse_t_grid(args.t_grid, threshold)
        rows.extend(timed("coupling", lambda: coupling_rate(g, centers, t_grid)))
        if t_grid:
            t_top = max(t_grid)
            if t_top > 0.0:
                rows.append(timed("resolvent", lambda: resolvent_gap(g, centers, t_top)))
        lam_omega = lowest_eigenvalue(assemble(g, omega=omega))
        interval = parse_interval(args.interval, lam_omega)
        rows.extend(
            timed("uncertainty", lambda: uncertainty_constant(g, md, centers, interval))
        )
        if is_combinatorial(g):
            rows.extend(
                timed("cheeger", lambda: cheeger_chain(g, md, centers, cap=args.exhaustive_cap))
            )
        gs = timed("ground_state", lambda: ground_state(g))
        rows.append(ground_state_transform_check(g, gs, seed=args.seed))
        rows.extend(
            potential_dirichlet_bound(g, md, gs, centers, doubling_exponent=args.doubling_N)
        )
        return Report(config_echo(args), tuple(rows), timings), extra

    raise InvalidSpec(f"unknown command {cmd!r}")


def _metric_csv(report: Report, extra: dict) -> str:
    """Distance matrix as CSV, with summary radii and the report rows below."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    ids = extra["vertices"]
    writer.writerow(["id"] + ids)
    for vid, row in zip(ids, extra["distances"]):
        writer.writerow([vid] + [format_float(x) for x in row])
    if "covering_radius" in extra:
        writer.writerow(["covering_radius", format_float(extra["covering_radius"])])
    if extra.get("inradius_of_complement") is not None:
        writer.writerow(
            ["inradius_of_complement", format_float(extra["inradius_of_complement"])]
        )
    text = buf.getvalue()
    if report.rows:
        text += "\n" + render(report, "csv")
    return text


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if not exc.code else 1

    try:
        report, extra = run(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"specbounds: error: {exc}", file=sys.stderr)
        return 1

    if args.command == "metric" and args.format == "csv":
        text = _metric_csv(report, extra)
    else:
        text = render(report, args.format)
        if extra and args.format == "json":
            # Extra payload (constants, distances, cells, ...) rides along in JSON.
            text = text.rstrip("\n")[:-1] + ', "extra": ' + dumps_value(extra) + "}\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if rows_pass(report.rows) else 2


if __name__ == "__main__":
    raise SystemExit(main())
