"""Command-line surface: construct, verify, render.

Reports are pure functions of (scenario, seed, tolerances): instance
randomness comes from per-(seed, index, purpose) streams, floats are
serialized as shortest round-trip decimals, complex values as "x+yi"
strings, and wall time goes to stderr so report bytes stay identical
across runs and thread counts.
"""

from __future__ import annotations

import argparse
import enum
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields, is_dataclass, replace

from .cevians import TriangleConfig, build_config
from .errors import GeometryError
from .geom_core import Triangle
from .instances import (
    DEFAULT_MAX_VERTEX_RADIUS,
    DEFAULT_MIN_ANGLE,
    PURPOSE_ARC,
    PURPOSE_CHECK,
    PURPOSE_CYCLE_PAIR,
    PURPOSE_LEXELL,
    PURPOSE_MONGE,
    PURPOSE_QUAD,
    PURPOSE_TRIANGLE,
    arc_instance,
    instance_rng,
    lexell_instance,
    monge_triple,
    random_cycle_pair,
    random_triangle,
    trapezoid_quad,
)
from .svg_render import FigureSpec, render_svg
from .theorems import (
    DEFAULT_TOLERANCES,
    InstanceReport,
    Tolerances,
    VerificationReport,
    check_euler_line,
    check_euler_ratios,
    check_feuerbach,
    check_feuerbach_point,
    check_inscribed_angle,
    check_lexell,
    check_monge,
    check_radical_axis,
    check_six_point,
    check_tangent_cevians,
    check_trapezoid,
)

SUITE_ORDER = (
    "inscribed_angle",
    "trapezoid",
    "lexell",
    "six_point",
    "euler_line",
    "euler_ratios",
    "feuerbach",
    "radical_axis",
    "monge",
    "tangent_cevians",
    "feuerbach_point",
)

# suites that need a full triangle configuration
TRIANGLE_SUITES = frozenset({
    "six_point", "euler_line", "euler_ratios", "feuerbach",
    "tangent_cevians", "feuerbach_point",
})


@dataclass(frozen=True)
class Scenario:
    seed: int = 0
    trials: int = 10
    suite: tuple[str, ...] = SUITE_ORDER
    tolerances: Tolerances = DEFAULT_TOLERANCES
    triangle: tuple[complex, complex, complex] | None = None
    max_vertex_radius: float = DEFAULT_MAX_VERTEX_RADIUS
    min_angle: float = DEFAULT_MIN_ANGLE
    out: str | None = None


# ------------------------------------------------------------- serialization

def format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 or z.imag != z.imag else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def parse_complex(text: str) -> complex:
    cleaned = text.replace(" ", "").replace("i", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise ValueError(f"cannot parse complex number {text!r}") from None


def parse_triangle(spec) -> tuple[complex, complex, complex]:
    parts = spec.split(",") if isinstance(spec, str) else list(spec)
    if len(parts) != 3:
        raise ValueError("triangle needs exactly three comma-separated vertices")
    a, b, c = (parse_complex(str(p)) for p in parts)
    return a, b, c


def parse_suite(spec) -> tuple[str, ...]:
    if isinstance(spec, (list, tuple)):
        names = [str(s) for s in spec]
    elif spec.strip() in ("all", ""):
        return SUITE_ORDER if spec.strip() == "all" else ()
    else:
        names = [s.strip() for s in spec.split(",") if s.strip()]
    for name in names:
        if name not in SUITE_ORDER:
            raise ValueError(f"unknown suite {name!r}; choose from "
                             f"{', '.join(SUITE_ORDER)} or 'all'")
    # keep registry order regardless of how the user listed them
    return tuple(n for n in SUITE_ORDER if n in set(names))


def jsonable(obj):
    """Recursive conversion to JSON-safe values; complex -> 'x+yi'."""
    if isinstance(obj, complex):
        return format_complex(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    return str(obj)


# ------------------------------------------------------------ suite running

def _dispatch(name: str, scn: Scenario, index: int,
              cfg: TriangleConfig | None, rng_check, tol: Tolerances):
    seed = scn.seed
    if name == "inscribed_angle":
        cycle, a, b = arc_instance(instance_rng(seed, index, PURPOSE_ARC))
        return check_inscribed_angle(cycle, a, b, tol)
    if name == "trapezoid":
        quad = trapezoid_quad(instance_rng(seed, index, PURPOSE_QUAD),
                              converse=bool(index % 2))
        return check_trapezoid(*quad, tol=tol)
    if name == "lexell":
        a, b, x0 = lexell_instance(instance_rng(seed, index, PURPOSE_LEXELL))
        return check_lexell(a, b, x0, tol)
    if name == "radical_axis":
        c1, c2 = random_cycle_pair(instance_rng(seed, index, PURPOSE_CYCLE_PAIR))
        return check_radical_axis(c1, c2, tol)
    if name == "monge":
        c1, c2, c3 = monge_triple(instance_rng(seed, index, PURPOSE_MONGE))
        return check_monge(c1, c2, c3, rng_check, tol)
    if name == "six_point":
        return check_six_point(cfg, tol)
    if name == "euler_line":
        return check_euler_line(cfg, tol)
    if name == "euler_ratios":
        return check_euler_ratios(cfg, tol)
    if name == "feuerbach":
        return check_feuerbach(cfg, tol)
    if name == "tangent_cevians":
        return check_tangent_cevians(cfg, rng_check, tol=tol)
    if name == "feuerbach_point":
        return check_feuerbach_point(cfg, tol)
    raise ValueError(f"unknown suite {name!r}")


def _run_instance(scn: Scenario, index: int) -> InstanceReport:
    instance: dict = {}
    flags: list[str] = []
    cfg = None
    if any(s in TRIANGLE_SUITES for s in scn.suite):
        if scn.triangle is not None:
            tri, resamples = Triangle.of(*scn.triangle), 0
        else:
            tri, resamples = random_triangle(
                instance_rng(scn.seed, index, PURPOSE_TRIANGLE),
                scn.max_vertex_radius, scn.min_angle)
        cfg = build_config(tri)
        flags = list(cfg.flags)
        instance["triangle"] = {"a": tri.a, "b": tri.b, "c": tri.c}
        instance["resamples"] = resamples
    rng_check = instance_rng(scn.seed, index, PURPOSE_CHECK)
    checks = [_dispatch(name, scn, index, cfg, rng_check, scn.tolerances)
              for name in scn.suite]
    return InstanceReport(index, instance, flags, checks)


def _thread_count() -> int:
    raw = os.environ.get("HYPFEUER_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_verify(scn: Scenario) -> VerificationReport:
    start = time.perf_counter()
    threads = _thread_count()
    indices = range(scn.trials)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            instances = list(pool.map(lambda i: _run_instance(scn, i), indices))
    else:
        instances = [_run_instance(scn, i) for i in indices]
    params = {
        "trials": scn.trials,
        "suite": list(scn.suite),
        "tolerances": jsonable(scn.tolerances),
        "max_vertex_radius": scn.max_vertex_radius,
        "min_angle": scn.min_angle,
        "triangle": ({k: format_complex(v) for k, v in
                      zip("abc", scn.triangle)} if scn.triangle else None),
    }
    return VerificationReport(scn.seed, params, instances,
                              time.perf_counter() - start)


def report_json(report: VerificationReport) -> str:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for inst in report.instances:
        for check in inst.checks:
            counts[check.status] += 1
    doc = {
        "seed": report.seed,
        "params": report.params,
        "summary": {
            "instances": len(report.instances),
            "passed": counts["pass"],
            "failed": counts["fail"],
            "skipped": counts["skipped"],
        },
        "instances": [jsonable(inst) for inst in report.instances],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def config_json(cfg: TriangleConfig) -> str:
    tri = cfg.triangle
    doc = {
        "triangle": {"a": tri.a, "b": tri.b, "c": tri.c, "swapped": tri.swapped},
        "sides": cfg.sides,
        "feet": cfg.feet,
        "cevians": {"bisector": cfg.bisector_cevians,
                    "pseudoaltitude": cfg.pseudoaltitude_cevians},
        "circumcircle": cfg.circumcircle,
        "circumcenter": cfg.circumcenter,
        "circumradius": cfg.circumradius,
        "euler_circle": cfg.euler_circle,
        "euler_center": cfg.euler_center,
        "euler_radius": cfg.euler_radius,
        "euler_membership": cfg.euler_membership,
        "bisector_point": cfg.bisector_point,
        "bisector_residual": cfg.bisector_residual,
        "pseudo_orthocenter": cfg.pseudo_orthocenter,
        "orthocenter_residual": cfg.orthocenter_residual,
        "incircle": cfg.incircle,
        "excircles": cfg.excircles,
        "flags": list(cfg.flags),
    }
    return json.dumps(jsonable(doc), indent=2, sort_keys=True) + "\n"


# ------------------------------------------------------------------ the CLI

def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(scn: Scenario) -> int:
    report = run_verify(scn)
    _write_out(report_json(report), scn.out)
    print(f"{len(report.instances)} instances, {report.failed} failed, "
          f"{report.wall_time:.2f}s", file=sys.stderr)
    return 0 if report.failed == 0 else 1


def cmd_construct(scn: Scenario) -> int:
    cfg = build_config(Triangle.of(*scn.triangle))
    _write_out(config_json(cfg), scn.out)
    return 0


def cmd_render(scn: Scenario, fmt: str) -> int:
    if scn.triangle is not None:
        tri = Triangle.of(*scn.triangle)
    else:
        tri, _ = random_triangle(instance_rng(scn.seed, 0, PURPOSE_TRIANGLE),
                                 scn.max_vertex_radius, scn.min_angle)
    cfg = build_config(tri)
    text = config_json(cfg) if fmt == "json" else render_svg(cfg, FigureSpec())
    _write_out(text, scn.out)
    return 0


_SCENARIO_KEYS = {"seed", "trials", "suite", "tolerances", "triangle",
                  "max_vertex_radius", "min_angle", "out"}


def scenario_from_args(args) -> Scenario:
    data = {}
    if args.scenario:
        with open(args.scenario, encoding="utf-8") as fh:
            data = json.load(fh)
        unknown = set(data) - _SCENARIO_KEYS
        if unknown:
            raise ValueError(f"unknown scenario keys: {sorted(unknown)}")

    def pick(flag, key, default):
        if flag is not None:
            return flag
        return data.get(key, default)

    tol_data = dict(data.get("tolerances", {}))
    for flag, key in ((args.tol_construct, "construct"),
                      (args.tol_theorem, "theorem"),
                      (args.tol_chain, "chain")):
        if flag is not None:
            tol_data[key] = flag
    tol = replace(DEFAULT_TOLERANCES, **{k: float(v) for k, v in tol_data.items()
                                         if k in ("construct", "theorem", "chain")})

    trials = int(pick(args.trials, "trials", 10))
    if trials < 0:
        raise ValueError("--trials must be non-negative")
    triangle_raw = pick(args.triangle, "triangle", None)
    return Scenario(
        seed=int(pick(args.seed, "seed", 0)),
        trials=trials,
        suite=parse_suite(pick(args.suite, "suite", "all")),
        tolerances=tol,
        triangle=parse_triangle(triangle_raw) if triangle_raw is not None else None,
        max_vertex_radius=float(data.get("max_vertex_radius",
                                         DEFAULT_MAX_VERTEX_RADIUS)),
        min_angle=float(data.get("min_angle", DEFAULT_MIN_ANGLE)),
        out=pick(args.out, "out", None),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypfeuer",
        description="Triangle constructions and theorem verification "
                    "in the hyperbolic disk.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "construct": "serialize the full configuration of one triangle",
        "verify": "run theorem suites over seeded random instances",
        "render": "draw a configuration as an SVG figure",
    }
    for name in ("construct", "verify", "render"):
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--seed", type=int, default=None)
        sp.add_argument("--trials", type=int, default=None)
        sp.add_argument("--suite", type=str, default=None,
                        help="comma-separated check names, or 'all'")
        sp.add_argument("--tol-construct", type=float, default=None)
        sp.add_argument("--tol-theorem", type=float, default=None)
        sp.add_argument("--tol-chain", type=float, default=None)
        sp.add_argument("--triangle", type=str, default=None,
                        help='vertices as "a,b,c", e.g. "0.1+0.1i,0.5,0.3i"')
        sp.add_argument("--out", type=str, default=None)
        sp.add_argument("--format", type=str, default=None,
                        choices=("json", "svg"))
        sp.add_argument("--scenario", type=str, default=None,
                        help="JSON file with scenario fields; flags override")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scn = scenario_from_args(args)
        fmt = args.format or ("svg" if args.command == "render" else "json")
        if args.command != "render" and fmt != "json":
            raise ValueError("--format svg only applies to render")
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"hypfeuer: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            return cmd_verify(scn)
        if args.command == "construct":
            if scn.triangle is None:
                print("hypfeuer: construct needs --triangle", file=sys.stderr)
                return 2
            return cmd_construct(scn)
        return cmd_render(scn, fmt)
    except GeometryError as exc:
        print(f"hypfeuer: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
