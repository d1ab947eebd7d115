"""Command-line entry point: every verification as a subcommand.

Output is a human-readable listing by default or JSON with --json; all
mathematical values are exact (rationals rendered as "p/q").  Exit codes:
0 when every verdict passes, 1 when a mathematical verdict fails, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .bundles import (
    BundleSpec,
    ambient_degrees,
    det_degree,
    inequality_audit,
    linearity_onset,
    select_E_d,
)
from .detmatrix import GpliError, Section, wedge_curve
from .ideals import containment_degree, diagram_crosscheck, mult_map_matrix, u_generators
from .linalg import in_column_space, rank
from .biprojective import dpsi_report, monomial_cover_check, witness_quad
from .polynomials import HomPoly, ParseError, h0_p2, parse_hompoly
from .sampling import derive_rng, random_pair, resolve_seed
from .tangent import smoothness_check, tangent_map

USAGE_ERROR = 2
VERDICT_ERROR = 1


@dataclass
class RunReport:
    """One subcommand's outcome: inputs echoed, verdicts, numbers, timing."""

    subcommand: str
    inputs: Dict[str, object]
    verdicts: Dict[str, bool]
    data: Dict[str, object] = field(default_factory=dict)
    seed: Optional[int] = None
    timing: float = 0.0

    def exit_code(self) -> int:
        return 0 if all(self.verdicts.values()) else VERDICT_ERROR

    def to_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"subcommand": self.subcommand}
        out["inputs"] = _jsonable(self.inputs)
        if self.seed is not None:
            out["seed"] = self.seed
        out["verdicts"] = dict(self.verdicts)
        out["data"] = _jsonable(self.data)
        out["timing"] = round(self.timing, 6)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"subcommand: {self.subcommand}"]
        for key, value in self.inputs.items():
            lines.append(f"  input {key}: {_textual(value)}")
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        for key, value in self.data.items():
            lines.append(f"  {key}: {_textual(value)}")
        for key, value in self.verdicts.items():
            lines.append(f"  verdict {key}: {'pass' if value else 'FAIL'}")
        lines.append(f"  time: {self.timing:.3f}s")
        return "\n".join(lines)


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, str, float)):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def _textual(value):
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value)
    return str(value)


def _parse_components(text: str, count: int, degrees) -> List[HomPoly]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        raise ParseError(f"expected {count} comma-separated components, got {len(parts)}")
    return [parse_hompoly(part, degree=deg) for part, deg in zip(parts, degrees)]


def _emit(report: RunReport, as_json: bool) -> int:
    print(report.to_json() if as_json else report.to_text())
    return report.exit_code()


# ---------------------------------------------------------------- commands


def cmd_verify_example1(args) -> int:
    t0 = time.perf_counter()
    bundle = BundleSpec("T", 0)
    v1 = Section(bundle, (parse_hompoly("x"), parse_hompoly("2*y"), parse_hompoly("3*z")))
    v2 = Section(bundle, (parse_hompoly("y"), parse_hompoly("z"), parse_hompoly("x")))
    curve = wedge_curve(v1, v2)
    expected = parse_hompoly("x^2*y - 2*x*z^2 + y^2*z")
    smooth = smoothness_check(curve)
    tangent = tangent_map(bundle, v1, v2)
    report = RunReport(
        subcommand="verify-example1",
        inputs={"v1": "x, 2*y, 3*z", "v2": "y, z, x"},
        verdicts={
            "determinant_matches": curve == expected,
            "smooth": smooth,
            "tangent_surjective": tangent.surjective,
        },
        data={
            "curve": str(curve),
            "hom_dim": tangent.hom_dim,
            "target_dim": tangent.target_dim,
            "augmented_rank": tangent.augmented_rank,
        },
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


def cmd_verify_example2(args) -> int:
    t0 = time.perf_counter()
    bundle = BundleSpec("N", 0)
    one = parse_hompoly("1")
    zero = HomPoly.zero(0)
    v1 = Section(bundle, (zero, one, parse_hompoly("y")))
    v2 = Section(bundle, (one, zero, parse_hompoly("x")))
    curve = wedge_curve(v1, v2)
    expected = parse_hompoly("x^2 + y^2 - z^2")
    matches = curve == expected or curve == expected.scale(Fraction(-1))
    smooth = smoothness_check(curve)
    tangent = tangent_map(bundle, v1, v2)
    report = RunReport(
        subcommand="verify-example2",
        inputs={"v1": "0, 1, y", "v2": "1, 0, x"},
        verdicts={
            "determinant_matches": matches,
            "smooth": smooth,
            "tangent_surjective": tangent.surjective,
        },
        data={
            "curve": str(curve),
            "hom_dim": tangent.hom_dim,
            "target_dim": tangent.target_dim,
            "augmented_rank": tangent.augmented_rank,
        },
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


def cmd_tangent(args) -> int:
    t0 = time.perf_counter()
    bundle = BundleSpec(args.bundle, args.n)
    degs = ambient_degrees(bundle)
    try:
        c1 = _parse_components(args.v1, len(degs), degs)
        c2 = _parse_components(args.v2, len(degs), degs)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    v1 = Section(bundle, tuple(c1))
    v2 = Section(bundle, tuple(c2))
    try:
        tangent = tangent_map(bundle, v1, v2)
    except GpliError as exc:
        report = RunReport(
            subcommand="tangent",
            inputs={"bundle": args.bundle, "n": args.n, "v1": args.v1, "v2": args.v2},
            verdicts={"gpli": False},
            data={"reason": str(exc)},
            timing=time.perf_counter() - t0,
        )
        return _emit(report, args.json)
    report = RunReport(
        subcommand="tangent",
        inputs={"bundle": args.bundle, "n": args.n, "v1": args.v1, "v2": args.v2},
        verdicts={"gpli": True, "surjective": tangent.surjective},
        data={
            "curve": str(tangent.curve),
            "curve_degree": tangent.curve.degree,
            "hom_dim": tangent.hom_dim,
            "target_dim": tangent.target_dim,
            "augmented_rank": tangent.augmented_rank,
        },
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


def cmd_mult(args) -> int:
    t0 = time.perf_counter()
    n = args.n
    bundle = BundleSpec("T", n)
    degs = ambient_degrees(bundle)
    seed = None
    if args.f is not None or args.g is not None:
        if args.f is None or args.g is None:
            print("error: --f and --g must be given together", file=sys.stderr)
            return USAGE_ERROR
        try:
            f = tuple(_parse_components(args.f, 3, degs))
            g = tuple(_parse_components(args.g, 3, degs))
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return USAGE_ERROR
        inputs = {"n": n, "f": args.f, "g": args.g}
    else:
        seed = resolve_seed(args.seed)
        rng = derive_rng(seed, "mult", n)
        s1, s2 = random_pair(rng, bundle)
        f, g = s1.components, s2.components
        inputs = {"n": n, "f": [str(p) for p in f], "g": [str(p) for p in g]}

    cross = diagram_crosscheck(f, g, n=n)
    data: Dict[str, object] = {
        "u_degree": n + 2,
        "product_degree": 2 * n + 3,
    }
    if cross.gpli:
        u = u_generators(f, g, n=n)
        matrix = mult_map_matrix(u)
        data["mult_rank"] = rank(matrix)
        data["target_dim"] = h0_p2(2 * n + 3)
        if (2 * n + 3) % 3 == 0:
            k = (2 * n + 3) // 3
            probe1 = HomPoly.monomial((k, k, k))
            probe2 = HomPoly.monomial((k + 1, k, k - 1))
            m1 = in_column_space(matrix, probe1.coeff_vector())
            m2 = in_column_space(matrix, probe2.coeff_vector())
            data["probe_balanced"] = str(probe1)
            data["probe_balanced_member"] = m1.member
            data["probe_shifted"] = str(probe2)
            data["probe_shifted_member"] = m2.member
    verdicts = {
        "gpli": cross.gpli,
        "mult_surjective": cross.mult_surjective,
        "tangent_surjective": cross.tangent_surjective,
        "crosscheck_agree": cross.agree,
    }
    report = RunReport(
        subcommand="mult",
        inputs=inputs,
        verdicts=verdicts,
        data=data,
        seed=seed,
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


def cmd_p1p1(args) -> int:
    t0 = time.perf_counter()
    if args.a < 1 or args.b < 1 or args.m < 1:
        print("error: a, b, m must all be at least 1", file=sys.stderr)
        return USAGE_ERROR
    cover = monomial_cover_check(args.a, args.b, args.m)
    quad = witness_quad(args.a, args.b, args.m)
    rep = dpsi_report(quad)
    report = RunReport(
        subcommand="p1p1",
        inputs={"a": args.a, "b": args.b, "m": args.m},
        verdicts={
            "monomial_cover": cover,
            "dpsi_surjective": rep.surjective,
            "agree": cover == rep.surjective,
        },
        data={
            "domain_dim": rep.domain_dim,
            "target_dim": rep.target_dim,
            "rank": rep.rank,
        },
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


def _parse_params(text: Optional[str]) -> Dict[str, int]:
    params: Dict[str, int] = {}
    if not text:
        return params
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ValueError(f"malformed parameter {item!r}, expected key=value")
        key, _, value = item.partition("=")
        params[key.strip()] = int(value)
    return params


def _parse_range(text: str):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"malformed range {text!r}, expected lo:hi")
    return range(int(lo), int(hi) + 1)


def cmd_audit(args) -> int:
    t0 = time.perf_counter()
    if args.select_degree is not None:
        d = args.select_degree
        if d < 1:
            print("error: degree must be at least 1", file=sys.stderr)
            return USAGE_ERROR
        spec = select_E_d(d)
        report = RunReport(
            subcommand="audit",
            inputs={"select_degree": d},
            verdicts={"degree_matches": det_degree(spec) == d},
            data={"bundle": spec.label(), "det_degree": det_degree(spec)},
            timing=time.perf_counter() - t0,
        )
        return _emit(report, args.json)
    if args.family is None:
        print("error: --family (or --select-degree) is required", file=sys.stderr)
        return USAGE_ERROR
    try:
        params = _parse_params(args.params)
        m_range = _parse_range(args.m_range)
        n = params.pop("n", 0)
        param = params.pop("k", None) if args.family == "M" else params.pop("r", None)
        if params:
            raise ValueError(f"unknown parameters {sorted(params)}")
        spec = BundleSpec(args.family, n, param)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    rows = inequality_audit(spec, m_range, args.g)
    gaps = [row.rhs - row.lhs for row in rows]
    onset = linearity_onset(gaps)
    report = RunReport(
        subcommand="audit",
        inputs={"family": args.family, "bundle": spec.label(), "m_range": args.m_range, "g": args.g},
        verdicts={"all_hold": all(row.holds for row in rows)},
        data={
            "rows": [
                {"m": row.m, "lhs": row.lhs, "rhs": row.rhs, "holds": row.holds}
                for row in rows
            ],
            "gap_linear_from": m_range[onset] if onset is not None else None,
        },
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


def cmd_containment(args) -> int:
    t0 = time.perf_counter()
    try:
        with open(args.gens_file, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        print(f"error: cannot read {args.gens_file}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    gens = []
    try:
        for line in lines:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            gens.append(parse_hompoly(line))
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if not gens:
        print("error: no generators in file", file=sys.stderr)
        return USAGE_ERROR
    result = containment_degree(gens, args.k_max)
    report = RunReport(
        subcommand="containment",
        inputs={"gens": [str(g) for g in gens], "k_max": args.k_max},
        verdicts={"reached": result.reached is not None},
        data={
            "containment_degree": result.reached,
            "ladder": [
                {"k": row.k, "dim": row.dim, "full_dim": h0_p2(row.k), "full": row.full}
                for row in result.ladder
            ],
        },
        timing=time.perf_counter() - t0,
    )
    return _emit(report, args.json)


# ---------------------------------------------------------------- wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="detrep",
        description="Exact checks for determinantal representations of plane curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("verify-example1", help="cubic from two tangent-bundle sections")
    add_json(p)
    p.set_defaults(func=cmd_verify_example1)

    p = sub.add_parser("verify-example2", help="smooth conic from the rank-two kernel bundle")
    add_json(p)
    p.set_defaults(func=cmd_verify_example2)

    p = sub.add_parser("tangent", help="tangent-map surjectivity for an explicit pair")
    p.add_argument("--bundle", choices=("T", "N"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--v1", required=True, help="comma-separated components")
    p.add_argument("--v2", required=True, help="comma-separated components")
    add_json(p)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("mult", help="multiplication-map image audit with cross-check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--f", default=None, help="comma-separated triple of degree n+1 forms")
    p.add_argument("--g", default=None, help="comma-separated triple of degree n+1 forms")
    add_json(p)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("p1p1", help="derivative-of-determinant audit on a product of lines")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_p1p1)

    p = sub.add_parser("audit", help="section-count inequality table for a bundle family")
    p.add_argument("--family", choices=("N", "T", "M", "E"), default=None)
    p.add_argument("--params", default=None, help="e.g. n=2 or n=1,k=2")
    p.add_argument("--m-range", default="0:10", help="inclusive lo:hi twist range")
    p.add_argument("--g", type=int, default=8)
    p.add_argument("--select-degree", type=int, default=None,
                   help="echo the rank-two bundle selected for a target degree")
    add_json(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("containment", help="power-of-variables containment ladder")
    p.add_argument("--gens-file", required=True, help="one polynomial per line")
    p.add_argument("--k-max", type=int, default=12)
    add_json(p)
    p.set_defaults(func=cmd_containment)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
