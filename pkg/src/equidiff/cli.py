"""Command-line front end.

    equidiff ramdata '{"n": 5, "p": 0, "gY": 0, "branch": [{"e": 5, "d": 4}, {"e": 5, "d": 4}]}'
    equidiff cover '{"kind": "as", "p": 3, "f": [0, 0, 0, 0, 1]}'
    equidiff sweep --p 2,3,5,7 --N-max 12 --kummer-n 2,3 --m-max 7

PROFILE and SPEC arguments are inline JSON or a path to a JSON file.  A
table goes to stdout; ``--json`` prints the machine report instead and
``--out`` also writes it to a file.  The exit status is 0 iff every
cross-check passed, 1 if one failed and 2 for unusable input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .covers import CoverKind, CoverSpec, analyze, default_kummer_f
from .errors import DegenerateCoverError, InconsistentProfileError
from .gfpoly import GF, smallest_extension_for_roots
from .ramcalc import (
    Prop2Verdict,
    RamificationProfile,
    Verdict,
    faithfulness_classifier,
    invariant_dimension_cyclic_p,
    prop2_classifier,
)


@dataclass
class Report:
    input: dict[str, Any]
    g_X: int
    g_Y: int
    deg_R: int
    deg_floor: int
    invariant_dim_formula: int
    faithfulness: str
    invariant_dim_oracle: int | None = None
    kernel_order: int | None = None
    prop2: str | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict[str, Any]:
        out = {
            "input": self.input,
            "g_X": self.g_X,
            "g_Y": self.g_Y,
            "deg_R": self.deg_R,
            "deg_floor": self.deg_floor,
            "invariant_dim_formula": self.invariant_dim_formula,
            "verdicts": {"faithfulness": self.faithfulness},
            "checks": dict(sorted(self.checks.items())),
            "passed": self.passed,
        }
        if self.prop2 is not None:
            out["verdicts"]["prop2"] = self.prop2
        if self.invariant_dim_oracle is not None:
            out["invariant_dim_oracle"] = self.invariant_dim_oracle
        if self.kernel_order is not None:
            out["kernel_order"] = self.kernel_order
        out.update(self.details)
        return out


def ramdata_report(profile: RamificationProfile) -> Report:
    return Report(
        input=profile.to_dict(),
        g_X=profile.g_X,
        g_Y=profile.g_Y,
        deg_R=profile.deg_R,
        deg_floor=profile.deg_floor,
        invariant_dim_formula=profile.invariant_dimension,
        faithfulness=faithfulness_classifier(profile).value,
        details={"floor_divisor": profile.floor_divisor().to_dict()},
    )


def cover_report(spec: CoverSpec) -> Report:
    a = analyze(spec)
    prof = a.profile
    verdict = faithfulness_classifier(prof, a.hurwitz_genus)
    M = a.action.matrix
    checks = {
        "genus_conservation": a.basis.genus == a.hurwitz_genus == spec.closed_form_genus(),
        "dim_formula_vs_oracle": prof.invariant_dimension == a.fixed_dim,
        "faithfulness_sound": not (verdict is Verdict.FAITHFUL_GUARANTEED and a.kernel_order > 1),
    }
    prop2 = None
    if spec.kind is CoverKind.ARTIN_SCHREIER:
        data = spec.cyclic_data()
        prop2 = prop2_classifier(spec.p, data)
        checks["dim_cyclic_p_vs_oracle"] = invariant_dimension_cyclic_p(spec.p, data) == a.fixed_dim
        checks["prop2_vs_oracle"] = (prop2 is Prop2Verdict.TRIVIAL_ACTION) == (a.kernel_order > 1)
        checks["unipotent"] = a.action.is_unipotent()
    else:
        checks["diagonal"] = M.is_diagonal()
    return Report(
        input=spec.to_dict(),
        g_X=a.hurwitz_genus,
        g_Y=prof.g_Y,
        deg_R=prof.deg_R,
        deg_floor=prof.deg_floor,
        invariant_dim_formula=prof.invariant_dimension,
        faithfulness=verdict.value,
        invariant_dim_oracle=a.fixed_dim,
        kernel_order=a.kernel_order,
        prop2=prop2.value if prop2 else None,
        checks=checks,
        details={
            "curve": str(spec),
            "genus_basis": a.basis.genus,
            "basis": a.basis.labels(),
            "matrix": M.to_codes(),
        },
    )


def sweep_specs(
    ps: Sequence[int], N_max: int, kummer_ns: Sequence[int], m_max: int, kummer_ps: Sequence[int] | None = None
) -> list[CoverSpec]:
    """Every admissible instance in the ranges, in a fixed order.

    Artin-Schreier: y^p - y = x^N for p in ps and 1 <= N <= N_max prime to p.
    Kummer: y^n = f with f the first squarefree monic polynomial of degree
    m, for 1 <= m <= m_max prime to n and each p prime to n.
    """
    specs = []
    for p in sorted(ps):
        for N in range(1, N_max + 1):
            if N % p:
                specs.append(CoverSpec.artin_schreier(p, [0] * N + [1]))
    for n in sorted(kummer_ns):
        for p in sorted(ps if kummer_ps is None else kummer_ps):
            if n % p == 0:
                continue
            F = GF(p, smallest_extension_for_roots(p, n))
            for m in range(1, m_max + 1):
                if math.gcd(n, m) == 1:
                    specs.append(CoverSpec.kummer(n, p, default_kummer_f(F, m)))
    return specs


def sweep(specs: Sequence[CoverSpec]) -> tuple[list[Report], dict[str, Any]]:
    reports = [cover_report(s) for s in specs]
    failures = [r.details["curve"] for r in reports if not r.passed]
    summary = {
        "instances": len(reports),
        "artin_schreier": sum(r.input["kind"] == "as" for r in reports),
        "kummer": sum(r.input["kind"] == "kummer" for r in reports),
        "failures": len(failures),
        "failing": failures,
    }
    return reports, summary


# -- presentation --------------------------------------------------------------


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _scalar_table(report: Report) -> str:
    d = report.to_dict()
    lines = []
    if "curve" in d:
        lines.append(f"curve                  {d['curve']}")
    for key in ("g_X", "g_Y", "deg_R", "deg_floor", "invariant_dim_formula", "invariant_dim_oracle", "kernel_order"):
        if key in d:
            lines.append(f"{key:<22} {d[key]}")
    for key, v in d["verdicts"].items():
        lines.append(f"{key:<22} {v}")
    if "basis" in d:
        lines.append(f"{'basis':<22} {', '.join(d['basis']) or '(empty)'}")
        lines.append(f"{'matrix':<22} {d['matrix']}")
    for key, ok in d["checks"].items():
        lines.append(f"check {key:<16} {'pass' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _sweep_table(reports: Sequence[Report], summary: dict[str, Any]) -> str:
    head = f"{'kind':<7}{'p':>3}{'q':>4}{'n':>3}{'deg f':>6}{'g_X':>5}{'dim formula':>12}{'dim oracle':>11}{'kernel':>7}  {'verdict':<19}ok"
    rows = [head, "-" * len(head)]
    for r in reports:
        inp = r.input
        rows.append(
            f"{inp['kind']:<7}{inp['p']:>3}{inp['p'] ** inp['m']:>4}{inp['n']:>3}{len(inp['f']) - 1:>6}"
            f"{r.g_X:>5}{r.invariant_dim_formula:>12}{r.invariant_dim_oracle:>11}{r.kernel_order:>7}  "
            f"{r.faithfulness:<19}{'yes' if r.passed else 'NO'}"
        )
    rows.append("")
    rows.append(f"{summary['instances']} instances, {summary['failures']} failures")
    return "\n".join(rows) + "\n"


def _load_json(arg: str) -> dict[str, Any]:
    text = arg if arg.lstrip().startswith("{") else Path(arg).read_text()
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    return data


def _int_list(s: str) -> list[int]:
    return [int(x) for x in s.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equidiff", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON report instead of a table")
    common.add_argument("--out", type=Path, help="also write the JSON report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ram = sub.add_parser("ramdata", parents=[common], help="genus, invariant dimension and verdict from branch data")
    p_ram.add_argument("profile", help='inline JSON or path: {"n":..,"p":..,"gY":..,"branch":[{"e":..,"d":..}]}')

    p_cov = sub.add_parser("cover", parents=[common], help="explicit analysis of one cover")
    p_cov.add_argument("spec", help='inline JSON or path: {"kind":"as"|"kummer","p":..,"f":[c0,c1,..],"n":..}')

    p_sw = sub.add_parser("sweep", parents=[common], help="formula-vs-oracle verification over ranges of covers")
    p_sw.add_argument("--p", type=_int_list, default=[2, 3, 5, 7], help="characteristics (default 2,3,5,7)")
    p_sw.add_argument("--N-max", dest="N_max", type=int, default=12, help="largest Artin-Schreier jump (default 12)")
    p_sw.add_argument("--kummer-n", type=_int_list, default=[2, 3], help="Kummer degrees (default 2,3)")
    p_sw.add_argument("--kummer-p", type=_int_list, default=None, help="characteristics for Kummer covers (default: --p)")
    p_sw.add_argument("--m-max", type=int, default=7, help="largest deg f for Kummer covers (default 7)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "ramdata":
            report = ramdata_report(RamificationProfile.from_dict(_load_json(args.profile)))
            payload, table, ok = report.to_dict(), _scalar_table(report), report.passed
        elif args.command == "cover":
            report = cover_report(CoverSpec.from_dict(_load_json(args.spec)))
            payload, table, ok = report.to_dict(), _scalar_table(report), report.passed
        else:
            specs = sweep_specs(args.p, args.N_max, args.kummer_n, args.m_max, args.kummer_p)
            reports, summary = sweep(specs)
            payload = {"reports": [r.to_dict() for r in reports], "summary": summary}
            table, ok = _sweep_table(reports, summary), summary["failures"] == 0
    except (InconsistentProfileError, DegenerateCoverError, ValueError, OSError) as exc:
        print(f"equidiff: error: {exc}", file=sys.stderr)
        return 2
    text = dumps(payload)
    if args.out:
        args.out.write_text(text)
    sys.stdout.write(text if args.json else table)
    if not ok:
        print("equidiff: cross-check failed", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
