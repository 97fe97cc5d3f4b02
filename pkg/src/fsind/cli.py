"""Command-line front end: structure / characters / indicators / verify.

Exit codes: 0 pass, 1 verification failure, 2 usage or config error.
Flags may also be set through FSIND_-prefixed environment variables.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from dataclasses import dataclass, replace

from . import double_indicators as dbl
from . import group_indicators as gi
from .characters import irreducible_characters_of_G
from .group import (
    GroupError,
    element,
    enumerate_group,
    group_exponent,
    identity,
    make_group,
    multiply,
    power,
)
from .structure import (
    VerificationError,
    center,
    centralizer,
    conjugacy_classes,
    is_completely_real,
    is_generated_by_involutions,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class RunConfig:
    l: int
    k: int
    max_m: int | None = None
    format: str = "text"
    tolerance: float = 1e-9
    seed: int = 0
    out: str | None = None
    fault_inject_n2: bool = False

    def build_params(self):
        params = make_group(self.l, self.k)
        if self.fault_inject_n2:
            params = replace(params, n2=params.n2 + 2)
        return params

    def resolved_max_m(self, params) -> int:
        if self.max_m is not None:
            return self.max_m
        return 2 * group_exponent(params)


def _element_str(e) -> str:
    return repr(e)


def _params_record(params) -> dict:
    return {
        "l": params.l,
        "k": params.k,
        "n1": params.n1,
        "n2": params.n2,
        "order": params.order,
    }


def cmd_structure(config: RunConfig) -> dict:
    params = config.build_params()
    z = center(params)
    classes = []
    for cls in conjugacy_classes(params):
        c = centralizer(params, cls.representative)
        classes.append(
            {
                "representative": _element_str(cls.representative),
                "size": cls.size,
                "type": cls.type_tag,
                "centralizer_order": c.order,
                "centralizer_generators": [_element_str(g) for g in c.generators],
            }
        )
    return {
        "params": _params_record(params),
        "center": {
            "order": z.order,
            "elements": [_element_str(g) for g in z.sorted_elements()],
        },
        "classes": classes,
        "characters": [],
        "indicators": [],
    }


def cmd_characters(config: RunConfig) -> dict:
    params = config.build_params()
    table = irreducible_characters_of_G(params)
    reps = [c.representative for c in conjugacy_classes(params)]
    characters = []
    for chi in table.irreducibles:
        characters.append(
            {
                "label": {k: str(v) for k, v in chi.label.items()},
                "degree": round(chi.degree.real),
                "values_on_class_reps": [
                    [round(chi(r).real, 10), round(chi(r).imag, 10)] for r in reps
                ],
            }
        )
    return {
        "params": _params_record(params),
        "classes": [_element_str(r) for r in reps],
        "characters": characters,
        "indicators": [],
    }


def _group_indicator_rows(params, max_m) -> list:
    rows = []
    table = irreducible_characters_of_G(params)
    for chi in table.irreducibles:
        for m in range(1, max_m + 1):
            brute = gi.nu_group_bruteforce(chi, m)
            closed = gi.nu_group_closed(params, chi.label, m)
            rows.append(
                {
                    "target": "group",
                    "label": {k: str(v) for k, v in chi.label.items()},
                    "m": m,
                    "value": brute.rounded,
                    "paths": {"bruteforce": brute.rounded, "closed_form": closed},
                    "agree": brute.rounded == closed,
                }
            )
    return rows


def _double_indicator_rows(params, max_m) -> list:
    rows = []
    for label in dbl.all_labels(params):
        for m in range(1, max_m + 1):
            try:
                val = dbl.nu_double(label, m)
                paths = {k: round(v.real) for k, v in val.paths.items()}
                rows.append(
                    {
                        "target": "double",
                        "label": {
                            "class_rep": _element_str(label.cls.representative),
                            "eta_id": label.eta_id,
                        },
                        "m": m,
                        "value": val.rounded,
                        "paths": paths,
                        "agree": True,
                    }
                )
            except VerificationError as exc:
                rows.append(
                    {
                        "target": "double",
                        "label": {
                            "class_rep": _element_str(label.cls.representative),
                            "eta_id": label.eta_id,
                        },
                        "m": m,
                        "value": None,
                        "paths": {"error": str(exc)},
                        "agree": False,
                    }
                )
    return rows


def cmd_indicators(config: RunConfig, target: str) -> dict:
    params = config.build_params()
    max_m = config.resolved_max_m(params)
    if target == "group":
        rows = _group_indicator_rows(params, max_m)
    elif target == "double":
        rows = _double_indicator_rows(params, max_m)
    else:
        raise GroupError(f"unknown indicator target {target!r}")
    return {
        "params": _params_record(params),
        "classes": [],
        "characters": [],
        "indicators": rows,
    }


def _verify_checks(config: RunConfig, params, max_m):
    """Yields (check_name, callable) pairs; callables return a count."""
    rng = random.Random(config.seed)

    def check_group_arithmetic():
        elems = enumerate_group(params)
        one = identity(params)
        for _ in range(1000):
            e1, e2, e3 = (rng.choice(elems) for _ in range(3))
            if multiply(multiply(e1, e2), e3) != multiply(e1, multiply(e2, e3)):
                raise VerificationError(f"associativity fails at ({e1},{e2},{e3})")
        a = element(params, 1, 0, 0)
        u = element(params, 0, 1, 0)
        v = element(params, 0, 0, 1)
        for g in elems:
            rebuilt = multiply(multiply(power(a, g.s), power(u, g.i)), power(v, g.x))
            if rebuilt != g:
                raise VerificationError(f"normal form broken at {g}")
            if g.x == 1:
                sq = multiply(g, g)
                want = (
                    one
                    if g.i % 2 == 1 or g.s % 2 == 0
                    else element(params, 2 ** (params.l - 1), 0, 0)
                )
                if sq != want:
                    raise VerificationError(f"square identity broken at {g}")
        return len(elems)

    def check_structure():
        classes = conjugacy_classes(params)  # self-checking census
        center(params)
        for cls in classes:
            centralizer(params, cls.representative)
        if not is_completely_real(params):
            raise VerificationError("group is not completely real")
        if not is_generated_by_involutions(params):
            raise VerificationError("group is not generated by involutions")
        return len(classes)

    def check_characters():
        table = irreducible_characters_of_G(params)  # self-checking
        return len(table.irreducibles)

    def check_group_indicators():
        rows = _group_indicator_rows(params, max_m)
        for row in rows:
            if not row["agree"]:
                raise VerificationError(f"group indicator paths disagree: {row}")
            if row["m"] == 2 and row["value"] != 1:
                raise VerificationError(f"nu_2 != 1 for {row['label']}")
            if row["value"] < 0:
                raise VerificationError(f"negative group indicator: {row}")
        return len(rows)

    def check_gm_oracle():
        fired = set()
        count = 0
        central = center(params).elements
        for cls in conjugacy_classes(params):
            if cls.representative in central:
                continue
            for m in range(1, max_m + 1):
                dbl.gm_closed(cls.representative, m, fired=fired)
                count += 1
        missing = set(dbl.GM_CASES) - fired
        if missing:
            raise VerificationError(f"G_m case branches never fired: {sorted(missing)}")
        return count

    def check_double_indicators():
        rows = _double_indicator_rows(params, max_m)
        neg = 0
        for row in rows:
            if not row["agree"]:
                raise VerificationError(f"double indicator paths disagree: {row}")
            if row["m"] == 2:
                if row["value"] not in (-1, 1):
                    raise VerificationError(f"nu_2 not in {{-1,1}}: {row}")
                if row["value"] == -1:
                    neg += 1
        if neg == 0:
            raise VerificationError("no negative nu_2 in the double")
        return len(rows)

    return [
        ("group_arithmetic", check_group_arithmetic),
        ("structure_census", check_structure),
        ("character_tables", check_characters),
        ("group_indicators", check_group_indicators),
        ("gm_oracle_equivalence", check_gm_oracle),
        ("double_indicators_three_paths", check_double_indicators),
    ]


def cmd_verify(config: RunConfig) -> tuple[dict, int]:
    try:
        params = config.build_params()
    except GroupError as exc:
        return (
            {"params": None, "checks": [{"name": "make_group", "status": "fail", "detail": str(exc)}]},
            EXIT_FAIL,
        )
    max_m = config.resolved_max_m(params)
    checks = []
    all_ok = True
    for name, fn in _verify_checks(config, params, max_m):
        start = time.perf_counter()
        try:
            count = fn()
            status, detail = "pass", ""
        except (VerificationError, GroupError) as exc:
            status, detail, count = "fail", str(exc), 0
            all_ok = False
        elapsed = time.perf_counter() - start
        checks.append(
            {
                "name": name,
                "status": status,
                "count": count,
                "detail": detail,
                "_elapsed_s": elapsed,  # stripped from serialized output
            }
        )
    by_name = {c["name"]: c["status"] == "pass" for c in checks}
    claims = {
        "i_completely_real": by_name.get("structure_census", False),
        "ii_generated_by_involutions": by_name.get("structure_census", False),
        "iii_m_group": "out of scope - M-group check not implemented",
        "iv_totally_orthogonal": by_name.get("group_indicators", False),
        "v_group_indicators_nonnegative": by_name.get("group_indicators", False),
        "vi_double_modules_self_dual": by_name.get("double_indicators_three_paths", False),
        "vii_negative_nu2_exists": by_name.get("double_indicators_three_paths", False),
    }
    report = {
        "params": _params_record(params),
        "max_m": max_m,
        "checks": checks,
        "claims": claims,
        "overall": "pass" if all_ok else "fail",
    }
    return report, EXIT_OK if all_ok else EXIT_FAIL


def _strip_private(obj):
    if isinstance(obj, dict):
        return {k: _strip_private(v) for k, v in obj.items() if not k.startswith("_")}
    if isinstance(obj, list):
        return [_strip_private(v) for v in obj]
    return obj


def _to_csv(report: dict) -> str:
    buf = io.StringIO()
    rows = []
    for key in ("indicators", "characters", "classes", "checks"):
        cand = report.get(key)
        if cand and isinstance(cand[0], dict):
            rows = cand
            break
    if rows:
        flat_rows = []
        for row in rows:
            flat = {}
            for key, val in _strip_private(row).items():
                if isinstance(val, dict):
                    for sub, subval in val.items():
                        flat[f"{key}.{sub}"] = subval
                elif isinstance(val, list):
                    flat[key] = ";".join(str(v) for v in val)
                else:
                    flat[key] = val
            flat_rows.append(flat)
        fieldnames = sorted({k for row in flat_rows for k in row})
        writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(flat_rows)
    return buf.getvalue()


def _to_text(report: dict) -> str:
    lines = []
    params = report.get("params")
    if params:
        lines.append(
            f"G = Z_(2^{params['l']}) x| D_{params['k']}  order {params['order']}"
        )
    if report.get("center"):
        lines.append(
            f"center: order {report['center']['order']}: "
            + " ".join(report["center"]["elements"])
        )
    for cls in report.get("classes") or []:
        if isinstance(cls, dict):
            lines.append(
                f"class {cls['representative']:<12} size {cls['size']:<3} "
                f"{cls['type']:<10} |C|={cls['centralizer_order']}"
            )
    for chi in report.get("characters") or []:
        lines.append(f"irr {chi['label']} degree {chi['degree']}")
    for row in report.get("indicators") or []:
        lines.append(
            f"{row['target']} {row['label']} m={row['m']} nu={row['value']} "
            f"agree={row['agree']}"
        )
    for chk in report.get("checks") or []:
        elapsed = chk.get("_elapsed_s", 0.0)
        lines.append(
            f"[{chk['status'].upper():4}] {chk['name']} (n={chk['count']}, {elapsed:.2f}s)"
            + (f" {chk['detail']}" if chk["detail"] else "")
        )
    for claim, verdict in (report.get("claims") or {}).items():
        lines.append(f"claim {claim}: {verdict}")
    if "overall" in report:
        lines.append(f"overall: {report['overall']}")
    return "\n".join(lines) + "\n"


def serialize(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_strip_private(report), indent=2) + "\n"
    if fmt == "csv":
        return _to_csv(report)
    if fmt == "text":
        return _to_text(report)
    raise GroupError(f"unknown format {fmt!r}")


def _env(name, cast, default):
    raw = os.environ.get(f"FSIND_{name}")
    if raw is None:
        return default
    return cast(raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fsind",
        description="Structure, characters and Frobenius-Schur indicators "
        "for Z_(2^l) x| D_k and its Drinfel'd double.",
    )
    parser.add_argument("--l", type=int, default=_env("L", int, None), required="FSIND_L" not in os.environ)
    parser.add_argument("--k", type=int, default=_env("K", int, None), required="FSIND_K" not in os.environ)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--max-m", type=int, default=_env("MAX_M", int, None))
        p.add_argument(
            "--format",
            choices=("json", "csv", "text"),
            default=_env("FORMAT", str, "text"),
        )
        p.add_argument("--tolerance", type=float, default=_env("TOLERANCE", float, 1e-9))
        p.add_argument("--seed", type=int, default=_env("SEED", int, 0))
        p.add_argument("--out", default=_env("OUT", str, None))

    common(sub.add_parser("structure"))
    common(sub.add_parser("characters"))
    p_ind = sub.add_parser("indicators")
    common(p_ind)
    p_ind.add_argument("--target", choices=("group", "double"), default="group")
    p_ver = sub.add_parser("verify")
    common(p_ver)
    p_ver.add_argument(
        "--fault-inject-n2",
        action="store_true",
        help="negative control: tamper n2 and expect verification to fail",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        l=args.l,
        k=args.k,
        max_m=args.max_m,
        format=args.format,
        tolerance=args.tolerance,
        seed=args.seed,
        out=args.out,
        fault_inject_n2=getattr(args, "fault_inject_n2", False),
    )
    code = EXIT_OK
    try:
        if args.command == "structure":
            report = cmd_structure(config)
        elif args.command == "characters":
            report = cmd_characters(config)
        elif args.command == "indicators":
            report = cmd_indicators(config, args.target)
            if any(not row["agree"] for row in report["indicators"]):
                code = EXIT_FAIL
        elif args.command == "verify":
            report, code = cmd_verify(config)
        else:  # pragma: no cover
            return EXIT_USAGE
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = serialize(report, config.format)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
