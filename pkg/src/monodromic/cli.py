"""Command-line surface: module files, reports, and the corpus runner.

Module files are JSON with every rational written as a string "a/b"; a
parsed file is validated structurally before any computation runs, and
serialization is canonical so that parse-then-serialize round-trips are
byte-identical.  Reports list one outcome per check, with exit status 0
only when no check failed; `--json --no-timings` output is byte-stable
across runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import acceptance
from .errors import (
    MonodromicError,
    ParseError,
    UsageError,
    ValidationError,
)
from .exactla import Matrix, Subspace, rat, rat_str
from .filtration import (
    DeligneSystem,
    Flag,
    NONEXISTENT,
    deligne_splitting,
    monodromy_filtration,
    relative_monodromy_filtration,
    spectral_sequence_page,
    weight_conditions_hold,
)
from .fourier import fl_transform, inverse_fl, inversion_check, oracle_fl_hodge
from .graded import MonodromicModule, build_example, validate_module
from .koszul import build_koszul, complex_homology, restrict, support_criteria
from .complexes import FilteredComplex

SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# serialization


def _matrix_to_json(m: Matrix) -> list:
    return [[rat_str(x) for x in row] for row in m.entries]


def _matrix_from_json(data, location: str) -> Matrix:
    if not isinstance(data, list) or any(not isinstance(r, list) for r in data):
        raise ParseError("matrix must be a list of rows", location)
    try:
        rows = [[rat(x) for x in row] for row in data]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational entry: {exc}", location)
    ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise ParseError("ragged matrix rows", location)
    return Matrix(len(rows), ncols, rows)


def _flag_to_json(flag: Flag) -> dict:
    return {
        "direction": flag.direction,
        "ambient_dim": flag.ambient_dim,
        "steps": [
            {"index": rat_str(k), "basis": [[rat_str(x) for x in v] for v in s.basis_vectors()]}
            for k, s in flag.steps
        ],
    }


def _flag_from_json(data, ambient: int, location: str) -> Flag:
    if not isinstance(data, dict):
        raise ParseError("flag must be an object", location)
    direction = data.get("direction", "inc")
    steps = []
    for idx, step in enumerate(data.get("steps", [])):
        loc = f"{location}/steps/{idx}"
        if "index" not in step:
            raise ParseError("step needs an index", loc)
        vectors = [
            [rat(x) for x in v] for v in step.get("basis", [])
        ]
        steps.append((rat(step["index"]), Subspace(ambient, vectors)))
    try:
        return Flag(ambient, direction, steps)
    except ValueError as exc:
        raise ParseError(str(exc), location)


def serialize_module(m: MonodromicModule) -> dict:
    data = {
        "schema": SCHEMA_VERSION,
        "rank": m.rank,
        "denominator": m.denominator,
        "window": [rat_str(m.window[0]), rat_str(m.window[1])],
        "pieces": [
            {"chi": rat_str(chi), "dim": m.dims[chi]} for chi in m.grid
        ],
        "zmaps": [
            {"i": i, "chi": rat_str(chi), "entries": _matrix_to_json(mat)}
            for (i, chi), mat in sorted(m.zmaps.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if mat.rows and mat.cols
        ],
        "dmaps": [
            {"i": i, "chi": rat_str(chi), "entries": _matrix_to_json(mat)}
            for (i, chi), mat in sorted(m.dmaps.items(), key=lambda kv: (kv[0][1], kv[0][0]))
            if mat.rows and mat.cols
        ],
    }
    if m.hodge is not None:
        data["hodge"] = [
            {"chi": rat_str(chi), "flag": _flag_to_json(m.hodge[chi])}
            for chi in m.grid
            if chi in m.hodge and m.dims[chi]
        ]
    if m.weight is not None:
        data["weight"] = [
            {"chi": rat_str(chi), "flag": _flag_to_json(m.weight[chi])}
            for chi in m.grid
            if chi in m.weight and m.dims[chi]
        ]
    support = {}
    if m.support_min is not None:
        support["min"] = rat_str(m.support_min)
    if m.support_max is not None:
        support["max"] = rat_str(m.support_max)
    if m.coset is not None:
        support["coset"] = rat_str(m.coset)
    if support:
        data["support"] = support
    return data


def module_from_json(data, location: str = "$") -> MonodromicModule:
    if not isinstance(data, dict):
        raise ParseError("module file must be a JSON object", location)
    for field in ("rank", "denominator", "window", "pieces"):
        if field not in data:
            raise ParseError(f"missing field {field!r}", f"{location}/{field}")
    try:
        rank = int(data["rank"])
        denominator = int(data["denominator"])
        window = (rat(data["window"][0]), rat(data["window"][1]))
    except (ValueError, TypeError, IndexError) as exc:
        raise ParseError(f"bad header: {exc}", location)
    dims = {}
    for idx, piece in enumerate(data["pieces"]):
        loc = f"{location}/pieces/{idx}"
        if "chi" not in piece or "dim" not in piece:
            raise ParseError("piece needs chi and dim", loc)
        dims[rat(piece["chi"])] = int(piece["dim"])
    zmaps = {}
    dmaps = {}
    for kind, table in (("zmaps", zmaps), ("dmaps", dmaps)):
        for idx, entry in enumerate(data.get(kind, [])):
            loc = f"{location}/{kind}/{idx}"
            if "i" not in entry or "chi" not in entry:
                raise ParseError("map needs i and chi", loc)
            table[(int(entry["i"]), rat(entry["chi"]))] = _matrix_from_json(
                entry.get("entries", []), loc
            )
    hodge = None
    if "hodge" in data:
        hodge = {}
        for idx, entry in enumerate(data["hodge"]):
            loc = f"{location}/hodge/{idx}"
            chi = rat(entry["chi"])
            hodge[chi] = _flag_from_json(entry.get("flag"), dims.get(chi, 0), loc)
    weight = None
    if "weight" in data:
        weight = {}
        for idx, entry in enumerate(data["weight"]):
            loc = f"{location}/weight/{idx}"
            chi = rat(entry["chi"])
            weight[chi] = _flag_from_json(entry.get("flag"), dims.get(chi, 0), loc)
    support = data.get("support", {})
    try:
        module = MonodromicModule(
            rank,
            denominator,
            window,
            dims,
            zmaps,
            dmaps,
            hodge,
            weight,
            support.get("min"),
            support.get("max"),
            support.get("coset"),
        )
    except (ValueError, MonodromicError) as exc:
        raise ParseError(str(exc), location)
    issues = validate_module(module)
    if issues:
        raise ValidationError(
            "module violates invariants: " + "; ".join(str(e) for e in issues[:5]),
            report=issues,
        )
    return module


def parse_module_file(path: str) -> MonodromicModule:
    try:
        with open(path) as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ParseError(str(exc), path)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", path)
    return module_from_json(data, location=path)


def _load_json(path: str):
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as exc:
        raise ParseError(str(exc), path)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", path)


def parse_complex_file(path: str) -> FilteredComplex:
    data = _load_json(path)
    if "terms" not in data:
        raise ParseError("complex file needs a terms table", path)
    terms = {int(k): int(v) for k, v in data["terms"].items()}
    diffs = {
        int(k): _matrix_from_json(v, f"{path}/differentials/{k}")
        for k, v in data.get("differentials", {}).items()
    }
    flags = {}
    for name, table in data.get("flags", {}).items():
        flags[name] = {
            int(k): _flag_from_json(v, terms[int(k)], f"{path}/flags/{name}/{k}")
            for k, v in table.items()
        }
    try:
        return FilteredComplex(terms, diffs, flags)
    except ValueError as exc:
        raise ParseError(str(exc), path)


# ---------------------------------------------------------------------------
# reports


class Report:
    def __init__(self, command: list[str]):
        self.command = list(command)
        self.checks: list[dict] = []
        self.tables: dict = {}

    def add(self, name: str, status: str, detail: str = "", elapsed: float | None = None):
        entry = {"name": name, "status": status, "detail": detail}
        if elapsed is not None:
            entry["elapsed_ms"] = round(1000 * elapsed, 3)
        self.checks.append(entry)

    def add_table(self, name: str, table):
        self.tables[name] = table

    @property
    def exit_status(self) -> int:
        return 1 if any(c["status"] == "fail" for c in self.checks) else 0


def emit_report(report: Report, fmt: str = "text", timings: bool = True) -> bytes:
    if fmt == "json":
        payload = {
            "command": report.command,
            "checks": [
                {k: v for k, v in check.items() if timings or k != "elapsed_ms"}
                for check in report.checks
            ],
            "tables": report.tables,
            "exit_status": report.exit_status,
        }
        return (json.dumps(payload, indent=2, sort_keys=False) + "\n").encode()
    lines = []
    for check in report.checks:
        mark = {"pass": "ok  ", "fail": "FAIL", "skip": "skip"}[check["status"]]
        suffix = f"  ({check['elapsed_ms']} ms)" if timings and "elapsed_ms" in check else ""
        detail = f"  {check['detail']}" if check["detail"] else ""
        lines.append(f"[{mark}] {check['name']}{detail}{suffix}")
    for name, table in report.tables.items():
        lines.append(f"{name}:")
        lines.append("  " + json.dumps(table, sort_keys=False))
    lines.append(f"exit status {report.exit_status}")
    return ("\n".join(lines) + "\n").encode()


def _json_table(table: dict) -> dict:
    out = {}
    for key in sorted(table, key=str):
        value = table[key]
        out[str(key)] = value
    return out


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args, report: Report):
    module = parse_module_file(args.file)
    report.add("validate", "pass", f"total dimension {module.total_dim()}")


def _cmd_example(args, report: Report):
    window = (rat(args.window[0]), rat(args.window[1]))
    kwargs = {}
    if args.rank is not None:
        kwargs["rank"] = args.rank
    if args.lam is not None:
        kwargs["lam"] = rat(args.lam)
    if args.size is not None:
        kwargs["size"] = args.size
    module = build_example(args.name, window, **kwargs)
    payload = json.dumps(serialize_module(module), indent=2, sort_keys=False) + "\n"
    with open(args.output, "w") as handle:
        handle.write(payload)
    report.add("example", "pass", f"wrote {args.output}")


def _cmd_koszul(args, report: Report):
    module = parse_module_file(args.file)
    comp = build_koszul(module, args.variant, rat(args.chi), filtered=args.filtered)
    result = complex_homology(comp, with_flag=args.filtered)
    report.add_table("homology", _json_table(result["dims"]))
    if args.filtered:
        report.add_table(
            "flag_dims", {str(k): _json_table(v) for k, v in result["flag_dims"].items()}
        )
        report.add(
            "strictness",
            "pass" if result["strict"] else "fail",
            "flags on homology are authoritative" if result["strict"] else "",
        )
    exact = all(v == 0 for v in result["dims"].values())
    report.add("koszul", "pass", f"exact: {exact}")


def _cmd_restrict(args, report: Report):
    module = parse_module_file(args.file)
    kind = "star" if args.star else "shriek"
    result = restrict(module, kind)
    report.add_table("homology", _json_table(result["dims"]))
    if "flag_dims" in result:
        report.add_table(
            "flag_dims", {str(k): _json_table(v) for k, v in result["flag_dims"].items()}
        )
        report.add(
            "flags",
            "pass" if result.get("flag_authoritative") else "skip",
            "" if result.get("flag_authoritative") else "strictness failed; flags not reported",
        )
    report.add("restrict", "pass", kind)


def _cmd_support(args, report: Report):
    module = parse_module_file(args.file)
    result = support_criteria(module)
    quotient = result["quotient_supported"]
    report.add_table(
        "support",
        {
            "no_sub_supported": result["no_sub_supported"],
            "splits": result["splits"],
            "quotient_dims": _json_table(
                {rat_str(k): v for k, v in quotient.dims.items() if v}
            ),
        },
    )
    report.add("support", "pass")


def _cmd_monodromy(args, report: Report):
    data = _load_json(args.file)
    if "matrix" in data:
        n = _matrix_from_json(data["matrix"], f"{args.file}/matrix")
    else:
        raise ParseError("file needs a matrix field", args.file)
    flag = monodromy_filtration(n, args.center)
    ok = weight_conditions_hold(n, flag, args.center)
    report.add_table(
        "weight_filtration",
        {rat_str(k): s.dim for k, s in flag.steps},
    )
    report.add("conditions", "pass" if ok else "fail")


def _cmd_relmono(args, report: Report):
    data = _load_json(args.file)
    n = _matrix_from_json(data.get("matrix"), f"{args.file}/matrix")
    flag = _flag_from_json(data.get("flag"), n.rows, f"{args.file}/flag")
    result = relative_monodromy_filtration(n, flag)
    if result is NONEXISTENT:
        report.add("relative-monodromy", "fail", "filtration does not exist")
    else:
        report.add_table(
            "relative_filtration", {rat_str(k): s.dim for k, s in result.steps}
        )
        report.add("relative-monodromy", "pass")


def _cmd_deligne(args, report: Report):
    data = _load_json(args.file)
    n = _matrix_from_json(data.get("N"), f"{args.file}/N")
    y = _matrix_from_json(data.get("Y"), f"{args.file}/Y")
    lflag = _flag_from_json(data.get("L"), n.rows, f"{args.file}/L")
    seed = _matrix_from_json(data.get("seed"), f"{args.file}/seed")
    system = DeligneSystem(lflag, n, y)
    yprime = deligne_splitting(system, seed)
    completed = DeligneSystem(lflag, n, y, yprime)
    bad = completed.violations()
    report.add_table("splitting", _matrix_to_json(yprime))
    report.add(
        "deligne-system", "pass" if not bad else "fail", "; ".join(bad)
    )


def _cmd_specseq(args, report: Report):
    comp = parse_complex_file(args.file)
    flag_name = args.flag
    table = spectral_sequence_page(comp, args.page, flag_name)
    report.add_table(f"page_{args.page}", _json_table(table))
    report.add("specseq", "pass", f"{len(table)} nonzero entries")


def _cmd_fourier(args, report: Report):
    module = parse_module_file(args.file)
    if args.check_inversion:
        good = inversion_check(module)
        report.add("inversion", "pass" if good else "fail")
        return
    result = inverse_fl(module) if args.inverse else fl_transform(module)
    issues = validate_module(result)
    if args.output:
        payload = json.dumps(serialize_module(result), indent=2, sort_keys=False) + "\n"
        with open(args.output, "w") as handle:
            handle.write(payload)
        report.add("output", "pass", f"wrote {args.output}")
    report.add(
        "fourier",
        "pass" if not issues else "fail",
        "" if not issues else "; ".join(str(e) for e in issues[:3]),
    )


def _cmd_oracle(args, report: Report):
    module = parse_module_file(args.file)
    table = oracle_fl_hodge(module, args.amax, args.jmax)
    closed = fl_transform(module)
    mismatches = []
    dim_table = {}
    for (p, cp), space in sorted(table.items(), key=lambda kv: (str(kv[0][1]), kv[0][0])):
        if args.lam is not None and (rat(cp) - rat(args.lam)).denominator != 1:
            continue
        dim_table[f"p={p},chi'={rat_str(rat(cp))}"] = space.dim
        if closed.dims.get(cp):
            if space != closed.hodge_flag(cp).value_at(p):
                mismatches.append((p, rat_str(rat(cp))))
    report.add_table("oracle_dims", dim_table)
    report.add(
        "oracle-vs-closed-form",
        "pass" if not mismatches else "fail",
        f"{len(dim_table)} safe entries",
    )


def _cmd_corpus(args, report: Report):
    for name, ok, detail, elapsed in acceptance.run_all():
        report.add(name, "pass" if ok else "fail", "", elapsed)
        if not ok:
            report.add_table(f"{name}_detail", json.loads(json.dumps(detail, default=str)))


# every public library operation is reachable from at least one subcommand
OPERATION_COVERAGE = {
    "exactla.row_reduce": "corpus",
    "exactla.kernel_basis": "corpus",
    "exactla.Subspace.sum": "corpus",
    "exactla.Subspace.intersect": "corpus",
    "exactla.Subspace.quotient_map": "corpus",
    "graded.validate_module": "validate",
    "graded.build_example": "example",
    "graded.external_tensor": "corpus",
    "graded.zero_section_vfiltration": "corpus",
    "graded.apply_antipodal": "fourier --check-inversion",
    "graded.tate_twist": "fourier --inverse",
    "graded.morphism_kernel_cokernel": "corpus",
    "graded.hodge_decomposition_check": "corpus",
    "filtration.monodromy_filtration": "monodromy",
    "filtration.relative_monodromy_filtration": "relmono",
    "filtration.deligne_splitting": "deligne",
    "filtration.sl2_primitive_decomposition": "deligne",
    "filtration.strictness_check": "koszul --filtered F",
    "filtration.bistrictness_check": "corpus",
    "filtration.spectral_sequence_page": "specseq",
    "koszul.build_koszul": "koszul",
    "koszul.koszul_homotopy_check": "corpus",
    "koszul.complex_homology": "koszul",
    "koszul.restrict": "restrict",
    "koszul.support_criteria": "support",
    "koszul.hodge_formula_check": "corpus",
    "koszul.specialization_hodge": "corpus",
    "fourier.fl_transform": "fourier",
    "fourier.inverse_fl": "fourier --inverse",
    "fourier.inversion_check": "fourier --check-inversion",
    "fourier.build_graph_module": "oracle",
    "fourier.phi_map": "oracle",
    "fourier.vfiltration_candidate": "oracle",
    "fourier.vfiltration_axiom_check": "corpus",
    "fourier.kernel_lemma_check": "corpus",
    "fourier.oracle_fl_hodge": "oracle",
    "cli.parse_module_file": "validate",
    "cli.run_command": "corpus",
    "cli.emit_report": "corpus",
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monodromic",
        description="Exact computations with graded Weyl-algebra module windows.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--no-timings", action="store_true", help="omit wall times for byte-stable output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate a module file")
    p.add_argument("file")

    p = sub.add_parser("example", help="write an example module file")
    p.add_argument("name", choices=["STRUCTURE", "DELTA", "KUMMER", "JORDAN"])
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--lam", default=None)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--window", nargs=2, required=True, metavar=("LO", "HI"))
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("koszul", help="build a restriction complex and its homology")
    p.add_argument("file")
    p.add_argument("--variant", required=True, choices=["A", "B", "C"])
    p.add_argument("--chi", required=True)
    p.add_argument("--filtered", choices=["F", "W"], default=None)

    p = sub.add_parser("restrict", help="restriction to the origin")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--star", action="store_true")
    group.add_argument("--shriek", action="store_true")

    p = sub.add_parser("support", help="origin-support criteria")
    p.add_argument("file")

    p = sub.add_parser("monodromy", help="weight filtration of a nilpotent matrix")
    p.add_argument("file")
    p.add_argument("--center", type=int, default=0)

    p = sub.add_parser("relmono", help="relative monodromy filtration")
    p.add_argument("file")

    p = sub.add_parser("deligne", help="splitting operator of a grading system")
    p.add_argument("file")

    p = sub.add_parser("specseq", help="spectral sequence page of a filtered complex")
    p.add_argument("file")
    p.add_argument("--page", type=int, required=True)
    p.add_argument("--flag", default="W")

    p = sub.add_parser("fourier", help="the transform, its inverse, or the round trip")
    p.add_argument("file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--check-inversion", action="store_true")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("oracle", help="graph-model filtration tables vs the closed form")
    p.add_argument("file")
    p.add_argument("--amax", type=int, required=True)
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default=None)

    sub.add_parser("corpus", help="run the embedded acceptance suite")
    return parser


_HANDLERS = {
    "validate": _cmd_validate,
    "example": _cmd_example,
    "koszul": _cmd_koszul,
    "restrict": _cmd_restrict,
    "support": _cmd_support,
    "monodromy": _cmd_monodromy,
    "relmono": _cmd_relmono,
    "deligne": _cmd_deligne,
    "specseq": _cmd_specseq,
    "fourier": _cmd_fourier,
    "oracle": _cmd_oracle,
    "corpus": _cmd_corpus,
}


def run_command(argv: list[str]) -> Report:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        raise UsageError(f"bad usage (argparse exit {exc.code})")
    report = Report(argv)
    start = time.monotonic()
    _HANDLERS[args.command](args, report)
    if not report.checks:
        report.add(args.command, "pass")
    # attach a total elapsed entry only if individual checks carry none
    if all("elapsed_ms" not in c for c in report.checks):
        report.checks[-1]["elapsed_ms"] = round(1000 * (time.monotonic() - start), 3)
    report._fmt = "json" if args.json else "text"
    report._timings = not args.no_timings
    return report


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        report = run_command(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MonodromicError as exc:
        print(f"error: {exc.__class__.__name__}: {exc}", file=sys.stderr)
        return 2
    fmt = getattr(report, "_fmt", "text")
    timings = getattr(report, "_timings", True)
    sys.stdout.buffer.write(emit_report(report, fmt, timings))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
