import json
import subprocess
import sys
from fractions import Fraction

import pytest

from monodromic.cli import (
    OPERATION_COVERAGE,
    Report,
    emit_report,
    module_from_json,
    parse_module_file,
    run_command,
    serialize_module,
)
from monodromic.errors import ParseError, UsageError, ValidationError
from monodromic.graded import build_example

F = Fraction


def _run(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "monodromic.cli", *args],
        capture_output=True,
        cwd=cwd,
    )


def test_round_trip_is_byte_identical(tmp_path):
    module = build_example("DELTA", (-4, 2))
    payload = json.dumps(serialize_module(module), indent=2) + "\n"
    path = tmp_path / "d.json"
    path.write_text(payload)
    parsed = parse_module_file(str(path))
    again = json.dumps(serialize_module(parsed), indent=2) + "\n"
    assert again == payload


def test_non_reduced_rationals_canonicalized(tmp_path):
    module = build_example("STRUCTURE", (0, 3))
    data = serialize_module(module)
    data["window"] = ["0/2", "6/2"]
    parsed = module_from_json(data)
    assert parsed.window == (F(0), F(3))
    assert serialize_module(parsed)["window"] == ["0", "3"]


def test_validation_error_names_location():
    module = build_example("DELTA", (-3, 1))
    data = serialize_module(module)
    for entry in data["dmaps"]:
        if entry["chi"] == "-1":
            entry["entries"] = [["9"]]
    with pytest.raises(ValidationError) as info:
        module_from_json(data)
    assert "canonical-relation" in str(info.value)
    assert "chi" in str(info.value)


def test_parse_error_locations(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        parse_module_file(str(path))
    path2 = tmp_path / "missing.json"
    path2.write_text(json.dumps({"rank": 1}))
    with pytest.raises(ParseError) as info:
        parse_module_file(str(path2))
    assert "denominator" in str(info.value)


def test_usage_error():
    with pytest.raises(UsageError):
        run_command(["no-such-command"])


def test_cli_end_to_end(tmp_path):
    out = tmp_path / "s.json"
    result = _run(["example", "STRUCTURE", "--window", "-2", "5", "-o", str(out)], tmp_path)
    assert result.returncode == 0
    assert out.exists()
    result = _run(["validate", str(out)], tmp_path)
    assert result.returncode == 0
    result = _run(["koszul", str(out), "--variant", "B", "--chi", "2"], tmp_path)
    assert result.returncode == 0
    assert b'"0": 0' in result.stdout
    result = _run(["fourier", str(out), "--check-inversion"], tmp_path)
    assert result.returncode == 0


def test_cli_exit_codes(tmp_path):
    missing = tmp_path / "nope.json"
    result = _run(["validate", str(missing)], tmp_path)
    assert result.returncode == 2
    result = _run(["bogus"], tmp_path)
    assert result.returncode == 2


def test_json_reports_deterministic(tmp_path):
    out = tmp_path / "d.json"
    _run(["example", "DELTA", "--window", "-4", "2", "-o", str(out)], tmp_path)
    first = _run(["--json", "--no-timings", "restrict", str(out), "--star"], tmp_path)
    second = _run(["--json", "--no-timings", "restrict", str(out), "--star"], tmp_path)
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["exit_status"] == 0
    assert all("elapsed_ms" not in c for c in payload["checks"])


def test_report_exit_status():
    report = Report(["x"])
    report.add("a", "pass")
    assert report.exit_status == 0
    report.add("b", "fail", "boom")
    assert report.exit_status == 1
    text = emit_report(report, "text", timings=False).decode()
    assert "FAIL" in text and "boom" in text
    payload = json.loads(emit_report(report, "json", timings=False))
    assert payload["exit_status"] == 1


def test_operation_coverage_complete():
    # every public operation family must be reachable from a subcommand
    import monodromic

    documented = {name.split(".", 1)[1] for name in OPERATION_COVERAGE}
    for op in (
        "row_reduce", "kernel_basis", "validate_module", "build_example",
        "external_tensor", "zero_section_vfiltration", "apply_antipodal",
        "tate_twist", "morphism_kernel_cokernel", "monodromy_filtration",
        "relative_monodromy_filtration", "deligne_splitting",
        "sl2_primitive_decomposition", "strictness_check",
        "bistrictness_check", "spectral_sequence_page", "build_koszul",
        "koszul_homotopy_check", "complex_homology", "restrict",
        "support_criteria", "hodge_formula_check", "specialization_hodge",
        "fl_transform", "inverse_fl", "inversion_check",
        "build_graph_module", "phi_map", "vfiltration_candidate",
        "vfiltration_axiom_check", "kernel_lemma_check", "oracle_fl_hodge",
        "parse_module_file", "run_command", "emit_report",
    ):
        assert any(doc.endswith(op) for doc in documented), op


def test_monodromy_subcommand(tmp_path):
    path = tmp_path / "n.json"
    path.write_text(json.dumps({"matrix": [["0", "1"], ["0", "0"]]}))
    result = _run(["--json", "monodromy", str(path)], tmp_path)
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["tables"]["weight_filtration"] == {"-1": 1, "1": 2}
