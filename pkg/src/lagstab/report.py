"""Serialization of stability reports (JSON / CSV / text)."""

from __future__ import annotations

import json

from .orbit import OrbitSpec
from .scalars import EXACT, format_scalar, is_exact
from .stability import StabilityReport

TOOL_VERSION = "0.1.0"

#: frozen top-level key order of the JSON report
JSON_KEYS = (
    "orbit",
    "verdict",
    "witness",
    "null_modes",
    "enumeration_bound",
    "modes_checked",
    "rigid",
    "volume_minimizing",
    "arithmetic_track",
    "tool_version",
)


def _scalar_json(x):
    if x is None:
        return None
    return format_scalar(x) if is_exact(x) else float(x)


def orbit_json_dict(orbit: OrbitSpec) -> dict:
    return {
        "n": orbit.n,
        "t": _scalar_json(orbit.tanh_sq),
        "simplex": [_scalar_json(s) for s in orbit.simplex],
        "radii": [float(r) for r in orbit.radii],
    }


def report_json_dict(report: StabilityReport, orbit: OrbitSpec) -> dict:
    witness = None
    if report.witness is not None:
        witness = {"mode": list(report.witness), "q": _scalar_json(report.witness_q)}
    return {
        "orbit": orbit_json_dict(orbit),
        "verdict": report.verdict,
        "witness": witness,
        "null_modes": [list(m) for m in report.null_modes],
        "enumeration_bound": _scalar_json(report.enumeration_bound),
        "modes_checked": report.modes_checked,
        "rigid": report.rigid,
        "volume_minimizing": report.volume_minimizing,
        "arithmetic_track": report.arithmetic_track,
        "tool_version": TOOL_VERSION,
    }


def dumps_json(obj) -> str:
    """Canonical JSON encoding; re-encoding a parsed report is idempotent."""
    return json.dumps(obj, indent=2, sort_keys=False)


def report_text(report: StabilityReport, orbit: OrbitSpec) -> str:
    lines = [
        f"orbit: n={orbit.n} t={format_scalar(orbit.tanh_sq) if is_exact(orbit.tanh_sq) else orbit.tanh_sq} "
        f"simplex=({', '.join(format_scalar(s) if is_exact(s) else repr(s) for s in orbit.simplex)})",
        f"verdict: {report.verdict}",
    ]
    if report.witness is not None:
        lines.append(f"witness: {report.witness} with Q = {report.witness_q}")
    lines.append(f"enumeration bound: {report.enumeration_bound}")
    lines.append(f"modes checked: {report.modes_checked}")
    lines.append(f"null modes: {list(report.null_modes)}")
    lines.append(f"rigid: {report.rigid}")
    lines.append(f"volume minimizing: {report.volume_minimizing}")
    lines.append(f"arithmetic track: {report.arithmetic_track}")
    if report.stability_beyond_paper:
        lines.append("note: stable verdict outside the analytically proven region (new information)")
    return "\n".join(lines)


def sweep_csv_header(n: int, track: str) -> str:
    scols = ",".join(f"s_{i + 1}" for i in range(n))
    if track == EXACT:
        return f"n,t,{scols},verdict,min_Q_num,min_Q_den,witness"
    return f"n,t,{scols},verdict,min_Q,witness"


def sweep_csv_record(orbit: OrbitSpec, report: StabilityReport) -> str:
    fields = [str(orbit.n), format_scalar(orbit.tanh_sq) if is_exact(orbit.tanh_sq) else repr(float(orbit.tanh_sq))]
    for s in orbit.simplex:
        fields.append(format_scalar(s) if is_exact(s) else repr(float(s)))
    fields.append(report.verdict)
    if orbit.track == EXACT:
        fields.append(str(report.min_q.numerator))
        fields.append(str(report.min_q.denominator))
    else:
        fields.append(repr(float(report.min_q)))
    fields.append(";".join(str(m) for m in report.witness) if report.witness else "")
    return ",".join(fields)
