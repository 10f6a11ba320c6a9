"""Topology and report documents: canonical JSON, DOT graph text, CSV.

JSON output is canonical (sorted keys, two-space indent, plain decimal
integers, trailing newline) so serialized artifacts are diff-stable and
belong in version control. Parsing validates the document structurally,
rebuilds the fabric from its parameters, and then requires the file's
cables and channels to match the rebuilt ones exactly; any divergence
is an integrity failure, not a parse failure.
"""

from __future__ import annotations

import json
import os
import tempfile
from typing import Any

from ._version import __version__
from .analysis import VerificationReport, ResourceMetrics
from .errors import DomainError, IntegrityError, ParseError
from .topology import (
    DEFAULT_CHANNEL_CAP,
    Topology,
    build_network,
    fiber_wavelengths,
)

__all__ = [
    "SCHEMA_VERSION",
    "parse_topology",
    "report_document",
    "serialize_report",
    "serialize_topology",
    "topology_document",
    "topology_dot",
    "tradeoff_csv",
    "write_bytes",
]

SCHEMA_VERSION = "1"

TRADEOFF_CSV_HEADER = "n,m,wavelengths,awg_inputs,awg_outputs,cables,channels"

_DIGIT_RENDERING_NOTE = (
    "most-significant digit first; digits concatenated when every radix <= 10, "
    "dot-separated decimal otherwise"
)
_CABLE_COUNT_NOTE = (
    "cable count tallies individual stage-1 fibers; 0 when m = 1 "
    "(inputs attach directly to the single router)"
)
_PORT_ORDER_NOTE = "decimal channel indices are group-major (row-major) over the digits"


def _address_json(addr) -> dict[str, Any]:
    return {
        "decimal": addr.decimal,
        "digits": list(addr.digits),
        "radices": list(addr.radices),
        "text": str(addr),
    }


def _locus_json(locus) -> dict[str, Any]:
    return {"device": locus.device, "port": locus.port, "wavelength": locus.wavelength}


def topology_document(topology: Topology) -> dict[str, Any]:
    """JSON-ready dict for one topology (schema version 1)."""
    p = topology.params
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {
            "g": p.g,
            "m": p.m,
            "n": p.n,
            "channel_count": p.channel_count,
            "lambda_count": p.lambda_count,
        },
        "awg_bank": {
            "count": p.m,
            "inputs": topology.awg_spec.inputs,
            "outputs": topology.awg_spec.outputs,
            "lambda_count": topology.awg_spec.lambda_count,
        },
        "cables": [
            {
                "from_group": c.from_group,
                "from_port": c.from_port,
                "to_awg": c.to_awg,
                "to_input": c.to_input,
            }
            for c in topology.cables
        ],
        "channels": [
            {
                "input": _address_json(tr.input_addr),
                "middle": _address_json(tr.middle_addr),
                "output": _address_json(tr.output_addr),
                "wavelength": tr.input_locus.wavelength,
                "input_locus": _locus_json(tr.input_locus),
                "middle_locus": _locus_json(tr.middle_locus),
                "output_locus": _locus_json(tr.output_locus),
            }
            for tr in topology.channels
        ],
        "metadata": {
            "generator": f"awgshuffle {__version__}",
            "digit_rendering": _DIGIT_RENDERING_NOTE,
            "cable_count_convention": _CABLE_COUNT_NOTE,
            "decimal_port_order": _PORT_ORDER_NOTE,
        },
    }


def _canonical_json(doc: dict[str, Any]) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def serialize_topology(topology: Topology, fmt: str = "json") -> bytes:
    """Render a topology as canonical JSON or DOT bytes."""
    if fmt == "json":
        return _canonical_json(topology_document(topology))
    if fmt == "dot":
        return topology_dot(topology).encode("utf-8")
    raise DomainError(f"unsupported format {fmt!r} (expected 'json' or 'dot')")


def topology_dot(topology: Topology) -> str:
    """Left-to-right layered graph: input groups, then the router bank.

    One edge per stage-1 connection, labeled with the wavelengths the
    fiber carries. Edges carry kind="cable" normally and kind="direct"
    when m = 1 and the inputs plug straight into the single router.
    """
    p = topology.params
    kind = "direct" if p.m == 1 else "cable"
    lines = [
        "digraph wdm_shuffle {",
        "  rankdir=LR;",
        "  node [shape=box];",
        f'  label="W({p.g},{p.m},{p.n}): {p.channel_count}-channel shuffle";',
        "  subgraph cluster_groups {",
        '    label="input groups";',
    ]
    lines.extend(f"    grp{a};" for a in range(p.g))
    lines.append("  }")
    lines.append("  subgraph cluster_awgs {")
    lines.append(f'    label="{p.g}x{p.n} AWGs";')
    lines.extend(f"    awg{b};" for b in range(p.m))
    lines.append("  }")
    for cable in topology.cables:
        carried = ",".join(
            f"l{w}" for w in fiber_wavelengths(p, cable.from_group)
        )
        lines.append(
            f'  grp{cable.from_group} -> awg{cable.to_awg} '
            f'[label="{carried}", kind="{kind}", '
            f'taillabel="p{cable.from_port}", headlabel="in{cable.to_input}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def report_document(report: VerificationReport) -> dict[str, Any]:
    """JSON-ready dict for one verification report."""
    p = report.params
    return {
        "schema_version": SCHEMA_VERSION,
        "params": {
            "g": p.g,
            "m": p.m,
            "n": p.n,
            "channel_count": p.channel_count,
            "lambda_count": p.lambda_count,
        },
        "passed": report.passed,
        "permutation_size": report.permutation_size,
        "checks": [
            {
                "name": check.name,
                "passed": check.passed,
                "counterexample": check.counterexample,
            }
            for check in report.checks
        ],
    }


def serialize_report(report: VerificationReport) -> bytes:
    return _canonical_json(report_document(report))


def tradeoff_csv(rows: list[ResourceMetrics]) -> bytes:
    """CSV rendering of a tradeoff table, fixed header and row order."""
    lines = [TRADEOFF_CSV_HEADER]
    lines.extend(
        f"{r.awg_outputs},{r.awg_count},{r.wavelength_count},"
        f"{r.awg_inputs},{r.awg_outputs},{r.cable_count},{r.channel_count}"
        for r in rows
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


def write_bytes(path: str, data: bytes) -> None:
    """Atomic file write: stage to a temp file, then rename into place."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, staged = tempfile.mkstemp(dir=directory, prefix=".awgshuffle-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(staged, path)
    except OSError:
        try:
            os.unlink(staged)
        except OSError:
            pass
        raise


def _require(obj: Any, key: str, kind: type, path: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"{path} must be an object")
    if key not in obj:
        raise ParseError(f"{path}.{key} is missing")
    value = obj[key]
    if kind is int and isinstance(value, bool):
        raise ParseError(f"{path}.{key} must be an integer")
    if not isinstance(value, kind):
        raise ParseError(f"{path}.{key} must be {kind.__name__}")
    return value


def _require_int_list(obj: Any, key: str, path: str) -> list[int]:
    values = _require(obj, key, list, path)
    for pos, value in enumerate(values):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ParseError(f"{path}.{key}[{pos}] must be an integer")
    return values


def _validate_address(obj: Any, path: str) -> None:
    _require(obj, "decimal", int, path)
    _require_int_list(obj, "digits", path)
    _require_int_list(obj, "radices", path)
    _require(obj, "text", str, path)


def _validate_locus(obj: Any, path: str) -> None:
    for key in ("device", "port", "wavelength"):
        _require(obj, key, int, path)


def _validate_document(doc: Any) -> None:
    if not isinstance(doc, dict):
        raise ParseError("$ must be an object")
    version = _require(doc, "schema_version", str, "$")
    if version != SCHEMA_VERSION:
        raise ParseError(
            f"$.schema_version is {version!r}, this reader supports {SCHEMA_VERSION!r}"
        )
    params = _require(doc, "params", dict, "$")
    for key in ("g", "m", "n", "channel_count", "lambda_count"):
        _require(params, key, int, "$.params")
    bank = _require(doc, "awg_bank", dict, "$")
    for key in ("count", "inputs", "outputs", "lambda_count"):
        _require(bank, key, int, "$.awg_bank")
    cables = _require(doc, "cables", list, "$")
    for pos, cable in enumerate(cables):
        for key in ("from_group", "from_port", "to_awg", "to_input"):
            _require(cable, key, int, f"$.cables[{pos}]")
    channels = _require(doc, "channels", list, "$")
    for pos, channel in enumerate(channels):
        path = f"$.channels[{pos}]"
        for key in ("input", "middle", "output"):
            _validate_address(_require(channel, key, dict, path), f"{path}.{key}")
        for key in ("input_locus", "middle_locus", "output_locus"):
            _validate_locus(_require(channel, key, dict, path), f"{path}.{key}")
        _require(channel, "wavelength", int, path)
    _require(doc, "metadata", dict, "$")


def parse_topology(
    data: bytes | str, *, max_channels: int = DEFAULT_CHANNEL_CAP
) -> Topology:
    """Reconstruct a topology from schema-version-1 JSON.

    The returned value is rebuilt from the document's (g, m, n) and
    verified field-by-field against the document, so it passes every
    analysis check exactly like a freshly built fabric. Structural
    problems raise ParseError with a JSON path; a well-formed document
    whose cables or channels disagree with its own parameters raises
    IntegrityError.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if not data.strip():
        raise ParseError("empty input")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    _validate_document(doc)

    params = doc["params"]
    try:
        topology = build_network(
            params["g"], params["m"], params["n"], max_channels=max_channels
        )
    except DomainError as exc:
        raise ParseError(f"$.params invalid: {exc}") from None

    expected = topology_document(topology)
    for section in ("params", "awg_bank"):
        if doc[section] != expected[section]:
            raise IntegrityError(
                f"$.{section} is inconsistent with (g,m,n)="
                f"({params['g']},{params['m']},{params['n']})"
            )
    for section in ("cables", "channels"):
        got, want = doc[section], expected[section]
        if len(got) != len(want):
            raise IntegrityError(
                f"$.{section} has {len(got)} entries, expected {len(want)}"
            )
        for pos, (g_entry, w_entry) in enumerate(zip(got, want)):
            if g_entry != w_entry:
                raise IntegrityError(
                    f"$.{section}[{pos}] is inconsistent with the fabric "
                    f"derived from its own parameters"
                )
    return topology
