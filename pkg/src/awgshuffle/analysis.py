"""Fabric verification and resource accounting.

Verification builds the fabric, then compares its physically traced
permutation against the independent digit-rotation oracle, channel by
channel, alongside bijectivity and per-fiber wavelength-distinctness
checks. Each check reports the first counterexample in ascending
address order and stops there, which keeps reports deterministic and
compact.

The resource side tabulates the wavelength-versus-cabling tradeoff
across every factorization l = m*n of a fixed fanout: growing n grows
the routers (and the wavelength pool) while shrinking the cable count,
down to the single-router extreme where stage-1 cabling disappears.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Mapping

from .addressing import ChannelAddress, mixed_radix_decode
from .errors import DomainError
from .shuffle import left_cyclic_shift
from .topology import (
    DEFAULT_CHANNEL_CAP,
    NetworkParams,
    Topology,
    build_network,
)

__all__ = [
    "CHECK_BIJECTIVITY",
    "CHECK_NAMES",
    "CHECK_ORACLE",
    "CHECK_WAVELENGTH_CONFLICTS",
    "CheckResult",
    "ResourceMetrics",
    "VerificationReport",
    "WavelengthConflict",
    "check_bijectivity",
    "check_oracle_equivalence",
    "check_wavelength_conflicts",
    "resource_metrics",
    "run_named_check",
    "tradeoff_table",
    "verify_shuffle_equivalence",
]

CHECK_ORACLE = "oracle-equivalence"
CHECK_BIJECTIVITY = "bijectivity"
CHECK_WAVELENGTH_CONFLICTS = "wavelength-conflicts"
CHECK_NAMES = (CHECK_ORACLE, CHECK_BIJECTIVITY, CHECK_WAVELENGTH_CONFLICTS)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check; carries the first counterexample on failure."""

    name: str
    passed: bool
    counterexample: str | None = None


@dataclass(frozen=True)
class WavelengthConflict:
    """Two channels sharing one wavelength on one fiber."""

    fiber: str
    wavelength: int
    first: ChannelAddress
    second: ChannelAddress


@dataclass(frozen=True)
class ResourceMetrics:
    """Hardware bill for one fabric shape."""

    wavelength_count: int
    awg_count: int
    awg_inputs: int
    awg_outputs: int
    cable_count: int
    channel_count: int


@dataclass(frozen=True)
class VerificationReport:
    """Result of a full equivalence verification run."""

    params: NetworkParams
    passed: bool
    checks: tuple[CheckResult, ...]
    permutation_size: int


def check_oracle_equivalence(topology: Topology) -> CheckResult:
    """Compare the traced permutation against the digit-rotation oracle."""
    for tr in topology.channels:
        expected = left_cyclic_shift(tr.input_addr)
        if tr.output_addr != expected:
            return CheckResult(
                CHECK_ORACLE,
                False,
                f"input {tr.input_addr} reaches {tr.output_addr}, "
                f"oracle expects {expected}",
            )
    return CheckResult(CHECK_ORACLE, True)


def check_bijectivity(perm: Mapping[ChannelAddress, ChannelAddress]) -> CheckResult:
    """Pass iff the image covers the full output address space exactly once.

    Inputs are scanned in ascending address order, so the reported
    duplicate is always the second offender in that order; a gap names
    the smallest missing output address. All outputs must share one
    radix pattern.
    """
    if not perm:
        return CheckResult(CHECK_BIJECTIVITY, True)
    items = sorted(perm.items(), key=lambda kv: kv[0].decimal)
    radices = items[0][1].radices
    for _, out in items:
        if out.radices != radices:
            raise DomainError(
                f"mixed output radices in permutation: {radices} vs {out.radices}"
            )
    seen: dict[ChannelAddress, ChannelAddress] = {}
    for inp, out in items:
        if out in seen:
            return CheckResult(
                CHECK_BIJECTIVITY,
                False,
                f"inputs {seen[out]} and {inp} both map to {out}",
            )
        seen[out] = inp
    space = prod(radices)
    if len(seen) != space:
        for index in range(space):
            missing = ChannelAddress(mixed_radix_decode(index, radices), radices)
            if missing not in seen:
                return CheckResult(
                    CHECK_BIJECTIVITY,
                    False,
                    f"output {missing} is never produced",
                )
    return CheckResult(CHECK_BIJECTIVITY, True)


def check_wavelength_conflicts(topology: Topology) -> list[WavelengthConflict]:
    """List every fiber that carries one wavelength twice (empty when sound).

    Both fiber populations are scanned: input fibers (group, port) and
    router output fibers (router, output). Conflicts appear in channel
    address order.
    """
    conflicts: list[WavelengthConflict] = []
    occupancy: dict[tuple[str, int, int], dict[int, ChannelAddress]] = {}
    for tr in topology.channels:
        stops = (
            ("group", tr.input_locus.device, tr.input_locus.port, tr.input_addr),
            ("awg-out", tr.output_locus.device, tr.output_locus.port, tr.output_addr),
        )
        for kind, device, port, addr in stops:
            fiber = occupancy.setdefault((kind, device, port), {})
            wavelength = tr.input_locus.wavelength
            if wavelength in fiber:
                conflicts.append(
                    WavelengthConflict(
                        fiber=f"{kind}{device}/port{port}",
                        wavelength=wavelength,
                        first=fiber[wavelength],
                        second=addr,
                    )
                )
            else:
                fiber[wavelength] = addr
    return conflicts


def run_named_check(name: str, topology: Topology) -> CheckResult:
    """Run one check by its report name."""
    if name == CHECK_ORACLE:
        return check_oracle_equivalence(topology)
    if name == CHECK_BIJECTIVITY:
        return check_bijectivity(topology.channel_perm)
    if name == CHECK_WAVELENGTH_CONFLICTS:
        conflicts = check_wavelength_conflicts(topology)
        if conflicts:
            first = conflicts[0]
            return CheckResult(
                CHECK_WAVELENGTH_CONFLICTS,
                False,
                f"{first.fiber} carries wavelength {first.wavelength} twice: "
                f"{first.first} and {first.second}",
            )
        return CheckResult(CHECK_WAVELENGTH_CONFLICTS, True)
    raise DomainError(f"unknown check {name!r}")


def verify_shuffle_equivalence(
    g: int, m: int, n: int, *, max_channels: int = DEFAULT_CHANNEL_CAP
) -> VerificationReport:
    """Build W(g, m, n) and verify it behaves as the N = g*m*n shuffle.

    Runs the oracle-equivalence, bijectivity, and wavelength-conflict
    checks over all channels. CapacityError propagates before any report
    is produced.
    """
    topology = build_network(g, m, n, max_channels=max_channels)
    checks = tuple(run_named_check(name, topology) for name in CHECK_NAMES)
    return VerificationReport(
        params=topology.params,
        passed=all(check.passed for check in checks),
        checks=checks,
        permutation_size=topology.params.channel_count,
    )


def resource_metrics(g: int, m: int, n: int) -> ResourceMetrics:
    """Hardware bill of W(g, m, n).

    Cables count individual stage-1 fibers; at m = 1 the inputs attach
    directly to the single router and the count is zero.
    """
    params = NetworkParams(g, m, n)
    return ResourceMetrics(
        wavelength_count=params.lambda_count,
        awg_count=m,
        awg_inputs=g,
        awg_outputs=n,
        cable_count=g * m if m >= 2 else 0,
        channel_count=params.channel_count,
    )


def tradeoff_table(g: int, l: int) -> list[ResourceMetrics]:
    """Resource rows for every factorization l = m*n, ascending in n.

    Along the table the wavelength pool never shrinks and the cable
    count never grows; the n = l row needs l wavelengths and no stage-1
    cables at all.
    """
    if g < 1:
        raise DomainError(f"g must be >= 1, got {g}")
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    return [
        resource_metrics(g, l // n, n)
        for n in range(1, l + 1)
        if l % n == 0
    ]
