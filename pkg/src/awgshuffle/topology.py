"""Two-stage wavelength-routed shuffle fabric.

A fabric W(g, m, n) has g input groups of m fibers, each fiber carrying
n wavelengths, cross-wired into a bank of m identical g x n wavelength
routers. The wiring law is fixed: port b of group a plugs into input a
of router b. Tracing every (fiber, wavelength) through its cable and
router yields the fabric's permutation over the N = g*m*n wavelength
channels; the permutation is materialized eagerly at build time, since
desk-scale N is small and verification and export both consume all of
it anyway.

Three-digit addresses use a different radix order at each stage:
(g, m, n) on input fibers, (m, g, n) between the stages, (m, n, g) on
router outputs. Addresses carry their radices, and the stage maps
reject a value fed to the wrong stage.

When g > n, not every wavelength may enter every fiber: each router
input accepts exactly the n wavelengths whose cyclic route lands on a
physical output, so fibers carry input-dependent wavelength sets.
Traces and exports surface those sets instead of refusing the shape.

Topology values are immutable after construction; traces and
permutation lookups are pure reads and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterator

from .addressing import ChannelAddress
from .awg import AwgSpec, awg_route, valid_input_wavelengths
from .errors import CapacityError, DomainError, InvalidChannelError

__all__ = [
    "DEFAULT_CHANNEL_CAP",
    "Cable",
    "Locus",
    "NetworkParams",
    "RouteTrace",
    "Topology",
    "build_network",
    "fiber_wavelengths",
    "input_addresses",
    "input_channel_wavelength",
    "label_middle_channel",
    "label_net_input_channel",
    "label_net_output_channel",
    "middle_channel_wavelength",
    "network_permutation",
    "output_channel_wavelength",
    "stage1_map",
    "stage2_map",
    "trace",
]

DEFAULT_CHANNEL_CAP = 1_000_000


@dataclass(frozen=True)
class NetworkParams:
    """Shape of a two-stage fabric: g groups, m fibers each, n wavelengths per fiber."""

    g: int
    m: int
    n: int

    def __post_init__(self) -> None:
        for name in ("g", "m", "n"):
            value = getattr(self, name)
            if value < 1:
                raise DomainError(f"{name} must be >= 1, got {value}")

    @property
    def channel_count(self) -> int:
        return self.g * self.m * self.n

    @property
    def lambda_count(self) -> int:
        return max(self.g, self.n)

    @property
    def awg_spec(self) -> AwgSpec:
        return AwgSpec(self.g, self.n)

    @property
    def input_radices(self) -> tuple[int, int, int]:
        return (self.g, self.m, self.n)

    @property
    def middle_radices(self) -> tuple[int, int, int]:
        return (self.m, self.g, self.n)

    @property
    def output_radices(self) -> tuple[int, int, int]:
        return (self.m, self.n, self.g)


@dataclass(frozen=True)
class Cable:
    """One stage-1 fiber: port ``from_port`` of group ``from_group`` into a router.

    The wiring law pins both router-side coordinates: a cable always
    lands on router ``from_port`` at input ``from_group``.
    """

    from_group: int
    from_port: int
    to_awg: int
    to_input: int

    def __post_init__(self) -> None:
        for name in ("from_group", "from_port", "to_awg", "to_input"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)}")
        if self.to_awg != self.from_port or self.to_input != self.from_group:
            raise DomainError(
                f"cable ({self.from_group},{self.from_port}) -> "
                f"({self.to_awg},{self.to_input}) violates the wiring law "
                f"(port b of group a lands on input a of router b)"
            )


@dataclass(frozen=True)
class Locus:
    """Physical coordinate of a channel at one stage: (device, port, wavelength)."""

    device: int
    port: int
    wavelength: int


@dataclass(frozen=True)
class RouteTrace:
    """Full path of one channel: input fiber, router input, router output.

    The wavelength is identical at all three loci; fibers and routers
    never convert wavelengths.
    """

    input_locus: Locus
    middle_locus: Locus
    output_locus: Locus
    input_addr: ChannelAddress
    middle_addr: ChannelAddress
    output_addr: ChannelAddress


@dataclass(frozen=True)
class Topology:
    """A fully materialized two-stage fabric.

    ``channels`` holds one trace per wavelength channel, ordered by
    ascending input address; ``channel_perm`` is the derived
    input-to-output mapping over all of them.
    """

    params: NetworkParams
    awg_spec: AwgSpec
    cables: tuple[Cable, ...]
    channels: tuple[RouteTrace, ...]

    @cached_property
    def channel_perm(self) -> dict[ChannelAddress, ChannelAddress]:
        return {tr.input_addr: tr.output_addr for tr in self.channels}

    def cable_for(self, group: int, port: int) -> Cable:
        """The unique cable leaving ``port`` of ``group``."""
        if not 0 <= group < self.params.g:
            raise DomainError(f"group {group} out of range for {self.params.g} groups")
        if not 0 <= port < self.params.m:
            raise DomainError(f"port {port} out of range for {self.params.m} ports per group")
        return self.cables[group * self.params.m + port]

    def fiber_wavelengths(self, group: int, port: int) -> tuple[int, ...]:
        """Wavelength set carried by the fiber at (group, port), ascending."""
        self.cable_for(group, port)  # range checks
        return fiber_wavelengths(self.params, group)


def fiber_wavelengths(params: NetworkParams, group: int) -> tuple[int, ...]:
    """Wavelengths a fiber of ``group`` can carry into its router.

    Every fiber of one group lands on the same router input index, so
    the set depends on the group only. It always has exactly n elements.
    """
    if not 0 <= group < params.g:
        raise DomainError(f"group {group} out of range for {params.g} groups")
    return valid_input_wavelengths(params.awg_spec, group)


def input_channel_wavelength(params: NetworkParams, addr: ChannelAddress) -> int:
    """Physical wavelength of the input channel ``addr``."""
    if addr.radices != params.input_radices:
        raise DomainError(
            f"address radices {addr.radices} are not input radices {params.input_radices}"
        )
    hi, _, lo = addr.digits
    return (hi + lo) % params.lambda_count


def middle_channel_wavelength(params: NetworkParams, addr: ChannelAddress) -> int:
    """Physical wavelength of the middle channel ``addr``."""
    if addr.radices != params.middle_radices:
        raise DomainError(
            f"address radices {addr.radices} are not middle radices {params.middle_radices}"
        )
    _, port, lo = addr.digits
    return (port + lo) % params.lambda_count


def output_channel_wavelength(params: NetworkParams, addr: ChannelAddress) -> int:
    """Physical wavelength of the output channel ``addr``."""
    if addr.radices != params.output_radices:
        raise DomainError(
            f"address radices {addr.radices} are not output radices {params.output_radices}"
        )
    _, port, lo = addr.digits
    return (port + lo) % params.lambda_count


def label_middle_channel(
    params: NetworkParams, awg: int, port: int, wavelength: int
) -> ChannelAddress:
    """Address of wavelength ``wavelength`` at input ``port`` of router ``awg``.

    Digits are (router, port, routed output) under radices (m, g, n).
    """
    if not 0 <= awg < params.m:
        raise DomainError(f"router index {awg} out of range for {params.m} routers")
    if not 0 <= port < params.g:
        raise DomainError(f"router input {port} out of range for {params.g} inputs")
    _check_wavelength_index(params, wavelength)
    lo = (wavelength - port) % params.lambda_count
    if lo >= params.n:
        raise InvalidChannelError(
            f"wavelength {wavelength} is dark at input {port} of router {awg}: "
            f"it routes to virtual output {lo} of {params.n}"
        )
    return ChannelAddress((awg, port, lo), params.middle_radices)


def label_net_output_channel(
    params: NetworkParams, awg: int, port: int, wavelength: int
) -> ChannelAddress:
    """Address of wavelength ``wavelength`` at output ``port`` of router ``awg``.

    Digits are (router, port, originating input) under radices (m, n, g).
    """
    if not 0 <= awg < params.m:
        raise DomainError(f"router index {awg} out of range for {params.m} routers")
    if not 0 <= port < params.n:
        raise DomainError(f"router output {port} out of range for {params.n} outputs")
    _check_wavelength_index(params, wavelength)
    lo = (wavelength - port) % params.lambda_count
    if lo >= params.g:
        raise InvalidChannelError(
            f"wavelength {wavelength} at output {port} of router {awg} has no "
            f"originating input: it would need virtual input {lo} of {params.g}"
        )
    return ChannelAddress((awg, port, lo), params.output_radices)


def label_net_input_channel(
    params: NetworkParams, group: int, port: int, wavelength: int
) -> ChannelAddress:
    """Address of wavelength ``wavelength`` on port ``port`` of input group ``group``.

    Derived physically: follow the fiber's cable to router ``port`` at
    input ``group``, label the middle channel there, then swap the two
    leading digits back to the fiber's point of view. Digits come out as
    (group, port, routed output) under radices (g, m, n).
    """
    if not 0 <= group < params.g:
        raise DomainError(f"group {group} out of range for {params.g} groups")
    if not 0 <= port < params.m:
        raise DomainError(f"port {port} out of range for {params.m} ports per group")
    _check_wavelength_index(params, wavelength)
    lo = (wavelength - group) % params.lambda_count
    if lo >= params.n:
        carried = ", ".join(str(w) for w in fiber_wavelengths(params, group))
        raise InvalidChannelError(
            f"wavelength {wavelength} is not carried on port {port} of group "
            f"{group}; this fiber carries wavelengths {{{carried}}}"
        )
    middle = label_middle_channel(params, port, group, wavelength)
    d = middle.digits
    return ChannelAddress((d[1], d[0], d[2]), params.input_radices)


def _check_wavelength_index(params: NetworkParams, wavelength: int) -> None:
    if not 0 <= wavelength < params.lambda_count:
        raise DomainError(
            f"wavelength index {wavelength} out of range for "
            f"{params.lambda_count} wavelengths"
        )


def stage1_map(params: NetworkParams, addr: ChannelAddress) -> ChannelAddress:
    """Stage-1 wiring as a digit map: (a, b, c) -> (b, a, c)."""
    if addr.radices != params.input_radices:
        raise DomainError(
            f"address radices {addr.radices} are not input radices {params.input_radices}"
        )
    d = addr.digits
    return ChannelAddress((d[1], d[0], d[2]), params.middle_radices)


def stage2_map(params: NetworkParams, addr: ChannelAddress) -> ChannelAddress:
    """Stage-2 routing as a digit map: (a, b, c) -> (a, c, b)."""
    if addr.radices != params.middle_radices:
        raise DomainError(
            f"address radices {addr.radices} are not middle radices {params.middle_radices}"
        )
    d = addr.digits
    return ChannelAddress((d[0], d[2], d[1]), params.output_radices)


def _trace_via(
    params: NetworkParams, awg_spec: AwgSpec, cable: Cable, wavelength: int
) -> RouteTrace:
    """Follow one wavelength from its fiber through cable and router."""
    group, port = cable.from_group, cable.from_port
    input_addr = label_net_input_channel(params, group, port, wavelength)
    middle_addr = label_middle_channel(params, cable.to_awg, cable.to_input, wavelength)
    q = awg_route(awg_spec, cable.to_input, wavelength)
    output_addr = label_net_output_channel(params, cable.to_awg, q, wavelength)
    return RouteTrace(
        input_locus=Locus(group, port, wavelength),
        middle_locus=Locus(cable.to_awg, cable.to_input, wavelength),
        output_locus=Locus(cable.to_awg, q, wavelength),
        input_addr=input_addr,
        middle_addr=middle_addr,
        output_addr=output_addr,
    )


def input_addresses(params: NetworkParams) -> Iterator[ChannelAddress]:
    """All N input-channel addresses in ascending address order."""
    for digits in product(range(params.g), range(params.m), range(params.n)):
        yield ChannelAddress(digits, params.input_radices)


def build_network(
    g: int, m: int, n: int, *, max_channels: int = DEFAULT_CHANNEL_CAP
) -> Topology:
    """Construct the fabric W(g, m, n) with its full channel permutation.

    Raises DomainError for non-positive dimensions and CapacityError
    when g*m*n exceeds ``max_channels`` (default one million channels).
    """
    params = NetworkParams(g, m, n)
    if params.channel_count > max_channels:
        raise CapacityError(
            f"W({g},{m},{n}) has {params.channel_count} channels, "
            f"over the cap of {max_channels}"
        )
    awg_spec = params.awg_spec
    cables = tuple(Cable(a, b, b, a) for a in range(g) for b in range(m))
    channels = []
    for addr in input_addresses(params):
        wavelength = input_channel_wavelength(params, addr)
        cable = cables[addr.digits[0] * m + addr.digits[1]]
        channels.append(_trace_via(params, awg_spec, cable, wavelength))
    return Topology(params, awg_spec, cables, tuple(channels))


def trace(topology: Topology, group: int, port: int, wavelength: int) -> RouteTrace:
    """Trace one (group, port, wavelength) channel through the fabric.

    Raises DomainError for an out-of-range locus and InvalidChannelError
    (naming the fiber's carried set) for a wavelength the fiber cannot
    accept.
    """
    cable = topology.cable_for(group, port)
    _check_wavelength_index(topology.params, wavelength)
    return _trace_via(topology.params, topology.awg_spec, cable, wavelength)


def network_permutation(topology: Topology) -> dict[ChannelAddress, ChannelAddress]:
    """Total input-to-output channel mapping of the fabric, in address order.

    Treat the result as read-only; it is shared with the topology value.
    """
    return topology.channel_perm
