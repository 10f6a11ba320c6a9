"""Passive cyclic wavelength router, the building block of the fabric.

A router with ``inputs`` input ports and ``outputs`` output ports
carries ``lambda_count = max(inputs, outputs)`` wavelengths, indexed
from zero. A signal entering input ``p`` on wavelength ``i`` always
exits output ``(i - p) mod lambda_count``; the device has no state, no
configuration, and never converts wavelengths. When the modular result
lands at or past the last physical output, that wavelength is dark at
that input: :func:`awg_route` still returns the raw value so callers
can enumerate valid-wavelength sets, while the labeling operations
raise :class:`~awgshuffle.errors.InvalidChannelError` instead.

The two-digit channel labels turn routing into a digit exchange: the
channel labeled (p, q) on the input side leaves on the channel labeled
(q, p) on the output side. That exchange is exactly the perfect-shuffle
permutation, which is what the analysis module verifies at scale.

Everything here is a pure function over immutable values and safe for
concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .addressing import ChannelAddress
from .errors import DomainError, InvalidChannelError

__all__ = [
    "AwgLocus",
    "AwgSpec",
    "awg_permutation",
    "awg_route",
    "awg_wavelength",
    "channel_is_valid",
    "decode_input_channel",
    "decode_output_channel",
    "input_channels",
    "label_input_channel",
    "label_output_channel",
    "route_locus",
    "valid_input_wavelengths",
    "valid_output_wavelengths",
]


@dataclass(frozen=True)
class AwgSpec:
    """Dimensions of one cyclic wavelength router.

    ``lambda_count`` is derived, never passed: the device is always
    associated with max(inputs, outputs) wavelengths.
    """

    inputs: int
    outputs: int
    lambda_count: int = field(init=False)

    def __post_init__(self) -> None:
        if self.inputs < 1:
            raise DomainError(f"inputs must be >= 1, got {self.inputs}")
        if self.outputs < 1:
            raise DomainError(f"outputs must be >= 1, got {self.outputs}")
        object.__setattr__(self, "lambda_count", max(self.inputs, self.outputs))


@dataclass(frozen=True)
class AwgLocus:
    """One (side, port, wavelength) coordinate on a router."""

    side: str
    port: int
    wavelength: int

    def __post_init__(self) -> None:
        if self.side not in ("input", "output"):
            raise DomainError(f"side must be 'input' or 'output', got {self.side!r}")
        if self.port < 0:
            raise DomainError(f"port must be >= 0, got {self.port}")
        if self.wavelength < 0:
            raise DomainError(f"wavelength must be >= 0, got {self.wavelength}")

    def validate_for(self, spec: AwgSpec) -> None:
        """Raise DomainError unless this locus exists on ``spec``."""
        bound = spec.inputs if self.side == "input" else spec.outputs
        if self.port >= bound:
            raise DomainError(
                f"{self.side} port {self.port} out of range for {bound} {self.side}s"
            )
        _check_wavelength(spec, self.wavelength)


def _check_input_port(spec: AwgSpec, p: int) -> None:
    if not 0 <= p < spec.inputs:
        raise DomainError(f"input port {p} out of range for {spec.inputs}-input device")


def _check_output_port(spec: AwgSpec, q: int) -> None:
    if not 0 <= q < spec.outputs:
        raise DomainError(f"output port {q} out of range for {spec.outputs}-output device")


def _check_wavelength(spec: AwgSpec, i: int) -> None:
    if not 0 <= i < spec.lambda_count:
        raise DomainError(
            f"wavelength index {i} out of range for {spec.lambda_count} wavelengths"
        )


def awg_route(spec: AwgSpec, p: int, i: int) -> int:
    """Output index reached by wavelength ``i`` entering input ``p``.

    The result is the raw cyclic value ``(i - p) mod lambda_count`` and
    may be >= ``spec.outputs``; such a result means wavelength ``i`` is
    dark at input ``p`` (there is no physical port for it). Callers that
    need hard validation should use :func:`channel_is_valid` or the
    labeling operations.
    """
    _check_input_port(spec, p)
    _check_wavelength(spec, i)
    return (i - p) % spec.lambda_count


def awg_wavelength(spec: AwgSpec, p: int, q: int) -> int:
    """The unique wavelength that connects input ``p`` to output ``q``."""
    _check_input_port(spec, p)
    _check_output_port(spec, q)
    return (p + q) % spec.lambda_count


def channel_is_valid(spec: AwgSpec, p: int, i: int) -> bool:
    """True when wavelength ``i`` at input ``p`` reaches a physical output."""
    return awg_route(spec, p, i) < spec.outputs


def valid_input_wavelengths(spec: AwgSpec, p: int) -> tuple[int, ...]:
    """The ``outputs`` wavelengths that are live at input ``p``, ascending."""
    _check_input_port(spec, p)
    return tuple(sorted((p + q) % spec.lambda_count for q in range(spec.outputs)))


def valid_output_wavelengths(spec: AwgSpec, q: int) -> tuple[int, ...]:
    """The ``inputs`` wavelengths that can arrive at output ``q``, ascending."""
    _check_output_port(spec, q)
    return tuple(sorted((p + q) % spec.lambda_count for p in range(spec.inputs)))


def route_locus(spec: AwgSpec, locus: AwgLocus) -> AwgLocus:
    """Map an input-side locus to the output-side locus it connects to."""
    if locus.side != "input":
        raise DomainError(f"can only route from the input side, got {locus.side!r}")
    locus.validate_for(spec)
    q = awg_route(spec, locus.port, locus.wavelength)
    if q >= spec.outputs:
        raise InvalidChannelError(
            f"wavelength {locus.wavelength} is dark at input {locus.port}: "
            f"it routes to virtual output {q} of a {spec.outputs}-output device"
        )
    return AwgLocus("output", q, locus.wavelength)


def label_input_channel(spec: AwgSpec, p: int, i: int) -> ChannelAddress:
    """Two-digit address (port, routed output) of wavelength ``i`` at input ``p``."""
    _check_input_port(spec, p)
    _check_wavelength(spec, i)
    low = (i - p) % spec.lambda_count
    if low >= spec.outputs:
        raise InvalidChannelError(
            f"wavelength {i} is dark at input {p}: it routes to virtual output "
            f"{low} of a {spec.outputs}-output device"
        )
    return ChannelAddress((p, low), (spec.inputs, spec.outputs))


def label_output_channel(spec: AwgSpec, q: int, k: int) -> ChannelAddress:
    """Two-digit address (port, originating input) of wavelength ``k`` at output ``q``."""
    _check_output_port(spec, q)
    _check_wavelength(spec, k)
    low = (k - q) % spec.lambda_count
    if low >= spec.inputs:
        raise InvalidChannelError(
            f"wavelength {k} at output {q} has no originating input: it would "
            f"need virtual input {low} of a {spec.inputs}-input device"
        )
    return ChannelAddress((q, low), (spec.outputs, spec.inputs))


def decode_input_channel(spec: AwgSpec, addr: ChannelAddress) -> tuple[int, int]:
    """Recover (input port, wavelength) from an input-channel address."""
    if addr.radices != (spec.inputs, spec.outputs):
        raise DomainError(
            f"address radices {addr.radices} do not match input channels "
            f"of a {spec.inputs}x{spec.outputs} device"
        )
    p, low = addr.digits
    return p, (p + low) % spec.lambda_count


def decode_output_channel(spec: AwgSpec, addr: ChannelAddress) -> tuple[int, int]:
    """Recover (output port, wavelength) from an output-channel address."""
    if addr.radices != (spec.outputs, spec.inputs):
        raise DomainError(
            f"address radices {addr.radices} do not match output channels "
            f"of a {spec.inputs}x{spec.outputs} device"
        )
    q, low = addr.digits
    return q, (q + low) % spec.lambda_count


def input_channels(spec: AwgSpec) -> Iterator[ChannelAddress]:
    """All valid input-channel addresses in ascending address order."""
    for p in range(spec.inputs):
        for low in range(spec.outputs):
            yield ChannelAddress((p, low), (spec.inputs, spec.outputs))


def awg_permutation(spec: AwgSpec) -> dict[ChannelAddress, ChannelAddress]:
    """Total input-channel to output-channel mapping of one router.

    Built by actually routing every valid channel, not by assuming the
    digit-exchange law; the exchange is asserted over this result by the
    test suite and the analysis module. The mapping covers all
    inputs * outputs valid channels and is a bijection.
    """
    mapping: dict[ChannelAddress, ChannelAddress] = {}
    for addr in input_channels(spec):
        p, i = decode_input_channel(spec, addr)
        q = awg_route(spec, p, i)
        mapping[addr] = label_output_channel(spec, q, i)
    return mapping
