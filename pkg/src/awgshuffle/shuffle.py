"""Reference perfect-shuffle permutations.

The classical N = g*l shuffle splits a port index into a group digit
and a member digit and exchanges them; the three-digit form rotates the
whole digit vector one position left. This module computes those
permutations from digit manipulation alone and deliberately imports
nothing from the router or topology modules: the verifier compares
fabric behaviour against these functions, and that comparison is only
convincing if the two sides share no code path.
"""

from __future__ import annotations

from dataclasses import dataclass

from .addressing import ChannelAddress
from .errors import DomainError

__all__ = [
    "ShuffleSpec",
    "left_cyclic_shift",
    "shuffle_map",
    "shuffle_perm_decimal",
]


@dataclass(frozen=True)
class ShuffleSpec:
    """Shape of a classical shuffle: g groups of l ports (N = g*l)."""

    g: int
    l: int

    def __post_init__(self) -> None:
        if self.g < 1:
            raise DomainError(f"g must be >= 1, got {self.g}")
        if self.l < 1:
            raise DomainError(f"l must be >= 1, got {self.l}")

    @property
    def port_count(self) -> int:
        return self.g * self.l


def shuffle_map(spec: ShuffleSpec, addr: ChannelAddress) -> ChannelAddress:
    """Exchange the two digits of an input address: (a, b) -> (b, a).

    Input addresses live under radices (g, l); results live under (l, g).
    """
    if addr.radices != (spec.g, spec.l):
        raise DomainError(
            f"address radices {addr.radices} do not match S({spec.g},{spec.l}) inputs"
        )
    hi, lo = addr.digits
    return ChannelAddress((lo, hi), (spec.l, spec.g))


def shuffle_perm_decimal(spec: ShuffleSpec) -> list[int]:
    """The shuffle as a permutation array over decimal port indices.

    Ports are numbered group-major: input (a, b) sits at index a*l + b
    and is wired to output index b*g + a. Indices 0 and N-1 are always
    fixed points.
    """
    perm = [0] * spec.port_count
    for hi in range(spec.g):
        for lo in range(spec.l):
            perm[hi * spec.l + lo] = lo * spec.g + hi
    return perm


def left_cyclic_shift(addr: ChannelAddress) -> ChannelAddress:
    """Rotate a three-digit address one position left: (a, b, c) -> (b, c, a).

    The radices rotate with the digits, so an address under (g, m, n)
    comes back under (m, n, g). Applying the shift three times is the
    identity.
    """
    if len(addr.digits) != 3:
        raise DomainError(
            f"left cyclic shift is defined on 3-digit addresses, got {len(addr.digits)} digits"
        )
    d = addr.digits
    r = addr.radices
    return ChannelAddress((d[1], d[2], d[0]), (r[1], r[2], r[0]))
