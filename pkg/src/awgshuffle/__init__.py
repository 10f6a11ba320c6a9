"""Wavelength-routed (AWG-based) WDM shuffle networks.

Build a single cyclic wavelength router or a two-stage modular fabric
W(g, m, n), verify that its channel permutation equals the classical
perfect shuffle, analyze the wavelength-versus-cabling tradeoff across
factorizations, and serialize everything as JSON, DOT, or CSV.
"""

from ._version import __version__
from .addressing import (
    ChannelAddress,
    mixed_radix_decode,
    mixed_radix_encode,
    render_digits,
)
from .analysis import (
    CHECK_BIJECTIVITY,
    CHECK_NAMES,
    CHECK_ORACLE,
    CHECK_WAVELENGTH_CONFLICTS,
    CheckResult,
    ResourceMetrics,
    VerificationReport,
    WavelengthConflict,
    check_bijectivity,
    check_oracle_equivalence,
    check_wavelength_conflicts,
    resource_metrics,
    run_named_check,
    tradeoff_table,
    verify_shuffle_equivalence,
)
from .awg import (
    AwgLocus,
    AwgSpec,
    awg_permutation,
    awg_route,
    awg_wavelength,
    channel_is_valid,
    decode_input_channel,
    decode_output_channel,
    input_channels,
    label_input_channel,
    label_output_channel,
    route_locus,
    valid_input_wavelengths,
    valid_output_wavelengths,
)
from .cli import cli_main
from .errors import (
    CapacityError,
    DomainError,
    IntegrityError,
    InvalidChannelError,
    ParseError,
    ShuffleNetError,
)
from .serialize import (
    SCHEMA_VERSION,
    parse_topology,
    serialize_report,
    serialize_topology,
    topology_document,
    topology_dot,
    tradeoff_csv,
    write_bytes,
)
from .shuffle import (
    ShuffleSpec,
    left_cyclic_shift,
    shuffle_map,
    shuffle_perm_decimal,
)
from .topology import (
    DEFAULT_CHANNEL_CAP,
    Cable,
    Locus,
    NetworkParams,
    RouteTrace,
    Topology,
    build_network,
    fiber_wavelengths,
    input_addresses,
    input_channel_wavelength,
    label_middle_channel,
    label_net_input_channel,
    label_net_output_channel,
    middle_channel_wavelength,
    network_permutation,
    output_channel_wavelength,
    stage1_map,
    stage2_map,
    trace,
)

__all__ = [
    "CHECK_BIJECTIVITY",
    "CHECK_NAMES",
    "CHECK_ORACLE",
    "CHECK_WAVELENGTH_CONFLICTS",
    "DEFAULT_CHANNEL_CAP",
    "SCHEMA_VERSION",
    "AwgLocus",
    "AwgSpec",
    "Cable",
    "CapacityError",
    "ChannelAddress",
    "CheckResult",
    "DomainError",
    "IntegrityError",
    "InvalidChannelError",
    "Locus",
    "NetworkParams",
    "ParseError",
    "ResourceMetrics",
    "RouteTrace",
    "ShuffleNetError",
    "ShuffleSpec",
    "Topology",
    "VerificationReport",
    "WavelengthConflict",
    "__version__",
    "awg_permutation",
    "awg_route",
    "awg_wavelength",
    "build_network",
    "channel_is_valid",
    "check_bijectivity",
    "check_oracle_equivalence",
    "check_wavelength_conflicts",
    "cli_main",
    "decode_input_channel",
    "decode_output_channel",
    "fiber_wavelengths",
    "input_addresses",
    "input_channel_wavelength",
    "input_channels",
    "label_input_channel",
    "label_middle_channel",
    "label_net_input_channel",
    "label_net_output_channel",
    "label_output_channel",
    "left_cyclic_shift",
    "middle_channel_wavelength",
    "mixed_radix_decode",
    "mixed_radix_encode",
    "network_permutation",
    "output_channel_wavelength",
    "parse_topology",
    "render_digits",
    "resource_metrics",
    "route_locus",
    "run_named_check",
    "serialize_report",
    "serialize_topology",
    "shuffle_map",
    "shuffle_perm_decimal",
    "stage1_map",
    "stage2_map",
    "topology_document",
    "topology_dot",
    "trace",
    "tradeoff_csv",
    "tradeoff_table",
    "valid_input_wavelengths",
    "valid_output_wavelengths",
    "verify_shuffle_equivalence",
    "write_bytes",
]
