"""Link-level simulator for syndrome-compressed PNC on the two-way relay channel.

Two correlated sources exchange 15-bit blocks through a relay. The library
implements source-side syndrome compression (SCPNC), relay-side compression
(RCPNC), and the non-compression baseline, together with closed-form and
asymptotic block-error-rate expressions and a reproducible Monte Carlo sweep
harness.
"""

from .analytics import (
    bler_conv_asym,
    bler_conv_exact,
    bler_rcpnc_asym,
    bler_rcpnc_exact,
    bler_scpnc_asym,
    bler_scpnc_exact,
    gain_rcpnc,
    gain_scpnc,
    p_pnc_exact,
    q_function,
)
from .backend import backend_name
from .block_code import LinearBlockCode, make_bch
from .phy import ChannelParams, bpsk_demodulate, bpsk_modulate, pnc_map, pnc_threshold
from .schemes import (
    SchemeKind,
    TrialOutcome,
    run_conventional,
    run_rcpnc,
    run_scpnc,
    simulate_batch,
)
from .simkit import (
    SweepConfig,
    SweepPoint,
    emit,
    measure_throughput,
    run_sweep,
    wilson_interval,
)
from .sources import CorrelationModel, correlation_factor, generate_pair

__version__ = "0.1.0"

__all__ = [
    "ChannelParams",
    "CorrelationModel",
    "LinearBlockCode",
    "SchemeKind",
    "SweepConfig",
    "SweepPoint",
    "TrialOutcome",
    "backend_name",
    "bler_conv_asym",
    "bler_conv_exact",
    "bler_rcpnc_asym",
    "bler_rcpnc_exact",
    "bler_scpnc_asym",
    "bler_scpnc_exact",
    "bpsk_demodulate",
    "bpsk_modulate",
    "correlation_factor",
    "emit",
    "gain_rcpnc",
    "gain_scpnc",
    "generate_pair",
    "make_bch",
    "measure_throughput",
    "p_pnc_exact",
    "pnc_map",
    "pnc_threshold",
    "q_function",
    "run_conventional",
    "run_rcpnc",
    "run_scpnc",
    "run_sweep",
    "simulate_batch",
    "wilson_interval",
]
