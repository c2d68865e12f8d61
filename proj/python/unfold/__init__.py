"""Exact unfolding invariants of interval-map cycles.

Rationals cross the boundary as "p/q" strings; everything underneath is
exact GMP arithmetic.
"""

import json as _json

from ._core import (
    InternalError,
    Pattern,
    analyze_json,
    divergent_realization,
    forced_spectrum,
    is_convergent,
    is_divergent,
    is_sheer,
    modality,
    mup_set,
    over_rotation_pair,
    realize_minimal,
    render_svg,
    sharkovsky_ge,
    unfolding_index_set,
    unfolding_interval,
    unfolding_pair,
    unfolding_pair_via_heave,
    verify_suite,
)

__all__ = [
    "InternalError",
    "Pattern",
    "analyze",
    "analyze_json",
    "divergent_realization",
    "forced_spectrum",
    "is_convergent",
    "is_divergent",
    "is_sheer",
    "modality",
    "mup_set",
    "over_rotation_pair",
    "realize_minimal",
    "render_svg",
    "sharkovsky_ge",
    "unfolding_index_set",
    "unfolding_interval",
    "unfolding_pair",
    "unfolding_pair_via_heave",
    "verify_suite",
]


def analyze(pattern, route="both", max_den=64):
    """Full report for one pattern, as a dict with rationals as 'p/q' strings."""
    if isinstance(pattern, Pattern):
        pattern = pattern.cycle_notation()
    return _json.loads(analyze_json(pattern, route=route, max_den=max_den))
