"""Exact SI <-> Gaussian-CGS conversions for the CLI boundary.

Everything inside the library is Gaussian-CGS; conversion happens exactly
once, here.
"""
from __future__ import annotations

_STATVOLT_PER_CM_IN_V_PER_M = 2.99792458e4

# per kind: unit -> factor to the CGS base unit
_FACTORS: dict[str, dict[str, float]] = {
    "energy": {"erg": 1.0, "J": 1e7, "mJ": 1e4},
    "length": {"cm": 1.0, "m": 1e2, "mm": 1e-1, "um": 1e-4, "nm": 1e-7},
    "time": {"s": 1.0, "ms": 1e-3, "us": 1e-6, "ns": 1e-9, "ps": 1e-12, "fs": 1e-15},
    "intensity": {"erg/s/cm2": 1.0, "W/cm2": 1e7},
    "field": {"statvolt/cm": 1.0, "V/m": 1.0 / _STATVOLT_PER_CM_IN_V_PER_M},
    "magnetic_field": {"G": 1.0, "T": 1e4},
    "mass": {"g": 1.0, "kg": 1e3},
}


def convert_units(value: float, kind: str, from_unit: str, to_unit: str) -> float:
    """Convert value between units of the same kind; exact factors."""
    try:
        table = _FACTORS[kind]
    except KeyError:
        raise ValueError(f"unknown quantity kind {kind!r}") from None
    try:
        f = table[from_unit]
        t = table[to_unit]
    except KeyError as exc:
        raise ValueError(f"unknown {kind} unit {exc.args[0]!r}") from None
    return value * (f / t)
