"""E-series preferred capacitor values and snapping."""

import math

from antenna.errors import NonPositiveComponent, UnknownSeries

# Normalized single-decade values (1.0 to <10.0)
E12: tuple[float, ...] = (1.0, 1.2, 1.5, 1.8, 2.2, 2.7, 3.3, 3.9, 4.7, 5.6, 6.8, 8.2)

E24: tuple[float, ...] = (
    1.0, 1.1, 1.2, 1.3, 1.5, 1.6, 1.8, 2.0, 2.2, 2.4, 2.7, 3.0,
    3.3, 3.6, 3.9, 4.3, 4.7, 5.1, 5.6, 6.2, 6.8, 7.5, 8.2, 9.1,
)

_SERIES = {"e12": E12, "e24": E24}


def series_candidates(value: float, series: str) -> list[float]:
    """Preferred values of the decade holding value and its two neighbours, ascending."""
    key = series.lower()
    if key not in _SERIES:
        raise UnknownSeries(f"unknown series '{series}', expected one of {sorted(_SERIES)}")
    decade = math.floor(math.log10(value))
    return [
        mantissa * 10.0 ** exponent
        for exponent in (decade - 1, decade, decade + 1)
        for mantissa in _SERIES[key]
    ]


def snap_to_series(value: float, series: str) -> float:
    """Nearest preferred value by relative error |c - v| / v, ties toward the smaller value."""
    if value <= 0:
        raise NonPositiveComponent(f"cannot snap a non-positive value {value}")

    best = None
    best_error = math.inf
    for candidate in series_candidates(value, series):
        # candidates ascend, so a strict comparison keeps the smaller one on ties
        error = abs(candidate - value) / value
        if error < best_error:
            best, best_error = candidate, error
    return best
