"""
Error types raised by the antenna design library.

Every error derives from AntennaDesignError so the command line can map
domain failures to a single exit code and report the error class name.
"""


class AntennaDesignError(ValueError):
    """Base class for all domain errors."""


class InnerOpeningNonPositive(AntennaDesignError):
    """The turn stack consumes the coil outline."""


class NonPositiveFrequency(AntennaDesignError):
    """A frequency argument was zero or negative."""


class NonPositiveComponent(AntennaDesignError):
    """An inductance or capacitance argument was zero or negative."""


class ZeroSeriesCapacitor(AntennaDesignError):
    """A series tuning topology was requested with a zero capacitor."""


class Untunable(AntennaDesignError):
    """No positive tuning capacitor reaches the target frequency."""


class BadRange(AntennaDesignError):
    """A frequency sweep range or point count is invalid."""


class NoResonanceInRange(AntennaDesignError):
    """The imaginary part of the sweep never changes sign."""


class ZeroResistance(AntennaDesignError):
    """Q factor requested for a lossless loop."""


class CoilsIntersect(AntennaDesignError):
    """Two filament coils touch, the Neumann sum is singular."""


class UnknownSeries(AntennaDesignError):
    """An E-series name other than E12 or E24."""


class ThresholdNotCalibrated(AntennaDesignError):
    """A range estimate was requested before the EMF threshold was set."""


class NonPositiveSeparation(AntennaDesignError):
    """A reader-to-tag distance was zero or negative."""
