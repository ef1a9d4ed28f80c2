"""Typed errors raised across the package."""


class WitnessKitError(Exception):
    """Base class for all witnesskit errors."""


class DimensionMismatch(WitnessKitError):
    """Operands have incompatible shapes or declared dimensions."""


class NotHermitian(WitnessKitError):
    """A matrix required to be Hermitian fails the tolerance check."""


class NoConvergence(WitnessKitError):
    """The eigensolver failed to converge."""


class Singular(WitnessKitError):
    """A linear system is singular or too ill-conditioned to solve."""


class OutOfFamily(WitnessKitError):
    """A state-family parameter lies outside the admissible range."""


class DegenerateDenominator(WitnessKitError):
    """A witness denominator is too small for the nonlinear term to be defined."""


class EffectViolation(WitnessKitError):
    """An operator violates the POVM effect condition 0 <= E <= I."""


class ZeroFilter(WitnessKitError):
    """The filter normalization constant vanished; the filter state is undefined."""


class ImaginaryResidue(WitnessKitError):
    """A quantity that must be real carries a non-negligible imaginary part."""
