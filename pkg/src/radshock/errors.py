"""Typed exceptions raised by the radshock library."""


class RadshockError(Exception):
    """Base class for all radshock errors."""


class StateOutsideDomain(RadshockError):
    """State violates psi0 > |psi1|."""


class EpsilonOutOfRange(RadshockError):
    """Dissipation parameter outside its admissible interval."""


class NonPositiveParameter(RadshockError):
    """Transport coefficient that must be positive is not."""


class QOutOfRange(RadshockError):
    """Shock-strength parameter outside (3/4, 1)."""


class ZOutOfRange(RadshockError):
    """Downstream squared velocity outside (1/8, 1/2)."""


class DegenerateShock(RadshockError):
    """Shock strength too close to the zero-amplitude limit 3/4."""


class RootFindingFailure(RadshockError):
    """Residual polishing of a polynomial root stalled."""


class EpsilonAboveHat(RadshockError):
    """Upper separatrix requested where its defining root leaves (1/8, 1/2)."""


class ParamsOutOfOmega(RadshockError):
    """(eps, q_tilde) outside the parameter square (0,1] x (3/4,1)."""


class SingularBsharp(RadshockError):
    """Dissipation matrix numerically singular at the requested state."""


class NotASaddle(RadshockError):
    """Upstream rest point failed the opposite-sign eigenvalue test."""


class TooFewSamples(RadshockError):
    """Oscillation analysis needs at least three trajectory samples."""


class InternalInconsistency(RadshockError):
    """Two independent classification routes disagree outside tie bands."""
