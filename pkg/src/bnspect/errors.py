"""Exception types shared across the package."""


class BnspectError(Exception):
    """Base class for all bnspect errors."""


class ZeroMagnitude(BnspectError):
    """A vertex has magnitude 0, so normalized matrices are undefined."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} has zero magnitude; normalized matrices undefined")


class ZeroVector(BnspectError):
    """A Rayleigh quotient was requested at the zero vector."""


class NotSymmetric(BnspectError):
    """A matrix expected to be symmetric is not, beyond tolerance."""


class NotNormalized(BnspectError):
    """A matrix expected to have unit diagonal does not, beyond tolerance."""


class EvenPower(BnspectError):
    """An odd matrix power was required but an even exponent was given."""


class SingularCovariance(BnspectError):
    """The sample covariance matrix is not invertible at working precision."""


class ModelFormatError(BnspectError):
    """A model file failed to parse or validate; message carries field diagnostics."""
