"""Exception taxonomy shared across the package."""


class EtaleLabError(Exception):
    """Base class for all package errors."""


class SchemaError(EtaleLabError):
    pass


class ShapeMismatch(EtaleLabError):
    pass


class Infeasible(EtaleLabError):
    pass


class PentagonViolation(EtaleLabError):
    def __init__(self, labels, message="pentagon equation violated"):
        super().__init__(f"{message} at {labels}")
        self.labels = labels


class HexagonViolation(EtaleLabError):
    def __init__(self, labels, message="hexagon equation violated"):
        super().__init__(f"{message} at {labels}")
        self.labels = labels


class DimensionMismatch(EtaleLabError):
    pass


class NotQuadratic(EtaleLabError):
    pass


class OrientationMismatch(EtaleLabError):
    pass


class SeparabilityFailure(EtaleLabError):
    pass


class NotConnected(EtaleLabError):
    pass


class NotCommutative(EtaleLabError):
    pass


class NotAutomorphism(EtaleLabError):
    pass


class SpectralDegeneracy(EtaleLabError):
    pass


class SingularBasis(EtaleLabError):
    pass


class ResidualTooLarge(EtaleLabError):
    pass


class BoundViolation(EtaleLabError):
    pass


class LemmaAlViolation(EtaleLabError):
    pass


class MultiplicativityFailure(EtaleLabError):
    pass


class CatalogSelfTestFailure(EtaleLabError):
    pass
