"""Exception types shared across the package."""


class DomainError(Exception):
    """Base class for errors caused by mathematically invalid input."""


class KupischViolation(DomainError):
    def __init__(self, violations):
        self.violations = list(violations)
        text = "; ".join(f"component {c}, index {i}: {rule}" for c, i, rule in self.violations)
        super().__init__(text)


class EmptyAlgebra(DomainError):
    pass


class ParseError(DomainError):
    pass


class Mismatch(DomainError):
    pass


class NotRigid(DomainError):
    pass


class NotASummand(DomainError):
    pass


class NotLeftMutable(DomainError):
    pass


class NotComposable(DomainError):
    pass


class NotInImage(DomainError):
    pass


class NotCoBongartzSummand(DomainError):
    pass


class NotRelativeProjective(DomainError):
    pass


class NotAValidSequence(DomainError):
    pass


class NotTFOrdered(DomainError):
    pass


class NotTFOrders(DomainError):
    pass


class DifferentModules(DomainError):
    pass


class NotCaseTF4(DomainError):
    pass


class OutOfRange(DomainError):
    pass


class NoBridge(DomainError):
    pass


class SignedModelUnavailable(DomainError):
    pass


class UnsupportedFormat(DomainError):
    pass


class UnknownSuite(DomainError):
    pass
