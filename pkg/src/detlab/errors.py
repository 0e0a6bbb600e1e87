"""Exception types raised across detlab."""


class DetlabError(Exception):
    """Base class; the CLI maps it to exit code 2."""


class ContextMismatch(DetlabError):
    pass


class NotAUnit(DetlabError):
    pass


class UnknownVariable(DetlabError):
    pass


class NonUnitConstantTerm(DetlabError):
    pass


class UnsupportedExtension(DetlabError):
    pass


class InvalidRing(DetlabError):
    pass


class NotABijection(DetlabError):
    pass


class ClosureTooLarge(DetlabError):
    pass


class IndexOutOfRange(DetlabError):
    pass


class InvalidTable(DetlabError):
    pass


class NoInverses(DetlabError):
    pass


class NonSquare(DetlabError):
    pass


class DimensionMismatch(DetlabError):
    pass


class InvalidRepresentation(DetlabError):
    pass


class EmptyWord(DetlabError):
    pass


class TooManyWords(DetlabError):
    pass


class DegreeMismatch(DetlabError):
    pass


class FactorialNotInvertible(DetlabError):
    pass


class NotCentral(DetlabError):
    pass


class TwoNotInvertible(DetlabError):
    pass


class PseudocharIdentityFails(DetlabError):
    pass


class CharacteristicNotTwo(DetlabError):
    pass


class EnumerationTooLarge(DetlabError):
    pass


class PreconditionViolated(DetlabError):
    pass


class NotAField(DetlabError):
    pass


class CharacteristicTooSmall(DetlabError):
    pass


class LawNotEvaluable(DetlabError):
    pass


class TooLarge(DetlabError):
    pass


class CertificationFailed(DetlabError):
    """An a posteriori check of a computed object did not hold."""
