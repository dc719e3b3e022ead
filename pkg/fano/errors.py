class FanoError(ValueError):
    """Base class for every error raised by the fano package."""


class ZeroVector(FanoError):
    pass


class ZeroForm(FanoError):
    pass


class NotDivisible(FanoError):
    pass


class DegeneratePairing(FanoError):
    pass


class NotSublattice(FanoError):
    pass


class NonIntegralGenus(FanoError):
    pass


class NotInNS(FanoError):
    pass


class NotClosedUnderGalois(FanoError):
    pass


class UnknownSuite(FanoError):
    pass


class UnknownCandidate(FanoError):
    pass


class FormSyntaxError(FanoError):

    def __init__(self, message: str, position: int = None):
        """Raised when a linear form cannot be parsed.

        Args:
            message (str): what went wrong
            position (int): offset in the source text, when known
        """
        if position is not None:
            message = f'{message} (at position {position})'
        super().__init__(message)
        self.position = position
