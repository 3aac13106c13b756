"""Exception hierarchy shared by the library and the command line front end."""


class TorusBundleError(Exception):
    """Base class for every error raised by this package."""

    #: process exit code used by the CLI
    exit_code = 2


class ParseError(TorusBundleError):
    """Malformed textual or JSON input; ``location`` names the offending path."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class DimensionError(TorusBundleError):
    pass


class MalformedFormError(TorusBundleError):
    pass


class MalformedStructureError(TorusBundleError):
    pass


class DegenerateStructureError(TorusBundleError):
    """The subspace meets its conjugate: V + conj(V) is not the whole space."""


class PreconditionError(TorusBundleError):
    exit_code = 3


class UnsupportedSizeError(PreconditionError):
    pass


class DomainError(PreconditionError):
    pass
