"""Exception types raised across the package."""


class TaftError(ValueError):
    """Base class for all domain errors."""


class InvalidOrderError(TaftError):
    """The root-of-unity order n is out of range."""


class InvalidArgumentError(TaftError):
    """An argument is malformed or incompatible (e.g. mixed orders)."""


class InvalidRepresentationError(TaftError):
    """Matrices do not define a module over the Taft algebra."""
