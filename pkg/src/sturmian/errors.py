"""Exception hierarchy for domain and resource failures."""


class SturmianError(Exception):
    """Base class for every error this package raises on purpose."""


class MaterializationLimitError(SturmianError):
    """A word operation would build a string longer than the configured cap."""


class NotCentralError(SturmianError):
    """The word is not an image of the iterated palindromic closure."""


class NotStandardError(SturmianError):
    """The word is not a finite standard word."""


class NotChristoffelError(SturmianError):
    """The word is not a Christoffel word."""


class BoundExceededError(SturmianError):
    """A verification order exceeds the configured enumeration bound."""
