"""Exception types shared across the simulator."""


class VponSimError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(VponSimError):
    """A value violates a structural invariant (lengths, ranges, homogeneity)."""


class UnsupportedParameters(VponSimError):
    """Parameters outside the supported model range (e.g. Johnson bound for λ≠1)."""


class CapacityExceeded(VponSimError):
    """Code-set search exhausted before reaching the requested size."""

    def __init__(self, message: str, found: int = 0):
        super().__init__(message)
        self.found = found


class NotFound(VponSimError):
    """Lookup of an unknown entity (ONU id, report source)."""


class ConfigError(VponSimError):
    """Scenario file violates the schema; carries a JSON-pointer-style path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path

    exit_code = 4


class FeasibilityError(VponSimError):
    """Requested VPON count does not fit the optical power budget."""

    def __init__(self, message: str, deficit_db: float):
        super().__init__(message)
        self.deficit_db = deficit_db

    exit_code = 3


class ContractViolation(VponSimError):
    """An internal protocol contract was broken (double delivery, bad reserve)."""
