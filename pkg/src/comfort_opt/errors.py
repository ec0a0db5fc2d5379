"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a physical or model validity constraint.

    Raised when a value leaves its documented domain (temperature outside
    the simulation window, nonpositive room volume, mismatched vector
    lengths, ...). The CLI maps this to exit code 1.
    """


class ConfigError(ValueError):
    """A configuration document or CLI flag set failed validation.

    Carries a human-readable diagnostic naming the offending field or
    location. The CLI maps this to exit code 2.
    """
