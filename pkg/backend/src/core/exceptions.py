"""
Core Exceptions
Error hierarchy shared by the numerical layers, the CLI and the API.
"""


class RadiusError(Exception):
    """Base class for every error raised by sigmoid-radius."""

    default_detail = "Radius computation failed."

    def __init__(self, detail: str | None = None) -> None:
        self.detail = detail or self.default_detail
        super().__init__(self.detail)


class DomainError(RadiusError, ValueError):
    """An input lies outside the domain of an operation (poles, bad parameters)."""

    default_detail = "Input outside the domain of the operation."


class UnknownClassError(RadiusError, ValueError):
    """The requested function class is not in the registry."""

    default_detail = "Unknown function class."


class WrongMethodError(RadiusError):
    """A closed form was requested for a root-equation class, or the reverse."""

    default_detail = "Radius method does not match the class."


class BracketError(RadiusError):
    """The function has no sign change on the supplied bracket."""

    default_detail = "No sign change on the bracket."


class ConvergenceError(RadiusError):
    """An iterative solver exhausted its iteration budget."""

    default_detail = "Solver did not converge."


class FormulaError(RadiusError):
    """A closed form produced a value outside (0, 1]."""

    default_detail = "Closed-form radius outside (0, 1]."


class ConfigurationError(RadiusError):
    """Oracle configuration is missing or invalid."""

    default_detail = "Invalid oracle configuration."
