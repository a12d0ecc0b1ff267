"""Descriptors that validate attributes on assignment."""

from abc import ABC, abstractmethod
import math

from .constants import MinMax
from .exception import ContractError


class Validator(ABC):
    """Abstract class to validate something."""

    private_name = ""
    public_name = ""

    def __set_name__(self, owner, name):
        """Set a named attribute of a generic object."""
        self.public_name = name
        self.private_name = '_' + name

    def __get__(self, obj, objtype=None):
        """Get the value of a named attribute."""
        if obj is None:
            return self
        return getattr(obj, self.private_name)

    def __set__(self, obj, value):
        """Set the value of a named attribute."""
        setattr(obj, self.private_name, self.validate(value))

    @abstractmethod
    def validate(self, value):
        """Override this in any subclass to validate (and coerce) value."""


class OneOf(Validator):
    """Verifies that a value is one of a restricted set of options.

    When the options are members of a ``StrEnum`` the plain string is
    accepted and converted to the member.
    """

    def __init__(self, *options):
        """Initialize the OneOf Object."""
        self.options = tuple(options)

    def __repr__(self) -> str:
        """Return a string representation of OneOf."""
        return f"OneOf({self.options})"

    def validate(self, value):
        """Validate value against the options."""
        for option in self.options:
            if value == option:
                return option
        raise ContractError(
            f"{self.public_name}: expected {value!r} to be one of "
            f"{[str(x) for x in self.options]!r}")


class Positive(Validator):
    """A strictly positive number; integral when ``integer`` is set."""

    def __init__(self, integer: bool = False):
        """Initialize the validator."""
        self.integer = integer

    def __repr__(self) -> str:
        """Return a string representation of Positive."""
        return f"Positive(integer={self.integer})"

    def validate(self, value):
        """Validate value as a positive (integral) number."""
        if isinstance(value, bool):
            raise ContractError(f"{self.public_name}: booleans are not numbers")
        if self.integer:
            if not isinstance(value, int):
                raise ContractError(
                    f"{self.public_name}: expected an integer, got {value!r}")
        elif not isinstance(value, (int, float)) or not math.isfinite(value):
            raise ContractError(
                f"{self.public_name}: expected a finite number, got {value!r}")
        if value <= 0:
            raise ContractError(f"{self.public_name}: must be positive")
        return value


class InRange(Validator):
    """A number (integral when ``integer`` is set) within MinMax limits."""

    def __init__(self, limits: MinMax, integer: bool = False):
        """Initialize the validator."""
        self.limits = limits
        self.integer = integer

    def __repr__(self) -> str:
        """Return a string representation of InRange."""
        return f"InRange({self.limits!r}, integer={self.integer})"

    def validate(self, value):
        """Validate value against the limits."""
        if isinstance(value, bool) or \
           (self.integer and not isinstance(value, int)) or \
           not isinstance(value, (int, float)):
            raise ContractError(
                f"{self.public_name}: expected a number, got {value!r}")
        if not self.limits.contains(value):
            raise ContractError(
                f"{self.public_name}: {value!r} is outside "
                f"[{self.limits.min}, {self.limits.max}]")
        return value
