"""Exception types shared across the library."""


class NakarepError(Exception):
    """Base class for all library errors."""


class DomainError(NakarepError):
    """A point, interval, or map fell outside the domain it must lie in."""


class NotBijective(NakarepError):
    """A map that must be an increasing bijection is not one."""


class DegreeError(NakarepError):
    """A circle map lift does not have degree one."""


class InvalidMorphism(NakarepError):
    """The requested scalar morphism between interval modules is zero."""


class IncompatibleModule(NakarepError):
    """An interval does not fit under any projective of the profile."""


class InvalidSeries(NakarepError):
    """A projective-length series fails its admissibility conditions."""


class InvalidModule(NakarepError):
    """A discrete module description is inconsistent with its series."""


class NotGridAligned(NakarepError):
    """An interval is not of the grid form required for extraction."""


class ParseError(NakarepError):
    """A literal or file could not be parsed."""
