"""Exception types shared across the engine."""


class WeblensError(Exception):
    """Base class for all errors raised by this package."""


class MalformedDomain(WeblensError):
    """A raw domain string could not be normalized into a valid domain."""


class ParseError(WeblensError):
    """An input file row or record is malformed."""


class DuplicateDomain(ParseError):
    """The site table contains the same normalized domain twice."""


class DuplicateAccount(ParseError):
    """The mention corpus contains the same account id twice."""


class InvalidArgument(WeblensError):
    """A query option is outside its allowed enumeration or range."""
